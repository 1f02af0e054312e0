#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "qgrass/field.hpp"

namespace qgrass {

using Exponents = std::vector<long>;

/// Graded lexicographic order: total degree first, then lexicographic.
struct GradedLex {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse Laurent polynomial with integer coefficients in a fixed number of
/// variables. Zero coefficients are never stored, so equality is structural.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(std::size_t vars) : vars_(vars) {}
  static LaurentPoly constant(std::size_t vars, const Integer& c);
  static LaurentPoly monomial(const Exponents& e, const Integer& c = 1);

  std::size_t variables() const noexcept { return vars_; }
  const std::map<Exponents, Integer, GradedLex>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Integer coefficient(const Exponents& e) const;

  void add_term(const Exponents& e, const Integer& c);

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  /// Value with every variable set to 1.
  Integer at_ones() const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  void check(const LaurentPoly& o) const;
  std::size_t vars_ = 0;
  std::map<Exponents, Integer, GradedLex> terms_;
};

/// Human-readable, terms in graded lex order, e.g. "x1^-1 + x1^-1*x2*y1".
/// `names` gives one name per variable.
std::string to_string(const LaurentPoly& p, const std::vector<std::string>& names);
/// Names x1..xn followed by y1..yn.
std::vector<std::string> xy_names(std::size_t n);
/// Names y1..yn.
std::vector<std::string> y_names(std::size_t n);

}  // namespace qgrass
