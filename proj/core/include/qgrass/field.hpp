#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace qgrass {

using Rational = mpq_class;
using Integer = mpz_class;

/// An exact field: either the rationals or a prime field F_p.
///
/// Elements are always carried as `Rational`. Over F_p the canonical
/// representative is an integer in [0, p); `normalize` maps any rational
/// whose denominator is prime to p onto it.
class Field {
 public:
  static Field rationals() { return Field(0); }
  /// Throws DomainError unless `p` is prime.
  static Field prime(std::uint32_t p);

  bool is_rationals() const noexcept { return p_ == 0; }
  bool is_prime() const noexcept { return p_ != 0; }
  /// 0 for the rationals.
  std::uint32_t characteristic() const noexcept { return p_; }

  /// "Q" or "Fp:<p>", the spelling used in representation files.
  std::string name() const;
  /// Inverse of `name()`.
  static Field parse(const std::string& spec);

  Rational normalize(const Rational& x) const;
  bool reduces(const Rational& x) const;

  Rational add(const Rational& a, const Rational& b) const;
  Rational sub(const Rational& a, const Rational& b) const;
  Rational mul(const Rational& a, const Rational& b) const;
  Rational neg(const Rational& a) const;
  /// Throws DomainError on zero.
  Rational inv(const Rational& a) const;
  Rational div(const Rational& a, const Rational& b) const { return mul(a, inv(b)); }

  friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

/// Parses "3", "-2", "5/7" into an exact rational (reduced).
Rational parse_rational(const std::string& text);
/// Canonical text: integers plain, otherwise "a/b".
std::string to_string(const Rational& x);

}  // namespace qgrass
