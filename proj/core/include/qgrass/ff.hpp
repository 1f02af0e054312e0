#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qgrass/field.hpp"
#include "qgrass/representation.hpp"

namespace qgrass {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

/// Enumerates the e-dimensional subspaces of F_p^d as reduced row echelon
/// e x d matrices. Pivot sets run in colexicographic order; within a pivot
/// set the free entries count like an odometer, last entry fastest.
class SubspaceIter {
 public:
  SubspaceIter(std::size_t d, std::size_t e, std::uint32_t p);

  /// Advances to the next subspace; the first call yields the first one.
  bool next();

  /// Current basis, row-major e x d, entries in [0, p).
  const std::vector<std::uint32_t>& basis() const noexcept { return basis_; }
  Matrix matrix() const;
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  std::size_t ambient() const noexcept { return d_; }
  std::size_t dim() const noexcept { return e_; }

  /// Restricts iteration to one pivot set and the odometer positions
  /// [first, first + count) within it.
  void restrict_to(const std::vector<std::size_t>& pivots, std::uint64_t first, std::uint64_t count);

  /// All pivot sets in iteration order.
  static std::vector<std::vector<std::size_t>> pivot_sets(std::size_t d, std::size_t e);
  /// Number of free entries for a pivot set.
  static std::size_t free_count(std::size_t d, const std::vector<std::size_t>& pivots);

 private:
  void load_pattern();
  bool advance_pattern();
  bool advance_free();

  std::size_t d_, e_;
  std::uint32_t p_;
  std::vector<std::size_t> pivots_;
  std::vector<std::size_t> free_pos_;  ///< flat indices into basis_
  std::vector<std::uint32_t> basis_;
  bool started_ = false;
  bool single_pattern_ = false;
  bool valid_ = true;
  std::int64_t remaining_ = -1;  ///< -1: unbounded
};

/// Gaussian binomial [d choose e]_q evaluated at q.
Integer gaussian_binomial(long d, long e, long q);
/// Coefficients of [d choose e]_q as a polynomial in q (ascending).
std::vector<Integer> gaussian_binomial_poly(long d, long e);

struct CountOptions {
  std::uint64_t budget = kDefaultBudget;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// Product of [d_i choose e_i]_p over the vertices that `count_points`
/// enumerates (vertices with outgoing arrows).
Integer enumeration_estimate(const Representation& m, const DimVector& e);

/// Number of F_p-points of Gr_e(M); M must be defined over F_p.
Integer count_points(const Representation& m, const DimVector& e, const CountOptions& opts = {});

/// Every F_p-point of Gr_e(M), in deterministic enumeration order.
std::vector<SubrepWitness> enumerate_subreps(const Representation& m, const DimVector& e,
                                             std::uint64_t budget = kDefaultBudget);

enum class Consistency { verified, inconsistent, assumed };
std::string to_string(Consistency c);

/// Integer polynomial in q, coefficients ascending.
struct CountPoly {
  std::vector<Integer> coefficients;
  Consistency consistency = Consistency::assumed;
  std::vector<std::uint32_t> primes_used;
  std::uint32_t held_out_prime = 0;
  std::vector<std::uint32_t> skipped_primes;  ///< bad reduction
  /// Rational interpolation coefficients, kept when they are not integral.
  std::vector<Rational> raw;

  Integer evaluate(const Integer& q) const;
  long degree() const;  ///< -1 for the zero polynomial
  friend bool operator==(const CountPoly& a, const CountPoly& b) { return a.coefficients == b.coefficients; }
};

std::string to_string(const CountPoly& p);

/// Lagrange interpolation through (p, #Gr_e(M)(F_p)) at the first D+1 good
/// primes, D = sum e_i (d_i - e_i), checked at one more good prime.
/// An empty `primes` list means "smallest primes ascending".
CountPoly counting_polynomial(const Representation& m, const DimVector& e, const std::vector<std::uint32_t>& primes = {},
                              const CountOptions& opts = {});

long degree_bound(const DimVector& d, const DimVector& e);

/// Value at q = 1; refuses inconsistent polynomials.
Integer euler_characteristic(const CountPoly& cp);
std::vector<Integer> betti_numbers(const CountPoly& cp);

struct StratumCount {
  std::vector<std::size_t> fingerprint;  ///< [U, N] for U in the test family
  Integer points;
  SubrepWitness representative;
};

/// Points of Gr_e(M)(F_p) grouped by the hom fingerprint of the
/// subrepresentation against `family`, ordered by fingerprint.
std::vector<StratumCount> classify_strata_ff(const Representation& m, const DimVector& e,
                                             const std::vector<Representation>& family,
                                             std::uint64_t budget = kDefaultBudget);

/// Smallest primes >= `from`, ascending.
std::vector<std::uint32_t> primes_from(std::uint32_t from, std::size_t count);

}  // namespace qgrass
