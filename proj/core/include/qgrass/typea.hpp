#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qgrass/ff.hpp"
#include "qgrass/representation.hpp"

// Equioriented A_n: vertices 1 -> 2 -> ... -> n (1-based here, 0-based in
// Quiver). U[i,j] is the thin indecomposable supported on i..j.

namespace qgrass::typea {

struct Interval {
  int i = 1;
  int j = 1;
  friend auto operator<=>(const Interval&, const Interval&) = default;
};

std::string to_string(const Interval& u);

/// Isoclass of an A_n representation as interval multiplicities.
class IntervalDecomposition {
 public:
  IntervalDecomposition() = default;
  explicit IntervalDecomposition(int n);

  int n() const noexcept { return n_; }
  long multiplicity(const Interval& u) const;
  /// Adds `count` copies of U[i,j]; throws on an invalid interval.
  IntervalDecomposition& add(const Interval& u, long count = 1);
  const std::map<Interval, long>& multiplicities() const noexcept { return m_; }
  /// Summands with repetition, ascending.
  std::vector<Interval> summands() const;
  DimVector dims() const;
  bool empty() const noexcept { return m_.empty(); }

  friend bool operator==(const IntervalDecomposition&, const IntervalDecomposition&) = default;
  friend auto operator<=>(const IntervalDecomposition& a, const IntervalDecomposition& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.m_ <=> b.m_;
  }

 private:
  int n_ = 0;
  std::map<Interval, long> m_;  ///< zero multiplicities are never stored
};

/// "U[1,2]^2 + U[3,3]"; "0" when empty.
std::string to_string(const IntervalDecomposition& m);
/// Inverse of to_string; throws ParseError with a character offset.
IntervalDecomposition parse_intervals(const std::string& text, int n);

/// r(i,j) for 1 <= i <= j <= n, zero on the boundary i = 0 or j = n + 1.
class RankSequence {
 public:
  RankSequence() = default;
  /// Throws DomainError unless all entries are >= 0 and every
  /// r(i,j) + r(i-1,j+1) >= r(i,j+1) + r(i-1,j).
  RankSequence(int n, std::vector<long> upper_triangle);

  int n() const noexcept { return n_; }
  long operator()(int i, int j) const;
  friend bool operator==(const RankSequence&, const RankSequence&) = default;

 private:
  int n_ = 0;
  std::vector<long> r_;  ///< row-major over pairs i <= j
};

Representation interval_module(int n, const Interval& u, const Field& field = Field::rationals());
/// Direct sum in coefficient-quiver row order; the zero module if empty.
Representation to_representation(const IntervalDecomposition& m, const Field& field = Field::rationals());

/// Throws DomainError unless the quiver is equioriented A_n.
int check_type_a(const Representation& m);

RankSequence rank_sequence(const Representation& m);
IntervalDecomposition decompose(const Representation& m);
IntervalDecomposition multiplicities_from_ranks(const RankSequence& r);
RankSequence ranks_from_multiplicities(const IntervalDecomposition& m);

/// [U_a, U_b]: 1 iff b.i <= a.i <= b.j <= a.j.
int hom_interval(const Interval& a, const Interval& b);
/// [U_a, U_b]^1: 1 iff a.i + 1 <= b.i <= a.j + 1 <= b.j.
int ext_interval(const Interval& a, const Interval& b);
long hom(const IntervalDecomposition& a, const IntervalDecomposition& b);
long ext1(const IntervalDecomposition& a, const IntervalDecomposition& b);

/// M degenerates to N: equal diagonals, r^M >= r^N off the diagonal.
bool deg_leq_ranks(const RankSequence& m, const RankSequence& n);
/// [U, M] <= [U, N] for every interval U, homs computed by the Phi-map.
bool deg_leq_hom(const Representation& m, const Representation& n);

struct CoefficientQuiver {
  int n = 0;
  /// Sorted by j descending, then i descending. For rows r < r' this gives
  /// j' <= j < j + 1, so the Ext rule (needs j + 1 <= j') never fires:
  /// Ext^1(row r, row r') = 0.
  std::vector<Interval> rows;
};

CoefficientQuiver coefficient_quiver(const IntervalDecomposition& m);

/// Per row either 0 (empty) or the left end a of the chosen suffix [a, j].
struct TorusFixedPoint {
  std::vector<int> start;
  friend bool operator==(const TorusFixedPoint&, const TorusFixedPoint&) = default;
};

std::vector<TorusFixedPoint> fixed_points(const CoefficientQuiver& cq, const DimVector& e);
std::vector<TorusFixedPoint> fixed_points(const IntervalDecomposition& m, const DimVector& e);
std::vector<TorusFixedPoint> fixed_points(const Representation& m, const DimVector& e);

DimVector fixed_point_dims(const CoefficientQuiver& cq, const TorusFixedPoint& l);
/// Isoclass of the coordinate subrepresentation.
IntervalDecomposition fixed_point_class(const CoefficientQuiver& cq, const TorusFixedPoint& l);

/// White vertices below black sources: for each nonempty row r starting at
/// a, the rows r' > r whose support contains a without selecting it.
long cell_dimension(const CoefficientQuiver& cq, const TorusFixedPoint& l);

/// Sum over fixed points of q^cell_dimension (consistency: assumed).
CountPoly poincare_polynomial(const IntervalDecomposition& m, const DimVector& e);
Integer euler_char_cells(const IntervalDecomposition& m, const DimVector& e);

struct Stratum {
  IntervalDecomposition sub;  ///< isoclass of the subrepresentations
  long dim = 0;               ///< [N, M] - [N, N]
  std::size_t cells = 0;
  std::vector<Integer> cell_polynomial;  ///< ascending in q
};

/// Nonempty iso-strata of Gr_e(M), ordered by isoclass.
std::vector<Stratum> strata(const IntervalDecomposition& m, const DimVector& e);
/// Number of strata of the largest dimension.
std::size_t count_top_strata(const std::vector<Stratum>& s);

/// The distinct summands form a chain under componentwise order of (i, j).
bool is_catenoid(const IntervalDecomposition& m);

enum class FlatClass { flat_irreducible, flat_only, non_flat };
std::string to_string(FlatClass c);
/// Needs dims (n+1, ..., n+1).
FlatClass flat_locus_class(const IntervalDecomposition& m);

struct ProjectiveResolution {
  IntervalDecomposition kernel;  ///< P in 0 -> P -> R -> M -> 0
  IntervalDecomposition cover;   ///< R
};
ProjectiveResolution min_projective_resolution(const IntervalDecomposition& m);

/// U[i+1, j+1], or nothing for projectives (j = n).
std::optional<Interval> tau_interval(const Interval& u, int n);
/// U[i-1, j-1], or nothing for injectives (i = 1).
std::optional<Interval> tau_inverse_interval(const Interval& u, int n);
IntervalDecomposition tau(const IntervalDecomposition& m);
IntervalDecomposition tau_inverse(const IntervalDecomposition& m);

IntervalDecomposition regular_module(int n);             ///< A = sum of U[i,n]
IntervalDecomposition dual_module(int n);                ///< DA = sum of U[1,k]
IntervalDecomposition a_plus_da(int n);                  ///< M^1
IntervalDecomposition projective_power(int n);           ///< M^0 = U[1,n]^(n+1)
IntervalDecomposition mf_degeneration(int n);            ///< M^2
IntervalDecomposition semisimple_flat(int n);            ///< every S_k^(n+1)
IntervalDecomposition operator+(const IntervalDecomposition& a, const IntervalDecomposition& b);

}  // namespace qgrass::typea
