#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qgrass/ar.hpp"
#include "qgrass/ff.hpp"
#include "qgrass/polynomial.hpp"
#include "qgrass/representation.hpp"

namespace qgrass::cluster {

/// b_ij = #(j -> i) - #(i -> j).
ar::IntMatrix exchange_matrix(const Quiver& q);

/// (g_M)_i = -<S_i, dim M>.
std::vector<long> g_vector(const Representation& m);
/// [I_1] - [I_0] from the minimal injective resolution, built from the
/// socle of M; an independent route to the same vector.
std::vector<long> g_vector_from_injectives(const Representation& m);

/// Euler characteristic engine. `automatic` uses cells on equioriented A_n
/// and interpolated point counts elsewhere.
enum class ChiStrategy { automatic, cells, count };
std::string to_string(ChiStrategy s);

/// Sum over e of chi(Gr_e(M)) y^e. The count strategy needs M over Q and
/// accepts only verified counting polynomials.
LaurentPoly f_polynomial(const Representation& m, ChiStrategy strategy = ChiStrategy::automatic,
                         const CountOptions& opts = {});

/// x^g * sum_e chi(Gr_e(M)) x^(B e) y^e, variables x1..xn then y1..yn.
LaurentPoly cluster_character(const Representation& m, ChiStrategy strategy = ChiStrategy::automatic,
                              const CountOptions& opts = {});
/// The same assembly from a precomputed F-polynomial.
LaurentPoly character_from_f(const Quiver& q, const DimVector& dim, const LaurentPoly& f);

/// 0 -> X -> Y -> S -> 0 with Ext^1(S, X) of dimension at most one.
struct GeneratingExtension {
  Representation s;
  Representation x;
  bool split = true;
  Representation y;
  std::vector<Matrix> cocycle;
  std::optional<SubrepWitness> x_s;  ///< kernel of a nonzero X -> tau S, inside X
  std::optional<SubrepWitness> s_x;  ///< image of a nonzero tau^- X -> S, inside S

  Representation x_s_module() const;
  Representation s_x_module() const;
  Representation s_mod_s_x() const;
  DimVector dim_s_x() const;
};

/// Throws DomainError when Ext^1(S, X) >= 2. X_S and S^X are computed for
/// equioriented A_n only (tau from the interval rule).
GeneratingExtension make_generating(const Representation& s, const Representation& x);

struct MultiplicationReport {
  LaurentPoly lhs;       ///< CC(X) CC(S)
  LaurentPoly rhs;       ///< CC(Y) + y^dim S^X CC(X_S) CC(S/S^X) x^f
  LaurentPoly residual;  ///< lhs - rhs
  LaurentPoly f_lhs;     ///< F_X F_S
  LaurentPoly f_rhs;     ///< F_Y + y^dim S^X F_{X_S} F_{S/S^X}
  std::vector<long> f;   ///< injective multiplicities of I
  DimVector dim_s_x;
  bool holds = false;
};

/// I comes from 0 -> X/X_S -> tau S^X -> I -> 0, with multiplicities read
/// off the injective dimension vectors.
MultiplicationReport verify_multiplication(const GeneratingExtension& ge,
                                           ChiStrategy strategy = ChiStrategy::automatic);

struct PsiRow {
  std::uint32_t p = 0;
  Integer lhs;  ///< #Gr_e(Y)
  Integer rhs;  ///< sum over f + g = e of #Im Psi_{f,g} * p^<g, dim X - f>
  bool holds = false;
  bool skipped = false;  ///< bad reduction at p
  std::string note;
};

struct PsiReport {
  DimVector e;
  std::vector<PsiRow> rows;
  bool holds = false;
};

PsiReport psi_count_identity(const GeneratingExtension& ge, const DimVector& e,
                             const std::vector<std::uint32_t>& primes, std::uint64_t budget = kDefaultBudget);

/// Solves dim = sum_j c_j dim I_j; throws DomainError if c is not a
/// nonnegative integer vector.
std::vector<long> injective_multiplicities(const Quiver& q, const std::vector<long>& dim);

}  // namespace qgrass::cluster
