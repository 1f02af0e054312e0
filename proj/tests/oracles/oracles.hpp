#pragma once

// Reference implementations that share no code paths with the library:
// subspaces are sets of vectors, roots come from the Tits form, ranks of
// composites from explicit products. Slow by design; small inputs only.

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "qgrass/representation.hpp"
#include "qgrass/typea.hpp"

namespace oracle {

using Vec = std::vector<int>;
using Space = std::set<Vec>;  ///< every vector of a subspace of F_p^d

/// All e-dimensional subspaces of F_p^d, each as its full vector set.
std::vector<Space> all_subspaces(int d, int e, int p);

/// #Gr_e(M)(F_p) by testing every tuple of subspaces for stability.
std::uint64_t count_points(const qgrass::Representation& m, const qgrass::DimVector& e);

/// [d choose e]_q from the product formula.
qgrass::Integer gaussian_binomial(long d, long e, long q);

/// dim Hom(N, M) over F_p as log_p of the number of commuting tuples,
/// found by exhausting all tuples of matrices.
long hom_dim_bruteforce(const qgrass::Representation& n, const qgrass::Representation& m);

/// Positive roots: dimension vectors with Tits form 1, entries <= bound.
std::set<std::vector<long>> positive_roots(const qgrass::Quiver& q, long bound);

/// rank of M_{j-1} ... M_i for an equioriented A_n representation, 1-based.
long composite_rank(const qgrass::Representation& m, int i, int j);

/// Every interval decomposition of A_n with dimension vector d.
std::vector<qgrass::typea::IntervalDecomposition> isoclasses(int n, const qgrass::DimVector& d);

/// Random integer representation of A_n: entries in [-1, 1], sparse.
qgrass::Representation random_type_a(int n, int max_dim, std::mt19937_64& rng);

/// Random acyclic quiver on `vertices` vertices (arrows i -> j with i < j)
/// with a random representation over F_p.
qgrass::Representation random_fp_rep(std::size_t vertices, int max_dim, std::uint32_t p, std::mt19937_64& rng);

}  // namespace oracle
