#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qgrass/matrix.hpp"
#include "qgrass/representation.hpp"

namespace qgrass {

/// A morphism N -> M as one (d^M_i x d^N_i) matrix per vertex.
using Morphism = std::vector<Matrix>;

/// Matrix of (f_i) -> (M_a f_s - f_t N_a).
///
/// Columns: vertices ascending, each block f_i flattened column-major.
/// Rows: arrows ascending, each block (d^M_t x d^N_s) flattened column-major.
Matrix phi_map(const Representation& n, const Representation& m);

std::size_t hom_dim(const Representation& n, const Representation& m);
/// Cokernel dimension of the Phi-map; throws std::logic_error if it ever
/// disagrees with hom - <dim N, dim M>.
std::size_t ext1_dim(const Representation& n, const Representation& m);

/// Basis of Hom(N, M), in kernel order of the Phi-map.
std::vector<Morphism> hom_basis(const Representation& n, const Representation& m);

/// Unflattens a Phi-map domain vector into a morphism.
Morphism morphism_from_vector(const Representation& n, const Representation& m, const std::vector<Rational>& v);
/// Unflattens a Phi-map codomain vector into per-arrow blocks (d^M_t x d^N_s).
std::vector<Matrix> cocycle_from_vector(const Representation& n, const Representation& m,
                                        const std::vector<Rational>& v);

bool is_morphism(const Representation& n, const Representation& m, const Morphism& f);

/// dim Hom(L, M/L) for the subrepresentation L spanned by `w`.
std::size_t tangent_dim(const Representation& m, const SubrepWitness& w);

bool is_rigid(const Representation& m);

/// Middle term of 0 -> X -> Y -> S -> 0 for a cocycle z (z_a of shape
/// d^X_t x d^S_s), with Y_a = [[X_a, z_a], [0, S_a]].
struct Extension {
  Representation middle;
  SubrepWitness inclusion;  ///< X inside Y: the first d^X_i coordinates
  Morphism projection;      ///< Y -> S
};

Extension build_extension(const Representation& s, const Representation& x, const std::vector<Matrix>& cocycle);

struct EmbeddingSearch {
  bool found = false;
  /// True when `found` is false: absence of an embedding is not proved.
  bool probabilistic = false;
  Morphism witness;
  std::size_t trials_used = 0;
};

/// Samples random elements of Hom(N, M) (seeded) and returns the first
/// injective one, verified exactly.
EmbeddingSearch generic_embeds(const Representation& n, const Representation& m, std::size_t trials,
                               std::uint64_t seed);

/// Kernel of a morphism N -> M as a witness inside N.
SubrepWitness kernel_witness(const Representation& n, const Morphism& f);
/// Image of a morphism N -> M as a witness inside M.
SubrepWitness image_witness(const Representation& m, const Morphism& f);

}  // namespace qgrass
