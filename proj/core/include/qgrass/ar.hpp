#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qgrass/quiver.hpp"

namespace qgrass::ar {

using IntMatrix = std::vector<std::vector<long>>;

enum class Kind { dynkin, affine, wild };

/// Underlying-graph type of a connected acyclic quiver.
struct Classification {
  Kind kind = Kind::wild;
  char family = '?';  ///< 'A', 'D', 'E' for Dynkin and affine types
  std::size_t rank = 0;
  std::vector<std::size_t> sources;  ///< orientation data, 0-based
  std::vector<std::size_t> sinks;

  /// "A4", "D5", "E6", "~A1", "~D4", "~E8", or "wild".
  std::string name() const;
};

Classification classify(const Quiver& q);

/// Number of positive roots of a Dynkin diagram.
std::size_t positive_root_count(const Classification& c);

struct ARVertex {
  std::size_t projective;  ///< k: this vertex is tau^-level P_k
  std::size_t level;
  DimVector dim;
};

/// Preprojective component of a Dynkin quiver, which is all of it.
struct ARQuiver {
  std::vector<ARVertex> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> arrows;  ///< irreducible maps
  std::vector<std::optional<std::size_t>> tau;              ///< none for projectives

  std::optional<std::size_t> find(std::size_t projective, std::size_t level) const;
  /// dim X + dim tau^- X equals the sum over the mesh middle, at every mesh.
  bool mesh_additive() const;
};

/// Knits from the projectives: tau^- X = (sum of successors of X) - X,
/// level by level; an orbit ends when that difference is not a positive vector.
ARQuiver knit(const Quiver& q);

/// E^-1 with E = I - A; row k is dim P_k.
IntMatrix path_count_matrix(const Quiver& q);
/// Phi = -E^-1 E^T acting on column dimension vectors.
IntMatrix coxeter_matrix(const Quiver& q);
std::vector<long> apply(const IntMatrix& m, const std::vector<long>& v);
/// Coxeter image of a dimension vector; throws DomainError when it has a
/// negative entry (projective input).
DimVector tau_dim(const Quiver& q, const DimVector& d);

}  // namespace qgrass::ar
