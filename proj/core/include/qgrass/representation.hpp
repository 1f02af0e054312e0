#pragma once

#include <cstddef>
#include <vector>

#include "qgrass/field.hpp"
#include "qgrass/matrix.hpp"
#include "qgrass/quiver.hpp"

namespace qgrass {

/// A finite-dimensional representation of an acyclic quiver over an exact
/// field. The matrix of arrow a : s -> t has shape d_t x d_s and acts on
/// column vectors. Immutable after construction.
class Representation {
 public:
  /// Validates shapes and normalizes every entry into `field`.
  Representation(Quiver quiver, Field field, DimVector dims, std::vector<Matrix> matrices);

  /// The zero-matrix representation of the given dimension vector.
  static Representation zero(Quiver quiver, Field field, DimVector dims);

  const Quiver& quiver() const noexcept { return quiver_; }
  const Field& field() const noexcept { return field_; }
  const DimVector& dims() const noexcept { return dims_; }
  std::size_t dim(std::size_t v) const { return static_cast<std::size_t>(dims_[v]); }
  const Matrix& map(std::size_t arrow) const { return maps_.at(arrow); }
  const std::vector<Matrix>& maps() const noexcept { return maps_; }

  friend bool operator==(const Representation&, const Representation&) = default;

 private:
  Quiver quiver_;
  Field field_;
  DimVector dims_;
  std::vector<Matrix> maps_;
};

/// A point of a quiver Grassmannian: per vertex, an e_i x d_i basis matrix
/// in reduced row echelon form whose row space is the subspace N_i.
class SubrepWitness {
 public:
  /// Checks each basis is RREF with full row rank (not arrow stability,
  /// which depends on a representation; see `is_stable`).
  SubrepWitness(const Field& field, std::vector<Matrix> bases);

  /// Row-reduces arbitrary spanning sets into canonical bases.
  static SubrepWitness from_spanning_rows(const Field& field, const std::vector<Matrix>& spans);
  static SubrepWitness zero(const DimVector& ambient);
  static SubrepWitness full(const DimVector& ambient);

  const std::vector<Matrix>& bases() const noexcept { return bases_; }
  const Matrix& basis(std::size_t v) const { return bases_.at(v); }
  DimVector dims() const;
  DimVector ambient() const;

  friend bool operator==(const SubrepWitness&, const SubrepWitness&) = default;

 private:
  std::vector<Matrix> bases_;
};

/// Arrow stability: M_a(N_s) contained in N_t for every arrow.
bool is_stable(const Representation& m, const SubrepWitness& w);

/// Path-basis projective P_k (basis at i: paths k -> i).
Representation projective(const Quiver& q, std::size_t k, const Field& field = Field::rationals());
/// Path-basis injective I_k (basis at j: paths j -> k).
Representation injective(const Quiver& q, std::size_t k, const Field& field = Field::rationals());
Representation simple(const Quiver& q, std::size_t k, const Field& field = Field::rationals());

Representation direct_sum(const Representation& m, const Representation& n);
Representation direct_sum(const std::vector<Representation>& parts);
/// Linear dual, a representation of the opposite quiver (same arrow
/// indices, transposed matrices).
Representation dual(const Representation& m);
/// Same matrices over F_p; throws DomainError on a denominator divisible by p.
Representation reduce_mod(const Representation& m, std::uint32_t p);

/// The subrepresentation L spanned by `w`, in the coordinates of w's rows.
Representation restrict_to(const Representation& m, const SubrepWitness& w);
/// The quotient M / L, using the non-pivot standard basis vectors of each
/// echelon basis as coordinates.
Representation quotient(const Representation& m, const SubrepWitness& w);

/// Image of the row space of `basis` under an arrow matrix (rows of the
/// result span M_a(row space)).
Matrix image_rows(const Field& k, const Matrix& arrow_map, const Matrix& basis);

}  // namespace qgrass
