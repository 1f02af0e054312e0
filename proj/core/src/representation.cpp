#include "qgrass/representation.hpp"

#include "qgrass/error.hpp"

namespace qgrass {

Representation::Representation(Quiver quiver, Field field, DimVector dims, std::vector<Matrix> matrices)
    : quiver_(std::move(quiver)), field_(field), dims_(std::move(dims)), maps_(std::move(matrices)) {
  if (dims_.size() != quiver_.vertex_count())
    throw DomainError("dimension vector has " + std::to_string(dims_.size()) + " entries, quiver has " +
                      std::to_string(quiver_.vertex_count()) + " vertices");
  if (maps_.size() != quiver_.arrow_count())
    throw DomainError("expected " + std::to_string(quiver_.arrow_count()) + " arrow matrices, got " +
                      std::to_string(maps_.size()));
  for (std::size_t a = 0; a < maps_.size(); ++a) {
    const auto& arr = quiver_.arrow(a);
    if (maps_[a].rows() != dim(arr.target) || maps_[a].cols() != dim(arr.source))
      throw DomainError("matrix of arrow " + std::to_string(a) + " has shape " + std::to_string(maps_[a].rows()) +
                        "x" + std::to_string(maps_[a].cols()) + ", expected " + std::to_string(dim(arr.target)) +
                        "x" + std::to_string(dim(arr.source)));
    maps_[a] = normalized(field_, maps_[a]);
  }
}

Representation Representation::zero(Quiver quiver, Field field, DimVector dims) {
  std::vector<Matrix> maps;
  for (const auto& a : quiver.arrows())
    maps.emplace_back(static_cast<std::size_t>(dims[a.target]), static_cast<std::size_t>(dims[a.source]));
  return Representation(std::move(quiver), field, std::move(dims), std::move(maps));
}

SubrepWitness::SubrepWitness(const Field& field, std::vector<Matrix> bases) : bases_(std::move(bases)) {
  for (std::size_t v = 0; v < bases_.size(); ++v)
    if (!is_rref_full_rank(field, bases_[v]))
      throw DomainError("witness basis at vertex " + std::to_string(v) + " is not a full-rank RREF matrix");
}

SubrepWitness SubrepWitness::from_spanning_rows(const Field& field, const std::vector<Matrix>& spans) {
  std::vector<Matrix> bases;
  bases.reserve(spans.size());
  for (const auto& s : spans) bases.push_back(rref(field, s).reduced);
  return SubrepWitness(field, std::move(bases));
}

SubrepWitness SubrepWitness::zero(const DimVector& ambient) {
  std::vector<Matrix> bases;
  for (std::size_t v = 0; v < ambient.size(); ++v) bases.emplace_back(0, static_cast<std::size_t>(ambient[v]));
  return SubrepWitness(Field::rationals(), std::move(bases));
}

SubrepWitness SubrepWitness::full(const DimVector& ambient) {
  std::vector<Matrix> bases;
  for (std::size_t v = 0; v < ambient.size(); ++v)
    bases.push_back(Matrix::identity(static_cast<std::size_t>(ambient[v])));
  return SubrepWitness(Field::rationals(), std::move(bases));
}

DimVector SubrepWitness::dims() const {
  DimVector d(bases_.size());
  for (std::size_t v = 0; v < bases_.size(); ++v) d[v] = static_cast<long>(bases_[v].rows());
  return d;
}

DimVector SubrepWitness::ambient() const {
  DimVector d(bases_.size());
  for (std::size_t v = 0; v < bases_.size(); ++v) d[v] = static_cast<long>(bases_[v].cols());
  return d;
}

Matrix image_rows(const Field& k, const Matrix& arrow_map, const Matrix& basis) {
  // Row vector b maps to (M b^T)^T = b M^T.
  return multiply(k, basis, arrow_map.transposed());
}

namespace {

void check_witness_shape(const Representation& m, const SubrepWitness& w) {
  if (w.bases().size() != m.quiver().vertex_count())
    throw DomainError("witness has the wrong number of vertices");
  for (std::size_t v = 0; v < w.bases().size(); ++v)
    if (w.basis(v).cols() != m.dim(v)) throw DomainError("witness basis width does not match the representation");
}

/// Coordinates of row vector `x` (known to lie in the row space of the RREF
/// `basis`) with respect to the rows of `basis`.
std::vector<Rational> coordinates_in(const Echelon& basis, const std::vector<Rational>& x) {
  std::vector<Rational> c(basis.pivots.size());
  for (std::size_t r = 0; r < basis.pivots.size(); ++r) c[r] = x[basis.pivots[r]];
  return c;
}

/// Reduce x modulo the row space of an RREF basis; returns entries at the
/// non-pivot columns, in increasing column order.
std::vector<Rational> residue(const Field& k, const Echelon& basis, std::vector<Rational> x) {
  for (std::size_t r = 0; r < basis.pivots.size(); ++r) {
    const Rational f = x[basis.pivots[r]];
    if (f == 0) continue;
    for (std::size_t c = 0; c < x.size(); ++c) x[c] = k.sub(x[c], k.mul(f, basis.reduced(r, c)));
  }
  std::vector<Rational> out;
  std::size_t p = 0;
  for (std::size_t c = 0; c < x.size(); ++c) {
    if (p < basis.pivots.size() && basis.pivots[p] == c) {
      ++p;
      continue;
    }
    out.push_back(x[c]);
  }
  return out;
}

Echelon as_echelon(const Field& k, const Matrix& basis) { return rref(k, basis); }

}  // namespace

bool is_stable(const Representation& m, const SubrepWitness& w) {
  check_witness_shape(m, w);
  const Field& k = m.field();
  for (std::size_t a = 0; a < m.quiver().arrow_count(); ++a) {
    const auto& arr = m.quiver().arrow(a);
    const Matrix& target = w.basis(arr.target);
    const Matrix img = image_rows(k, m.map(a), w.basis(arr.source));
    if (rank(k, stack_rows(target, img)) != target.rows()) return false;
  }
  return true;
}

Representation projective(const Quiver& q, std::size_t k, const Field& field) {
  if (k >= q.vertex_count()) throw DomainError("vertex " + std::to_string(k) + " out of range");
  std::vector<std::vector<std::vector<std::size_t>>> basis(q.vertex_count());
  DimVector dims(q.vertex_count());
  for (std::size_t i = 0; i < q.vertex_count(); ++i) {
    basis[i] = q.paths(k, i);
    dims[i] = static_cast<long>(basis[i].size());
  }
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto& arr = q.arrow(a);
    Matrix m(basis[arr.target].size(), basis[arr.source].size());
    for (std::size_t c = 0; c < basis[arr.source].size(); ++c) {
      auto extended = basis[arr.source][c];
      extended.push_back(a);
      for (std::size_t r = 0; r < basis[arr.target].size(); ++r)
        if (basis[arr.target][r] == extended) m(r, c) = 1;
    }
    maps.push_back(std::move(m));
  }
  return Representation(q, field, dims, std::move(maps));
}

Representation injective(const Quiver& q, std::size_t k, const Field& field) {
  if (k >= q.vertex_count()) throw DomainError("vertex " + std::to_string(k) + " out of range");
  std::vector<std::vector<std::vector<std::size_t>>> basis(q.vertex_count());
  DimVector dims(q.vertex_count());
  for (std::size_t j = 0; j < q.vertex_count(); ++j) {
    basis[j] = q.paths(j, k);
    dims[j] = static_cast<long>(basis[j].size());
  }
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto& arr = q.arrow(a);
    Matrix m(basis[arr.target].size(), basis[arr.source].size());
    // A path starting with `a` loses its first arrow; other paths die.
    for (std::size_t c = 0; c < basis[arr.source].size(); ++c) {
      const auto& path = basis[arr.source][c];
      if (path.empty() || path.front() != a) continue;
      std::vector<std::size_t> rest(path.begin() + 1, path.end());
      for (std::size_t r = 0; r < basis[arr.target].size(); ++r)
        if (basis[arr.target][r] == rest) m(r, c) = 1;
    }
    maps.push_back(std::move(m));
  }
  return Representation(q, field, dims, std::move(maps));
}

Representation simple(const Quiver& q, std::size_t k, const Field& field) {
  if (k >= q.vertex_count()) throw DomainError("vertex " + std::to_string(k) + " out of range");
  return Representation::zero(q, field, DimVector::unit(q.vertex_count(), k));
}

Representation direct_sum(const Representation& m, const Representation& n) {
  if (!(m.quiver() == n.quiver())) throw DomainError("direct sum of representations of different quivers");
  if (!(m.field() == n.field())) throw DomainError("direct sum of representations over different fields");
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < m.quiver().arrow_count(); ++a) {
    const Matrix& x = m.map(a);
    const Matrix& y = n.map(a);
    Matrix z(x.rows() + y.rows(), x.cols() + y.cols());
    for (std::size_t r = 0; r < x.rows(); ++r)
      for (std::size_t c = 0; c < x.cols(); ++c) z(r, c) = x(r, c);
    for (std::size_t r = 0; r < y.rows(); ++r)
      for (std::size_t c = 0; c < y.cols(); ++c) z(x.rows() + r, x.cols() + c) = y(r, c);
    maps.push_back(std::move(z));
  }
  return Representation(m.quiver(), m.field(), m.dims() + n.dims(), std::move(maps));
}

Representation direct_sum(const std::vector<Representation>& parts) {
  if (parts.empty()) throw DomainError("direct sum of an empty list");
  Representation acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = direct_sum(acc, parts[i]);
  return acc;
}

Representation dual(const Representation& m) {
  std::vector<Matrix> maps;
  for (const auto& x : m.maps()) maps.push_back(x.transposed());
  return Representation(m.quiver().opposite(), m.field(), m.dims(), std::move(maps));
}

Representation reduce_mod(const Representation& m, std::uint32_t p) {
  const Field fp = Field::prime(p);
  if (m.field().is_prime()) {
    if (m.field() == fp) return m;
    throw DomainError("cannot reduce a representation over " + m.field().name() + " modulo " + std::to_string(p));
  }
  std::vector<Matrix> maps;
  for (const auto& x : m.maps()) {
    for (std::size_t r = 0; r < x.rows(); ++r)
      for (std::size_t c = 0; c < x.cols(); ++c)
        if (!fp.reduces(x(r, c)))
          throw DomainError("bad reduction: entry " + to_string(x(r, c)) + " modulo " + std::to_string(p));
    maps.push_back(x);
  }
  return Representation(m.quiver(), fp, m.dims(), std::move(maps));
}

Representation restrict_to(const Representation& m, const SubrepWitness& w) {
  check_witness_shape(m, w);
  if (!is_stable(m, w)) throw DomainError("witness is not stable under the arrows");
  const Field& k = m.field();
  std::vector<Echelon> ech;
  for (const auto& b : w.bases()) ech.push_back(as_echelon(k, b));
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < m.quiver().arrow_count(); ++a) {
    const auto& arr = m.quiver().arrow(a);
    const Matrix img = image_rows(k, m.map(a), w.basis(arr.source));
    Matrix l(ech[arr.target].pivots.size(), img.rows());
    for (std::size_t j = 0; j < img.rows(); ++j) {
      const auto c = coordinates_in(ech[arr.target], img.row(j));
      for (std::size_t r = 0; r < c.size(); ++r) l(r, j) = c[r];
    }
    maps.push_back(std::move(l));
  }
  return Representation(m.quiver(), k, w.dims(), std::move(maps));
}

Representation quotient(const Representation& m, const SubrepWitness& w) {
  check_witness_shape(m, w);
  if (!is_stable(m, w)) throw DomainError("witness is not stable under the arrows");
  const Field& k = m.field();
  std::vector<Echelon> ech;
  std::vector<std::vector<std::size_t>> free_cols(m.quiver().vertex_count());
  for (std::size_t v = 0; v < w.bases().size(); ++v) {
    ech.push_back(as_echelon(k, w.basis(v)));
    std::size_t p = 0;
    for (std::size_t c = 0; c < m.dim(v); ++c) {
      if (p < ech[v].pivots.size() && ech[v].pivots[p] == c) {
        ++p;
        continue;
      }
      free_cols[v].push_back(c);
    }
  }
  const DimVector qdims = m.dims() - w.dims();
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < m.quiver().arrow_count(); ++a) {
    const auto& arr = m.quiver().arrow(a);
    Matrix qm(free_cols[arr.target].size(), free_cols[arr.source].size());
    for (std::size_t j = 0; j < free_cols[arr.source].size(); ++j) {
      const auto res = residue(k, ech[arr.target], m.map(a).col(free_cols[arr.source][j]));
      for (std::size_t r = 0; r < res.size(); ++r) qm(r, j) = res[r];
    }
    maps.push_back(std::move(qm));
  }
  return Representation(m.quiver(), k, qdims, std::move(maps));
}

}  // namespace qgrass
