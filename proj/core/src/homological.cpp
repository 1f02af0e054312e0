#include "qgrass/homological.hpp"

#include <random>
#include <stdexcept>

#include "qgrass/error.hpp"

namespace qgrass {

namespace {

void check_compatible(const Representation& n, const Representation& m) {
  if (!(n.quiver() == m.quiver())) throw DomainError("representations live on different quivers");
  if (!(n.field() == m.field())) throw DomainError("representations live over different fields");
}

std::vector<std::size_t> domain_offsets(const Representation& n, const Representation& m) {
  std::vector<std::size_t> off(n.quiver().vertex_count() + 1, 0);
  for (std::size_t i = 0; i < n.quiver().vertex_count(); ++i) off[i + 1] = off[i] + m.dim(i) * n.dim(i);
  return off;
}

std::vector<std::size_t> codomain_offsets(const Representation& n, const Representation& m) {
  const auto& q = n.quiver();
  std::vector<std::size_t> off(q.arrow_count() + 1, 0);
  for (std::size_t a = 0; a < q.arrow_count(); ++a)
    off[a + 1] = off[a] + m.dim(q.arrow(a).target) * n.dim(q.arrow(a).source);
  return off;
}

}  // namespace

Matrix phi_map(const Representation& n, const Representation& m) {
  check_compatible(n, m);
  const Field& k = m.field();
  const auto& q = n.quiver();
  const auto dom = domain_offsets(n, m);
  const auto cod = codomain_offsets(n, m);
  Matrix phi(cod.back(), dom.back());
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const std::size_t s = q.arrow(a).source, t = q.arrow(a).target;
    const std::size_t rows_t = m.dim(t);  // block shape of (M_a f_s - f_t N_a): d^M_t x d^N_s
    const Matrix& ma = m.map(a);
    const Matrix& na = n.map(a);
    // (M_a f_s)(r, c) = sum_l M_a(r, l) f_s(l, c); f_s(l, c) sits at dom[s] + c * d^M_s + l.
    for (std::size_t c = 0; c < n.dim(s); ++c)
      for (std::size_t r = 0; r < rows_t; ++r) {
        const std::size_t row = cod[a] + c * rows_t + r;
        for (std::size_t l = 0; l < m.dim(s); ++l)
          if (ma(r, l) != 0) {
            auto& x = phi(row, dom[s] + c * m.dim(s) + l);
            x = k.add(x, ma(r, l));
          }
        // (f_t N_a)(r, c) = sum_l f_t(r, l) N_a(l, c); f_t(r, l) sits at dom[t] + l * d^M_t + r.
        for (std::size_t l = 0; l < n.dim(t); ++l)
          if (na(l, c) != 0) {
            auto& x = phi(row, dom[t] + l * rows_t + r);
            x = k.sub(x, na(l, c));
          }
      }
  }
  return phi;
}

std::size_t hom_dim(const Representation& n, const Representation& m) {
  const Matrix phi = phi_map(n, m);
  return phi.cols() - rank(n.field(), phi);
}

std::size_t ext1_dim(const Representation& n, const Representation& m) {
  const Matrix phi = phi_map(n, m);
  const std::size_t r = rank(n.field(), phi);
  const long hom = static_cast<long>(phi.cols() - r);
  const long coker = static_cast<long>(phi.rows() - r);
  const long euler = euler_form(n.quiver(), n.dims(), m.dims());
  if (hom - euler != coker)
    throw std::logic_error("hom - euler form disagrees with the Phi-map cokernel");
  return static_cast<std::size_t>(coker);
}

Morphism morphism_from_vector(const Representation& n, const Representation& m, const std::vector<Rational>& v) {
  const auto dom = domain_offsets(n, m);
  if (v.size() != dom.back()) throw DomainError("morphism vector has the wrong length");
  Morphism f;
  for (std::size_t i = 0; i < n.quiver().vertex_count(); ++i) {
    Matrix fi(m.dim(i), n.dim(i));
    for (std::size_t c = 0; c < n.dim(i); ++c)
      for (std::size_t r = 0; r < m.dim(i); ++r) fi(r, c) = v[dom[i] + c * m.dim(i) + r];
    f.push_back(std::move(fi));
  }
  return f;
}

std::vector<Matrix> cocycle_from_vector(const Representation& n, const Representation& m,
                                        const std::vector<Rational>& v) {
  const auto& q = n.quiver();
  const auto cod = codomain_offsets(n, m);
  if (v.size() != cod.back()) throw DomainError("cocycle vector has the wrong length");
  std::vector<Matrix> z;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const std::size_t rows = m.dim(q.arrow(a).target), cols = n.dim(q.arrow(a).source);
    Matrix za(rows, cols);
    for (std::size_t c = 0; c < cols; ++c)
      for (std::size_t r = 0; r < rows; ++r) za(r, c) = v[cod[a] + c * rows + r];
    z.push_back(std::move(za));
  }
  return z;
}

std::vector<Morphism> hom_basis(const Representation& n, const Representation& m) {
  const Matrix ker = kernel(n.field(), phi_map(n, m));
  std::vector<Morphism> out;
  for (std::size_t j = 0; j < ker.cols(); ++j) out.push_back(morphism_from_vector(n, m, ker.col(j)));
  return out;
}

bool is_morphism(const Representation& n, const Representation& m, const Morphism& f) {
  check_compatible(n, m);
  const Field& k = m.field();
  const auto& q = n.quiver();
  if (f.size() != q.vertex_count()) return false;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f[i].rows() != m.dim(i) || f[i].cols() != n.dim(i)) return false;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const std::size_t s = q.arrow(a).source, t = q.arrow(a).target;
    if (!(multiply(k, m.map(a), f[s]) == multiply(k, f[t], n.map(a)))) return false;
  }
  return true;
}

std::size_t tangent_dim(const Representation& m, const SubrepWitness& w) {
  return hom_dim(restrict_to(m, w), quotient(m, w));
}

bool is_rigid(const Representation& m) { return ext1_dim(m, m) == 0; }

Extension build_extension(const Representation& s, const Representation& x, const std::vector<Matrix>& cocycle) {
  check_compatible(s, x);
  const auto& q = s.quiver();
  const Field& k = s.field();
  if (cocycle.size() != q.arrow_count()) throw DomainError("cocycle needs one block per arrow");
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const std::size_t src = q.arrow(a).source, tgt = q.arrow(a).target;
    const Matrix& z = cocycle[a];
    if (z.rows() != x.dim(tgt) || z.cols() != s.dim(src))
      throw DomainError("cocycle block " + std::to_string(a) + " has the wrong shape");
    Matrix ya(x.dim(tgt) + s.dim(tgt), x.dim(src) + s.dim(src));
    for (std::size_t r = 0; r < x.dim(tgt); ++r) {
      for (std::size_t c = 0; c < x.dim(src); ++c) ya(r, c) = x.map(a)(r, c);
      for (std::size_t c = 0; c < s.dim(src); ++c) ya(r, x.dim(src) + c) = z(r, c);
    }
    for (std::size_t r = 0; r < s.dim(tgt); ++r)
      for (std::size_t c = 0; c < s.dim(src); ++c) ya(x.dim(tgt) + r, x.dim(src) + c) = s.map(a)(r, c);
    maps.push_back(std::move(ya));
  }
  Representation y(q, k, x.dims() + s.dims(), std::move(maps));

  std::vector<Matrix> sub;
  Morphism proj;
  for (std::size_t i = 0; i < q.vertex_count(); ++i) {
    Matrix b(x.dim(i), y.dim(i));
    for (std::size_t r = 0; r < x.dim(i); ++r) b(r, r) = 1;
    sub.push_back(std::move(b));
    Matrix p(s.dim(i), y.dim(i));
    for (std::size_t r = 0; r < s.dim(i); ++r) p(r, x.dim(i) + r) = 1;
    proj.push_back(std::move(p));
  }
  return {std::move(y), SubrepWitness(k, std::move(sub)), std::move(proj)};
}

EmbeddingSearch generic_embeds(const Representation& n, const Representation& m, std::size_t trials,
                               std::uint64_t seed) {
  check_compatible(n, m);
  EmbeddingSearch result;
  if (!n.dims().fits_in(m.dims())) {
    result.probabilistic = false;  // dimension count rules it out
    return result;
  }
  const Field& k = m.field();
  const auto basis = hom_basis(n, m);
  const auto injective_at_all_vertices = [&](const Morphism& f) {
    for (std::size_t i = 0; i < f.size(); ++i)
      if (rank(k, f[i]) != n.dim(i)) return false;
    return true;
  };
  if (n.dims().is_zero()) {
    result.found = true;
    for (std::size_t i = 0; i < n.quiver().vertex_count(); ++i) result.witness.emplace_back(m.dim(i), 0);
    return result;
  }
  if (basis.empty()) return result;  // Hom = 0 and N != 0: certainly no embedding

  std::mt19937_64 rng(seed);
  const std::uint64_t range = k.is_prime() ? k.characteristic() : 11;  // Q: coefficients in [-5, 5]
  for (std::size_t t = 0; t < trials; ++t) {
    ++result.trials_used;
    Morphism f;
    for (std::size_t i = 0; i < n.quiver().vertex_count(); ++i) f.emplace_back(m.dim(i), n.dim(i));
    for (const auto& b : basis) {
      Rational c = static_cast<long>(rng() % range);
      if (k.is_rationals()) c -= 5;
      if (c == 0) continue;
      for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t r = 0; r < f[i].rows(); ++r)
          for (std::size_t col = 0; col < f[i].cols(); ++col)
            f[i](r, col) = k.add(f[i](r, col), k.mul(c, b[i](r, col)));
    }
    if (injective_at_all_vertices(f) && is_morphism(n, m, f)) {
      result.found = true;
      result.witness = std::move(f);
      return result;
    }
  }
  result.probabilistic = true;
  return result;
}

SubrepWitness kernel_witness(const Representation& n, const Morphism& f) {
  std::vector<Matrix> spans;
  for (std::size_t i = 0; i < n.quiver().vertex_count(); ++i)
    spans.push_back(kernel(n.field(), f.at(i)).transposed());
  return SubrepWitness::from_spanning_rows(n.field(), spans);
}

SubrepWitness image_witness(const Representation& m, const Morphism& f) {
  std::vector<Matrix> spans;
  for (std::size_t i = 0; i < m.quiver().vertex_count(); ++i) {
    Matrix cols = f.at(i).transposed();  // rows are the images of the basis vectors
    if (cols.cols() != m.dim(i)) cols = Matrix(0, m.dim(i));
    spans.push_back(std::move(cols));
  }
  return SubrepWitness::from_spanning_rows(m.field(), spans);
}

}  // namespace qgrass
