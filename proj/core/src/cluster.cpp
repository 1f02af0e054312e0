#include "qgrass/cluster.hpp"

#include "qgrass/error.hpp"
#include "qgrass/homological.hpp"
#include "qgrass/typea.hpp"

namespace qgrass::cluster {

ar::IntMatrix exchange_matrix(const Quiver& q) {
  const std::size_t n = q.vertex_count();
  ar::IntMatrix b(n, std::vector<long>(n, 0));
  for (const auto& a : q.arrows()) {
    b[a.target][a.source] += 1;
    b[a.source][a.target] -= 1;
  }
  return b;
}

std::vector<long> g_vector(const Representation& m) {
  const auto& q = m.quiver();
  std::vector<long> g;
  for (std::size_t i = 0; i < q.vertex_count(); ++i)
    g.push_back(-euler_form(q, DimVector::unit(q.vertex_count(), i), m.dims()));
  return g;
}

std::vector<long> injective_multiplicities(const Quiver& q, const std::vector<long>& dim) {
  const std::size_t n = q.vertex_count();
  const auto p = ar::path_count_matrix(q);
  Matrix sys(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) sys(i, j) = p[i][j];  // dim I_j at vertex i
    sys(i, n) = dim.at(i);
  }
  const Echelon ech = rref(Field::rationals(), sys);
  std::vector<long> c(n, 0);
  for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
    if (ech.pivots[r] == n) throw DomainError("not a combination of injective dimension vectors");
    const Rational& x = ech.reduced(r, n);
    if (x.get_den() != 1 || x < 0) throw DomainError("injective multiplicities are not natural numbers");
    c[ech.pivots[r]] = x.get_num().get_si();
  }
  return c;
}

std::vector<long> g_vector_from_injectives(const Representation& m) {
  const auto& q = m.quiver();
  const Field& k = m.field();
  const std::size_t n = q.vertex_count();
  // soc(M)_k = common kernel of the arrows leaving k; I_0 = sum of I_k^(soc_k).
  std::vector<long> soc(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    Matrix stacked(0, m.dim(v));
    for (auto a : q.out_arrows(v)) stacked = stack_rows(stacked, m.map(a));
    soc[v] = static_cast<long>(m.dim(v) - (stacked.rows() ? rank(k, stacked) : 0));
  }
  const auto p = ar::path_count_matrix(q);
  std::vector<long> i1(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) i1[i] += soc[j] * p[i][j];
    i1[i] -= m.dims()[i];
  }
  const auto c = injective_multiplicities(q, i1);
  std::vector<long> g(n);
  for (std::size_t i = 0; i < n; ++i) g[i] = c[i] - soc[i];
  return g;
}

std::string to_string(ChiStrategy s) {
  switch (s) {
    case ChiStrategy::automatic: return "automatic";
    case ChiStrategy::cells: return "cells";
    case ChiStrategy::count: return "count";
  }
  return "?";
}

LaurentPoly f_polynomial(const Representation& m, ChiStrategy strategy, const CountOptions& opts) {
  const std::size_t n = m.quiver().vertex_count();
  if (strategy == ChiStrategy::automatic)
    strategy = m.quiver().is_equioriented_a() ? ChiStrategy::cells : ChiStrategy::count;
  LaurentPoly f(n);
  if (strategy == ChiStrategy::cells) {
    const auto dec = typea::decompose(m);
    for (const auto& e : sub_dimension_vectors(m.dims())) f.add_term(e.entries(), typea::euler_char_cells(dec, e));
    return f;
  }
  for (const auto& e : sub_dimension_vectors(m.dims())) {
    const CountPoly cp = counting_polynomial(m, e, {}, opts);
    if (cp.consistency != Consistency::verified)
      throw DomainError("counting polynomial for e = " + to_string(e) + " is " + to_string(cp.consistency));
    f.add_term(e.entries(), euler_characteristic(cp));
  }
  return f;
}

LaurentPoly character_from_f(const Quiver& q, const DimVector& dim, const LaurentPoly& f) {
  const std::size_t n = q.vertex_count();
  const auto b = exchange_matrix(q);
  std::vector<long> g;
  for (std::size_t i = 0; i < n; ++i) g.push_back(-euler_form(q, DimVector::unit(n, i), dim));
  LaurentPoly cc(2 * n);
  for (const auto& [e, chi] : f.terms()) {
    Exponents mono(2 * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      long be = 0;
      for (std::size_t j = 0; j < n; ++j) be += b[i][j] * e[j];
      mono[i] = be + g[i];
      mono[n + i] = e[i];
    }
    cc.add_term(mono, chi);
  }
  return cc;
}

LaurentPoly cluster_character(const Representation& m, ChiStrategy strategy, const CountOptions& opts) {
  return character_from_f(m.quiver(), m.dims(), f_polynomial(m, strategy, opts));
}

Representation GeneratingExtension::x_s_module() const { return restrict_to(x, x_s.value()); }
Representation GeneratingExtension::s_x_module() const { return restrict_to(s, s_x.value()); }
Representation GeneratingExtension::s_mod_s_x() const { return quotient(s, s_x.value()); }
DimVector GeneratingExtension::dim_s_x() const { return s_x.value().dims(); }

namespace {

/// First standard basis vector outside the column space of `phi`.
std::vector<Rational> cocycle_outside_image(const Field& k, const Matrix& phi) {
  const Matrix rows = phi.transposed();
  const std::size_t r = rank(k, rows);
  for (std::size_t i = 0; i < phi.rows(); ++i) {
    Matrix unit(1, phi.rows());
    unit(0, i) = 1;
    if (rank(k, stack_rows(rows, unit)) > r) return unit.row(0);
  }
  throw DomainError("the Phi-map is surjective; no nonsplit class");
}

}  // namespace

GeneratingExtension make_generating(const Representation& s, const Representation& x) {
  GeneratingExtension ge{s, x, true, direct_sum(x, s), {}, std::nullopt, std::nullopt};
  const std::size_t ext = ext1_dim(s, x);
  if (ext >= 2) throw DomainError("Ext^1(S, X) has dimension " + std::to_string(ext) + "; not generating");
  if (ext == 0) return ge;
  const Field& k = s.field();
  const Matrix phi = phi_map(s, x);
  ge.cocycle = cocycle_from_vector(s, x, cocycle_outside_image(k, phi));
  ge.y = build_extension(s, x, ge.cocycle).middle;
  ge.split = false;
  if (!s.quiver().is_equioriented_a()) return ge;

  const auto tau_s = typea::to_representation(typea::tau(typea::decompose(s)), k);
  const auto tau_inv_x = typea::to_representation(typea::tau_inverse(typea::decompose(x)), k);
  const auto f = hom_basis(x, tau_s);
  const auto g = hom_basis(tau_inv_x, s);
  if (f.empty() || g.empty()) throw std::logic_error("nonsplit extension without an AR partner map");
  ge.x_s = kernel_witness(x, f.front());
  ge.s_x = image_witness(s, g.front());
  return ge;
}

MultiplicationReport verify_multiplication(const GeneratingExtension& ge, ChiStrategy strategy) {
  if (ge.split) throw DomainError("the multiplication formula needs a nonsplit extension");
  if (!ge.x_s || !ge.s_x) throw DomainError("X_S and S^X are only available on equioriented A_n");
  const auto& q = ge.x.quiver();
  const std::size_t n = q.vertex_count();
  MultiplicationReport rep;
  rep.dim_s_x = ge.dim_s_x();

  const Representation xs = ge.x_s_module();
  const Representation sq = ge.s_mod_s_x();
  const auto fx = f_polynomial(ge.x, strategy), fs = f_polynomial(ge.s, strategy);
  const auto fy = f_polynomial(ge.y, strategy), fxs = f_polynomial(xs, strategy), fsq = f_polynomial(sq, strategy);

  // dim I = dim tau S^X - dim X/X_S.
  const auto tau_sx = typea::tau(typea::decompose(ge.s_x_module())).dims();
  std::vector<long> dim_i(n);
  for (std::size_t i = 0; i < n; ++i) dim_i[i] = tau_sx[i] - (ge.x.dims()[i] - xs.dims()[i]);
  rep.f = injective_multiplicities(q, dim_i);

  Exponents ydim(n), xf(2 * n, 0), yx(2 * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    ydim[i] = rep.dim_s_x[i];
    yx[n + i] = rep.dim_s_x[i];
    yx[i] = rep.f[i];
  }
  (void)xf;
  rep.lhs = character_from_f(q, ge.x.dims(), fx) * character_from_f(q, ge.s.dims(), fs);
  rep.rhs = character_from_f(q, ge.y.dims(), fy) + LaurentPoly::monomial(yx) *
                                                       character_from_f(q, xs.dims(), fxs) *
                                                       character_from_f(q, sq.dims(), fsq);
  rep.residual = rep.lhs - rep.rhs;
  rep.f_lhs = fx * fs;
  rep.f_rhs = fy + LaurentPoly::monomial(ydim) * fxs * fsq;
  rep.holds = rep.residual.is_zero() && rep.f_lhs == rep.f_rhs;
  return rep;
}

namespace {

Integer power(std::uint32_t p, long k) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), p, static_cast<unsigned long>(k));
  return r;
}

}  // namespace

PsiReport psi_count_identity(const GeneratingExtension& ge, const DimVector& e, const std::vector<std::uint32_t>& primes,
                             std::uint64_t budget) {
  const auto& q = ge.x.quiver();
  PsiReport rep;
  rep.e = e;
  rep.holds = true;
  if (!ge.split && (!ge.x_s || !ge.s_x)) throw DomainError("X_S and S^X are only available on equioriented A_n");
  for (auto p : primes) {
    PsiRow row;
    row.p = p;
    try {
      const CountOptions opts{budget, 0};
      const auto count = [&](const Representation& m, const DimVector& d) -> Integer {
        if (!d.fits_in(m.dims())) return 0;
        return count_points(m.field().is_prime() ? m : reduce_mod(m, p), d, opts);
      };
      const Representation y = reduce_mod(ge.y, p), x = reduce_mod(ge.x, p), s = reduce_mod(ge.s, p);
      std::optional<Representation> xs, sq;
      DimVector sx_dim(e.size());
      if (!ge.split) {
        xs = reduce_mod(ge.x_s_module(), p);
        sq = reduce_mod(ge.s_mod_s_x(), p);
        sx_dim = ge.dim_s_x();
      }
      row.lhs = count(y, e);
      row.rhs = 0;
      for (const auto& f : sub_dimension_vectors(e)) {
        const DimVector g = e - f;
        if (!f.fits_in(x.dims()) || !g.fits_in(s.dims())) continue;
        Integer image = count(x, f) * count(s, g);
        if (!ge.split && g.fits_in(s.dims()) && sx_dim.fits_in(g)) image -= count(*xs, f) * count(*sq, g - sx_dim);
        if (image == 0) continue;
        std::vector<long> rest(f.size());
        for (std::size_t i = 0; i < f.size(); ++i) rest[i] = x.dims()[i] - f[i];
        const long rk = euler_form(q, g.entries(), rest);
        if (rk < 0) {
          row.note = "negative fibre rank at f = " + to_string(f);
          row.rhs = -1;
          break;
        }
        row.rhs += image * power(p, rk);
      }
      row.holds = row.lhs == row.rhs;
    } catch (const DomainError& err) {
      row.skipped = true;
      row.note = err.what();
    }
    rep.holds = rep.holds && (row.holds || row.skipped);
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

}  // namespace qgrass::cluster
