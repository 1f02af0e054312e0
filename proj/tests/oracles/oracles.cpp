#include "oracles.hpp"

#include <functional>

namespace oracle {

namespace {

int mod(long x, int p) { return static_cast<int>(((x % p) + p) % p); }

std::vector<Vec> all_vectors(int d, int p) {
  std::vector<Vec> out;
  Vec v(d, 0);
  while (true) {
    out.push_back(v);
    int k = d - 1;
    while (k >= 0 && ++v[k] == p) v[k--] = 0;
    if (k < 0) break;
  }
  return out;
}

Space span(const std::vector<Vec>& gens, int d, int p) {
  Space s{Vec(d, 0)};
  for (const auto& g : gens) {
    Space next;
    for (const auto& v : s)
      for (int c = 0; c < p; ++c) {
        Vec w(d);
        for (int i = 0; i < d; ++i) w[i] = (v[i] + c * g[i]) % p;
        next.insert(w);
      }
    s = std::move(next);
  }
  return s;
}

int entry(const qgrass::Rational& x, int p) {
  // Entries are already normalized integers over F_p.
  return mod(x.get_num().get_si(), p);
}

}  // namespace

std::vector<Space> all_subspaces(int d, int e, int p) {
  std::set<Space> found;
  const auto vecs = all_vectors(d, p);
  std::size_t size = 1;
  for (int i = 0; i < e; ++i) size *= static_cast<std::size_t>(p);
  std::vector<std::size_t> pick(e, 0);
  std::function<void(int)> rec = [&](int k) {
    if (k == e) {
      std::vector<Vec> gens;
      for (auto i : pick) gens.push_back(vecs[i]);
      Space s = span(gens, d, p);
      if (s.size() == size) found.insert(std::move(s));
      return;
    }
    for (std::size_t i = k ? pick[k - 1] + 1 : 0; i < vecs.size(); ++i) {
      pick[k] = i;
      rec(k + 1);
    }
  };
  rec(0);
  return {found.begin(), found.end()};
}

std::uint64_t count_points(const qgrass::Representation& m, const qgrass::DimVector& e) {
  const int p = static_cast<int>(m.field().characteristic());
  const auto& q = m.quiver();
  const std::size_t n = q.vertex_count();
  std::vector<std::vector<Space>> choices(n);
  for (std::size_t v = 0; v < n; ++v) choices[v] = all_subspaces(static_cast<int>(m.dim(v)), static_cast<int>(e[v]), p);
  std::vector<std::size_t> at(n, 0);
  std::uint64_t count = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t v) {
    if (v == n) {
      for (std::size_t a = 0; a < q.arrow_count(); ++a) {
        const auto [s, t] = q.arrow(a);
        const auto& mat = m.map(a);
        for (const auto& x : choices[s][at[s]]) {
          Vec y(m.dim(t), 0);
          for (std::size_t r = 0; r < mat.rows(); ++r) {
            long acc = 0;
            for (std::size_t c = 0; c < mat.cols(); ++c) acc += entry(mat(r, c), p) * x[c];
            y[r] = mod(acc, p);
          }
          if (!choices[t][at[t]].count(y)) return;
        }
      }
      ++count;
      return;
    }
    for (at[v] = 0; at[v] < choices[v].size(); ++at[v]) rec(v + 1);
  };
  rec(0);
  return count;
}

qgrass::Integer gaussian_binomial(long d, long e, long q) {
  if (e < 0 || e > d) return 0;
  qgrass::Integer num = 1, den = 1, qq = q;
  for (long i = 0; i < e; ++i) {
    qgrass::Integer a, b;
    mpz_pow_ui(a.get_mpz_t(), qq.get_mpz_t(), static_cast<unsigned long>(d - i));
    mpz_pow_ui(b.get_mpz_t(), qq.get_mpz_t(), static_cast<unsigned long>(i + 1));
    num *= a - 1;
    den *= b - 1;
  }
  return num / den;
}

long hom_dim_bruteforce(const qgrass::Representation& n, const qgrass::Representation& m) {
  const int p = static_cast<int>(n.field().characteristic());
  const auto& q = n.quiver();
  // One unknown per entry of each f_v (d^M_v x d^N_v).
  std::vector<std::size_t> offset;
  std::size_t unknowns = 0;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    offset.push_back(unknowns);
    unknowns += m.dim(v) * n.dim(v);
  }
  const auto f = [&](const Vec& x, std::size_t v, std::size_t r, std::size_t c) {
    return x[offset[v] + r * n.dim(v) + c];
  };
  long commuting = 0;
  for (const auto& x : all_vectors(static_cast<int>(unknowns), p)) {
    bool ok = true;
    for (std::size_t a = 0; a < q.arrow_count() && ok; ++a) {
      const auto [s, t] = q.arrow(a);
      for (std::size_t r = 0; r < m.dim(t) && ok; ++r)
        for (std::size_t c = 0; c < n.dim(s) && ok; ++c) {
          long lhs = 0, rhs = 0;
          for (std::size_t k = 0; k < m.dim(s); ++k) lhs += entry(m.map(a)(r, k), p) * f(x, s, k, c);
          for (std::size_t k = 0; k < n.dim(t); ++k) rhs += f(x, t, r, k) * entry(n.map(a)(k, c), p);
          ok = mod(lhs - rhs, p) == 0;
        }
    }
    commuting += ok;
  }
  long dim = 0;
  for (long c = commuting; c > 1; c /= p) ++dim;
  return dim;
}

std::set<std::vector<long>> positive_roots(const qgrass::Quiver& q, long bound) {
  const std::size_t n = q.vertex_count();
  std::set<std::vector<long>> roots;
  std::vector<long> d(n, 0);
  while (true) {
    std::size_t k = 0;
    while (k < n && ++d[k] > bound) d[k++] = 0;
    if (k == n) break;
    long form = 0;
    for (auto x : d) form += x * x;
    for (const auto& a : q.arrows()) form -= d[a.source] * d[a.target];
    if (form == 1) roots.insert(d);
  }
  return roots;
}

long composite_rank(const qgrass::Representation& m, int i, int j) {
  const auto& k = m.field();
  qgrass::Matrix acc = qgrass::Matrix::identity(m.dim(static_cast<std::size_t>(i - 1)));
  for (int a = i - 1; a < j - 1; ++a) acc = qgrass::multiply(k, m.map(static_cast<std::size_t>(a)), acc);
  return static_cast<long>(qgrass::rank(k, acc));
}

std::vector<qgrass::typea::IntervalDecomposition> isoclasses(int n, const qgrass::DimVector& d) {
  std::vector<qgrass::typea::Interval> ivs;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) ivs.push_back({i, j});
  std::vector<qgrass::typea::IntervalDecomposition> out;
  std::vector<long> rest(d.entries());
  qgrass::typea::IntervalDecomposition cur(n);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == ivs.size()) {
      for (long r : rest)
        if (r != 0) return;
      out.push_back(cur);
      return;
    }
    const auto u = ivs[k];
    long room = 1L << 30;
    for (int v = u.i; v <= u.j; ++v) room = std::min(room, rest[v - 1]);
    for (long c = 0; c <= room; ++c) {
      const auto saved = cur;
      if (c) cur.add(u, c);
      for (int v = u.i; v <= u.j; ++v) rest[v - 1] -= c;
      rec(k + 1);
      for (int v = u.i; v <= u.j; ++v) rest[v - 1] += c;
      cur = saved;
    }
  };
  rec(0);
  return out;
}

qgrass::Representation random_type_a(int n, int max_dim, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dim(0, max_dim), val(-1, 1);
  std::vector<long> d;
  for (int i = 0; i < n; ++i) d.push_back(dim(rng));
  const auto q = qgrass::Quiver::equioriented_a(static_cast<std::size_t>(n));
  std::vector<qgrass::Matrix> maps;
  for (int a = 0; a + 1 < n; ++a) {
    qgrass::Matrix m(static_cast<std::size_t>(d[a + 1]), static_cast<std::size_t>(d[a]));
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = val(rng) * (rng() % 2);
    maps.push_back(m);
  }
  return {q, qgrass::Field::rationals(), qgrass::DimVector(d), maps};
}

qgrass::Representation random_fp_rep(std::size_t vertices, int max_dim, std::uint32_t p, std::mt19937_64& rng) {
  std::vector<qgrass::Arrow> arrows;
  for (std::size_t i = 0; i < vertices; ++i)
    for (std::size_t j = i + 1; j < vertices; ++j) {
      const auto k = rng() % 3;  // 0, 1 or 2 parallel arrows
      for (std::size_t c = 0; c < k; ++c) arrows.push_back({i, j});
    }
  std::uniform_int_distribution<int> dim(0, max_dim);
  std::vector<long> d;
  for (std::size_t i = 0; i < vertices; ++i) d.push_back(dim(rng));
  const qgrass::Quiver q(vertices, arrows);
  std::vector<qgrass::Matrix> maps;
  for (const auto& a : arrows) {
    qgrass::Matrix m(static_cast<std::size_t>(d[a.target]), static_cast<std::size_t>(d[a.source]));
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = static_cast<long>(rng() % p);
    maps.push_back(m);
  }
  return {q, qgrass::Field::prime(p), qgrass::DimVector(d), maps};
}

}  // namespace oracle
