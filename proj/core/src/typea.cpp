#include "qgrass/typea.hpp"

#include <algorithm>
#include <cctype>

#include "qgrass/error.hpp"
#include "qgrass/homological.hpp"

namespace qgrass::typea {

namespace {

void check_interval(const Interval& u, int n) {
  if (u.i < 1 || u.i > u.j || u.j > n)
    throw DomainError("U[" + std::to_string(u.i) + "," + std::to_string(u.j) + "] is not an interval of A_" +
                      std::to_string(n));
}

std::size_t tri_index(int n, int i, int j) {
  // Pairs (i, j), i <= j, row-major by i.
  const auto ui = static_cast<std::size_t>(i - 1), un = static_cast<std::size_t>(n);
  return ui * un - ui * (ui - 1) / 2 + static_cast<std::size_t>(j - i);
}

}  // namespace

std::string to_string(const Interval& u) { return "U[" + std::to_string(u.i) + "," + std::to_string(u.j) + "]"; }

IntervalDecomposition::IntervalDecomposition(int n) : n_(n) {
  if (n < 0) throw DomainError("negative A_n rank");
}

long IntervalDecomposition::multiplicity(const Interval& u) const {
  const auto it = m_.find(u);
  return it == m_.end() ? 0 : it->second;
}

IntervalDecomposition& IntervalDecomposition::add(const Interval& u, long count) {
  check_interval(u, n_);
  if (count < 0) throw DomainError("negative multiplicity");
  if (count > 0) m_[u] += count;
  return *this;
}

std::vector<Interval> IntervalDecomposition::summands() const {
  std::vector<Interval> out;
  for (const auto& [u, c] : m_)
    for (long k = 0; k < c; ++k) out.push_back(u);
  return out;
}

DimVector IntervalDecomposition::dims() const {
  DimVector d(static_cast<std::size_t>(n_));
  for (const auto& [u, c] : m_)
    for (int k = u.i; k <= u.j; ++k) d[static_cast<std::size_t>(k - 1)] += c;
  return d;
}

IntervalDecomposition operator+(const IntervalDecomposition& a, const IntervalDecomposition& b) {
  if (a.n() != b.n()) throw DomainError("sum of A_n modules with different n");
  IntervalDecomposition s = a;
  for (const auto& [u, c] : b.multiplicities()) s.add(u, c);
  return s;
}

std::string to_string(const IntervalDecomposition& m) {
  // Coefficient-quiver order reads top to bottom.
  std::string s;
  const auto& mult = m.multiplicities();
  std::vector<std::pair<Interval, long>> items(mult.begin(), mult.end());
  std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    return a.first.j != b.first.j ? a.first.j > b.first.j : a.first.i > b.first.i;
  });
  for (const auto& [u, c] : items) {
    if (!s.empty()) s += " + ";
    s += to_string(u);
    if (c != 1) s += "^" + std::to_string(c);
  }
  return s.empty() ? "0" : s;
}

IntervalDecomposition parse_intervals(const std::string& text, int n) {
  IntervalDecomposition m(n);
  std::size_t pos = 0;
  const auto fail = [&](const std::string& what) -> void {
    throw ParseError(what, "offset " + std::to_string(pos));
  };
  const auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  const auto expect = [&](char c) {
    skip();
    if (pos >= text.size() || text[pos] != c) fail(std::string("expected '") + c + "'");
    ++pos;
  };
  const auto number = [&]() -> long {
    skip();
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) fail("expected a number");
    if (pos - start > 9) fail("number too large");
    return std::stol(text.substr(start, pos - start));
  };
  skip();
  if (text.substr(pos) == "0") return m;
  while (true) {
    expect('U');
    expect('[');
    const long i = number();
    expect(',');
    const long j = number();
    expect(']');
    long c = 1;
    skip();
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      c = number();
    }
    const Interval u{static_cast<int>(i), static_cast<int>(j)};
    if (u.i < 1 || u.i > u.j || u.j > n) fail(to_string(u) + " is not an interval of A_" + std::to_string(n));
    m.add(u, c);
    skip();
    if (pos == text.size()) break;
    expect('+');
  }
  return m;
}

RankSequence::RankSequence(int n, std::vector<long> upper) : n_(n), r_(std::move(upper)) {
  if (n < 0) throw DomainError("negative A_n rank");
  if (r_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n + 1) / 2)
    throw DomainError("rank sequence has the wrong number of entries");
  for (long x : r_)
    if (x < 0) throw DomainError("negative rank");
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      if ((*this)(i, j) + (*this)(i - 1, j + 1) < (*this)(i, j + 1) + (*this)(i - 1, j))
        throw DomainError("not a rank sequence: inequality fails at (" + std::to_string(i) + "," +
                          std::to_string(j) + ")");
}

long RankSequence::operator()(int i, int j) const {
  if (i < 1 || j > n_) return 0;
  if (i > j) throw DomainError("rank index with i > j");
  return r_[tri_index(n_, i, j)];
}

Representation interval_module(int n, const Interval& u, const Field& field) {
  check_interval(u, n);
  const Quiver q = Quiver::equioriented_a(static_cast<std::size_t>(n));
  DimVector d(static_cast<std::size_t>(n));
  for (int k = u.i; k <= u.j; ++k) d[static_cast<std::size_t>(k - 1)] = 1;
  std::vector<Matrix> maps;
  for (int a = 0; a + 1 < n; ++a) {
    // Arrow a joins vertices a+1 -> a+2 (1-based).
    const std::size_t s = static_cast<std::size_t>(d[static_cast<std::size_t>(a)]);
    const std::size_t t = static_cast<std::size_t>(d[static_cast<std::size_t>(a + 1)]);
    Matrix x(t, s);
    if (s == 1 && t == 1) x(0, 0) = 1;
    maps.push_back(std::move(x));
  }
  return Representation(q, field, d, std::move(maps));
}

Representation to_representation(const IntervalDecomposition& m, const Field& field) {
  const auto cq = coefficient_quiver(m);
  if (cq.rows.empty())
    return Representation::zero(Quiver::equioriented_a(static_cast<std::size_t>(m.n())), field,
                                DimVector(static_cast<std::size_t>(m.n())));
  std::vector<Representation> parts;
  for (const auto& u : cq.rows) parts.push_back(interval_module(m.n(), u, field));
  return direct_sum(parts);
}

int check_type_a(const Representation& m) {
  if (!m.quiver().is_equioriented_a())
    throw DomainError("expected the equioriented A_n quiver 1 -> 2 -> ... -> n");
  return static_cast<int>(m.quiver().vertex_count());
}

RankSequence rank_sequence(const Representation& m) {
  const int n = check_type_a(m);
  const Field& k = m.field();
  std::vector<long> r;
  for (int i = 1; i <= n; ++i) {
    Matrix comp = Matrix::identity(m.dim(static_cast<std::size_t>(i - 1)));
    r.push_back(static_cast<long>(comp.rows()));
    for (int j = i + 1; j <= n; ++j) {
      comp = multiply(k, m.map(static_cast<std::size_t>(j - 2)), comp);
      r.push_back(static_cast<long>(rank(k, comp)));
    }
  }
  return RankSequence(n, std::move(r));
}

IntervalDecomposition multiplicities_from_ranks(const RankSequence& r) {
  IntervalDecomposition m(r.n());
  for (int i = 1; i <= r.n(); ++i)
    for (int j = i; j <= r.n(); ++j) {
      const long c = r(i, j) - r(i - 1, j) - r(i, j + 1) + r(i - 1, j + 1);
      if (c < 0) throw DomainError("not a rank sequence");
      m.add({i, j}, c);
    }
  return m;
}

RankSequence ranks_from_multiplicities(const IntervalDecomposition& m) {
  const int n = m.n();
  std::vector<long> r;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      long s = 0;
      for (const auto& [u, c] : m.multiplicities())
        if (u.i <= i && j <= u.j) s += c;
      r.push_back(s);
    }
  return RankSequence(n, std::move(r));
}

IntervalDecomposition decompose(const Representation& m) { return multiplicities_from_ranks(rank_sequence(m)); }

int hom_interval(const Interval& a, const Interval& b) { return b.i <= a.i && a.i <= b.j && b.j <= a.j ? 1 : 0; }

int ext_interval(const Interval& a, const Interval& b) {
  return a.i + 1 <= b.i && b.i <= a.j + 1 && a.j + 1 <= b.j ? 1 : 0;
}

long hom(const IntervalDecomposition& a, const IntervalDecomposition& b) {
  long s = 0;
  for (const auto& [u, c] : a.multiplicities())
    for (const auto& [w, d] : b.multiplicities()) s += c * d * hom_interval(u, w);
  return s;
}

long ext1(const IntervalDecomposition& a, const IntervalDecomposition& b) {
  long s = 0;
  for (const auto& [u, c] : a.multiplicities())
    for (const auto& [w, d] : b.multiplicities()) s += c * d * ext_interval(u, w);
  return s;
}

bool deg_leq_ranks(const RankSequence& m, const RankSequence& n) {
  if (m.n() != n.n()) throw DomainError("rank sequences of different length");
  for (int i = 1; i <= m.n(); ++i) {
    if (m(i, i) != n(i, i)) return false;
    for (int j = i + 1; j <= m.n(); ++j)
      if (m(i, j) < n(i, j)) return false;
  }
  return true;
}

bool deg_leq_hom(const Representation& m, const Representation& n) {
  const int rank_n = check_type_a(m);
  if (check_type_a(n) != rank_n) throw DomainError("modules over different A_n");
  if (!(m.dims() == n.dims())) throw DomainError("degeneration needs equal dimension vectors");
  for (int i = 1; i <= rank_n; ++i)
    for (int j = i; j <= rank_n; ++j) {
      const Representation u = interval_module(rank_n, {i, j}, m.field());
      if (hom_dim(u, m) > hom_dim(u, n)) return false;
    }
  return true;
}

CoefficientQuiver coefficient_quiver(const IntervalDecomposition& m) {
  CoefficientQuiver cq{m.n(), m.summands()};
  std::stable_sort(cq.rows.begin(), cq.rows.end(), [](const Interval& a, const Interval& b) {
    return a.j != b.j ? a.j > b.j : a.i > b.i;
  });
  return cq;
}

std::vector<TorusFixedPoint> fixed_points(const CoefficientQuiver& cq, const DimVector& e) {
  if (e.size() != static_cast<std::size_t>(cq.n)) throw DomainError("dimension vector does not match A_n");
  std::vector<TorusFixedPoint> out;
  std::vector<long> cur(e.size(), 0);
  TorusFixedPoint pt{std::vector<int>(cq.rows.size(), 0)};
  // Suffix choices of the remaining rows can still add at most this much per column.
  std::vector<std::vector<long>> room(cq.rows.size() + 1, std::vector<long>(e.size(), 0));
  for (std::size_t r = cq.rows.size(); r > 0; --r) {
    room[r - 1] = room[r];
    for (int k = cq.rows[r - 1].i; k <= cq.rows[r - 1].j; ++k) ++room[r - 1][static_cast<std::size_t>(k - 1)];
  }
  const auto feasible = [&](std::size_t r) {
    for (std::size_t k = 0; k < e.size(); ++k)
      if (cur[k] > e[k] || cur[k] + room[r][k] < e[k]) return false;
    return true;
  };
  const auto rec = [&](auto&& self, std::size_t r) -> void {
    if (!feasible(r)) return;
    if (r == cq.rows.size()) {
      out.push_back(pt);
      return;
    }
    const Interval u = cq.rows[r];
    pt.start[r] = 0;
    self(self, r + 1);
    // Suffix [a, j], longest first.
    for (int a = u.i; a <= u.j; ++a) {
      for (int k = a; k <= u.j; ++k) ++cur[static_cast<std::size_t>(k - 1)];
      pt.start[r] = a;
      self(self, r + 1);
      for (int k = a; k <= u.j; ++k) --cur[static_cast<std::size_t>(k - 1)];
    }
    pt.start[r] = 0;
  };
  rec(rec, 0);
  return out;
}

std::vector<TorusFixedPoint> fixed_points(const IntervalDecomposition& m, const DimVector& e) {
  return fixed_points(coefficient_quiver(m), e);
}

std::vector<TorusFixedPoint> fixed_points(const Representation& m, const DimVector& e) {
  return fixed_points(decompose(m), e);
}

namespace {

void check_point(const CoefficientQuiver& cq, const TorusFixedPoint& l) {
  if (l.start.size() != cq.rows.size()) throw DomainError("fixed point has the wrong number of rows");
  for (std::size_t r = 0; r < cq.rows.size(); ++r) {
    const int a = l.start[r];
    if (a != 0 && (a < cq.rows[r].i || a > cq.rows[r].j))
      throw DomainError("row " + std::to_string(r + 1) + ": suffix start outside the interval");
  }
}

}  // namespace

DimVector fixed_point_dims(const CoefficientQuiver& cq, const TorusFixedPoint& l) {
  check_point(cq, l);
  DimVector d(static_cast<std::size_t>(cq.n));
  for (std::size_t r = 0; r < cq.rows.size(); ++r)
    if (l.start[r] != 0)
      for (int k = l.start[r]; k <= cq.rows[r].j; ++k) ++d[static_cast<std::size_t>(k - 1)];
  return d;
}

IntervalDecomposition fixed_point_class(const CoefficientQuiver& cq, const TorusFixedPoint& l) {
  check_point(cq, l);
  IntervalDecomposition n(cq.n);
  for (std::size_t r = 0; r < cq.rows.size(); ++r)
    if (l.start[r] != 0) n.add({l.start[r], cq.rows[r].j});
  return n;
}

long cell_dimension(const CoefficientQuiver& cq, const TorusFixedPoint& l) {
  check_point(cq, l);
  long dim = 0;
  for (std::size_t r = 0; r < cq.rows.size(); ++r) {
    const int a = l.start[r];
    if (a == 0) continue;
    for (std::size_t s = r + 1; s < cq.rows.size(); ++s) {
      const Interval& u = cq.rows[s];
      const bool in_support = u.i <= a && a <= u.j;
      const bool selected = l.start[s] != 0 && l.start[s] <= a;
      if (in_support && !selected) ++dim;
    }
  }
  return dim;
}

CountPoly poincare_polynomial(const IntervalDecomposition& m, const DimVector& e) {
  const auto cq = coefficient_quiver(m);
  CountPoly p;
  for (const auto& l : fixed_points(cq, e)) {
    const auto k = static_cast<std::size_t>(cell_dimension(cq, l));
    if (p.coefficients.size() <= k) p.coefficients.resize(k + 1, 0);
    p.coefficients[k] += 1;
  }
  p.consistency = Consistency::assumed;
  return p;
}

Integer euler_char_cells(const IntervalDecomposition& m, const DimVector& e) {
  return static_cast<unsigned long>(fixed_points(m, e).size());
}

std::vector<Stratum> strata(const IntervalDecomposition& m, const DimVector& e) {
  const auto cq = coefficient_quiver(m);
  std::map<IntervalDecomposition, Stratum> by_class;
  for (const auto& l : fixed_points(cq, e)) {
    auto cls = fixed_point_class(cq, l);
    auto [it, fresh] = by_class.try_emplace(cls);
    Stratum& s = it->second;
    if (fresh) {
      s.sub = cls;
      s.dim = hom(cls, m) - hom(cls, cls);
    }
    ++s.cells;
    const auto k = static_cast<std::size_t>(cell_dimension(cq, l));
    if (s.cell_polynomial.size() <= k) s.cell_polynomial.resize(k + 1, 0);
    s.cell_polynomial[k] += 1;
  }
  std::vector<Stratum> out;
  for (auto& [cls, s] : by_class) out.push_back(std::move(s));
  return out;
}

std::size_t count_top_strata(const std::vector<Stratum>& s) {
  if (s.empty()) return 0;
  long top = s.front().dim;
  for (const auto& x : s) top = std::max(top, x.dim);
  return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [&](const Stratum& x) { return x.dim == top; }));
}

bool is_catenoid(const IntervalDecomposition& m) {
  // Keys are sorted by (i, j); a chain must then have nondecreasing j.
  const Interval* prev = nullptr;
  for (const auto& [u, c] : m.multiplicities()) {
    if (prev != nullptr && prev->j > u.j) return false;
    prev = &u;
  }
  return true;
}

std::string to_string(FlatClass c) {
  switch (c) {
    case FlatClass::flat_irreducible: return "flat-irreducible";
    case FlatClass::flat_only: return "flat-only";
    case FlatClass::non_flat: return "non-flat";
  }
  return "?";
}

FlatClass flat_locus_class(const IntervalDecomposition& m) {
  const int n = m.n();
  const DimVector d = m.dims();
  for (std::size_t k = 0; k < d.size(); ++k)
    if (d[k] != n + 1) throw DomainError("flat locus classification needs dimension vector (n+1, ..., n+1)");
  const RankSequence r = ranks_from_multiplicities(m);
  const auto dominates = [&](long shift) {
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        if (r(i, j) < shift - (j - i)) return false;
    return true;
  };
  if (dominates(n + 1)) return FlatClass::flat_irreducible;
  if (dominates(n)) return FlatClass::flat_only;
  return FlatClass::non_flat;
}

ProjectiveResolution min_projective_resolution(const IntervalDecomposition& m) {
  ProjectiveResolution res{IntervalDecomposition(m.n()), IntervalDecomposition(m.n())};
  for (const auto& [u, c] : m.multiplicities()) {
    res.cover.add({u.i, m.n()}, c);
    if (u.j < m.n()) res.kernel.add({u.j + 1, m.n()}, c);
  }
  return res;
}

std::optional<Interval> tau_interval(const Interval& u, int n) {
  check_interval(u, n);
  if (u.j + 1 > n) return std::nullopt;
  return Interval{u.i + 1, u.j + 1};
}

std::optional<Interval> tau_inverse_interval(const Interval& u, int n) {
  check_interval(u, n);
  if (u.i == 1) return std::nullopt;
  return Interval{u.i - 1, u.j - 1};
}

IntervalDecomposition tau(const IntervalDecomposition& m) {
  IntervalDecomposition t(m.n());
  for (const auto& [u, c] : m.multiplicities())
    if (auto v = tau_interval(u, m.n())) t.add(*v, c);
  return t;
}

IntervalDecomposition tau_inverse(const IntervalDecomposition& m) {
  IntervalDecomposition t(m.n());
  for (const auto& [u, c] : m.multiplicities())
    if (auto v = tau_inverse_interval(u, m.n())) t.add(*v, c);
  return t;
}

IntervalDecomposition regular_module(int n) {
  IntervalDecomposition m(n);
  for (int i = 1; i <= n; ++i) m.add({i, n});
  return m;
}

IntervalDecomposition dual_module(int n) {
  IntervalDecomposition m(n);
  for (int k = 1; k <= n; ++k) m.add({1, k});
  return m;
}

IntervalDecomposition a_plus_da(int n) { return regular_module(n) + dual_module(n); }

IntervalDecomposition projective_power(int n) {
  IntervalDecomposition m(n);
  if (n > 0) m.add({1, n}, n + 1);
  return m;
}

IntervalDecomposition mf_degeneration(int n) {
  IntervalDecomposition m = regular_module(n);
  for (int j = 1; j < n; ++j) m.add({1, j});
  for (int k = 1; k <= n; ++k) m.add({k, k});
  return m;
}

IntervalDecomposition semisimple_flat(int n) {
  IntervalDecomposition m(n);
  for (int k = 1; k <= n; ++k) m.add({k, k}, n + 1);
  return m;
}

}  // namespace qgrass::typea
