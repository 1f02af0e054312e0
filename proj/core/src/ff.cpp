#include "qgrass/ff.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

#include "qgrass/error.hpp"
#include "qgrass/homological.hpp"

namespace qgrass {

// ---------------------------------------------------------------------------
// SubspaceIter

SubspaceIter::SubspaceIter(std::size_t d, std::size_t e, std::uint32_t p)
    : d_(d), e_(e), p_(p), basis_(e * d, 0) {
  valid_ = e <= d;
  if (!valid_) return;
  for (std::size_t i = 0; i < e; ++i) pivots_.push_back(i);
  load_pattern();
}

std::size_t SubspaceIter::free_count(std::size_t d, const std::vector<std::size_t>& pivots) {
  // Row r has d - 1 - pivots[r] columns to its right, minus the later pivots.
  std::size_t n = 0;
  for (std::size_t r = 0; r < pivots.size(); ++r) n += d - 1 - pivots[r] - (pivots.size() - 1 - r);
  return n;
}

void SubspaceIter::load_pattern() {
  std::fill(basis_.begin(), basis_.end(), 0);
  free_pos_.clear();
  std::vector<bool> is_pivot(d_, false);
  for (auto c : pivots_) is_pivot[c] = true;
  for (std::size_t r = 0; r < e_; ++r) {
    basis_[r * d_ + pivots_[r]] = 1;
    for (std::size_t c = pivots_[r] + 1; c < d_; ++c)
      if (!is_pivot[c]) free_pos_.push_back(r * d_ + c);
  }
}

bool SubspaceIter::advance_pattern() {
  // Colex successor: bump the lowest pivot that has room, reset those below it.
  for (std::size_t i = 0; i < e_; ++i) {
    const std::size_t limit = (i + 1 < e_) ? pivots_[i + 1] : d_;
    if (pivots_[i] + 1 < limit) {
      ++pivots_[i];
      for (std::size_t j = 0; j < i; ++j) pivots_[j] = j;
      return true;
    }
  }
  return false;
}

bool SubspaceIter::advance_free() {
  for (std::size_t k = free_pos_.size(); k > 0; --k) {
    auto& x = basis_[free_pos_[k - 1]];
    if (++x < p_) return true;
    x = 0;
  }
  return false;
}

bool SubspaceIter::next() {
  if (!valid_) return false;
  if (!started_) {
    started_ = true;
  } else {
    if (remaining_ == 0) return false;
    if (!advance_free()) {
      if (single_pattern_ || !advance_pattern()) {
        valid_ = false;
        return false;
      }
      load_pattern();
    }
  }
  if (remaining_ == 0) return false;
  if (remaining_ > 0) --remaining_;
  return true;
}

void SubspaceIter::restrict_to(const std::vector<std::size_t>& pivots, std::uint64_t first, std::uint64_t count) {
  if (pivots.size() != e_) throw DomainError("pivot set has the wrong size");
  pivots_ = pivots;
  load_pattern();
  for (std::size_t k = free_pos_.size(); k > 0; --k) {
    basis_[free_pos_[k - 1]] = static_cast<std::uint32_t>(first % p_);
    first /= p_;
  }
  started_ = false;
  single_pattern_ = true;
  valid_ = true;
  remaining_ = static_cast<std::int64_t>(count);
}

Matrix SubspaceIter::matrix() const {
  Matrix m(e_, d_);
  for (std::size_t r = 0; r < e_; ++r)
    for (std::size_t c = 0; c < d_; ++c) m(r, c) = basis_[r * d_ + c];
  return m;
}

std::vector<std::vector<std::size_t>> SubspaceIter::pivot_sets(std::size_t d, std::size_t e) {
  std::vector<std::vector<std::size_t>> out;
  if (e > d) return out;
  SubspaceIter it(d, e, 2);
  do {
    out.push_back(it.pivots_);
  } while (it.advance_pattern());
  return out;
}

// ---------------------------------------------------------------------------
// Gaussian binomials

Integer gaussian_binomial(long d, long e, long q) {
  if (e < 0 || d < 0 || e > d) return 0;
  if (q == 1) {
    Integer r = 1;
    for (long i = 0; i < e; ++i) r = r * (d - i) / (i + 1);
    return r;
  }
  const auto rows = gaussian_binomial_poly(d, e);
  Integer acc = 0;
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) acc = acc * q + *it;
  return acc;
}

std::vector<Integer> gaussian_binomial_poly(long d, long e) {
  if (e < 0 || d < 0 || e > d) return {};
  // Pascal rule [d, k] = [d-1, k-1] + q^k [d-1, k].
  std::vector<std::vector<Integer>> row{{1}};
  for (long n = 1; n <= d; ++n) {
    std::vector<std::vector<Integer>> next(static_cast<std::size_t>(n + 1));
    for (long k = 0; k <= n; ++k) {
      std::vector<Integer> c;
      if (k - 1 >= 0) c = row[static_cast<std::size_t>(k - 1)];
      if (k < n) {
        const auto& b = row[static_cast<std::size_t>(k)];
        if (c.size() < b.size() + static_cast<std::size_t>(k)) c.resize(b.size() + static_cast<std::size_t>(k), 0);
        for (std::size_t i = 0; i < b.size(); ++i) c[i + static_cast<std::size_t>(k)] += b[i];
      }
      next[static_cast<std::size_t>(k)] = std::move(c);
    }
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(e)];
}

// ---------------------------------------------------------------------------
// Modular enumeration engine

namespace {

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, nt = 1, r = p, nr = a;
  while (nr != 0) {
    const std::int64_t q = r / nr;
    t -= q * nt;
    std::swap(t, nt);
    r -= q * nr;
    std::swap(r, nr);
  }
  return static_cast<std::uint32_t>(t < 0 ? t + p : t);
}

/// In-place RREF of a rows x cols row-major block; compacts the nonzero rows
/// to the top and returns the pivot columns.
std::vector<std::size_t> rref_mod(std::vector<std::uint32_t>& a, std::size_t rows, std::size_t cols, std::uint32_t p) {
  std::vector<std::size_t> piv;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t sel = lead;
    while (sel < rows && a[sel * cols + c] == 0) ++sel;
    if (sel == rows) continue;
    if (sel != lead)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a[sel * cols + j], a[lead * cols + j]);
    const std::uint64_t inv = inv_mod(a[lead * cols + c], p);
    for (std::size_t j = c; j < cols; ++j) a[lead * cols + j] = static_cast<std::uint32_t>(a[lead * cols + j] * inv % p);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead) continue;
      const std::uint64_t f = a[r * cols + c];
      if (f == 0) continue;
      for (std::size_t j = c; j < cols; ++j)
        a[r * cols + j] = static_cast<std::uint32_t>((a[r * cols + j] + (p - f) * a[lead * cols + j]) % p);
    }
    piv.push_back(c);
    ++lead;
  }
  return piv;
}

struct ModRep {
  std::uint32_t p = 0;
  std::vector<std::size_t> dims;
  std::vector<Arrow> arrows;
  std::vector<std::vector<std::uint32_t>> maps;  ///< row-major d_t x d_s
};

ModRep to_mod(const Representation& m) {
  if (!m.field().is_prime()) throw DomainError("point counting needs a representation over a prime field");
  ModRep r;
  r.p = m.field().characteristic();
  for (std::size_t v = 0; v < m.quiver().vertex_count(); ++v) r.dims.push_back(m.dim(v));
  r.arrows = m.quiver().arrows();
  for (const auto& x : m.maps()) {
    std::vector<std::uint32_t> flat;
    for (std::size_t i = 0; i < x.rows(); ++i)
      for (std::size_t j = 0; j < x.cols(); ++j) flat.push_back(static_cast<std::uint32_t>(x(i, j).get_num().get_ui()));
    r.maps.push_back(std::move(flat));
  }
  return r;
}

struct WorkItem {
  std::size_t pattern;
  std::uint64_t first;
  std::uint64_t count;
};

/// Depth-first walk over the enumerated vertices. Predecessors of each
/// vertex come earlier in `order`, so the images landing at a vertex are
/// known when it is reached and N_v ranges over subspaces containing them.
class Walker {
 public:
  Walker(const ModRep& r, const Quiver& q, const DimVector& e, std::vector<std::size_t> order,
         std::vector<std::size_t> closed_form, bool collect)
      : r_(r), q_(q), e_(e), order_(std::move(order)), closed_(std::move(closed_form)), collect_(collect),
        basis_(r.dims.size()), scratch_(r.dims.size()) {
    for (std::size_t v = 0; v < r.dims.size(); ++v) in_.push_back(q.in_arrows(v));
    for (auto v : closed_) {
      std::vector<Integer> f;
      const long d = static_cast<long>(r.dims[v]), ev = e[v];
      for (long u = 0; u <= ev; ++u) f.push_back(gaussian_binomial(d - u, ev - u, r.p));
      factors_.emplace(v, std::move(f));
    }
  }

  void run(const WorkItem* item, const std::vector<std::vector<std::size_t>>* patterns) {
    item_ = item;
    patterns_ = patterns;
    walk(0);
  }

  const Integer& total() const { return total_; }
  std::vector<SubrepWitness>& found() { return found_; }

 private:
  /// Row-reduced span of the images at v; returns the rank.
  std::size_t images_at(std::size_t v, std::vector<std::uint32_t>& u, std::vector<std::size_t>& piv) {
    const std::size_t dv = r_.dims[v];
    u.clear();
    std::size_t rows = 0;
    for (std::size_t a : in_[v]) {
      const std::size_t s = r_.arrows[a].source, ds = r_.dims[s];
      const auto& mat = r_.maps[a];
      const auto& b = basis_[s];
      const std::size_t brows = static_cast<std::size_t>(e_[s]);
      for (std::size_t i = 0; i < brows; ++i) {
        for (std::size_t c = 0; c < dv; ++c) {
          std::uint64_t acc = 0;
          for (std::size_t l = 0; l < ds; ++l) acc += static_cast<std::uint64_t>(b[i * ds + l]) * mat[c * ds + l] % r_.p;
          u.push_back(static_cast<std::uint32_t>(acc % r_.p));
        }
        ++rows;
      }
    }
    piv = rref_mod(u, rows, dv, r_.p);
    u.resize(piv.size() * dv);
    return piv.size();
  }

  void walk(std::size_t level) {
    if (level == order_.size()) {
      leaf();
      return;
    }
    const std::size_t v = order_[level];
    const std::size_t dv = r_.dims[v], ev = static_cast<std::size_t>(e_[v]);
    auto& sc = scratch_[v];
    const std::size_t u = images_at(v, sc.u, sc.piv);
    if (u > ev) return;
    sc.free_cols.clear();
    for (std::size_t c = 0, k = 0; c < dv; ++c) {
      if (k < sc.piv.size() && sc.piv[k] == c) {
        ++k;
        continue;
      }
      sc.free_cols.push_back(c);
    }
    SubspaceIter it(dv - u, ev - u, r_.p);
    if (level == 0 && item_ != nullptr) it.restrict_to((*patterns_)[item_->pattern], item_->first, item_->count);
    auto& b = basis_[v];
    while (it.next()) {
      b.assign(ev * dv, 0);
      std::copy(sc.u.begin(), sc.u.end(), b.begin());
      const auto& w = it.basis();
      const std::size_t wc = dv - u;
      for (std::size_t i = 0; i < ev - u; ++i)
        for (std::size_t j = 0; j < wc; ++j) b[(u + i) * dv + sc.free_cols[j]] = w[i * wc + j];
      walk(level + 1);
    }
  }

  void leaf() {
    if (collect_) {
      std::vector<Matrix> bases;
      for (std::size_t v = 0; v < r_.dims.size(); ++v) {
        const std::size_t dv = r_.dims[v], ev = static_cast<std::size_t>(e_[v]);
        auto b = basis_[v];
        b.resize(ev * dv, 0);
        rref_mod(b, ev, dv, r_.p);
        Matrix m(ev, dv);
        for (std::size_t i = 0; i < ev; ++i)
          for (std::size_t j = 0; j < dv; ++j) m(i, j) = b[i * dv + j];
        bases.push_back(std::move(m));
      }
      found_.emplace_back(Field::prime(r_.p), std::move(bases));
      return;
    }
    if (closed_.empty()) {
      total_ += 1;
      return;
    }
    Integer prod = 1;
    for (auto v : closed_) {
      auto& sc = scratch_[v];
      const std::size_t u = images_at(v, sc.u, sc.piv);
      const auto& f = factors_.at(v);
      if (u >= f.size()) return;
      prod *= f[u];
    }
    total_ += prod;
  }

  struct Scratch {
    std::vector<std::uint32_t> u;
    std::vector<std::size_t> piv;
    std::vector<std::size_t> free_cols;
  };

  const ModRep& r_;
  const Quiver& q_;
  const DimVector& e_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> closed_;
  bool collect_;
  std::vector<std::vector<std::uint32_t>> basis_;
  std::vector<Scratch> scratch_;
  std::vector<std::vector<std::size_t>> in_;
  std::map<std::size_t, std::vector<Integer>> factors_;
  const WorkItem* item_ = nullptr;
  const std::vector<std::vector<std::size_t>>* patterns_ = nullptr;
  Integer total_ = 0;
  std::vector<SubrepWitness> found_;
};

bool e_fits(const Representation& m, const DimVector& e) {
  if (e.size() != m.quiver().vertex_count()) throw DomainError("dimension vector size does not match the quiver");
  return e.fits_in(m.dims());
}

/// Enumeration plan: enumerated vertices (topological, led by the source
/// with the most subspaces) and closed-form vertices.
struct Plan {
  std::vector<std::size_t> order;
  std::vector<std::size_t> closed;
};

Plan make_plan(const Representation& m, const DimVector& e, bool enumerate_all) {
  const auto& q = m.quiver();
  const std::uint32_t p = m.field().characteristic();
  Plan plan;
  std::vector<std::size_t> enumerated;
  for (auto v : q.topological_order()) {
    if (enumerate_all || !q.out_arrows(v).empty())
      enumerated.push_back(v);
    else
      plan.closed.push_back(v);
  }
  std::size_t lead = enumerated.size();
  Integer best = -1;
  for (std::size_t k = 0; k < enumerated.size(); ++k) {
    const auto v = enumerated[k];
    if (!q.in_arrows(v).empty()) continue;
    const Integer g = gaussian_binomial(static_cast<long>(m.dim(v)), e[v], p);
    if (g > best) {
      best = g;
      lead = k;
    }
  }
  if (lead < enumerated.size()) plan.order.push_back(enumerated[lead]);
  for (std::size_t k = 0; k < enumerated.size(); ++k)
    if (k != lead) plan.order.push_back(enumerated[k]);
  return plan;
}

Integer estimate_for(const Representation& m, const DimVector& e, const std::vector<std::size_t>& vertices) {
  Integer est = 1;
  for (auto v : vertices) est *= gaussian_binomial(static_cast<long>(m.dim(v)), e[v], m.field().characteristic());
  return est;
}

void check_budget(const Integer& estimate, std::uint64_t budget) {
  if (estimate > Integer(std::to_string(budget))) throw BudgetExceeded(estimate.get_str(), std::to_string(budget));
}

std::vector<WorkItem> split_first_vertex(std::size_t d, std::uint32_t p,
                                         const std::vector<std::vector<std::size_t>>& patterns) {
  constexpr std::uint64_t kChunk = 1u << 14;
  std::vector<WorkItem> items;
  for (std::size_t k = 0; k < patterns.size(); ++k) {
    std::uint64_t size = 1;
    for (std::size_t i = SubspaceIter::free_count(d, patterns[k]); i > 0; --i) size *= p;
    for (std::uint64_t first = 0; first < size; first += kChunk)
      items.push_back({k, first, std::min(kChunk, size - first)});
  }
  return items;
}

template <class Result, class Fn>
std::vector<Result> run_items(std::size_t n_items, unsigned threads, Fn&& fn) {
  std::vector<Result> results(n_items);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n_items));
  if (threads <= 1) {
    for (std::size_t i = 0; i < n_items; ++i) results[i] = fn(i);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < n_items;) results[i] = fn(i);
    });
  for (auto& th : pool) th.join();
  return results;
}

}  // namespace

Integer enumeration_estimate(const Representation& m, const DimVector& e) {
  if (!e_fits(m, e)) return 0;
  return estimate_for(m, e, make_plan(m, e, false).order);
}

Integer count_points(const Representation& m, const DimVector& e, const CountOptions& opts) {
  const ModRep r = to_mod(m);
  if (!e_fits(m, e)) return 0;
  const Plan plan = make_plan(m, e, false);
  check_budget(estimate_for(m, e, plan.order), opts.budget);
  const auto& q = m.quiver();
  if (plan.order.empty()) {
    Walker w(r, q, e, {}, plan.closed, false);
    w.run(nullptr, nullptr);
    return w.total();
  }
  const std::size_t v0 = plan.order.front();
  const auto patterns = SubspaceIter::pivot_sets(m.dim(v0), static_cast<std::size_t>(e[v0]));
  const auto items = split_first_vertex(m.dim(v0), r.p, patterns);
  const auto partial = run_items<Integer>(items.size(), opts.threads, [&](std::size_t i) {
    Walker w(r, q, e, plan.order, plan.closed, false);
    w.run(&items[i], &patterns);
    return w.total();
  });
  Integer total = 0;
  for (const auto& x : partial) total += x;
  return total;
}

std::vector<SubrepWitness> enumerate_subreps(const Representation& m, const DimVector& e, std::uint64_t budget) {
  const ModRep r = to_mod(m);
  if (!e_fits(m, e)) return {};
  const Plan plan = make_plan(m, e, true);
  check_budget(estimate_for(m, e, plan.order), budget);
  if (plan.order.empty()) return {SubrepWitness(m.field(), {})};
  const auto& q = m.quiver();
  const std::size_t v0 = plan.order.front();
  const auto patterns = SubspaceIter::pivot_sets(m.dim(v0), static_cast<std::size_t>(e[v0]));
  const auto items = split_first_vertex(m.dim(v0), r.p, patterns);
  auto partial = run_items<std::vector<SubrepWitness>>(items.size(), 0, [&](std::size_t i) {
    Walker w(r, q, e, plan.order, {}, true);
    w.run(&items[i], &patterns);
    return std::move(w.found());
  });
  std::vector<SubrepWitness> out;
  for (auto& part : partial)
    for (auto& w : part) out.push_back(std::move(w));
  return out;
}

// ---------------------------------------------------------------------------
// Counting polynomials

std::string to_string(Consistency c) {
  switch (c) {
    case Consistency::verified: return "verified";
    case Consistency::inconsistent: return "inconsistent";
    case Consistency::assumed: return "assumed";
  }
  return "?";
}

Integer CountPoly::evaluate(const Integer& q) const {
  Integer acc = 0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * q + *it;
  return acc;
}

long CountPoly::degree() const { return static_cast<long>(coefficients.size()) - 1; }

std::string to_string(const CountPoly& p) {
  std::string s;
  for (std::size_t i = 0; i < p.coefficients.size(); ++i) {
    const Integer& c = p.coefficients[i];
    if (c == 0) continue;
    const bool neg = c < 0;
    const Integer a = neg ? Integer(-c) : c;
    if (!s.empty()) s += neg ? " - " : " + ";
    else if (neg) s += "-";
    if (i == 0 || a != 1) s += a.get_str();
    if (i > 0) {
      if (a != 1) s += "*";
      s += "q";
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s.empty() ? "0" : s;
}

long degree_bound(const DimVector& d, const DimVector& e) {
  long s = 0;
  for (std::size_t i = 0; i < d.size(); ++i) s += e[i] * (d[i] - e[i]);
  return s;
}

std::vector<std::uint32_t> primes_from(std::uint32_t from, std::size_t count) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t n = std::max<std::uint32_t>(from, 2); out.size() < count; ++n)
    if (is_prime(n)) out.push_back(n);
  return out;
}

namespace {

bool reduces_everywhere(const Representation& m, std::uint32_t p) {
  const Field fp = Field::prime(p);
  for (const auto& x : m.maps())
    for (std::size_t i = 0; i < x.rows(); ++i)
      for (std::size_t j = 0; j < x.cols(); ++j)
        if (!fp.reduces(x(i, j))) return false;
  return true;
}

/// Coefficients of the interpolating polynomial through (xs[i], ys[i]).
std::vector<Rational> interpolate(const std::vector<Integer>& xs, const std::vector<Integer>& ys) {
  const std::size_t n = xs.size();
  Matrix v(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    Rational pw = 1;
    for (std::size_t j = 0; j < n; ++j) {
      v(i, j) = pw;
      pw *= Rational(xs[i]);
    }
    v(i, n) = Rational(ys[i]);
  }
  const Echelon ech = rref(Field::rationals(), v);
  std::vector<Rational> c(n);
  for (std::size_t r = 0; r < ech.pivots.size(); ++r) c[ech.pivots[r]] = ech.reduced(r, n);
  return c;
}

}  // namespace

CountPoly counting_polynomial(const Representation& m, const DimVector& e, const std::vector<std::uint32_t>& primes,
                              const CountOptions& opts) {
  if (!m.field().is_rationals()) throw DomainError("counting polynomials need a representation over Q");
  CountPoly cp;
  if (!e_fits(m, e)) {
    cp.consistency = Consistency::verified;
    return cp;
  }
  const std::size_t needed = static_cast<std::size_t>(degree_bound(m.dims(), e)) + 2;
  std::vector<std::uint32_t> good;
  const auto consider = [&](std::uint32_t p) {
    if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
    if (reduces_everywhere(m, p))
      good.push_back(p);
    else
      cp.skipped_primes.push_back(p);
  };
  if (primes.empty()) {
    for (std::uint32_t p = 2; good.size() < needed; ++p)
      if (is_prime(p)) consider(p);
  } else {
    for (auto p : primes) {
      if (good.size() == needed) break;
      consider(p);
    }
    if (good.size() < needed)
      throw DomainError("need " + std::to_string(needed) + " primes of good reduction, got " +
                        std::to_string(good.size()));
  }
  std::vector<Integer> xs, ys;
  for (std::size_t i = 0; i + 1 < good.size(); ++i) {
    xs.emplace_back(good[i]);
    ys.push_back(count_points(reduce_mod(m, good[i]), e, opts));
  }
  cp.primes_used.assign(good.begin(), good.end() - 1);
  cp.held_out_prime = good.back();
  const auto raw = interpolate(xs, ys);
  bool integral = true;
  for (const auto& c : raw) integral = integral && c.get_den() == 1;
  if (!integral) {
    cp.raw = raw;
    cp.consistency = Consistency::inconsistent;
    return cp;
  }
  for (const auto& c : raw) cp.coefficients.push_back(c.get_num());
  while (!cp.coefficients.empty() && cp.coefficients.back() == 0) cp.coefficients.pop_back();
  const Integer held = count_points(reduce_mod(m, cp.held_out_prime), e, opts);
  cp.consistency = held == cp.evaluate(cp.held_out_prime) ? Consistency::verified : Consistency::inconsistent;
  return cp;
}

Integer euler_characteristic(const CountPoly& cp) {
  if (cp.consistency == Consistency::inconsistent) throw DomainError("counting polynomial is inconsistent");
  return cp.evaluate(1);
}

std::vector<Integer> betti_numbers(const CountPoly& cp) {
  if (cp.consistency == Consistency::inconsistent) throw DomainError("counting polynomial is inconsistent");
  return cp.coefficients;
}

std::vector<StratumCount> classify_strata_ff(const Representation& m, const DimVector& e,
                                             const std::vector<Representation>& family, std::uint64_t budget) {
  std::vector<Representation> fam;
  for (const auto& u : family)
    fam.push_back(u.field().is_rationals() ? reduce_mod(u, m.field().characteristic()) : u);
  std::map<std::vector<std::size_t>, std::size_t> index;
  std::vector<StratumCount> out;
  for (const auto& w : enumerate_subreps(m, e, budget)) {
    const Representation l = restrict_to(m, w);
    std::vector<std::size_t> fp;
    for (const auto& u : fam) fp.push_back(hom_dim(u, l));
    auto [it, fresh] = index.emplace(fp, out.size());
    if (fresh)
      out.push_back({fp, 1, w});
    else
      out[it->second].points += 1;
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.fingerprint < b.fingerprint; });
  return out;
}

}  // namespace qgrass
