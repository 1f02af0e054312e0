#include "qgrass/quiver.hpp"

#include <algorithm>
#include <functional>
#include <queue>

#include "qgrass/error.hpp"

namespace qgrass {

Quiver::Quiver(std::size_t vertex_count, std::vector<Arrow> arrows)
    : n_(vertex_count), arrows_(std::move(arrows)) {
  std::vector<std::size_t> indegree(n_, 0);
  for (const auto& a : arrows_) {
    if (a.source >= n_ || a.target >= n_)
      throw DomainError("arrow endpoint out of range for a quiver with " + std::to_string(n_) + " vertices");
    ++indegree[a.target];
  }
  // Kahn with a min-heap so the order is canonical.
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t v = 0; v < n_; ++v)
    if (indegree[v] == 0) ready.push(v);
  while (!ready.empty()) {
    const std::size_t v = ready.top();
    ready.pop();
    topo_.push_back(v);
    for (const auto& a : arrows_)
      if (a.source == v && --indegree[a.target] == 0) ready.push(a.target);
  }
  if (topo_.size() != n_) throw DomainError("quiver has an oriented cycle");
}

Quiver Quiver::equioriented_a(std::size_t n) {
  std::vector<Arrow> arrows;
  for (std::size_t k = 0; k + 1 < n; ++k) arrows.push_back({k, k + 1});
  return Quiver(n, std::move(arrows));
}

Quiver Quiver::kronecker(std::size_t m) { return Quiver(2, std::vector<Arrow>(m, Arrow{0, 1})); }

std::vector<std::size_t> Quiver::out_arrows(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < arrows_.size(); ++a)
    if (arrows_[a].source == v) out.push_back(a);
  return out;
}

std::vector<std::size_t> Quiver::in_arrows(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < arrows_.size(); ++a)
    if (arrows_[a].target == v) out.push_back(a);
  return out;
}

Quiver Quiver::opposite() const {
  std::vector<Arrow> rev;
  rev.reserve(arrows_.size());
  for (const auto& a : arrows_) rev.push_back({a.target, a.source});
  return Quiver(n_, std::move(rev));
}

std::vector<std::vector<std::size_t>> Quiver::paths(std::size_t from, std::size_t to) const {
  if (from >= n_ || to >= n_) throw DomainError("vertex out of range");
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> current;
  std::function<void(std::size_t)> walk = [&](std::size_t v) {
    if (v == to) out.push_back(current);
    for (std::size_t a = 0; a < arrows_.size(); ++a) {
      if (arrows_[a].source != v) continue;
      current.push_back(a);
      walk(arrows_[a].target);
      current.pop_back();
    }
  };
  walk(from);
  return out;
}

bool Quiver::is_equioriented_a() const {
  if (n_ == 0 || arrows_.size() + 1 != n_) return false;
  for (std::size_t k = 0; k < arrows_.size(); ++k)
    if (arrows_[k].source != k || arrows_[k].target != k + 1) return false;
  return true;
}

DimVector::DimVector(std::initializer_list<long> xs) : DimVector(std::vector<long>(xs)) {}

DimVector::DimVector(std::vector<long> xs) : v_(std::move(xs)) {
  for (long x : v_)
    if (x < 0) throw DomainError("negative dimension vector entry");
}

DimVector DimVector::unit(std::size_t n, std::size_t i) {
  DimVector d(n);
  d[i] = 1;
  return d;
}

long DimVector::total() const {
  long s = 0;
  for (long x : v_) s += x;
  return s;
}

bool DimVector::is_zero() const {
  return std::all_of(v_.begin(), v_.end(), [](long x) { return x == 0; });
}

bool DimVector::fits_in(const DimVector& d) const {
  if (d.size() != size()) throw DomainError("dimension vector size mismatch");
  for (std::size_t i = 0; i < size(); ++i)
    if (v_[i] > d.v_[i]) return false;
  return true;
}

DimVector DimVector::operator+(const DimVector& o) const {
  if (o.size() != size()) throw DomainError("dimension vector size mismatch");
  DimVector r(size());
  for (std::size_t i = 0; i < size(); ++i) r.v_[i] = v_[i] + o.v_[i];
  return r;
}

DimVector DimVector::operator-(const DimVector& o) const {
  if (o.size() != size()) throw DomainError("dimension vector size mismatch");
  DimVector r(size());
  for (std::size_t i = 0; i < size(); ++i) {
    r.v_[i] = v_[i] - o.v_[i];
    if (r.v_[i] < 0) throw DomainError("dimension vector difference is negative");
  }
  return r;
}

std::string to_string(const DimVector& d) {
  std::string s = "(";
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s + ")";
}

long euler_form(const Quiver& q, const std::vector<long>& e, const std::vector<long>& d) {
  if (e.size() != q.vertex_count() || d.size() != q.vertex_count())
    throw DomainError("Euler form: vector size does not match the quiver");
  long s = 0;
  for (std::size_t i = 0; i < e.size(); ++i) s += e[i] * d[i];
  for (const auto& a : q.arrows()) s -= e[a.source] * d[a.target];
  return s;
}

long euler_form(const Quiver& q, const DimVector& e, const DimVector& d) {
  return euler_form(q, e.entries(), d.entries());
}

std::vector<DimVector> sub_dimension_vectors(const DimVector& d) {
  std::vector<DimVector> out;
  DimVector cur(d.size());
  while (true) {
    out.push_back(cur);
    std::size_t i = d.size();
    while (i > 0) {
      --i;
      if (cur[i] < d[i]) {
        ++cur[i];
        for (std::size_t j = i + 1; j < d.size(); ++j) cur[j] = 0;
        break;
      }
      if (i == 0) return out;
    }
    if (d.size() == 0) return out;
  }
}

}  // namespace qgrass
