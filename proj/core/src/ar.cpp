#include "qgrass/ar.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "qgrass/error.hpp"

namespace qgrass::ar {

std::string Classification::name() const {
  if (kind == Kind::wild) return "wild";
  std::string s = kind == Kind::affine ? "~" : "";
  return s + family + std::to_string(rank);
}

namespace {

bool connected(const Quiver& q) {
  const std::size_t n = q.vertex_count();
  if (n == 0) return false;
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& a : q.arrows()) parent[find(a.source)] = find(a.target);
  for (std::size_t v = 0; v < n; ++v)
    if (find(v) != find(0)) return false;
  return true;
}

/// Vertices on the arm leaving `center` through `first`, center excluded.
std::size_t arm_length(const std::vector<std::vector<std::size_t>>& adj, std::size_t center, std::size_t first) {
  std::size_t len = 1, prev = center, cur = first;
  while (adj[cur].size() == 2) {
    const std::size_t next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
    prev = cur;
    cur = next;
    ++len;
  }
  return len;
}

}  // namespace

Classification classify(const Quiver& q) {
  if (!connected(q)) throw DomainError("classification needs a nonempty connected quiver");
  Classification c;
  const std::size_t n = q.vertex_count();
  c.rank = n;
  for (std::size_t v = 0; v < n; ++v) {
    if (q.in_arrows(v).empty()) c.sources.push_back(v);
    if (q.out_arrows(v).empty()) c.sinks.push_back(v);
  }
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> edges;
  for (const auto& a : q.arrows()) ++edges[{std::min(a.source, a.target), std::max(a.source, a.target)}];
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& [e, mult] : edges) {
    if (mult >= 3 || (mult == 2 && n > 2)) return c;  // wild
    if (mult == 2) {
      c.kind = Kind::affine;
      c.family = 'A';
      c.rank = 1;
      return c;
    }
    adj[e.first].push_back(e.second);
    adj[e.second].push_back(e.first);
  }
  if (edges.size() >= n) {
    // Connected with a cycle: affine exactly when the graph is one cycle.
    if (edges.size() == n && std::all_of(adj.begin(), adj.end(), [](const auto& a) { return a.size() == 2; })) {
      c.kind = Kind::affine;
      c.family = 'A';
      c.rank = n - 1;
    }
    return c;
  }
  std::vector<std::size_t> branch;
  for (std::size_t v = 0; v < n; ++v) {
    if (adj[v].size() > 4) return c;
    if (adj[v].size() >= 3) branch.push_back(v);
  }
  if (branch.empty()) {
    c.kind = Kind::dynkin;
    c.family = 'A';
    return c;
  }
  if (branch.size() == 1 && adj[branch[0]].size() == 4) {
    if (n == 5) {
      c.kind = Kind::affine;
      c.family = 'D';
      c.rank = 4;
    }
    return c;
  }
  if (branch.size() == 2) {
    // ~D_{n-1}: both branch points carry two leaves.
    for (auto b : branch) {
      if (adj[b].size() != 3) return c;
      std::size_t leaves = 0;
      for (auto w : adj[b]) leaves += adj[w].size() == 1;
      if (leaves != 2) return c;
    }
    c.kind = Kind::affine;
    c.family = 'D';
    c.rank = n - 1;
    return c;
  }
  if (branch.size() > 2) return c;
  std::vector<std::size_t> arms;
  for (auto w : adj[branch[0]]) arms.push_back(arm_length(adj, branch[0], w));
  std::sort(arms.begin(), arms.end());
  const std::size_t p = arms[0], r = arms[1], s = arms[2];
  if (p == 1 && r == 1) {
    c.kind = Kind::dynkin;
    c.family = 'D';
  } else if (p == 1 && r == 2 && s <= 4) {
    c.kind = Kind::dynkin;
    c.family = 'E';
  } else if ((p == 2 && r == 2 && s == 2) || (p == 1 && r == 3 && s == 3) || (p == 1 && r == 2 && s == 5)) {
    c.kind = Kind::affine;
    c.family = 'E';
    c.rank = n - 1;
  }
  return c;
}

std::size_t positive_root_count(const Classification& c) {
  if (c.kind != Kind::dynkin) throw DomainError("positive roots are finite only for Dynkin types");
  const std::size_t n = c.rank;
  switch (c.family) {
    case 'A': return n * (n + 1) / 2;
    case 'D': return n * (n - 1);
    case 'E': return n == 6 ? 36 : n == 7 ? 63 : 120;
  }
  throw DomainError("unknown Dynkin family");
}

IntMatrix path_count_matrix(const Quiver& q) {
  const std::size_t n = q.vertex_count();
  IntMatrix p(n, std::vector<long>(n, 0));
  const auto& topo = q.topological_order();
  // Walk targets in reverse topological order: paths(i, j) = [i == j] + sum over arrows i -> k of paths(k, j).
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    const std::size_t i = *it;
    p[i][i] = 1;
    for (auto a : q.out_arrows(i)) {
      const std::size_t k = q.arrow(a).target;
      for (std::size_t j = 0; j < n; ++j) p[i][j] += p[k][j];
    }
  }
  return p;
}

IntMatrix coxeter_matrix(const Quiver& q) {
  const std::size_t n = q.vertex_count();
  const IntMatrix p = path_count_matrix(q);
  IntMatrix e(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) e[i][i] = 1;
  for (const auto& a : q.arrows()) e[a.source][a.target] -= 1;
  IntMatrix phi(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      long s = 0;
      for (std::size_t k = 0; k < n; ++k) s += p[i][k] * e[j][k];  // (E^T)_{kj} = E_{jk}
      phi[i][j] = -s;
    }
  return phi;
}

std::vector<long> apply(const IntMatrix& m, const std::vector<long>& v) {
  std::vector<long> out(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  return out;
}

DimVector tau_dim(const Quiver& q, const DimVector& d) {
  if (d.size() != q.vertex_count()) throw DomainError("dimension vector does not match the quiver");
  const auto t = ar::apply(coxeter_matrix(q), d.entries());
  bool nonzero = false;
  for (long x : t) {
    if (x < 0) throw DomainError("tau of " + to_string(d) + " is not a dimension vector (projective input)");
    nonzero = nonzero || x != 0;
  }
  if (!nonzero) throw DomainError("tau of " + to_string(d) + " vanishes (projective input)");
  return DimVector(t);
}

std::optional<std::size_t> ARQuiver::find(std::size_t projective, std::size_t level) const {
  for (std::size_t v = 0; v < vertices.size(); ++v)
    if (vertices[v].projective == projective && vertices[v].level == level) return v;
  return std::nullopt;
}

bool ARQuiver::mesh_additive() const {
  for (std::size_t y = 0; y < vertices.size(); ++y) {
    if (!tau[y]) continue;
    const std::size_t x = *tau[y];
    DimVector out(vertices[x].dim.size()), in(vertices[x].dim.size());
    for (const auto& [s, t] : arrows) {
      if (s == x) out = out + vertices[t].dim;
      if (t == y) in = in + vertices[s].dim;
    }
    const DimVector ends = vertices[x].dim + vertices[y].dim;
    if (!(out == ends) || !(in == ends)) return false;
  }
  return true;
}

ARQuiver knit(const Quiver& q) {
  const Classification c = classify(q);
  if (c.kind != Kind::dynkin) throw DomainError("knitting needs a Dynkin quiver, got " + c.name());
  const std::size_t n = q.vertex_count();
  const IntMatrix p = path_count_matrix(q);
  ARQuiver g;
  // level[k][m] = vertex index of tau^-m P_k.
  std::vector<std::vector<std::size_t>> orbit(n);
  const auto at = [&](std::size_t k, std::size_t m) -> std::optional<std::size_t> {
    if (m < orbit[k].size()) return orbit[k][m];
    return std::nullopt;
  };
  for (std::size_t k = 0; k < n; ++k) {
    orbit[k].push_back(g.vertices.size());
    g.vertices.push_back({k, 0, DimVector(p[k])});
  }
  const auto& topo = q.topological_order();
  const std::size_t limit = positive_root_count(c) + 1;
  for (std::size_t m = 0; m < limit; ++m) {
    bool grew = false;
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
      const std::size_t k = *it;
      const auto x = at(k, m);
      if (!x || orbit[k].size() != m + 1) continue;
      std::vector<long> next(n, 0);
      for (std::size_t i = 0; i < n; ++i) next[i] = -g.vertices[*x].dim[i];
      for (auto a : q.in_arrows(k))
        if (auto y = at(q.arrow(a).source, m))
          for (std::size_t i = 0; i < n; ++i) next[i] += g.vertices[*y].dim[i];
      for (auto a : q.out_arrows(k))
        if (auto y = at(q.arrow(a).target, m + 1))
          for (std::size_t i = 0; i < n; ++i) next[i] += g.vertices[*y].dim[i];
      const bool positive = std::all_of(next.begin(), next.end(), [](long v) { return v >= 0; }) &&
                            std::any_of(next.begin(), next.end(), [](long v) { return v > 0; });
      if (!positive) continue;
      orbit[k].push_back(g.vertices.size());
      g.vertices.push_back({k, m + 1, DimVector(next)});
      grew = true;
    }
    if (!grew) break;
  }
  g.tau.assign(g.vertices.size(), std::nullopt);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t m = 1; m < orbit[k].size(); ++m) g.tau[orbit[k][m]] = orbit[k][m - 1];
  // X = tau^-m P_k maps to tau^-m P_i (arrow i -> k) and to tau^-(m+1) P_j (arrow k -> j).
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    const std::size_t k = g.vertices[v].projective, m = g.vertices[v].level;
    for (auto a : q.in_arrows(k))
      if (auto y = at(q.arrow(a).source, m)) g.arrows.emplace_back(v, *y);
    for (auto a : q.out_arrows(k))
      if (auto y = at(q.arrow(a).target, m + 1)) g.arrows.emplace_back(v, *y);
  }
  return g;
}

}  // namespace qgrass::ar
