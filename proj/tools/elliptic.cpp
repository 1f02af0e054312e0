#include "elliptic.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "qgrass/error.hpp"

namespace qgrass::cli {

namespace {

using Cubic = std::array<int, 3>;
using Quadric = std::array<int, 2>;

std::vector<Cubic> cubic_monomials() {
  std::vector<Cubic> out;
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j)
      for (int k = j; k < 3; ++k) out.push_back({i, j, k});
  return out;
}

std::vector<Quadric> quadric_monomials() {
  std::vector<Quadric> out;
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) out.push_back({i, j});
  return out;
}

}  // namespace

Representation elliptic_representation(const Field& field) {
  const auto cubics = cubic_monomials();
  const auto quadrics = quadric_monomials();
  std::map<Quadric, std::size_t> t_index;
  for (std::size_t r = 0; r < quadrics.size(); ++r) t_index[quadrics[r]] = r;
  std::map<Cubic, std::size_t> s_index;
  for (std::size_t c = 0; c < cubics.size(); ++c) s_index[cubics[c]] = c;

  Quiver q(3, {{1, 0}, {1, 2}, {1, 2}, {1, 2}});
  Matrix phi(1, cubics.size());
  phi(0, s_index.at({1, 1, 2})) = 1;
  phi(0, s_index.at({0, 0, 0})) = -1;
  phi(0, s_index.at({2, 2, 2})) = -1;

  std::vector<Matrix> maps{phi};
  for (int l = 0; l < 3; ++l) {
    Matrix psi(quadrics.size(), cubics.size());
    for (std::size_t c = 0; c < cubics.size(); ++c) {
      const Cubic& m = cubics[c];
      const auto it = std::find(m.begin(), m.end(), l);
      if (it == m.end()) continue;
      std::vector<int> rest(m.begin(), m.end());
      rest.erase(rest.begin() + (it - m.begin()));
      psi(t_index.at({rest[0], rest[1]}), c) = 1;
    }
    maps.push_back(psi);
  }
  return Representation(q, field, DimVector{1, 10, 6}, maps);
}

std::uint64_t cubic_curve_points(std::uint32_t p) {
  if (!is_prime(p)) throw DomainError("p must be prime");
  const std::uint64_t m = p;
  std::uint64_t affine = 0;  // nonzero (x, y, z) on the cone
  for (std::uint64_t x = 0; x < m; ++x)
    for (std::uint64_t y = 0; y < m; ++y)
      for (std::uint64_t z = 0; z < m; ++z) {
        if (x == 0 && y == 0 && z == 0) continue;
        const std::uint64_t lhs = y * y % m * z % m;
        const std::uint64_t rhs = (x * x % m * x + z * z % m * z) % m;
        affine += lhs == rhs;
      }
  return affine / (m - 1);
}

EllipticReport demo_elliptic(std::uint32_t p, const CountOptions& opts) {
  const Representation m = elliptic_representation(Field::prime(p));
  const DimVector e{0, 1, 1};
  EllipticReport r;
  r.p = p;
  r.estimate = enumeration_estimate(m, e);
  r.grassmannian = count_points(m, e, opts);
  r.curve = cubic_curve_points(p);
  return r;
}

}  // namespace qgrass::cli
