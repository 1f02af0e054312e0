#pragma once

#include <cstdint>

#include "qgrass/ff.hpp"
#include "qgrass/representation.hpp"

namespace qgrass::cli {

/// The three-vertex quiver 1 <- 2 => 3 (one arrow 2 -> 1, three arrows
/// 2 -> 3) with M_2 = Sym^3 V, M_3 = Sym^2 V for V = F^3, psi_l the
/// contractions by e_l, and phi the cubic x2^2 x3 - x1^3 - x3^3.
///
/// Basis of Sym^3 V: orbit sums s_ijk, i <= j <= k, lexicographic. Basis of
/// Sym^2 V: orbit sums t_ij. In these coordinates v^3 has entries v_i v_j v_k,
/// and psi_l(v^3) = v_l v^2, so Gr_(0,1,1)(M) is the plane cubic
/// y^2 z = x^3 + z^3. Orbit sums (rather than symmetrizers) keep the
/// construction valid in characteristics 2 and 3.
Representation elliptic_representation(const Field& field = Field::rationals());

/// Projective F_p-solutions of y^2 z = x^3 + z^3, by direct enumeration.
std::uint64_t cubic_curve_points(std::uint32_t p);

struct EllipticReport {
  std::uint32_t p = 0;
  Integer grassmannian;
  std::uint64_t curve = 0;
  Integer estimate;
  bool agree() const { return grassmannian == Integer(static_cast<unsigned long>(curve)); }
};

EllipticReport demo_elliptic(std::uint32_t p, const CountOptions& opts = {});

}  // namespace qgrass::cli
