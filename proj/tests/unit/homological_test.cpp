#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "qgrass/error.hpp"
#include "qgrass/ff.hpp"
#include "qgrass/homological.hpp"
#include "qgrass/typea.hpp"

using namespace qgrass;

TEST_CASE("hom dimension matches exhaustive search over F_2") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 25; ++t) {
    const auto m = oracle::random_fp_rep(2, 2, 2, rng);
    // Same quiver, independent maps and dimensions.
    std::vector<long> d;
    for (std::size_t v = 0; v < 2; ++v) d.push_back(static_cast<long>(rng() % 3));
    std::vector<Matrix> maps;
    for (const auto& a : m.quiver().arrows()) {
      Matrix x(static_cast<std::size_t>(d[a.target]), static_cast<std::size_t>(d[a.source]));
      for (std::size_t r = 0; r < x.rows(); ++r)
        for (std::size_t c = 0; c < x.cols(); ++c) x(r, c) = static_cast<long>(rng() % 2);
      maps.push_back(x);
    }
    const Representation n(m.quiver(), m.field(), DimVector(d), maps);
    CHECK(static_cast<long>(hom_dim(n, m)) == oracle::hom_dim_bruteforce(n, m));
    CHECK(static_cast<long>(hom_dim(m, n)) == oracle::hom_dim_bruteforce(m, n));
  }
}

TEST_CASE("hom minus ext is the Euler form") {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 40; ++t) {
    const auto m = oracle::random_fp_rep(3, 2, 3, rng);
    const auto n = dual(dual(m));
    const long lhs = static_cast<long>(hom_dim(n, m)) - static_cast<long>(ext1_dim(n, m));
    CHECK(lhs == euler_form(m.quiver(), n.dims(), m.dims()));
  }
}

TEST_CASE("hom basis elements are morphisms") {
  const auto m = typea::to_representation(typea::a_plus_da(3));
  const auto n = typea::interval_module(3, {2, 3});
  const auto basis = hom_basis(n, m);
  CHECK(basis.size() == hom_dim(n, m));
  for (const auto& f : basis) CHECK(is_morphism(n, m, f));
}

TEST_CASE("nonsplit extension of simples on A2 is the projective") {
  const Quiver q = Quiver::equioriented_a(2);
  const auto s = simple(q, 0), x = simple(q, 1);
  REQUIRE(ext1_dim(s, x) == 1);
  const auto phi = phi_map(s, x);
  std::vector<Rational> v(phi.rows(), 0);
  v[0] = 1;
  const auto ext = build_extension(s, x, cocycle_from_vector(s, x, v));
  CHECK(typea::decompose(ext.middle) == typea::parse_intervals("U[1,2]", 2));
  CHECK(is_stable(ext.middle, ext.inclusion));
  CHECK(is_morphism(ext.middle, s, ext.projection));
}

TEST_CASE("tangent dimension is hom(W, M/W)") {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 15; ++t) {
    const auto m = oracle::random_fp_rep(2, 2, 2, rng);
    for (const auto& e : sub_dimension_vectors(m.dims()))
      for (const auto& w : enumerate_subreps(m, e))
        CHECK(tangent_dim(m, w) == hom_dim(restrict_to(m, w), quotient(m, w)));
  }
}

TEST_CASE("rigidity") {
  CHECK(is_rigid(typea::to_representation(typea::parse_intervals("U[1,2]^3+U[2,2]", 2))));
  CHECK_FALSE(is_rigid(typea::to_representation(typea::parse_intervals("U[1,1]+U[2,2]+U[1,2]", 2))));
  const Representation r(Quiver::kronecker(2), Field::rationals(), DimVector{1, 1}, {Matrix{{1}}, Matrix{{0}}});
  CHECK_FALSE(is_rigid(r));
}

TEST_CASE("generic embedding search finds injections and reports absence as probabilistic") {
  const auto u12 = typea::interval_module(3, {1, 2});
  const auto big = typea::to_representation(typea::a_plus_da(3));
  const auto hit = generic_embeds(typea::interval_module(3, {2, 3}), big, 20, 1);
  CHECK(hit.found);
  CHECK(is_morphism(typea::interval_module(3, {2, 3}), big, hit.witness));
  const auto miss = generic_embeds(u12, typea::interval_module(3, {2, 3}), 5, 1);
  CHECK_FALSE(miss.found);
  CHECK_FALSE(miss.probabilistic);  // Hom = 0 proves absence
  const auto two = typea::to_representation(typea::parse_intervals("U[1,1]+U[2,2]", 2));
  const auto unproved = generic_embeds(typea::interval_module(2, {1, 2}), two, 5, 1);
  CHECK_FALSE(unproved.found);
  CHECK(unproved.probabilistic);
  CHECK(generic_embeds(u12, big, 20, 9).found == generic_embeds(u12, big, 20, 9).found);
}

TEST_CASE("kernel and image witnesses are subrepresentations") {
  const auto x = typea::interval_module(4, {2, 4});
  const auto y = typea::interval_module(4, {1, 3});
  const auto basis = hom_basis(x, y);
  REQUIRE(basis.size() == 1);
  const auto k = kernel_witness(x, basis[0]);
  const auto i = image_witness(y, basis[0]);
  CHECK(is_stable(x, k));
  CHECK(is_stable(y, i));
  CHECK(k.dims() == DimVector{0, 0, 0, 1});
  CHECK(i.dims() == DimVector{0, 1, 1, 0});
}
