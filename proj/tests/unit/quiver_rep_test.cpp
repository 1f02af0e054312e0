#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "qgrass/ar.hpp"
#include "qgrass/error.hpp"
#include "qgrass/representation.hpp"

using namespace qgrass;

TEST_CASE("quivers reject oriented cycles and bad endpoints") {
  CHECK_THROWS_AS(Quiver(2, {{0, 1}, {1, 0}}), DomainError);
  CHECK_THROWS_AS(Quiver(1, {{0, 0}}), DomainError);
  CHECK_THROWS_AS(Quiver(2, {{0, 2}}), DomainError);
  CHECK(Quiver::kronecker(3).arrow_count() == 3);
}

TEST_CASE("Euler form is hom minus ext on simples") {
  const Quiver q = Quiver::kronecker(2);
  CHECK(euler_form(q, DimVector{1, 0}, DimVector{0, 1}) == -2);
  CHECK(euler_form(q, DimVector{0, 1}, DimVector{1, 0}) == 0);
  CHECK(euler_form(q, DimVector{1, 1}, DimVector{1, 1}) == 0);
}

TEST_CASE("sub-dimension vectors are the whole box") {
  const auto subs = sub_dimension_vectors(DimVector{2, 0, 3});
  CHECK(subs.size() == 12);
  for (const auto& e : subs) CHECK(e.fits_in(DimVector{2, 0, 3}));
}

TEST_CASE("projectives and injectives count paths") {
  const Quiver q(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  const auto paths = ar::path_count_matrix(q);
  for (std::size_t k = 0; k < 4; ++k) {
    const auto p = projective(q, k), i = injective(q, k);
    for (std::size_t v = 0; v < 4; ++v) {
      CHECK(p.dim(v) == static_cast<std::size_t>(paths[k][v]));
      CHECK(i.dim(v) == static_cast<std::size_t>(paths[v][k]));
    }
  }
  CHECK(projective(q, 0).dim(3) == 2);
}

TEST_CASE("duality is an involution and reverses the quiver") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    const auto m = oracle::random_fp_rep(3, 2, 3, rng);
    CHECK(dual(m).quiver() == m.quiver().opposite());
    CHECK(dual(dual(m)) == m);
  }
}

TEST_CASE("subrepresentations: stability, restriction and quotient") {
  const Representation m(Quiver::equioriented_a(2), Field::rationals(), DimVector{2, 2}, {Matrix{{1, 0}, {0, 0}}});
  const auto good = SubrepWitness::from_spanning_rows(m.field(), {Matrix{{1, 0}}, Matrix{{1, 0}}});
  const auto bad = SubrepWitness::from_spanning_rows(m.field(), {Matrix{{1, 0}}, Matrix{{0, 1}}});
  CHECK(is_stable(m, good));
  CHECK_FALSE(is_stable(m, bad));
  CHECK(restrict_to(m, good).dims() == DimVector{1, 1});
  CHECK(quotient(m, good).dims() == DimVector{1, 1});
  CHECK(quotient(m, good).map(0).is_zero());
  CHECK(restrict_to(m, good).map(0) == Matrix{{1}});
}

TEST_CASE("reduction mod p rejects denominators divisible by p") {
  Matrix a(1, 1);
  a(0, 0) = Rational(1, 2);
  const Representation m(Quiver::equioriented_a(2), Field::rationals(), DimVector{1, 1}, {a});
  CHECK_THROWS_AS(reduce_mod(m, 2), DomainError);
  CHECK(reduce_mod(m, 3).map(0)(0, 0) == 2);
}

TEST_CASE("representations check map shapes") {
  CHECK_THROWS_AS(Representation(Quiver::equioriented_a(2), Field::rationals(), DimVector{1, 2}, {Matrix{{1}}}),
                  DomainError);
}
