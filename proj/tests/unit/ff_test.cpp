#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "qgrass/error.hpp"
#include "qgrass/ff.hpp"

using namespace qgrass;

TEST_CASE("subspace iterator visits each subspace once") {
  for (std::uint32_t p : {2u, 3u})
    for (std::size_t d = 0; d <= 4; ++d)
      for (std::size_t e = 0; e <= d; ++e) {
        SubspaceIter it(d, e, p);
        std::set<std::vector<std::uint32_t>> seen;
        std::size_t visits = 0;
        while (it.next()) {
          seen.insert(it.basis());
          ++visits;
        }
        CHECK(visits == seen.size());
        CHECK(Integer(static_cast<unsigned long>(visits)) == oracle::gaussian_binomial(static_cast<long>(d), static_cast<long>(e), p));
      }
}

TEST_CASE("Gaussian binomials agree with the product formula") {
  for (long q : {2, 3, 5})
    for (long d = 0; d <= 6; ++d)
      for (long e = -1; e <= d + 1; ++e) CHECK(gaussian_binomial(d, e, q) == oracle::gaussian_binomial(d, e, q));
  const auto poly = gaussian_binomial_poly(4, 2);
  CHECK(poly == std::vector<Integer>{1, 1, 2, 1, 1});
}

TEST_CASE("point counts match brute force on random quivers") {
  std::mt19937_64 rng(2025);
  for (int t = 0; t < 60; ++t) {
    const std::uint32_t p = t % 2 ? 3 : 2;
    const auto m = oracle::random_fp_rep(2 + rng() % 2, 2, p, rng);
    for (const auto& e : sub_dimension_vectors(m.dims())) {
      const Integer fast = count_points(m, e);
      CHECK(fast == Integer(static_cast<unsigned long>(oracle::count_points(m, e))));
      CHECK(fast == Integer(static_cast<unsigned long>(enumerate_subreps(m, e).size())));
    }
  }
}

TEST_CASE("thread count does not change the count") {
  std::mt19937_64 rng(99);
  const auto m = oracle::random_fp_rep(3, 3, 2, rng);
  const DimVector e{m.dims()[0] / 2, m.dims()[1] / 2, m.dims()[2] / 2};
  CHECK(count_points(m, e, {kDefaultBudget, 1}) == count_points(m, e, {kDefaultBudget, 4}));
}

TEST_CASE("budget is enforced before enumeration") {
  // Sinks are not enumerated, so the estimate only sees the source.
  const Representation m(Quiver::equioriented_a(2), Field::prime(2), DimVector{8, 0}, {Matrix(0, 8)});
  CHECK(enumeration_estimate(m, DimVector{4, 0}) == gaussian_binomial(8, 4, 2));
  CHECK_THROWS_AS(count_points(m, DimVector{4, 0}, {100, 1}), BudgetExceeded);
  CHECK_THROWS_AS(enumerate_subreps(m, DimVector{4, 0}, 100), BudgetExceeded);
  const Representation sink(Quiver::equioriented_a(1), Field::prime(2), DimVector{8}, {});
  CHECK(count_points(sink, DimVector{4}, {1, 1}) == gaussian_binomial(8, 4, 2));
}

TEST_CASE("counting polynomial of a Grassmannian is the Gaussian binomial") {
  const Representation m(Quiver::equioriented_a(1), Field::rationals(), DimVector{5}, {});
  const auto cp = counting_polynomial(m, DimVector{2});
  CHECK(cp.consistency == Consistency::verified);
  CHECK(cp.coefficients == gaussian_binomial_poly(5, 2));
  CHECK(euler_characteristic(cp) == 10);
  CHECK(betti_numbers(cp) == cp.coefficients);  // odd Betti numbers vanish
  CHECK(cp.degree() <= degree_bound(DimVector{5}, DimVector{2}));
}

TEST_CASE("counting polynomial requires a rational representation") {
  const Representation m(Quiver::equioriented_a(1), Field::prime(3), DimVector{2}, {});
  CHECK_THROWS_AS(counting_polynomial(m, DimVector{1}), DomainError);
}

TEST_CASE("Euler characteristic refuses inconsistent data") {
  CountPoly cp;
  cp.coefficients = {1, 1};
  cp.consistency = Consistency::inconsistent;
  CHECK_THROWS_AS(euler_characteristic(cp), DomainError);
}

TEST_CASE("primes_from") {
  CHECK(primes_from(2, 5) == std::vector<std::uint32_t>{2, 3, 5, 7, 11});
  CHECK(primes_from(14, 2) == std::vector<std::uint32_t>{17, 19});
}

TEST_CASE("strata by hom fingerprint partition the points") {
  const Representation m(Quiver::equioriented_a(2), Field::prime(2), DimVector{2, 2}, {Matrix{{1, 0}, {0, 0}}});
  const DimVector e{1, 1};
  const Quiver q = m.quiver();
  const std::vector<Representation> family{simple(q, 0, m.field()), simple(q, 1, m.field()), projective(q, 0, m.field())};
  const auto st = classify_strata_ff(m, e, family);
  Integer total = 0;
  for (const auto& s : st) {
    total += s.points;
    CHECK(is_stable(m, s.representative));
  }
  CHECK(total == count_points(m, e));
  CHECK(st.size() == 2);
}
