#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "qgrass/error.hpp"
#include "qgrass/ff.hpp"
#include "qgrass/homological.hpp"
#include "qgrass/typea.hpp"

using namespace qgrass;
using namespace qgrass::typea;

TEST_CASE("interval shorthand parses and prints") {
  const auto m = parse_intervals("U[1,2]^2 + U[3,3]", 3);
  CHECK(m.multiplicity({1, 2}) == 2);
  CHECK(m.dims() == DimVector{2, 2, 1});
  CHECK(parse_intervals(to_string(m), 3) == m);
  CHECK_THROWS_AS(parse_intervals("U[2,1]", 3), ParseError);
  CHECK_THROWS_AS(parse_intervals("U[1,4]", 3), ParseError);
  CHECK_THROWS_AS(parse_intervals("U[1,2]^", 3), ParseError);
  CHECK_THROWS_AS(parse_intervals("V[1,2]", 3), ParseError);
}

TEST_CASE("decomposition matches composite ranks") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 50; ++t) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const auto m = oracle::random_type_a(n, 3, rng);
    const auto dec = decompose(m);
    CHECK(dec.dims() == m.dims());
    const auto r = ranks_from_multiplicities(dec);
    for (int i = 1; i <= n; ++i)
      for (int j = i; j <= n; ++j) CHECK(r(i, j) == oracle::composite_rank(m, i, j));
  }
}

TEST_CASE("decomposition-level hom and ext are bilinear in the interval rules") {
  const auto a = parse_intervals("U[1,2]+U[2,3]^2", 3);
  const auto b = parse_intervals("U[1,3]+U[2,2]", 3);
  CHECK(hom(a, b) == static_cast<long>(hom_dim(to_representation(a), to_representation(b))));
  CHECK(ext1(a, b) == static_cast<long>(ext1_dim(to_representation(a), to_representation(b))));
  CHECK(ext1(b, a) == static_cast<long>(ext1_dim(to_representation(b), to_representation(a))));
}

TEST_CASE("cells agree with point counts on random modules") {
  std::mt19937_64 rng(47);
  for (int t = 0; t < 25; ++t) {
    const int n = 1 + static_cast<int>(rng() % 3);
    const auto m = oracle::random_type_a(n, 2, rng);
    const auto dec = decompose(m);
    const auto mp = reduce_mod(to_representation(dec), 2);
    for (const auto& e : sub_dimension_vectors(m.dims())) {
      const auto cp = poincare_polynomial(dec, e);
      CHECK(cp.evaluate(2) == Integer(static_cast<unsigned long>(oracle::count_points(mp, e))));
      CHECK(cp.evaluate(1) == euler_char_cells(dec, e));
      CHECK(Integer(static_cast<unsigned long>(fixed_points(dec, e).size())) == euler_char_cells(dec, e));
    }
  }
}

TEST_CASE("cells are subrepresentations with the requested dimension vector") {
  const auto dec = a_plus_da(3);
  const auto cq = coefficient_quiver(dec);
  for (const auto& l : fixed_points(cq, DimVector{1, 2, 2})) {
    CHECK(fixed_point_dims(cq, l) == DimVector{1, 2, 2});
    CHECK(fixed_point_class(cq, l).dims() == DimVector{1, 2, 2});
    CHECK(cell_dimension(cq, l) >= 0);
  }
}

TEST_CASE("strata partition the cells and have the expected dimensions") {
  const auto dec = a_plus_da(3);
  const DimVector e{1, 2, 3};
  std::size_t cells = 0;
  for (const auto& s : strata(dec, e)) {
    cells += s.cells;
    const auto n = to_representation(s.sub), m = to_representation(dec);
    CHECK(s.dim == static_cast<long>(hom_dim(n, m)) - static_cast<long>(hom_dim(n, n)));
    CHECK(s.sub.dims() == e);
  }
  CHECK(cells == fixed_points(dec, e).size());
}

TEST_CASE("degeneration order: semisimple is the most degenerate") {
  const auto generic = parse_intervals("U[1,2]^2", 2);
  const auto middle = parse_intervals("U[1,2]+U[1,1]+U[2,2]", 2);
  const auto ss = parse_intervals("U[1,1]^2+U[2,2]^2", 2);
  const auto r = [](const IntervalDecomposition& x) { return ranks_from_multiplicities(x); };
  CHECK(deg_leq_ranks(r(generic), r(ss)));
  CHECK(deg_leq_ranks(r(generic), r(middle)));
  CHECK_FALSE(deg_leq_ranks(r(ss), r(generic)));
  CHECK(deg_leq_hom(to_representation(middle), to_representation(ss)));
}

TEST_CASE("AR translate on intervals") {
  CHECK(tau_interval({1, 2}, 4) == Interval{2, 3});
  CHECK_FALSE(tau_interval({2, 4}, 4).has_value());  // projective
  CHECK(tau_inverse_interval({2, 3}, 4) == Interval{1, 2});
  CHECK_FALSE(tau_inverse_interval({1, 3}, 4).has_value());  // injective
  for (int n = 1; n <= 5; ++n)
    for (int i = 1; i <= n; ++i)
      for (int j = i; j <= n; ++j)
        if (const auto t = tau_interval({i, j}, n)) CHECK(tau_inverse_interval(*t, n) == Interval{i, j});
}

TEST_CASE("minimal projective resolutions") {
  const auto m = parse_intervals("U[1,2]+U[2,3]", 3);
  const auto res = min_projective_resolution(m);
  CHECK(res.cover == parse_intervals("U[1,3]+U[2,3]", 3));
  CHECK(res.kernel == parse_intervals("U[3,3]", 3));
  CHECK(res.cover.dims() - res.kernel.dims() == m.dims());
}

TEST_CASE("named modules") {
  CHECK(regular_module(3) == parse_intervals("U[1,3]+U[2,3]+U[3,3]", 3));
  CHECK(dual_module(3) == parse_intervals("U[1,1]+U[1,2]+U[1,3]", 3));
  CHECK(projective_power(2) == parse_intervals("U[1,2]^3", 2));
  CHECK(semisimple_flat(2).dims() == DimVector{3, 3});
  CHECK(mf_degeneration(3).dims() == DimVector{4, 4, 4});
  CHECK_THROWS_AS(flat_locus_class(parse_intervals("U[1,2]", 2)), DomainError);
}

TEST_CASE("non-equioriented inputs are rejected") {
  const Representation m(Quiver(2, {{1, 0}}), Field::rationals(), DimVector{1, 1}, {Matrix{{1}}});
  CHECK_THROWS_AS(decompose(m), DomainError);
}
