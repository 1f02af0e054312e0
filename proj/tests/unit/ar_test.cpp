#include "doctest.h"
#include "oracles.hpp"
#include "qgrass/ar.hpp"
#include "qgrass/error.hpp"

using namespace qgrass;

namespace {

Quiver d4() { return Quiver(4, {{1, 0}, {2, 0}, {3, 0}}); }
Quiver e6() { return Quiver(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}}); }

}  // namespace

TEST_CASE("Dynkin classification and root counts") {
  CHECK(ar::classify(Quiver::equioriented_a(5)).name() == "A5");
  CHECK(ar::classify(d4()).name() == "D4");
  CHECK(ar::classify(e6()).name() == "E6");
  CHECK(ar::positive_root_count(ar::classify(e6())) == 36);
  CHECK_THROWS_AS(ar::knit(Quiver::kronecker(2)), DomainError);
}

TEST_CASE("knitting reaches every positive root exactly once") {
  for (const Quiver& q : {Quiver::equioriented_a(3), d4(), e6(), Quiver(3, {{0, 1}, {2, 1}})}) {
    const auto g = ar::knit(q);
    std::set<std::vector<long>> dims;
    for (const auto& v : g.vertices) dims.insert(v.dim.entries());
    CHECK(dims.size() == g.vertices.size());
    CHECK(dims == oracle::positive_roots(q, 3));
    CHECK(g.mesh_additive());
  }
}

TEST_CASE("the Coxeter matrix computes tau on non-projectives") {
  const Quiver q = d4();
  const auto g = ar::knit(q);
  const auto c = ar::coxeter_matrix(q);
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    if (!g.tau[v]) continue;
    CHECK(ar::apply(c, g.vertices[v].dim.entries()) == g.vertices[*g.tau[v]].dim.entries());
    CHECK(ar::tau_dim(q, g.vertices[v].dim) == g.vertices[*g.tau[v]].dim);
  }
}

TEST_CASE("path counts") {
  const Quiver q(3, {{0, 1}, {0, 1}, {1, 2}});
  const auto p = ar::path_count_matrix(q);
  CHECK(p == ar::IntMatrix{{1, 2, 2}, {0, 1, 1}, {0, 0, 1}});
}

TEST_CASE("projectives sit at level zero with their dimension vectors") {
  const Quiver q = Quiver::equioriented_a(4);
  const auto g = ar::knit(q);
  const auto paths = ar::path_count_matrix(q);
  for (std::size_t k = 0; k < 4; ++k) {
    const auto v = g.find(k, 0);
    REQUIRE(v.has_value());
    CHECK(g.vertices[*v].dim.entries() == paths[k]);
    CHECK_FALSE(g.tau[*v].has_value());
  }
}
