#include <benchmark/benchmark.h>

#include "qgrass/ar.hpp"
#include "qgrass/ff.hpp"
#include "qgrass/homological.hpp"
#include "qgrass/typea.hpp"

using namespace qgrass;

static void BM_SubspaceIter(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    SubspaceIter it(d, d / 2, 2);
    std::size_t n = 0;
    while (it.next()) ++n;
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(BM_SubspaceIter)->DenseRange(4, 8, 2);

static void BM_CountPoints(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto m = reduce_mod(typea::to_representation(typea::a_plus_da(n)), 2);
  std::vector<long> e;
  for (int k = 1; k <= n; ++k) e.push_back(k);
  for (auto _ : state) benchmark::DoNotOptimize(count_points(m, DimVector(e), {kDefaultBudget, 1}));
}
BENCHMARK(BM_CountPoints)->DenseRange(2, 4);

static void BM_HomDim(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto m = typea::to_representation(typea::mf_degeneration(n));
  for (auto _ : state) benchmark::DoNotOptimize(hom_dim(m, m));
}
BENCHMARK(BM_HomDim)->DenseRange(2, 6, 2);

static void BM_Cells(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto dec = typea::mf_degeneration(n);
  std::vector<long> e;
  for (int k = 1; k <= n; ++k) e.push_back(k);
  for (auto _ : state) benchmark::DoNotOptimize(typea::poincare_polynomial(dec, DimVector(e)));
}
BENCHMARK(BM_Cells)->DenseRange(2, 5);

static void BM_Knit(benchmark::State& state) {
  const auto q = Quiver(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 7}});
  for (auto _ : state) benchmark::DoNotOptimize(ar::knit(q).vertices.size());
}
BENCHMARK(BM_Knit);
BENCHMARK_MAIN();
