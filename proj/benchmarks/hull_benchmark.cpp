#include <benchmark/benchmark.h>

#include "hullkit/akl_toussaint.hpp"
#include "hullkit/bench.hpp"
#include "hullkit/datagen.hpp"

namespace {

using hullkit::Algorithm;
using hullkit::Distribution;

template <Algorithm A, Distribution D>
void BM_Build(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const hullkit::PointSet pts = hullkit::Generate(D, n, 42);
  std::uint64_t h = 0;
  for (auto _ : state) {
    auto result = hullkit::RunAlgorithm(A, pts);
    h = result.hull.size();
    benchmark::DoNotOptimize(result);
  }
  state.counters["h"] = static_cast<double>(h);
  state.SetComplexityN(state.range(0));
}

void BM_Filter(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const hullkit::PointSet pts = hullkit::Generate(Distribution::kSquare, n, 42);
  const auto mode = hullkit::BoxModeFromInt(static_cast<int>(state.range(1)));
  for (auto _ : state) {
    auto kept = hullkit::FilterInterior(pts, hullkit::FindExtremes(pts, mode));
    benchmark::DoNotOptimize(kept);
  }
}

#define HULL_BENCH(algo, dist, lo, hi)                        \
  BENCHMARK_TEMPLATE(BM_Build, algo, dist)                    \
      ->RangeMultiplier(4)                                    \
      ->Range(lo, hi)                                         \
      ->Unit(benchmark::kMicrosecond)                         \
      ->Complexity()

HULL_BENCH(Algorithm::kAtBasic, Distribution::kSquare, 1 << 10, 1 << 20);
HULL_BENCH(Algorithm::kAtOpt, Distribution::kSquare, 1 << 10, 1 << 20);
HULL_BENCH(Algorithm::kIncremental, Distribution::kSquare, 1 << 10, 1 << 20);
HULL_BENCH(Algorithm::kBucketed, Distribution::kSquare, 1 << 10, 1 << 20);
HULL_BENCH(Algorithm::kGraham, Distribution::kSquare, 1 << 10, 1 << 20);
HULL_BENCH(Algorithm::kQuickhull, Distribution::kSquare, 1 << 10, 1 << 20);
HULL_BENCH(Algorithm::kChain, Distribution::kSquare, 1 << 10, 1 << 20);

HULL_BENCH(Algorithm::kAtBasic, Distribution::kCircle, 1 << 8, 1 << 14);
HULL_BENCH(Algorithm::kAtOpt, Distribution::kCircle, 1 << 8, 1 << 14);
HULL_BENCH(Algorithm::kBucketed, Distribution::kCircle, 1 << 8, 1 << 14);
HULL_BENCH(Algorithm::kChain, Distribution::kCircle, 1 << 8, 1 << 14);

BENCHMARK(BM_Filter)->ArgsProduct({{1 << 12, 1 << 16, 1 << 20}, {4, 6, 8}});

}  // namespace

BENCHMARK_MAIN();
