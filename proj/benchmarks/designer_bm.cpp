#include <benchmark/benchmark.h>

#include "sepdesign/chordal.hpp"
#include "sepdesign/designer.hpp"
#include "sepdesign/randgen.hpp"

using namespace sepdesign;

static void BM_SampleChordal(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(sample_chordal({.n = n, .d = 5.0, .seed = seed++}));
}
BENCHMARK(BM_SampleChordal)->Arg(20)->Arg(100)->Arg(400);

static void BM_FrankMwis(benchmark::State& state) {
  const auto g = sample_chordal({.n = static_cast<std::size_t>(state.range(0)), .d = 5.0, .seed = 1});
  const auto peo = maximum_cardinality_search(g);
  for (auto _ : state) benchmark::DoNotOptimize(max_weight_independent_set_frank(g, peo));
}
BENCHMARK(BM_FrankMwis)->Arg(100)->Arg(1000);

static void BM_GreedyChordal(benchmark::State& state) {
  const auto g = sample_chordal({.n = static_cast<std::size_t>(state.range(0)), .d = 5.0, .seed = 2});
  const auto m = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(design_greedy_chordal(g, m));
}
BENCHMARK(BM_GreedyChordal)->Args({100, 4})->Args({100, 10})->Args({500, 10});

static void BM_KColorableInterval(benchmark::State& state) {
  std::vector<Interval> intervals;
  const auto n = static_cast<std::size_t>(state.range(0));
  for (std::size_t i = 0; i < n; ++i) {
    const double lo = static_cast<double>((i * 37) % (2 * n));
    intervals.push_back({lo, lo + static_cast<double>(1 + (i * 13) % 7)});
  }
  const auto g = Graph::from_intervals(intervals);
  for (auto _ : state) benchmark::DoNotOptimize(max_weight_k_colorable_interval(g, 3));
}
BENCHMARK(BM_KColorableInterval)->Arg(50)->Arg(200);

static void BM_Exact(benchmark::State& state) {
  const auto g = sample_chordal({.n = static_cast<std::size_t>(state.range(0)), .d = 2.0, .seed = 3});
  const auto m = min_separating_size(g) + 1;
  for (auto _ : state) benchmark::DoNotOptimize(design_exact(g, m));
}
BENCHMARK(BM_Exact)->Arg(10)->Arg(14);

BENCHMARK_MAIN();
