#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "sepdesign/designer.hpp"
#include "sepdesign/graph.hpp"
#include "sepdesign/randgen.hpp"

namespace sepdesign {

struct BenchConfig {
  std::size_t n = 20;
  double d = 2.0;
  std::size_t m_min = 1;
  std::size_t m_max = 10;
  std::size_t trials = 1000;
  CostDist dist = CostDist::ExpMean1;
  std::uint64_t seed = 0;
  Algorithm algorithm = Algorithm::GreedyChordal;
  std::size_t threads = 0;  // 0: hardware concurrency
  // Redraws allowed per trial when ceil(log2 chi) exceeds m_min.
  std::size_t max_resample = 100;
  ExactLimits exact_limits{};
};

struct BenchRow {
  Algorithm algorithm = Algorithm::GreedyChordal;
  std::size_t n = 0;
  double d = 0.0;
  CostDist dist = CostDist::ExpMean1;
  std::size_t m = 0;
  std::size_t trials = 0;
  double mean_normalized_cost = 0.0;
  double std_error = 0.0;
  std::uint64_t seed = 0;
};

struct TrialRecord {
  std::uint64_t seed = 0;  // seed of the accepted draw
  std::size_t n = 0;
  std::size_t chi = 0;
  std::size_t resamples = 0;
  double unbounded_cost = 0.0;
  // Indexed by m - m_min; empty when m < ceil(log2 chi) for this graph.
  std::vector<std::optional<double>> cost_by_m;
};

struct BenchResult {
  std::vector<BenchRow> rows;
  std::vector<TrialRecord> trials;
  std::size_t resamples = 0;
  std::size_t skipped = 0;  // (trial, m) pairs below the size bound
  // Trials with m >= chi where the design cost exceeded the unbounded optimum.
  std::size_t above_unbounded_at_chi = 0;
};

// Produces one weighted instance from a trial seed.
using InstanceSampler = std::function<Graph(std::uint64_t)>;

// Samples `trials` instances (random chordal graphs with i.i.d. costs by
// default), runs the designer for every m in [m_min, m_max] on each, checks
// every design, and averages cost / n per m.
BenchResult run_benchmark(const BenchConfig& cfg);
BenchResult run_benchmark(const BenchConfig& cfg, const InstanceSampler& sampler);

inline constexpr const char* kBenchCsvHeader =
    "algorithm,n,d,dist,m,trials,mean_normalized_cost,std_error,seed";

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows);
std::string bench_csv(const std::vector<BenchRow>& rows);

}  // namespace sepdesign
