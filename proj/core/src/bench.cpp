#include "sepdesign/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "sepdesign/chordal.hpp"
#include "sepdesign/errors.hpp"
#include "sepdesign/random.hpp"
#include "sepdesign/sepsys.hpp"

namespace sepdesign {

namespace {

std::size_t ceil_log2(std::size_t x) {
  std::size_t bits = 0;
  while (bits < 64 && (std::size_t{1} << bits) < x) ++bits;
  return bits;
}

DesignResult run_algorithm(const BenchConfig& cfg, const Graph& g, std::size_t m) {
  switch (cfg.algorithm) {
    case Algorithm::Unbounded: return design_unbounded_optimal(g);
    case Algorithm::GreedyChordal: return design_greedy_chordal(g, m);
    case Algorithm::GreedyInterval: return design_greedy_interval(g, m);
    case Algorithm::Exact: return design_exact(g, m, cfg.exact_limits);
  }
  throw std::logic_error("unhandled algorithm");
}

TrialRecord run_trial(const BenchConfig& cfg, const InstanceSampler& sampler, std::size_t trial,
                      std::size_t& above_at_chi) {
  TrialRecord record;
  const std::uint64_t trial_seed = derive_seed(cfg.seed, trial);
  Graph g;
  Peo peo;
  for (std::size_t attempt = 0;; ++attempt) {
    record.seed = derive_seed(trial_seed, attempt);
    g = sampler(record.seed);
    peo = maximum_cardinality_search(g);
    record.chi = chromatic_number_chordal(g, peo);
    record.resamples = attempt;
    if (ceil_log2(record.chi) <= cfg.m_min || attempt >= cfg.max_resample) break;
  }
  record.n = g.size();
  record.unbounded_cost = design_unbounded_optimal(g).total_cost;

  const std::size_t bound = ceil_log2(record.chi);
  for (std::size_t m = cfg.m_min; m <= cfg.m_max; ++m) {
    if (m < bound) {
      record.cost_by_m.emplace_back();
      continue;
    }
    const auto result = run_algorithm(cfg, g, m);
    if (!verify_graph_separating(g, result.design).separating) {
      throw std::logic_error("benchmark design is not graph separating");
    }
    const double slack = 1e-9 * std::max(1.0, record.unbounded_cost);
    if (result.total_cost < record.unbounded_cost - slack) {
      throw std::logic_error("benchmark design beats the unbounded optimum");
    }
    if (m >= record.chi && result.total_cost > record.unbounded_cost + slack) {
      if (cfg.algorithm == Algorithm::Exact && result.optimal) {
        throw std::logic_error("exact design misses the unbounded optimum with m >= chi");
      }
      ++above_at_chi;
    }
    record.cost_by_m.emplace_back(result.total_cost);
  }
  return record;
}

}  // namespace

BenchResult run_benchmark(const BenchConfig& cfg) {
  const InstanceSampler sampler = [&cfg](std::uint64_t seed) {
    GenConfig gen;
    gen.n = cfg.n;
    gen.d = cfg.d;
    gen.seed = seed;
    gen.cost_dist = cfg.dist;
    return sample_chordal(gen);
  };
  return run_benchmark(cfg, sampler);
}

BenchResult run_benchmark(const BenchConfig& cfg, const InstanceSampler& sampler) {
  if (cfg.trials == 0) throw Error(ErrorKind::InvalidInput, "trials must be at least 1");
  if (cfg.m_min > cfg.m_max) throw Error(ErrorKind::InvalidInput, "empty m range");
  if (cfg.algorithm == Algorithm::GreedyInterval) {
    // Fails fast with NoIntervals on samplers that do not provide them.
    sampler(derive_seed(cfg.seed, 0)).intervals();
  }

  BenchResult result;
  result.trials.resize(cfg.trials);
  std::vector<std::size_t> above(cfg.trials, 0);

  std::size_t threads = cfg.threads != 0 ? cfg.threads : std::thread::hardware_concurrency();
  threads = std::clamp<std::size_t>(threads, 1, cfg.trials);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < cfg.trials; i = next++) {
      try {
        result.trials[i] = run_trial(cfg, sampler, i, above[i]);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = cfg.trials;
      }
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  for (std::size_t i = 0; i < cfg.trials; ++i) {
    result.resamples += result.trials[i].resamples;
    result.above_unbounded_at_chi += above[i];
  }

  // Reduction in trial order keeps the output independent of scheduling.
  for (std::size_t m = cfg.m_min; m <= cfg.m_max; ++m) {
    const std::size_t slot = m - cfg.m_min;
    std::vector<double> values;
    for (const auto& trial : result.trials) {
      if (trial.cost_by_m[slot]) {
        values.push_back(*trial.cost_by_m[slot] / static_cast<double>(trial.n));
      } else {
        ++result.skipped;
      }
    }
    if (values.empty()) continue;

    double sum = 0.0;
    double compensation = 0.0;
    for (double x : values) {
      const double y = x - compensation;
      const double t = sum + y;
      compensation = (t - sum) - y;
      sum = t;
    }
    const double mean = sum / static_cast<double>(values.size());
    double squares = 0.0;
    for (double x : values) squares += (x - mean) * (x - mean);
    const double k = static_cast<double>(values.size());
    const double std_error = values.size() > 1 ? std::sqrt(squares / (k - 1.0) / k) : 0.0;

    result.rows.push_back({cfg.algorithm, cfg.n, cfg.d, cfg.dist, m, values.size(), mean,
                           std_error, cfg.seed});
  }
  return result;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << kBenchCsvHeader << '\n';
  char buf[256];
  for (const auto& row : rows) {
    std::snprintf(buf, sizeof(buf), "%s,%zu,%g,%s,%zu,%zu,%.10f,%.10f,%llu\n",
                  std::string(to_string(row.algorithm)).c_str(), row.n, row.d,
                  std::string(to_string(row.dist)).c_str(), row.m, row.trials,
                  row.mean_normalized_cost, row.std_error,
                  static_cast<unsigned long long>(row.seed));
    out << buf;
  }
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  write_bench_csv(out, rows);
  return out.str();
}

}  // namespace sepdesign
