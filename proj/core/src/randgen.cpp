#include "sepdesign/randgen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "sepdesign/errors.hpp"
#include "sepdesign/random.hpp"

namespace sepdesign {

std::string_view to_string(CostDist dist) {
  switch (dist) {
    case CostDist::ExpMean1: return "exp_mean1";
    case CostDist::Uniform02: return "uniform_0_2";
    case CostDist::Ones: return "ones";
  }
  return "unknown";
}

CostDist parse_cost_dist(std::string_view name) {
  if (name == "exp_mean1" || name == "exp") return CostDist::ExpMean1;
  if (name == "uniform_0_2" || name == "uniform") return CostDist::Uniform02;
  if (name == "ones") return CostDist::Ones;
  throw Error(ErrorKind::InvalidInput, "unknown cost distribution '" + std::string(name) + "'");
}

namespace {

// Substream layout under cfg.seed.
constexpr std::uint64_t kPermutationStream = 0;
constexpr std::uint64_t kCostStream = 1;
constexpr std::uint64_t kFirstVertexStream = 2;

double quantize(double x) { return std::round(x / kCostQuantum) * kCostQuantum; }

}  // namespace

std::vector<double> sample_costs(std::size_t n, CostDist dist, std::uint64_t seed) {
  std::vector<double> out(n, 1.0);
  if (dist == CostDist::Ones) return out;
  Rng rng(seed);
  for (auto& w : out) {
    const double u = rng.uniform01();
    w = dist == CostDist::ExpMean1 ? quantize(-std::log1p(-u)) : quantize(2.0 * u);
  }
  return out;
}

ChordalSample sample_chordal_with_peo(const GenConfig& cfg) {
  if (cfg.n == 0) throw Error(ErrorKind::InvalidInput, "n must be at least 1");
  if (!(cfg.d > 0.0)) throw Error(ErrorKind::InvalidInput, "d must be positive");
  const std::size_t n = cfg.n;

  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  Rng perm_rng(derive_seed(cfg.seed, kPermutationStream));
  perm_rng.shuffle(order);

  // Work in positions; parents[i] holds earlier positions.
  std::vector<std::vector<char>> linked(n, std::vector<char>(n, 0));
  for (std::size_t i = 1; i < n; ++i) {
    Rng rng(derive_seed(cfg.seed, kFirstVertexStream + i));
    const double p = std::min(1.0, std::pow(cfg.d / static_cast<double>(i + 1), 2.0 / 3.0));
    bool any = false;
    for (std::size_t j = 0; j < i; ++j) {
      if (rng.bernoulli(p)) {
        linked[i][j] = 1;
        any = true;
      }
    }
    if (!any || cfg.always_add_parent) linked[i][rng.below(i)] = 1;
  }
  // Close parent sets into cliques, latest position first; edges added here
  // only touch earlier positions, so finished vertices keep clique parents.
  for (std::size_t i = n; i-- > 1;) {
    std::vector<std::size_t> parents;
    for (std::size_t j = 0; j < i; ++j) {
      if (linked[i][j]) parents.push_back(j);
    }
    for (std::size_t a = 0; a < parents.size(); ++a) {
      for (std::size_t b = a + 1; b < parents.size(); ++b) linked[parents[b]][parents[a]] = 1;
    }
  }

  std::vector<Edge> edges;
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (linked[i][j]) edges.emplace_back(order[i], order[j]);
    }
  }
  auto weights = sample_costs(n, cfg.cost_dist, derive_seed(cfg.seed, kCostStream));
  return {Graph::build(n, std::move(edges), std::move(weights)), Peo{std::move(order)}};
}

Graph sample_chordal(const GenConfig& cfg) { return sample_chordal_with_peo(cfg).graph; }

}  // namespace sepdesign
