#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "sepdesign/chordal.hpp"
#include "sepdesign/graph.hpp"

namespace sepdesign {

enum class CostDist { ExpMean1, Uniform02, Ones };

std::string_view to_string(CostDist dist);
CostDist parse_cost_dist(std::string_view name);

struct GenConfig {
  std::size_t n = 1;
  double d = 1.0;  // sparsity parameter; larger is denser
  std::uint64_t seed = 0;
  CostDist cost_dist = CostDist::ExpMean1;
  // Always add one uniformly chosen earlier vertex as a parent, instead of
  // only when the independent trials picked none.
  bool always_add_parent = false;
};

struct ChordalSample {
  Graph graph;  // weights drawn from cfg.cost_dist
  Peo peo;      // the sampling permutation
};

// Random chordal graph from a random PEO. Vertex at position i (1-based)
// picks each earlier vertex as a parent with probability min(1, (d/i)^(2/3)),
// at least one parent is guaranteed, and parent sets are closed into cliques
// from the last position backwards so the permutation stays a PEO.
ChordalSample sample_chordal_with_peo(const GenConfig& cfg);
Graph sample_chordal(const GenConfig& cfg);

// Costs are rounded to multiples of 2^-30 so that sums of a few thousand of
// them are exact in double precision.
std::vector<double> sample_costs(std::size_t n, CostDist dist, std::uint64_t seed);

inline constexpr double kCostQuantum = 0x1.0p-30;

}  // namespace sepdesign
