#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sepdesign/graph.hpp"
#include "sepdesign/sepsys.hpp"

namespace sepdesign {

struct Arc {
  Vertex from = 0;
  Vertex to = 0;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

// Full orientation of a skeleton. forward[e] means edges()[e] points from
// its smaller endpoint to its larger one.
struct Dag {
  std::vector<bool> forward;

  Arc arc(const Graph& skeleton, std::size_t edge) const;
  std::vector<Arc> arcs(const Graph& skeleton) const;

  friend auto operator<=>(const Dag&, const Dag&) = default;
};

enum class EdgeState : std::uint8_t { Undirected, Forward, Backward };

// Partially oriented skeleton; Forward/Backward are relative to edges()[e].
struct Pdag {
  std::vector<EdgeState> state;

  bool fully_oriented() const;
  std::size_t num_oriented() const;
  std::vector<Arc> arcs(const Graph& skeleton) const;

  friend bool operator==(const Pdag&, const Pdag&) = default;
};

bool is_acyclic(const Graph& skeleton, const Dag& dag);
// No a -> c <- b with a, b non-adjacent.
bool has_immorality(const Graph& skeleton, const Dag& dag);

// Orientation induced by a vertex ordering: earlier -> later.
Dag orient_by_order(const Graph& skeleton, std::span<const Vertex> order);

inline constexpr std::size_t kMaxOracleVertices = 8;

// All acyclic immorality-free orientations, sorted and deduplicated. Throws
// TooLarge above kMaxOracleVertices.
std::vector<Dag> enumerate_moral_orientations(const Graph& skeleton);

// Uniform over enumerate_moral_orientations for small graphs; otherwise
// orients along a maximum cardinality search with random tie-breaking.
Dag random_moral_orientation(const Graph& skeleton, std::uint64_t seed);

// Skeleton edges with exactly one endpoint in `intervened`, oriented as in
// the dag.
std::vector<Arc> simulate_intervention(const Graph& skeleton, const Dag& dag,
                                       std::span<const Vertex> intervened);

enum class RuleOrder { Forward, Reverse };

// Closure of the evidence under Meek rules R1-R4.
Pdag meek_closure(const Graph& skeleton, std::span<const Arc> evidence,
                  RuleOrder order = RuleOrder::Forward);

struct LearnReport {
  bool learns_all = true;
  std::size_t orientations_checked = 0;
  std::optional<Dag> failing_dag;
  std::optional<Edge> unlearned_edge;
};

// Pools the cut evidence of every intervention for each moral orientation
// and checks that the closure orients every edge.
LearnReport design_learns_all(const Graph& skeleton, const Design& design);

}  // namespace sepdesign
