#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace sepdesign {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

// Sorted list of distinct vertex ids.
using VertexSet = std::vector<Vertex>;

VertexSet make_vertex_set(std::vector<Vertex> ids);

// Closed interval; touching endpoints count as overlap.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  friend bool operator==(const Interval&, const Interval&) = default;
};

inline bool intervals_overlap(const Interval& a, const Interval& b) {
  return a.lo <= b.hi && b.lo <= a.hi;
}

// Immutable undirected skeleton with per-vertex intervention costs and an
// optional interval representation. Edges are stored canonically (u < v,
// sorted) and adjacency lists are sorted.
class Graph {
 public:
  Graph() = default;

  static Graph build(std::size_t n, std::vector<Edge> edges,
                     std::optional<std::vector<double>> weights = std::nullopt,
                     std::optional<std::vector<Interval>> intervals = std::nullopt);

  // Intersection graph of the given intervals.
  static Graph from_intervals(std::vector<Interval> intervals,
                              std::optional<std::vector<double>> weights = std::nullopt);

  std::size_t size() const noexcept { return adjacency_.size(); }
  std::size_t num_edges() const noexcept { return edges_.size(); }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  bool adjacent(Vertex u, Vertex v) const;

  // Position of edge {u,v} in edges(), if present.
  std::optional<std::size_t> edge_index(Vertex u, Vertex v) const;

  std::span<const double> weights() const noexcept { return weights_; }
  double weight(Vertex v) const { return weights_[v]; }
  double total_weight() const;
  double total_weight(std::span<const Vertex> set) const;

  bool has_intervals() const noexcept { return intervals_.has_value(); }
  const std::vector<Interval>& intervals() const;

  // Same structure, different costs.
  Graph with_weights(std::vector<double> weights) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<double> weights_;
  std::optional<std::vector<Interval>> intervals_;
};

struct InducedSubgraph {
  Graph graph;
  // original[i] is the host-graph id of subgraph vertex i.
  std::vector<Vertex> original;
};

// Vertices are relabeled 0..|S|-1 in increasing host-id order.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> subset);

// Connected components by BFS; used by generators and oracles.
bool is_connected(const Graph& g);

}  // namespace sepdesign
