#include "sepdesign/graph.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <string>

#include "sepdesign/errors.hpp"

namespace sepdesign {

VertexSet make_vertex_set(std::vector<Vertex> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

namespace {

std::string edge_text(Vertex u, Vertex v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

void validate_weights(std::size_t n, const std::vector<double>& weights) {
  if (weights.size() != n) {
    throw Error(ErrorKind::WeightLengthMismatch,
                "expected " + std::to_string(n) + " weights, got " +
                    std::to_string(weights.size()));
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (!std::isfinite(weights[v])) {
      throw Error(ErrorKind::InvalidInput, "non-finite weight at vertex " + std::to_string(v));
    }
    if (weights[v] < 0.0) {
      throw Error(ErrorKind::NegativeWeight, "vertex " + std::to_string(v));
    }
  }
}

void validate_intervals(std::size_t n, const std::vector<Interval>& intervals) {
  if (intervals.size() != n) {
    throw Error(ErrorKind::IntervalMismatch,
                "expected " + std::to_string(n) + " intervals, got " +
                    std::to_string(intervals.size()));
  }
  for (std::size_t v = 0; v < n; ++v) {
    const auto& iv = intervals[v];
    if (!std::isfinite(iv.lo) || !std::isfinite(iv.hi) || iv.lo > iv.hi) {
      throw Error(ErrorKind::IntervalMismatch, "malformed interval at vertex " + std::to_string(v));
    }
  }
}

std::vector<Edge> intersection_edges(const std::vector<Interval>& intervals) {
  std::vector<Edge> edges;
  const auto n = static_cast<Vertex>(intervals.size());
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (intervals_overlap(intervals[u], intervals[v])) edges.emplace_back(u, v);
    }
  }
  return edges;
}

}  // namespace

Graph Graph::build(std::size_t n, std::vector<Edge> edges,
                   std::optional<std::vector<double>> weights,
                   std::optional<std::vector<Interval>> intervals) {
  Graph g;
  for (auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw Error(ErrorKind::VertexOutOfRange, edge_text(u, v) + " with n=" + std::to_string(n));
    }
    if (u == v) throw Error(ErrorKind::SelfLoop, edge_text(u, v));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
    throw Error(ErrorKind::DuplicateEdge, edge_text(dup->first, dup->second));
  }

  if (weights) {
    validate_weights(n, *weights);
    g.weights_ = std::move(*weights);
  } else {
    g.weights_.assign(n, 1.0);
  }

  if (intervals) {
    validate_intervals(n, *intervals);
    auto derived = intersection_edges(*intervals);
    if (derived != edges) {
      std::vector<Edge> diff;
      std::set_symmetric_difference(derived.begin(), derived.end(), edges.begin(), edges.end(),
                                    std::back_inserter(diff));
      throw Error(ErrorKind::IntervalMismatch,
                  "interval intersection graph disagrees on edge " +
                      edge_text(diff.front().first, diff.front().second));
    }
    g.intervals_ = std::move(intervals);
  }

  g.adjacency_.assign(n, {});
  for (const auto& [u, v] : edges) {
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  for (auto& list : g.adjacency_) std::sort(list.begin(), list.end());
  g.edges_ = std::move(edges);
  return g;
}

Graph Graph::from_intervals(std::vector<Interval> intervals,
                            std::optional<std::vector<double>> weights) {
  const auto n = intervals.size();
  validate_intervals(n, intervals);
  auto edges = intersection_edges(intervals);
  return build(n, std::move(edges), std::move(weights), std::move(intervals));
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& list = adjacency_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

std::optional<std::size_t> Graph::edge_index(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
  if (it == edges_.end() || *it != Edge{u, v}) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

double Graph::total_weight() const {
  double sum = 0.0;
  for (double w : weights_) sum += w;
  return sum;
}

double Graph::total_weight(std::span<const Vertex> set) const {
  double sum = 0.0;
  for (Vertex v : set) sum += weights_[v];
  return sum;
}

const std::vector<Interval>& Graph::intervals() const {
  if (!intervals_) throw Error(ErrorKind::NoIntervals, "graph has no interval representation");
  return *intervals_;
}

Graph Graph::with_weights(std::vector<double> weights) const {
  validate_weights(size(), weights);
  Graph copy = *this;
  copy.weights_ = std::move(weights);
  return copy;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> subset) {
  const auto n = g.size();
  std::vector<Vertex> original(subset.begin(), subset.end());
  for (Vertex v : original) {
    if (v >= n) throw Error(ErrorKind::VertexOutOfRange, "vertex " + std::to_string(v));
  }
  original = make_vertex_set(std::move(original));

  constexpr auto kAbsent = static_cast<Vertex>(-1);
  std::vector<Vertex> local(n, kAbsent);
  for (std::size_t i = 0; i < original.size(); ++i) local[original[i]] = static_cast<Vertex>(i);

  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges()) {
    if (local[u] != kAbsent && local[v] != kAbsent) edges.emplace_back(local[u], local[v]);
  }
  std::vector<double> weights;
  weights.reserve(original.size());
  for (Vertex v : original) weights.push_back(g.weight(v));

  std::optional<std::vector<Interval>> intervals;
  if (g.has_intervals()) {
    intervals.emplace();
    for (Vertex v : original) intervals->push_back(g.intervals()[v]);
  }
  return {Graph::build(original.size(), std::move(edges), std::move(weights), std::move(intervals)),
          std::move(original)};
}

bool is_connected(const Graph& g) {
  const auto n = g.size();
  if (n <= 1) return true;
  std::vector<char> seen(n, 0);
  std::queue<Vertex> frontier;
  frontier.push(0);
  seen[0] = 1;
  std::size_t reached = 1;
  while (!frontier.empty()) {
    Vertex v = frontier.front();
    frontier.pop();
    for (Vertex u : g.neighbors(v)) {
      if (!seen[u]) {
        seen[u] = 1;
        ++reached;
        frontier.push(u);
      }
    }
  }
  return reached == n;
}

}  // namespace sepdesign
