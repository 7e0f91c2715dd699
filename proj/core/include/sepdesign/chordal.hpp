#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sepdesign/graph.hpp"

namespace sepdesign {

// Perfect elimination ordering in "earlier neighbors form a clique" form:
// for every position i, the neighbors of order[i] among order[0..i) are
// pairwise adjacent. Reversing it gives a simplicial elimination sequence.
struct Peo {
  std::vector<Vertex> order;

  friend bool operator==(const Peo&, const Peo&) = default;
};

struct Coloring {
  std::vector<std::size_t> class_of;
  std::size_t num_classes = 0;

  // Members of each class, ascending.
  std::vector<VertexSet> classes() const;
};

bool is_proper_coloring(const Graph& g, const Coloring& coloring);

// Relabels class indices by first occurrence in vertex order so they are
// contiguous from 0.
Coloring normalize_coloring(std::span<const std::size_t> class_of);

// Checks that `peo` is a permutation of the vertices with the PEO property.
bool is_peo(const Graph& g, const Peo& peo);

// Maximum cardinality search, ties broken by lowest vertex id. Throws
// NotChordal naming a vertex whose earlier neighbors are not a clique.
Peo maximum_cardinality_search(const Graph& g);

bool is_chordal(const Graph& g);

// PEO of the subgraph induced by `sub`, obtained by restricting `host_peo`.
Peo restrict_peo(const Peo& host_peo, const InducedSubgraph& sub);

// 1 + maximum number of earlier neighbors along the PEO (the clique number).
std::size_t chromatic_number_chordal(const Graph& g, const Peo& peo);

// Colors along the PEO with the smallest free color; uses exactly chi colors.
Coloring greedy_color_chordal(const Graph& g, const Peo& peo);

// Frank's maximum-weight independent set for chordal graphs.
//
// Red phase: vertices are visited in elimination order (the PEO reversed);
// a vertex whose residual weight is positive turns red and its residual is
// subtracted from every neighbor not yet visited. Blue phase: red vertices
// are scanned in PEO order and kept when no neighbor is already blue.
VertexSet max_weight_independent_set_frank(const Graph& g, const Peo& peo);
VertexSet max_weight_independent_set_frank(const Graph& g, const Peo& peo,
                                           std::span<const double> weights);

// Same, restricted to the vertices with active[v] != 0. `peo` is a PEO of
// the whole graph; its restriction to the active set is used.
VertexSet max_weight_independent_set_frank(const Graph& g, const Peo& peo,
                                           std::span<const double> weights,
                                           std::span<const char> active);

struct KColorableSubgraph {
  VertexSet vertices;
  std::vector<VertexSet> classes;  // at most k nonempty, pairwise disjoint
  double weight = 0.0;
};

// Maximum-weight induced subgraph admitting a proper k-coloring, for graphs
// carrying an interval representation. Solved as a min-cost flow of value k
// along the sorted endpoint line; each unit of flow is one color class.
KColorableSubgraph max_weight_k_colorable_interval(const Graph& g, std::size_t k);
KColorableSubgraph max_weight_k_colorable_interval(const Graph& g, std::size_t k,
                                                   std::span<const double> weights);

}  // namespace sepdesign
