#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sepdesign/graph.hpp"
#include "sepdesign/sepsys.hpp"

namespace sepdesign {

enum class Algorithm { Unbounded, GreedyChordal, GreedyInterval, Exact };

std::string_view to_string(Algorithm algorithm);
Algorithm parse_algorithm(std::string_view name);

struct DesignStep {
  VertexSet chosen;
  std::vector<Label> labels;
  std::size_t residual_size = 0;  // uncolored vertices after this step
  std::string note;
};

struct DesignResult {
  Design design;
  double total_cost = 0.0;
  Algorithm algorithm = Algorithm::Unbounded;
  // False only when the exact search ran out of budget.
  bool optimal = true;
  std::uint64_t nodes_explored = 0;
  std::vector<DesignStep> diagnostics;
};

// ceil(log2 chi(G)); throws NotChordal.
std::size_t min_separating_size(const Graph& g);

// Optimum with no budget on interventions: a maximum-weight independent set gets
// the all-zero row and the rest is properly colored with unit rows.
DesignResult design_unbounded_optimal(const Graph& g);
DesignResult design_unbounded_optimal(const Graph& g, std::span<const double> weights);

// Greedy with maximum-weight independent sets, at most m interventions.
DesignResult design_greedy_chordal(const Graph& g, std::size_t m);
DesignResult design_greedy_chordal(const Graph& g, std::span<const double> weights,
                                   std::size_t m);

// Greedy with maximum-weight C(m,t)-colorable subgraphs; interval graphs.
DesignResult design_greedy_interval(const Graph& g, std::size_t m);
DesignResult design_greedy_interval(const Graph& g, std::span<const double> weights,
                                    std::size_t m);

struct ExactLimits {
  std::uint64_t max_nodes = 200'000'000;
};

// Branch and bound over proper colorings labeled from label_pool(m, n).
// When the node budget runs out the best incumbent is returned with
// optimal == false.
DesignResult design_exact(const Graph& g, std::size_t m, ExactLimits limits = {});
DesignResult design_exact(const Graph& g, std::span<const double> weights, std::size_t m,
                          ExactLimits limits = {});

// Binary program over x[i][k] (vertex i takes pool label k).
struct IlpModel {
  std::size_t num_vertices = 0;
  std::size_t num_labels = 0;
  std::vector<std::size_t> b;
  std::vector<double> weights;
  std::vector<Edge> edges;

  double objective_coefficient(std::size_t vertex, std::size_t label) const {
    return weights[vertex] * static_cast<double>(b[label]);
  }
  std::size_t num_variables() const { return num_vertices * num_labels; }
  std::size_t num_assignment_rows() const { return num_vertices; }
  std::size_t num_conflict_rows() const { return edges.size() * num_labels; }
};

IlpModel build_ilp_model(const Graph& g, std::span<const double> weights, std::size_t m);

// CPLEX LP text of the model, variables named x_<vertex>_<label>.
std::string write_lp(const IlpModel& model);
std::string export_ilp(const Graph& g, std::span<const double> weights, std::size_t m);

}  // namespace sepdesign
