#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sepdesign/chordal.hpp"
#include "sepdesign/graph.hpp"

namespace sepdesign {

// A row of the separating-system matrix: bit j set means the vertex takes
// part in intervention j. Printed as a bit string whose character j is
// column j, so column 0 is the most significant digit.
class Label {
 public:
  Label() = default;
  explicit Label(std::size_t length);

  static Label from_string(std::string_view bits);
  static Label unit(std::size_t length, std::size_t column);

  std::size_t length() const noexcept { return length_; }
  std::size_t weight() const noexcept;
  bool test(std::size_t column) const;
  void set(std::size_t column, bool value = true);

  std::string to_string() const;

  friend bool operator==(const Label&, const Label&) = default;

  // Canonical order: by weight, then by numeric value.
  friend std::strong_ordering operator<=>(const Label& a, const Label& b);

 private:
  std::size_t length_ = 0;
  std::vector<std::uint64_t> words_;
};

// The t = min(2^m, n) lightest labels of length m in canonical order, with
// b[j] = labels[j].weight().
struct LabelPool {
  std::size_t m = 0;
  std::vector<Label> labels;
  std::vector<std::size_t> b;
};

LabelPool label_pool(std::size_t m, std::size_t n);

// Intervention family and its matrix view kept in sync:
// v in interventions[j] iff rows[v].test(j).
class Design {
 public:
  Design() = default;

  static Design from_rows(std::size_t m, std::vector<Label> rows);
  static Design from_interventions(std::size_t n, std::vector<VertexSet> interventions);

  std::size_t m() const noexcept { return m_; }
  std::size_t num_vertices() const noexcept { return rows_.size(); }
  const std::vector<VertexSet>& interventions() const noexcept { return interventions_; }
  const std::vector<Label>& rows() const noexcept { return rows_; }
  const Label& row(Vertex v) const { return rows_[v]; }

  // Interventions with at least one member.
  std::vector<VertexSet> nonempty_interventions() const;

  friend bool operator==(const Design&, const Design&) = default;

 private:
  std::size_t m_ = 0;
  std::vector<VertexSet> interventions_;
  std::vector<Label> rows_;
};

Design coloring_to_design(const Coloring& coloring, std::span<const Label> label_of_class,
                          std::size_t m);

// Groups vertices by identical rows. Throws NotSeparating naming an
// unseparated edge.
Coloring design_to_coloring(const Graph& g, const Design& design);

struct SeparationReport {
  bool separating = true;
  std::vector<Edge> unseparated;
};

SeparationReport verify_graph_separating(const Graph& g, const Design& design);

// Total intervention cost, sum over vertices of weight(row) * w_v. The
// per-intervention sum is computed as well and must agree.
double design_cost(const Design& design, std::span<const double> weights);

// Heaviest class gets the first label of `pool`, and so on.
std::vector<Label> assign_labels_min_cost(std::span<const double> class_costs,
                                          std::span<const Label> pool);

}  // namespace sepdesign
