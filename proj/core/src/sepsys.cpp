#include "sepdesign/sepsys.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

#include "sepdesign/errors.hpp"

namespace sepdesign {

Label::Label(std::size_t length) : length_(length), words_((length + 63) / 64, 0) {}

Label Label::from_string(std::string_view bits) {
  Label label(bits.size());
  for (std::size_t j = 0; j < bits.size(); ++j) {
    if (bits[j] == '1') {
      label.set(j);
    } else if (bits[j] != '0') {
      throw Error(ErrorKind::InvalidInput, "label must contain only 0 and 1: " + std::string(bits));
    }
  }
  return label;
}

Label Label::unit(std::size_t length, std::size_t column) {
  Label label(length);
  label.set(column);
  return label;
}

std::size_t Label::weight() const noexcept {
  std::size_t count = 0;
  for (auto word : words_) count += static_cast<std::size_t>(std::popcount(word));
  return count;
}

bool Label::test(std::size_t column) const {
  if (column >= length_) throw std::out_of_range("label column");
  return (words_[column / 64] >> (column % 64)) & 1U;
}

void Label::set(std::size_t column, bool value) {
  if (column >= length_) throw std::out_of_range("label column");
  const std::uint64_t mask = std::uint64_t{1} << (column % 64);
  if (value) {
    words_[column / 64] |= mask;
  } else {
    words_[column / 64] &= ~mask;
  }
}

std::string Label::to_string() const {
  std::string out(length_, '0');
  for (std::size_t j = 0; j < length_; ++j) {
    if (test(j)) out[j] = '1';
  }
  return out;
}

std::strong_ordering operator<=>(const Label& a, const Label& b) {
  if (auto by_weight = a.weight() <=> b.weight(); by_weight != 0) return by_weight;
  // Equal weight: compare as big-endian numbers. Shorter labels are padded
  // with leading zeros.
  const std::size_t len = std::max(a.length_, b.length_);
  for (std::size_t k = 0; k < len; ++k) {
    const std::size_t ja = k + a.length_;
    const std::size_t jb = k + b.length_;
    const bool bit_a = ja >= len && a.test(ja - len);
    const bool bit_b = jb >= len && b.test(jb - len);
    if (bit_a != bit_b) return bit_a ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return a.length_ <=> b.length_;
}

LabelPool label_pool(std::size_t m, std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidInput, "label pool needs n >= 1");
  const std::size_t t = m >= 63 ? n : std::min<std::size_t>(std::size_t{1} << m, n);
  LabelPool pool;
  pool.m = m;
  pool.labels.reserve(t);
  // Within one weight, numeric order equals colex order on the set of
  // low-order bit positions (position p is column m-1-p).
  for (std::size_t w = 0; w <= m && pool.labels.size() < t; ++w) {
    std::vector<std::size_t> combo(w);
    std::iota(combo.begin(), combo.end(), std::size_t{0});
    while (pool.labels.size() < t) {
      Label label(m);
      for (std::size_t p : combo) label.set(m - 1 - p);
      pool.labels.push_back(std::move(label));
      pool.b.push_back(w);

      std::size_t i = 0;
      while (i < w && combo[i] + 1 == (i + 1 < w ? combo[i + 1] : m)) ++i;
      if (i == w) break;
      ++combo[i];
      for (std::size_t r = 0; r < i; ++r) combo[r] = r;
    }
  }
  return pool;
}

Design Design::from_rows(std::size_t m, std::vector<Label> rows) {
  Design d;
  d.m_ = m;
  d.interventions_.assign(m, {});
  for (std::size_t v = 0; v < rows.size(); ++v) {
    if (rows[v].length() != m) {
      throw Error(ErrorKind::LabelLengthMismatch,
                  "row of vertex " + std::to_string(v) + " has length " +
                      std::to_string(rows[v].length()) + ", expected " + std::to_string(m));
    }
    for (std::size_t j = 0; j < m; ++j) {
      if (rows[v].test(j)) d.interventions_[j].push_back(static_cast<Vertex>(v));
    }
  }
  d.rows_ = std::move(rows);
  return d;
}

Design Design::from_interventions(std::size_t n, std::vector<VertexSet> interventions) {
  Design d;
  d.m_ = interventions.size();
  d.rows_.assign(n, Label(d.m_));
  for (std::size_t j = 0; j < interventions.size(); ++j) {
    interventions[j] = make_vertex_set(std::move(interventions[j]));
    for (Vertex v : interventions[j]) {
      if (v >= n) {
        throw Error(ErrorKind::VertexOutOfRange,
                    "intervention " + std::to_string(j) + " names vertex " + std::to_string(v));
      }
      d.rows_[v].set(j);
    }
  }
  d.interventions_ = std::move(interventions);
  return d;
}

std::vector<VertexSet> Design::nonempty_interventions() const {
  std::vector<VertexSet> out;
  for (const auto& set : interventions_) {
    if (!set.empty()) out.push_back(set);
  }
  return out;
}

Design coloring_to_design(const Coloring& coloring, std::span<const Label> label_of_class,
                          std::size_t m) {
  if (label_of_class.size() < coloring.num_classes) {
    throw Error(ErrorKind::NotEnoughLabels, std::to_string(coloring.num_classes) +
                                                " classes but " +
                                                std::to_string(label_of_class.size()) + " labels");
  }
  for (std::size_t c = 0; c < coloring.num_classes; ++c) {
    if (label_of_class[c].length() != m) {
      throw Error(ErrorKind::LabelLengthMismatch, "label of class " + std::to_string(c));
    }
    for (std::size_t other = 0; other < c; ++other) {
      if (label_of_class[other] == label_of_class[c]) {
        throw Error(ErrorKind::DuplicateLabel, label_of_class[c].to_string());
      }
    }
  }
  std::vector<Label> rows;
  rows.reserve(coloring.class_of.size());
  for (std::size_t c : coloring.class_of) rows.push_back(label_of_class[c]);
  return Design::from_rows(m, std::move(rows));
}

SeparationReport verify_graph_separating(const Graph& g, const Design& design) {
  if (design.num_vertices() != g.size()) {
    throw Error(ErrorKind::VertexOutOfRange, "design covers " +
                                                 std::to_string(design.num_vertices()) +
                                                 " vertices, graph has " + std::to_string(g.size()));
  }
  SeparationReport report;
  for (const auto& edge : g.edges()) {
    if (design.row(edge.first) == design.row(edge.second)) {
      report.separating = false;
      report.unseparated.push_back(edge);
    }
  }
  return report;
}

Coloring design_to_coloring(const Graph& g, const Design& design) {
  const auto report = verify_graph_separating(g, design);
  if (!report.separating) {
    const auto& [u, v] = report.unseparated.front();
    throw Error(ErrorKind::NotSeparating,
                "edge (" + std::to_string(u) + "," + std::to_string(v) + ") is not separated");
  }
  std::map<Label, std::size_t> class_of_row;
  Coloring out;
  out.class_of.reserve(g.size());
  for (const auto& row : design.rows()) {
    auto [it, inserted] = class_of_row.try_emplace(row, class_of_row.size());
    out.class_of.push_back(it->second);
  }
  out.num_classes = class_of_row.size();
  return out;
}

double design_cost(const Design& design, std::span<const double> weights) {
  if (weights.size() != design.num_vertices()) {
    throw Error(ErrorKind::WeightLengthMismatch, "weights do not match design rows");
  }
  double by_rows = 0.0;
  for (std::size_t v = 0; v < weights.size(); ++v) {
    by_rows += static_cast<double>(design.row(static_cast<Vertex>(v)).weight()) * weights[v];
  }
  double by_interventions = 0.0;
  for (const auto& set : design.interventions()) {
    for (Vertex v : set) by_interventions += weights[v];
  }
  const double scale = std::max({1.0, std::abs(by_rows), std::abs(by_interventions)});
  if (std::abs(by_rows - by_interventions) > 1e-9 * scale) {
    throw std::logic_error("design cost formulas disagree");
  }
  return by_rows;
}

std::vector<Label> assign_labels_min_cost(std::span<const double> class_costs,
                                          std::span<const Label> pool) {
  if (pool.size() < class_costs.size()) {
    throw Error(ErrorKind::NotEnoughLabels, std::to_string(class_costs.size()) + " classes but " +
                                                std::to_string(pool.size()) + " labels");
  }
  std::vector<std::size_t> order(class_costs.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return class_costs[a] > class_costs[b];
  });
  std::vector<Label> out(class_costs.size());
  for (std::size_t rank = 0; rank < order.size(); ++rank) out[order[rank]] = pool[rank];
  return out;
}

}  // namespace sepdesign
