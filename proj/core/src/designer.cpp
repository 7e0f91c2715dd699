#include "sepdesign/designer.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <sstream>

#include "sepdesign/chordal.hpp"
#include "sepdesign/errors.hpp"

namespace sepdesign {

std::string_view to_string(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::Unbounded: return "unbounded";
    case Algorithm::GreedyChordal: return "greedy";
    case Algorithm::GreedyInterval: return "greedy-interval";
    case Algorithm::Exact: return "exact";
  }
  return "unknown";
}

Algorithm parse_algorithm(std::string_view name) {
  if (name == "unbounded") return Algorithm::Unbounded;
  if (name == "greedy" || name == "greedy-chordal") return Algorithm::GreedyChordal;
  if (name == "greedy-interval") return Algorithm::GreedyInterval;
  if (name == "exact") return Algorithm::Exact;
  throw Error(ErrorKind::InvalidInput, "unknown algorithm '" + std::string(name) + "'");
}

namespace {

std::size_t ceil_log2(std::size_t x) {
  std::size_t bits = 0;
  while (bits < 64 && (std::size_t{1} << bits) < x) ++bits;
  return bits;
}

void check_weights(const Graph& g, std::span<const double> weights) {
  if (weights.size() != g.size()) {
    throw Error(ErrorKind::WeightLengthMismatch, "expected " + std::to_string(g.size()) +
                                                     " weights, got " +
                                                     std::to_string(weights.size()));
  }
  for (double w : weights) {
    if (w < 0.0) throw Error(ErrorKind::NegativeWeight, "intervention costs must be nonnegative");
  }
}

struct ChordalInfo {
  Peo peo;
  std::size_t chi = 0;
};

ChordalInfo analyze(const Graph& g) {
  ChordalInfo info;
  info.peo = maximum_cardinality_search(g);
  info.chi = chromatic_number_chordal(g, info.peo);
  return info;
}

void check_budget(std::size_t m, std::size_t chi) {
  const std::size_t needed = ceil_log2(chi);
  if (m < needed) {
    throw Error(ErrorKind::InsufficientInterventions,
                "chromatic number " + std::to_string(chi) + " needs at least " +
                    std::to_string(needed) + " interventions, got " + std::to_string(m));
  }
}

std::vector<char> membership(std::size_t n, std::span<const Vertex> set) {
  std::vector<char> in(n, 0);
  for (Vertex v : set) in[v] = 1;
  return in;
}

// Minimum coloring of the active vertices along the host PEO.
std::vector<VertexSet> color_residual(const Graph& g, const Peo& peo,
                                      std::span<const char> active) {
  constexpr auto kUncolored = static_cast<std::size_t>(-1);
  std::vector<std::size_t> color(g.size(), kUncolored);
  std::vector<VertexSet> classes;
  std::vector<char> taken;
  for (Vertex v : peo.order) {
    if (!active[v]) continue;
    taken.assign(g.degree(v) + 1, 0);
    for (Vertex u : g.neighbors(v)) {
      if (color[u] != kUncolored && color[u] < taken.size()) taken[color[u]] = 1;
    }
    std::size_t c = 0;
    while (taken[c]) ++c;
    color[v] = c;
    if (c == classes.size()) classes.emplace_back();
    classes[c].push_back(v);
  }
  for (auto& cls : classes) std::sort(cls.begin(), cls.end());
  return classes;
}

// Colors the still-active vertices with as few classes as possible and hands
// out `labels` so the heaviest class gets the lightest label.
void finish_with_min_coloring(const Graph& g, std::span<const double> weights, const Peo& peo,
                              std::span<const char> active, std::span<const Label> labels,
                              std::vector<Label>& rows, std::vector<DesignStep>& log) {
  const auto classes = color_residual(g, peo, active);
  if (classes.empty()) return;
  std::vector<double> costs;
  costs.reserve(classes.size());
  for (const auto& cls : classes) {
    double sum = 0.0;
    for (Vertex v : cls) sum += weights[v];
    costs.push_back(sum);
  }
  const auto assigned = assign_labels_min_cost(costs, labels);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    for (Vertex v : classes[c]) rows[v] = assigned[c];
    log.push_back({classes[c], {assigned[c]}, 0, "final coloring"});
  }
}

DesignResult make_result(Algorithm algorithm, std::size_t m, std::vector<Label> rows,
                         std::span<const double> weights, std::vector<DesignStep> log) {
  DesignResult result;
  result.algorithm = algorithm;
  result.design = Design::from_rows(m, std::move(rows));
  result.total_cost = design_cost(result.design, weights);
  result.diagnostics = std::move(log);
  return result;
}

void assert_separating(const Graph& g, const DesignResult& result) {
  if (!verify_graph_separating(g, result.design).separating) {
    throw std::logic_error(std::string(to_string(result.algorithm)) +
                           " produced a design that is not graph separating");
  }
}

std::size_t count_active(std::span<const char> active) {
  return static_cast<std::size_t>(std::count(active.begin(), active.end(), 1));
}

}  // namespace

std::size_t min_separating_size(const Graph& g) {
  return ceil_log2(analyze(g).chi);
}

DesignResult design_unbounded_optimal(const Graph& g) {
  return design_unbounded_optimal(g, g.weights());
}

DesignResult design_unbounded_optimal(const Graph& g, std::span<const double> weights) {
  check_weights(g, weights);
  const auto info = analyze(g);
  const auto independent = max_weight_independent_set_frank(g, info.peo, weights);
  auto active = membership(g.size(), independent);
  for (auto& flag : active) flag = !flag;

  auto classes = color_residual(g, info.peo, active);
  std::sort(classes.begin(), classes.end());
  const std::size_t m = classes.size();

  std::vector<DesignStep> log;
  log.push_back({independent, {Label(m)}, count_active(active), "max-weight independent set"});
  std::vector<Label> rows(g.size(), Label(m));
  for (std::size_t c = 0; c < m; ++c) {
    const auto label = Label::unit(m, c);
    for (Vertex v : classes[c]) rows[v] = label;
    log.push_back({classes[c], {label}, 0, "unit label"});
  }
  auto result = make_result(Algorithm::Unbounded, m, std::move(rows), weights, std::move(log));
  assert_separating(g, result);
  return result;
}

DesignResult design_greedy_chordal(const Graph& g, std::size_t m) {
  return design_greedy_chordal(g, g.weights(), m);
}

DesignResult design_greedy_chordal(const Graph& g, std::span<const double> weights,
                                   std::size_t m) {
  check_weights(g, weights);
  const auto info = analyze(g);
  check_budget(m, info.chi);
  const auto n = g.size();
  std::vector<Label> rows(n, Label(m));
  std::vector<DesignStep> log;
  if (n == 0) return make_result(Algorithm::GreedyChordal, m, std::move(rows), weights, {});

  const auto pool = label_pool(m, n);
  std::size_t unused = pool.labels.size();  // r: labels still available
  std::size_t next = 0;
  std::vector<char> active(n, 1);
  std::size_t remaining = n;

  while (unused > info.chi && remaining > 0) {
    auto chosen = max_weight_independent_set_frank(g, info.peo, weights, active);
    // Zero-weight vertices left out by the red phase are free to join.
    auto in_set = membership(n, chosen);
    for (Vertex v : info.peo.order) {
      if (!active[v] || in_set[v] || weights[v] != 0.0) continue;
      bool free = true;
      for (Vertex u : g.neighbors(v)) {
        if (in_set[u]) {
          free = false;
          break;
        }
      }
      if (free) {
        in_set[v] = 1;
        chosen.push_back(v);
      }
    }
    std::sort(chosen.begin(), chosen.end());

    const Label& label = pool.labels[next++];
    for (Vertex v : chosen) {
      rows[v] = label;
      active[v] = 0;
    }
    remaining -= chosen.size();
    --unused;
    log.push_back({std::move(chosen), {label}, remaining, "independent set"});
  }
  if (remaining == 0 && unused > info.chi) {
    log.push_back({{}, {}, 0, "residual empty before reaching chi labels; stopped early"});
  }

  finish_with_min_coloring(g, weights, info.peo, active,
                           std::span(pool.labels).subspan(next), rows, log);
  auto result = make_result(Algorithm::GreedyChordal, m, std::move(rows), weights, std::move(log));
  assert_separating(g, result);
  return result;
}

DesignResult design_greedy_interval(const Graph& g, std::size_t m) {
  return design_greedy_interval(g, g.weights(), m);
}

DesignResult design_greedy_interval(const Graph& g, std::span<const double> weights,
                                    std::size_t m) {
  if (!g.has_intervals()) throw Error(ErrorKind::NoIntervals, "greedy-interval needs intervals");
  check_weights(g, weights);
  const auto info = analyze(g);
  check_budget(m, info.chi);
  const auto n = g.size();
  std::vector<Label> rows(n, Label(m));
  std::vector<DesignStep> log;
  if (n == 0) return make_result(Algorithm::GreedyInterval, m, std::move(rows), weights, {});

  const auto pool = label_pool(m, n);
  std::size_t unused = pool.labels.size();
  std::size_t next = 0;
  std::vector<char> active(n, 1);
  std::size_t remaining = n;

  for (std::size_t tier = 0; remaining > 0; ++tier) {
    // Labels of weight `tier` still in the pool; C(m, tier) unless the pool
    // was truncated at n labels.
    std::size_t k = 0;
    while (next + k < pool.labels.size() && pool.b[next + k] == tier) ++k;
    if (k == 0 || unused < k + info.chi) break;

    VertexSet alive;
    for (Vertex v = 0; v < n; ++v) {
      if (active[v]) alive.push_back(v);
    }
    const auto sub = induced_subgraph(g, alive);
    std::vector<double> sub_weights;
    sub_weights.reserve(alive.size());
    for (Vertex v : alive) sub_weights.push_back(weights[v]);
    const auto picked = max_weight_k_colorable_interval(sub.graph, k, sub_weights);

    DesignStep step;
    step.note = "weight-" + std::to_string(tier) + " tier";
    for (std::size_t c = 0; c < picked.classes.size(); ++c) {
      const Label& label = pool.labels[next + c];
      for (Vertex local : picked.classes[c]) {
        const Vertex v = sub.original[local];
        rows[v] = label;
        active[v] = 0;
        step.chosen.push_back(v);
      }
      step.labels.push_back(label);
    }
    std::sort(step.chosen.begin(), step.chosen.end());
    remaining -= step.chosen.size();
    step.residual_size = remaining;
    log.push_back(std::move(step));
    next += k;
    unused -= k;
  }

  finish_with_min_coloring(g, weights, info.peo, active,
                           std::span(pool.labels).subspan(next), rows, log);
  auto result = make_result(Algorithm::GreedyInterval, m, std::move(rows), weights, std::move(log));
  assert_separating(g, result);
  return result;
}

namespace {

class ExactSearch {
 public:
  ExactSearch(const Graph& g, std::span<const double> weights, const Peo& peo,
              const LabelPool& pool, std::uint64_t max_nodes)
      : g_(g), weights_(weights), order_(peo.order), max_nodes_(max_nodes) {
    for (std::size_t i = 0; i < pool.b.size(); ++i) {
      if (i == 0 || pool.b[i] != pool.b[i - 1]) tiers_.push_back({i, 0, pool.b[i]});
      ++tiers_.back().size;
    }
    used_.assign(tiers_.size(), 0);
    label_of_.assign(g.size(), kNone);
  }

  void seed(double cost) { best_cost_ = cost; }

  // Returns true when the search finished within budget.
  bool run() {
    descend(0, 0.0);
    return !exhausted_;
  }

  bool improved() const { return !best_.empty(); }
  const std::vector<std::size_t>& best() const { return best_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  struct Tier {
    std::size_t start;
    std::size_t size;
    std::size_t weight;
  };
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  bool blocked(Vertex v, std::size_t label) const {
    for (Vertex u : g_.neighbors(v)) {
      if (label_of_[u] == label) return true;
    }
    return false;
  }

  // Smallest label weight still available to v, or max when none is.
  std::size_t cheapest_weight(Vertex v) const {
    for (std::size_t t = 0; t < tiers_.size(); ++t) {
      if (used_[t] < tiers_[t].size) return tiers_[t].weight;
      for (std::size_t i = 0; i < used_[t]; ++i) {
        if (!blocked(v, tiers_[t].start + i)) return tiers_[t].weight;
      }
    }
    return std::numeric_limits<std::size_t>::max();
  }

  double lower_bound(std::size_t depth, double cost) const {
    double bound = cost;
    for (std::size_t i = depth; i < order_.size(); ++i) {
      const Vertex v = order_[i];
      const auto w = cheapest_weight(v);
      if (w == std::numeric_limits<std::size_t>::max()) {
        return std::numeric_limits<double>::infinity();
      }
      bound += weights_[v] * static_cast<double>(w);
    }
    return bound;
  }

  void descend(std::size_t depth, double cost) {
    if (exhausted_) return;
    if (++nodes_ > max_nodes_) {
      exhausted_ = true;
      return;
    }
    if (depth == order_.size()) {
      if (cost < best_cost_) {
        best_cost_ = cost;
        best_ = label_of_;
      }
      return;
    }
    if (!(lower_bound(depth, cost) < best_cost_)) return;

    const Vertex v = order_[depth];
    for (std::size_t t = 0; t < tiers_.size(); ++t) {
      const double step = weights_[v] * static_cast<double>(tiers_[t].weight);
      // Labels of one tier are interchangeable, so only the first unused
      // one may open a new class.
      const std::size_t limit = std::min(used_[t] + 1, tiers_[t].size);
      for (std::size_t i = 0; i < limit; ++i) {
        const std::size_t label = tiers_[t].start + i;
        if (blocked(v, label)) continue;
        const bool opens = i == used_[t];
        if (opens) ++used_[t];
        label_of_[v] = label;
        descend(depth + 1, cost + step);
        label_of_[v] = kNone;
        if (opens) --used_[t];
        if (exhausted_) return;
      }
    }
  }

  const Graph& g_;
  std::span<const double> weights_;
  const std::vector<Vertex>& order_;
  std::uint64_t max_nodes_;
  std::vector<Tier> tiers_;
  std::vector<std::size_t> used_;
  std::vector<std::size_t> label_of_;
  std::vector<std::size_t> best_;
  double best_cost_ = std::numeric_limits<double>::infinity();
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

}  // namespace

DesignResult design_exact(const Graph& g, std::size_t m, ExactLimits limits) {
  return design_exact(g, g.weights(), m, limits);
}

DesignResult design_exact(const Graph& g, std::span<const double> weights, std::size_t m,
                          ExactLimits limits) {
  check_weights(g, weights);
  const auto info = analyze(g);
  check_budget(m, info.chi);
  const auto n = g.size();
  if (n == 0) return make_result(Algorithm::Exact, m, {}, weights, {});

  // The greedy design is the initial incumbent.
  auto incumbent = design_greedy_chordal(g, weights, m);
  const auto pool = label_pool(m, n);
  ExactSearch search(g, weights, info.peo, pool, limits.max_nodes);
  search.seed(incumbent.total_cost);
  const bool finished = search.run();

  DesignResult result;
  if (search.improved()) {
    std::vector<Label> rows;
    rows.reserve(n);
    for (std::size_t label : search.best()) rows.push_back(pool.labels[label]);
    result = make_result(Algorithm::Exact, m, std::move(rows), weights, {});
  } else {
    result = make_result(Algorithm::Exact, m, incumbent.design.rows(), weights, {});
    result.diagnostics.push_back({{}, {}, 0, "greedy incumbent is optimal"});
  }
  result.nodes_explored = search.nodes();
  result.optimal = finished;
  if (!finished) {
    result.diagnostics.push_back(
        {{}, {}, 0, std::string(to_string(ErrorKind::BudgetExceeded)) +
                        ": node budget exhausted, returning best incumbent"});
  }
  assert_separating(g, result);
  return result;
}

IlpModel build_ilp_model(const Graph& g, std::span<const double> weights, std::size_t m) {
  if (m == 0) throw Error(ErrorKind::InvalidInput, "LP export needs m >= 1");
  check_weights(g, weights);
  const auto pool = label_pool(m, std::max<std::size_t>(g.size(), 1));
  IlpModel model;
  model.num_vertices = g.size();
  model.num_labels = pool.labels.size();
  model.b = pool.b;
  model.weights.assign(weights.begin(), weights.end());
  model.edges = g.edges();
  return model;
}

namespace {

std::string number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string var(std::size_t i, std::size_t k) {
  return "x_" + std::to_string(i) + "_" + std::to_string(k);
}

}  // namespace

std::string write_lp(const IlpModel& model) {
  constexpr std::size_t kTermsPerLine = 8;
  std::ostringstream out;
  out << "\\ minimum-cost graph separating system: " << model.num_vertices << " vertices, "
      << model.num_labels << " labels\n";
  out << "Minimize\n obj:";
  std::size_t terms = 0;
  for (std::size_t i = 0; i < model.num_vertices; ++i) {
    for (std::size_t k = 0; k < model.num_labels; ++k) {
      if (terms > 0 && terms % kTermsPerLine == 0) out << "\n    ";
      out << (terms == 0 ? " " : " + ") << number(model.objective_coefficient(i, k)) << ' '
          << var(i, k);
      ++terms;
    }
  }
  out << "\nSubject To\n";
  for (std::size_t i = 0; i < model.num_vertices; ++i) {
    out << " assign_" << i << ":";
    for (std::size_t k = 0; k < model.num_labels; ++k) {
      if (k > 0 && k % kTermsPerLine == 0) out << "\n    ";
      out << (k == 0 ? " " : " + ") << var(i, k);
    }
    out << " = 1\n";
  }
  for (const auto& [u, v] : model.edges) {
    for (std::size_t k = 0; k < model.num_labels; ++k) {
      out << " conflict_" << u << '_' << v << '_' << k << ": " << var(u, k) << " + " << var(v, k)
          << " <= 1\n";
    }
  }
  out << "Binary\n";
  for (std::size_t i = 0; i < model.num_vertices; ++i) {
    for (std::size_t k = 0; k < model.num_labels; ++k) out << ' ' << var(i, k) << '\n';
  }
  out << "End\n";
  return out.str();
}

std::string export_ilp(const Graph& g, std::span<const double> weights, std::size_t m) {
  return write_lp(build_ilp_model(g, weights, m));
}

}  // namespace sepdesign
