#include "sepdesign/chordal.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "min_cost_flow.hpp"
#include "sepdesign/errors.hpp"

namespace sepdesign {

std::vector<VertexSet> Coloring::classes() const {
  std::vector<VertexSet> out(num_classes);
  for (std::size_t v = 0; v < class_of.size(); ++v) {
    out[class_of[v]].push_back(static_cast<Vertex>(v));
  }
  return out;
}

bool is_proper_coloring(const Graph& g, const Coloring& coloring) {
  if (coloring.class_of.size() != g.size()) return false;
  for (std::size_t c : coloring.class_of) {
    if (c >= coloring.num_classes) return false;
  }
  for (const auto& [u, v] : g.edges()) {
    if (coloring.class_of[u] == coloring.class_of[v]) return false;
  }
  return true;
}

Coloring normalize_coloring(std::span<const std::size_t> class_of) {
  Coloring out;
  out.class_of.reserve(class_of.size());
  std::map<std::size_t, std::size_t> relabel;
  for (std::size_t c : class_of) {
    auto [it, inserted] = relabel.try_emplace(c, relabel.size());
    out.class_of.push_back(it->second);
  }
  out.num_classes = relabel.size();
  return out;
}

namespace {

std::vector<std::size_t> positions(const Graph& g, const Peo& peo) {
  const auto n = g.size();
  constexpr auto kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> pos(n, kUnset);
  if (peo.order.size() != n) return {};
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex v = peo.order[i];
    if (v >= n || pos[v] != kUnset) return {};
    pos[v] = i;
  }
  return pos;
}

std::vector<std::size_t> checked_positions(const Graph& g, const Peo& peo) {
  if (!is_peo(g, peo)) throw Error(ErrorKind::InvalidPeo, "ordering is not a PEO of the graph");
  return positions(g, peo);
}

}  // namespace

bool is_peo(const Graph& g, const Peo& peo) {
  const auto pos = positions(g, peo);
  if (pos.size() != g.size()) return false;
  // For each v let p be its latest earlier neighbor; the ordering is a PEO
  // iff every other earlier neighbor of v is adjacent to p.
  for (Vertex v : peo.order) {
    Vertex latest = v;
    for (Vertex u : g.neighbors(v)) {
      if (pos[u] < pos[v] && (latest == v || pos[u] > pos[latest])) latest = u;
    }
    if (latest == v) continue;
    for (Vertex u : g.neighbors(v)) {
      if (u != latest && pos[u] < pos[v] && !g.adjacent(u, latest)) return false;
    }
  }
  return true;
}

Peo maximum_cardinality_search(const Graph& g) {
  const auto n = g.size();
  std::vector<std::size_t> label(n, 0);
  std::vector<char> visited(n, 0);
  std::vector<std::size_t> pos(n, 0);
  Peo peo;
  peo.order.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    Vertex best = 0;
    bool found = false;
    for (Vertex v = 0; v < n; ++v) {
      if (visited[v]) continue;
      if (!found || label[v] > label[best]) {
        best = v;
        found = true;
      }
    }
    visited[best] = 1;
    pos[best] = step;
    peo.order.push_back(best);
    for (Vertex u : g.neighbors(best)) {
      if (!visited[u]) ++label[u];
    }
  }

  if (!is_peo(g, peo)) {
    for (std::size_t i = 0; i < n; ++i) {
      const Vertex v = peo.order[i];
      std::vector<Vertex> earlier;
      for (Vertex u : g.neighbors(v)) {
        if (pos[u] < i) earlier.push_back(u);
      }
      for (std::size_t a = 0; a < earlier.size(); ++a) {
        for (std::size_t b = a + 1; b < earlier.size(); ++b) {
          if (!g.adjacent(earlier[a], earlier[b])) {
            throw Error(ErrorKind::NotChordal,
                        "vertex " + std::to_string(v) + " has non-adjacent earlier neighbors " +
                            std::to_string(earlier[a]) + " and " + std::to_string(earlier[b]));
          }
        }
      }
    }
    throw Error(ErrorKind::NotChordal, "search order is not a perfect elimination ordering");
  }
  return peo;
}

bool is_chordal(const Graph& g) {
  try {
    maximum_cardinality_search(g);
    return true;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotChordal) return false;
    throw;
  }
}

Peo restrict_peo(const Peo& host_peo, const InducedSubgraph& sub) {
  std::map<Vertex, Vertex> local;
  for (std::size_t i = 0; i < sub.original.size(); ++i) {
    local.emplace(sub.original[i], static_cast<Vertex>(i));
  }
  Peo out;
  out.order.reserve(sub.original.size());
  for (Vertex v : host_peo.order) {
    if (auto it = local.find(v); it != local.end()) out.order.push_back(it->second);
  }
  return out;
}

std::size_t chromatic_number_chordal(const Graph& g, const Peo& peo) {
  const auto pos = checked_positions(g, peo);
  if (g.size() == 0) return 0;
  std::size_t best = 0;
  for (Vertex v = 0; v < g.size(); ++v) {
    std::size_t back = 0;
    for (Vertex u : g.neighbors(v)) back += pos[u] < pos[v] ? 1 : 0;
    best = std::max(best, back);
  }
  return best + 1;
}

Coloring greedy_color_chordal(const Graph& g, const Peo& peo) {
  checked_positions(g, peo);
  constexpr auto kUncolored = static_cast<std::size_t>(-1);
  Coloring out;
  out.class_of.assign(g.size(), kUncolored);
  std::vector<char> taken;
  for (Vertex v : peo.order) {
    taken.assign(g.degree(v) + 1, 0);
    for (Vertex u : g.neighbors(v)) {
      const auto c = out.class_of[u];
      if (c != kUncolored && c < taken.size()) taken[c] = 1;
    }
    std::size_t color = 0;
    while (taken[color]) ++color;
    out.class_of[v] = color;
    out.num_classes = std::max(out.num_classes, color + 1);
  }
  return out;
}

VertexSet max_weight_independent_set_frank(const Graph& g, const Peo& peo) {
  return max_weight_independent_set_frank(g, peo, g.weights());
}

VertexSet max_weight_independent_set_frank(const Graph& g, const Peo& peo,
                                           std::span<const double> weights) {
  const std::vector<char> all(g.size(), 1);
  return max_weight_independent_set_frank(g, peo, weights, all);
}

VertexSet max_weight_independent_set_frank(const Graph& g, const Peo& peo,
                                           std::span<const double> weights,
                                           std::span<const char> active) {
  const auto pos = checked_positions(g, peo);
  if (weights.size() != g.size()) {
    throw Error(ErrorKind::WeightLengthMismatch, "weights do not match vertex count");
  }
  std::vector<double> residual(weights.begin(), weights.end());
  std::vector<char> red(g.size(), 0);
  for (auto it = peo.order.rbegin(); it != peo.order.rend(); ++it) {
    const Vertex v = *it;
    if (!active[v] || !(residual[v] > 0.0)) continue;
    red[v] = 1;
    const double w = residual[v];
    for (Vertex u : g.neighbors(v)) {
      if (active[u] && pos[u] < pos[v]) residual[u] -= w;
    }
    residual[v] = 0.0;
  }

  std::vector<char> blue(g.size(), 0);
  VertexSet out;
  for (Vertex v : peo.order) {
    if (!red[v]) continue;
    bool blocked = false;
    for (Vertex u : g.neighbors(v)) {
      if (blue[u]) {
        blocked = true;
        break;
      }
    }
    if (!blocked) {
      blue[v] = 1;
      out.push_back(v);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

KColorableSubgraph max_weight_k_colorable_interval(const Graph& g, std::size_t k) {
  return max_weight_k_colorable_interval(g, k, g.weights());
}

KColorableSubgraph max_weight_k_colorable_interval(const Graph& g, std::size_t k,
                                                   std::span<const double> weights) {
  if (!g.has_intervals()) throw Error(ErrorKind::NoIntervals, "interval data required");
  if (k == 0) throw Error(ErrorKind::InvalidK, "k must be at least 1");
  if (weights.size() != g.size()) {
    throw Error(ErrorKind::WeightLengthMismatch, "weights do not match vertex count");
  }
  const auto& intervals = g.intervals();
  const auto n = g.size();
  KColorableSubgraph out;
  if (n == 0) return out;

  std::vector<double> points;
  points.reserve(2 * n);
  for (const auto& iv : intervals) {
    points.push_back(iv.lo);
    points.push_back(iv.hi);
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  auto rank = [&](double x) {
    return static_cast<std::size_t>(std::lower_bound(points.begin(), points.end(), x) -
                                    points.begin());
  };

  // Node j sits just before point j; node K is the sink. Closed intervals
  // occupy [rank(lo), rank(hi)] so touching intervals share a point.
  const std::size_t sink = points.size();
  const auto capacity = static_cast<long>(std::min(k, n));
  detail::MinCostFlow flow(sink + 1);
  for (std::size_t j = 0; j < sink; ++j) flow.add_arc(j, j + 1, capacity, 0.0);
  std::vector<std::size_t> interval_arc(n);
  for (Vertex v = 0; v < n; ++v) {
    interval_arc[v] = flow.add_arc(rank(intervals[v].lo), rank(intervals[v].hi) + 1, 1, -weights[v]);
  }
  flow.run(0, sink, capacity);

  // Decompose into unit paths; every interval arc used by a path joins that
  // path's color class.
  std::vector<long> remaining(2 * (sink + n), 0);
  std::vector<std::vector<std::pair<std::size_t, Vertex>>> leaving(sink + 1);
  for (std::size_t j = 0; j < sink; ++j) {
    const std::size_t id = 2 * j;
    remaining[id] = flow.arc(id).flow;
    leaving[j].emplace_back(id, static_cast<Vertex>(-1));
  }
  for (Vertex v = 0; v < n; ++v) {
    const std::size_t id = interval_arc[v];
    remaining[id] = flow.arc(id).flow;
    leaving[rank(intervals[v].lo)].insert(leaving[rank(intervals[v].lo)].begin(), {id, v});
  }
  for (long unit = 0; unit < capacity; ++unit) {
    VertexSet cls;
    std::size_t at = 0;
    while (at != sink) {
      bool moved = false;
      for (const auto& [id, v] : leaving[at]) {
        if (remaining[id] <= 0) continue;
        --remaining[id];
        if (v != static_cast<Vertex>(-1)) cls.push_back(v);
        at = flow.arc(id).to;
        moved = true;
        break;
      }
      if (!moved) break;
    }
    if (!cls.empty()) {
      std::sort(cls.begin(), cls.end());
      out.classes.push_back(std::move(cls));
    }
  }
  for (const auto& cls : out.classes) {
    out.vertices.insert(out.vertices.end(), cls.begin(), cls.end());
  }
  std::sort(out.vertices.begin(), out.vertices.end());
  for (Vertex v : out.vertices) out.weight += weights[v];
  return out;
}

}  // namespace sepdesign
