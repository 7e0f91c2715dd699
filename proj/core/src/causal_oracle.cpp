#include "sepdesign/causal_oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "sepdesign/chordal.hpp"
#include "sepdesign/errors.hpp"
#include "sepdesign/random.hpp"

namespace sepdesign {

Arc Dag::arc(const Graph& skeleton, std::size_t edge) const {
  const auto& [u, v] = skeleton.edges()[edge];
  return forward[edge] ? Arc{u, v} : Arc{v, u};
}

std::vector<Arc> Dag::arcs(const Graph& skeleton) const {
  std::vector<Arc> out;
  out.reserve(forward.size());
  for (std::size_t e = 0; e < forward.size(); ++e) out.push_back(arc(skeleton, e));
  return out;
}

bool Pdag::fully_oriented() const {
  return std::none_of(state.begin(), state.end(),
                      [](EdgeState s) { return s == EdgeState::Undirected; });
}

std::size_t Pdag::num_oriented() const {
  return static_cast<std::size_t>(std::count_if(
      state.begin(), state.end(), [](EdgeState s) { return s != EdgeState::Undirected; }));
}

std::vector<Arc> Pdag::arcs(const Graph& skeleton) const {
  std::vector<Arc> out;
  for (std::size_t e = 0; e < state.size(); ++e) {
    const auto& [u, v] = skeleton.edges()[e];
    if (state[e] == EdgeState::Forward) out.push_back({u, v});
    if (state[e] == EdgeState::Backward) out.push_back({v, u});
  }
  return out;
}

namespace {

bool directed_acyclic(std::size_t n, std::span<const Arc> arcs) {
  std::vector<std::vector<Vertex>> out(n);
  std::vector<std::size_t> indegree(n, 0);
  for (const auto& a : arcs) {
    out[a.from].push_back(a.to);
    ++indegree[a.to];
  }
  std::vector<Vertex> ready;
  for (Vertex v = 0; v < n; ++v) {
    if (indegree[v] == 0) ready.push_back(v);
  }
  std::size_t seen = 0;
  while (!ready.empty()) {
    const Vertex v = ready.back();
    ready.pop_back();
    ++seen;
    for (Vertex u : out[v]) {
      if (--indegree[u] == 0) ready.push_back(u);
    }
  }
  return seen == n;
}

}  // namespace

bool is_acyclic(const Graph& skeleton, const Dag& dag) {
  const auto arcs = dag.arcs(skeleton);
  return directed_acyclic(skeleton.size(), arcs);
}

bool has_immorality(const Graph& skeleton, const Dag& dag) {
  std::vector<std::vector<Vertex>> parents(skeleton.size());
  for (const auto& a : dag.arcs(skeleton)) parents[a.to].push_back(a.from);
  for (const auto& ps : parents) {
    for (std::size_t i = 0; i < ps.size(); ++i) {
      for (std::size_t j = i + 1; j < ps.size(); ++j) {
        if (!skeleton.adjacent(ps[i], ps[j])) return true;
      }
    }
  }
  return false;
}

Dag orient_by_order(const Graph& skeleton, std::span<const Vertex> order) {
  std::vector<std::size_t> pos(skeleton.size());
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
  Dag dag;
  dag.forward.reserve(skeleton.num_edges());
  for (const auto& [u, v] : skeleton.edges()) dag.forward.push_back(pos[u] < pos[v]);
  return dag;
}

std::vector<Dag> enumerate_moral_orientations(const Graph& skeleton) {
  const auto n = skeleton.size();
  if (n > kMaxOracleVertices) {
    throw Error(ErrorKind::TooLarge, "orientation enumeration is limited to " +
                                         std::to_string(kMaxOracleVertices) + " vertices, got " +
                                         std::to_string(n));
  }
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  std::set<Dag> found;
  do {
    auto dag = orient_by_order(skeleton, order);
    if (!has_immorality(skeleton, dag)) found.insert(std::move(dag));
  } while (std::next_permutation(order.begin(), order.end()));
  return {found.begin(), found.end()};
}

Dag random_moral_orientation(const Graph& skeleton, std::uint64_t seed) {
  if (!is_chordal(skeleton)) {
    throw Error(ErrorKind::NotChordal, "moral orientations are sampled for chordal skeletons");
  }
  Rng rng(seed);
  const auto n = skeleton.size();
  if (n <= kMaxOracleVertices) {
    const auto all = enumerate_moral_orientations(skeleton);
    return all[rng.below(all.size())];
  }
  // Maximum cardinality search with uniformly random tie-breaking: every
  // vertex's earlier neighbors form a clique, so parents are never
  // non-adjacent.
  std::vector<std::size_t> label(n, 0);
  std::vector<char> visited(n, 0);
  std::vector<Vertex> order;
  order.reserve(n);
  std::vector<Vertex> candidates;
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = 0;
    candidates.clear();
    for (Vertex v = 0; v < n; ++v) {
      if (visited[v]) continue;
      if (candidates.empty() || label[v] > best) {
        best = label[v];
        candidates.assign(1, v);
      } else if (label[v] == best) {
        candidates.push_back(v);
      }
    }
    const Vertex pick = candidates[rng.below(candidates.size())];
    visited[pick] = 1;
    order.push_back(pick);
    for (Vertex u : skeleton.neighbors(pick)) {
      if (!visited[u]) ++label[u];
    }
  }
  return orient_by_order(skeleton, order);
}

std::vector<Arc> simulate_intervention(const Graph& skeleton, const Dag& dag,
                                       std::span<const Vertex> intervened) {
  std::vector<char> in(skeleton.size(), 0);
  for (Vertex v : intervened) {
    if (v >= skeleton.size()) throw Error(ErrorKind::VertexOutOfRange, std::to_string(v));
    in[v] = 1;
  }
  std::vector<Arc> cut;
  for (std::size_t e = 0; e < skeleton.num_edges(); ++e) {
    const auto& [u, v] = skeleton.edges()[e];
    if (in[u] != in[v]) cut.push_back(dag.arc(skeleton, e));
  }
  return cut;
}

namespace {

class MeekState {
 public:
  explicit MeekState(const Graph& g) : g_(g), n_(g.size()), dir_(n_ * n_, 0) {}

  bool adj(Vertex a, Vertex b) const { return g_.adjacent(a, b); }
  bool directed(Vertex a, Vertex b) const { return dir_[a * n_ + b] != 0; }
  bool undirected(Vertex a, Vertex b) const {
    return adj(a, b) && !directed(a, b) && !directed(b, a);
  }
  void orient(Vertex a, Vertex b) { dir_[a * n_ + b] = 1; }

  bool r1(Vertex a, Vertex b) const {
    for (Vertex c : g_.neighbors(a)) {
      if (c != b && directed(c, a) && !adj(c, b)) return true;
    }
    return false;
  }

  bool r2(Vertex a, Vertex b) const {
    for (Vertex c : g_.neighbors(a)) {
      if (directed(a, c) && adj(c, b) && directed(c, b)) return true;
    }
    return false;
  }

  bool r3(Vertex a, Vertex b) const {
    const auto nb = g_.neighbors(a);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      const Vertex c = nb[i];
      if (c == b || !undirected(a, c) || !adj(c, b) || !directed(c, b)) continue;
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        const Vertex d = nb[j];
        if (d == b || !undirected(a, d) || !adj(d, b) || !directed(d, b)) continue;
        if (!adj(c, d)) return true;
      }
    }
    return false;
  }

  bool r4(Vertex a, Vertex b) const {
    for (Vertex d : g_.neighbors(a)) {
      if (d == b || !undirected(a, d) || adj(b, d)) continue;
      for (Vertex c : g_.neighbors(d)) {
        if (c != a && c != b && directed(d, c) && adj(a, c) && adj(c, b) && directed(c, b)) {
          return true;
        }
      }
    }
    return false;
  }

  bool implied(Vertex a, Vertex b, RuleOrder order) const {
    if (order == RuleOrder::Forward) return r1(a, b) || r2(a, b) || r3(a, b) || r4(a, b);
    return r4(a, b) || r3(a, b) || r2(a, b) || r1(a, b);
  }

 private:
  const Graph& g_;
  std::size_t n_;
  std::vector<char> dir_;
};

}  // namespace

Pdag meek_closure(const Graph& skeleton, std::span<const Arc> evidence, RuleOrder order) {
  MeekState state(skeleton);
  for (const auto& a : evidence) {
    if (a.from >= skeleton.size() || a.to >= skeleton.size() || !skeleton.adjacent(a.from, a.to)) {
      throw Error(ErrorKind::InconsistentEvidence, "arc " + std::to_string(a.from) + "->" +
                                                       std::to_string(a.to) +
                                                       " is not a skeleton edge");
    }
    if (state.directed(a.to, a.from)) {
      throw Error(ErrorKind::InconsistentEvidence, "edge (" + std::to_string(a.from) + "," +
                                                       std::to_string(a.to) +
                                                       ") given in both directions");
    }
    state.orient(a.from, a.to);
  }

  const auto& edges = skeleton.edges();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k < edges.size(); ++k) {
      const std::size_t e = order == RuleOrder::Forward ? k : edges.size() - 1 - k;
      const auto [u, v] = edges[e];
      if (!state.undirected(u, v)) continue;
      if (state.implied(u, v, order)) {
        state.orient(u, v);
        changed = true;
      } else if (state.implied(v, u, order)) {
        state.orient(v, u);
        changed = true;
      }
    }
  }

  Pdag pdag;
  pdag.state.reserve(edges.size());
  for (const auto& [u, v] : edges) {
    if (state.directed(u, v)) {
      pdag.state.push_back(EdgeState::Forward);
    } else if (state.directed(v, u)) {
      pdag.state.push_back(EdgeState::Backward);
    } else {
      pdag.state.push_back(EdgeState::Undirected);
    }
  }
  const auto arcs = pdag.arcs(skeleton);
  if (!directed_acyclic(skeleton.size(), arcs)) {
    throw Error(ErrorKind::InconsistentEvidence, "oriented edges contain a directed cycle");
  }
  return pdag;
}

LearnReport design_learns_all(const Graph& skeleton, const Design& design) {
  if (design.num_vertices() != skeleton.size()) {
    throw Error(ErrorKind::VertexOutOfRange, "design does not match the skeleton's vertex count");
  }
  LearnReport report;
  for (const auto& dag : enumerate_moral_orientations(skeleton)) {
    ++report.orientations_checked;
    std::set<Arc> evidence;
    for (const auto& set : design.interventions()) {
      for (const auto& a : simulate_intervention(skeleton, dag, set)) evidence.insert(a);
    }
    const std::vector<Arc> pooled(evidence.begin(), evidence.end());
    const auto pdag = meek_closure(skeleton, pooled);
    for (std::size_t e = 0; e < pdag.state.size(); ++e) {
      if (pdag.state[e] == EdgeState::Undirected) {
        report.learns_all = false;
        report.failing_dag = dag;
        report.unlearned_edge = skeleton.edges()[e];
        return report;
      }
    }
  }
  return report;
}

}  // namespace sepdesign
