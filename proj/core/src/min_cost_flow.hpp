#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <vector>

namespace sepdesign::detail {

// Successive shortest paths with Bellman-Ford. Arc costs may be negative as
// long as the initial network has no negative cycle; sizes here are small
// (a few hundred nodes), so no potentials are kept.
class MinCostFlow {
 public:
  struct Arc {
    std::size_t to;
    long capacity;
    double cost;
    long flow = 0;
  };

  explicit MinCostFlow(std::size_t num_nodes) : out_(num_nodes) {}

  // Returns the id of the forward arc; its reverse is id ^ 1.
  std::size_t add_arc(std::size_t from, std::size_t to, long capacity, double cost) {
    const std::size_t id = arcs_.size();
    arcs_.push_back({to, capacity, cost});
    out_[from].push_back(id);
    arcs_.push_back({from, 0, -cost});
    out_[to].push_back(id + 1);
    return id;
  }

  // Pushes up to `amount` units from source to sink; returns units sent.
  long run(std::size_t source, std::size_t sink, long amount) {
    const std::size_t n = out_.size();
    constexpr double kInf = std::numeric_limits<double>::infinity();
    constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    long sent = 0;
    while (sent < amount) {
      std::vector<double> dist(n, kInf);
      std::vector<std::size_t> via(n, kNone);
      dist[source] = 0.0;
      for (std::size_t round = 0; round + 1 < n; ++round) {
        bool changed = false;
        for (std::size_t u = 0; u < n; ++u) {
          if (dist[u] == kInf) continue;
          for (std::size_t id : out_[u]) {
            const Arc& a = arcs_[id];
            if (a.capacity - a.flow <= 0) continue;
            if (dist[u] + a.cost < dist[a.to]) {
              dist[a.to] = dist[u] + a.cost;
              via[a.to] = id;
              changed = true;
            }
          }
        }
        if (!changed) break;
      }
      if (dist[sink] == kInf) break;

      long push = amount - sent;
      for (std::size_t v = sink; v != source; v = arcs_[via[v] ^ 1].to) {
        const Arc& a = arcs_[via[v]];
        push = std::min(push, a.capacity - a.flow);
      }
      for (std::size_t v = sink; v != source; v = arcs_[via[v] ^ 1].to) {
        arcs_[via[v]].flow += push;
        arcs_[via[v] ^ 1].flow -= push;
      }
      sent += push;
    }
    return sent;
  }

  const Arc& arc(std::size_t id) const { return arcs_[id]; }

 private:
  std::vector<Arc> arcs_;
  std::vector<std::vector<std::size_t>> out_;
};

}  // namespace sepdesign::detail
