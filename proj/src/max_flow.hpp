#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <vector>

namespace ngon::detail {

// Dinic max-flow on a small dense-ish network.
class MaxFlow {
 public:
  static constexpr std::int64_t kUnbounded = std::numeric_limits<std::int64_t>::max() / 4;

  explicit MaxFlow(int nodes) : graph_(static_cast<std::size_t>(nodes)) {}

  void add_edge(int from, int to, std::int64_t cap) {
    graph_[static_cast<std::size_t>(from)].push_back({to, cap, graph_[static_cast<std::size_t>(to)].size()});
    graph_[static_cast<std::size_t>(to)].push_back({from, 0, graph_[static_cast<std::size_t>(from)].size() - 1});
  }

  std::int64_t run(int source, int sink) {
    std::int64_t flow = 0;
    while (build_levels(source, sink)) {
      iter_.assign(graph_.size(), 0);
      while (std::int64_t f = push(source, sink, kUnbounded)) flow += f;
    }
    return flow;
  }

  // After run(): nodes reachable from source in the residual network. This
  // is the source side of the inclusion-minimal minimum cut.
  std::vector<bool> source_side(int source) const {
    std::vector<bool> seen(graph_.size(), false);
    std::deque<int> queue{source};
    seen[static_cast<std::size_t>(source)] = true;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (const auto& e : graph_[static_cast<std::size_t>(u)]) {
        if (e.cap > 0 && !seen[static_cast<std::size_t>(e.to)]) {
          seen[static_cast<std::size_t>(e.to)] = true;
          queue.push_back(e.to);
        }
      }
    }
    return seen;
  }

 private:
  struct Arc {
    int to;
    std::int64_t cap;
    std::size_t rev;
  };

  bool build_levels(int source, int sink) {
    level_.assign(graph_.size(), -1);
    std::deque<int> queue{source};
    level_[static_cast<std::size_t>(source)] = 0;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (const auto& e : graph_[static_cast<std::size_t>(u)]) {
        if (e.cap > 0 && level_[static_cast<std::size_t>(e.to)] < 0) {
          level_[static_cast<std::size_t>(e.to)] = level_[static_cast<std::size_t>(u)] + 1;
          queue.push_back(e.to);
        }
      }
    }
    return level_[static_cast<std::size_t>(sink)] >= 0;
  }

  std::int64_t push(int u, int sink, std::int64_t limit) {
    if (u == sink) return limit;
    auto ui = static_cast<std::size_t>(u);
    for (std::size_t& i = iter_[ui]; i < graph_[ui].size(); ++i) {
      Arc& e = graph_[ui][i];
      if (e.cap <= 0 || level_[static_cast<std::size_t>(e.to)] != level_[ui] + 1) continue;
      if (std::int64_t f = push(e.to, sink, std::min(limit, e.cap))) {
        e.cap -= f;
        graph_[static_cast<std::size_t>(e.to)][e.rev].cap += f;
        return f;
      }
    }
    return 0;
  }

  std::vector<std::vector<Arc>> graph_;
  std::vector<int> level_;
  std::vector<std::size_t> iter_;
};

}  // namespace ngon::detail
