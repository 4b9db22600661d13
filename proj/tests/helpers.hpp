#pragma once

#include <random>
#include <vector>

#include "ngon/graph.hpp"
#include "ngon/graph_io.hpp"
#include "ngon/witnesses.hpp"

namespace testing_helpers {

inline ngon::VertexSet ids(const ngon::BipartiteGraph& g, std::vector<ngon::VertexId> list) {
  return g.subset(list);
}

// Removes the edge {u, v} (ids).
inline ngon::BipartiteGraph without_edge(const ngon::BipartiteGraph& g, ngon::VertexId u, ngon::VertexId v) {
  auto es = g.edge_ids();
  std::erase_if(es, [&](auto e) { return (e.first == u && e.second == v) || (e.first == v && e.second == u); });
  return ngon::BipartiteGraph(g.n(), g.vertex_decls(), es);
}

// Same graph with a different n.
inline ngon::BipartiteGraph with_n(const ngon::BipartiteGraph& g, int n) {
  return ngon::BipartiteGraph(n, g.vertex_decls(), g.edge_ids());
}

inline ngon::BipartiteGraph disjoint_union(const ngon::BipartiteGraph& a, const ngon::BipartiteGraph& b) {
  auto vs = a.vertex_decls();
  auto es = a.edge_ids();
  const ngon::VertexId shift = a.max_id() + 1;
  for (auto v : b.vertex_decls()) vs.push_back({v.id + shift, v.part});
  for (auto [u, v] : b.edge_ids()) es.emplace_back(u + shift, v + shift);
  return ngon::BipartiteGraph(a.n(), vs, es);
}

// Random subset of the vertex indices.
inline ngon::VertexSet random_subset(const ngon::BipartiteGraph& g, std::mt19937_64& rng, double p = 0.5) {
  std::bernoulli_distribution keep(p);
  auto s = g.empty_set();
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (keep(rng)) s.insert(static_cast<int>(v));
  return s;
}

// Grows a connected set from start by adding random neighbours.
inline ngon::VertexSet random_connected_subset(const ngon::BipartiteGraph& g, int start, int size,
                                               std::mt19937_64& rng) {
  auto s = g.empty_set().with(start);
  std::vector<int> members{start};
  for (int k = 1; k < size; ++k) {
    std::vector<int> frontier;
    for (int v : members)
      for (int w : g.neighbors(v))
        if (!s.contains(w)) frontier.push_back(w);
    if (frontier.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, frontier.size() - 1);
    const int w = frontier[pick(rng)];
    s.insert(w);
    members.push_back(w);
  }
  return s;
}

}  // namespace testing_helpers
