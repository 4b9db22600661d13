#include "ngon/predimension.hpp"

#include <stdexcept>

#include "max_flow.hpp"

namespace ngon {

long delta(const BipartiteGraph& g, const VertexSet& a) {
  const long n = g.n();
  return (n - 1) * static_cast<long>(a.size()) - (n - 2) * static_cast<long>(g.edges_within(a));
}

long delta_rel(const BipartiteGraph& g, const VertexSet& a, const VertexSet& b) {
  return delta(g, a | b) - delta(g, b);
}

// δ(F ∪ X) = δ(F) + (n-1)|X| - (n-2)(e(X) + e(X,F)) for X ⊆ U \ F.
// Minimizing it is a max-weight closure problem: every edge inside X earns
// n-2 and needs both endpoints; every vertex x earns (n-2)deg_F(x) - (n-1).
SupersetMinimum min_delta_superset(const BipartiteGraph& g, const VertexSet& core,
                                   const VertexSet& universe) {
  if (!core.is_subset_of(universe)) throw std::invalid_argument("core must lie inside the universe");
  const long n = g.n();
  const VertexSet free = universe - core;
  const auto free_vertices = free.members();
  std::vector<int> node_of(g.vertex_count(), -1);
  for (std::size_t i = 0; i < free_vertices.size(); ++i)
    node_of[static_cast<std::size_t>(free_vertices[i])] = static_cast<int>(i);

  std::vector<std::pair<int, int>> inner_edges;
  for (auto [u, v] : g.edges())
    if (free.contains(u) && free.contains(v)) inner_edges.emplace_back(u, v);

  const int vertex_nodes = static_cast<int>(free_vertices.size());
  const int source = vertex_nodes + static_cast<int>(inner_edges.size());
  const int sink = source + 1;
  detail::MaxFlow flow(sink + 1);

  std::int64_t positive = 0;
  for (int i = 0; i < vertex_nodes; ++i) {
    int v = free_vertices[static_cast<std::size_t>(i)];
    const std::int64_t gain =
        (n - 2) * static_cast<std::int64_t>(g.neighbor_set(v).intersection_size(core)) - (n - 1);
    if (gain > 0) {
      flow.add_edge(source, i, gain);
      positive += gain;
    } else if (gain < 0) {
      flow.add_edge(i, sink, -gain);
    }
  }
  for (std::size_t k = 0; k < inner_edges.size(); ++k) {
    const int node = vertex_nodes + static_cast<int>(k);
    flow.add_edge(source, node, n - 2);
    positive += n - 2;
    flow.add_edge(node, node_of[static_cast<std::size_t>(inner_edges[k].first)], detail::MaxFlow::kUnbounded);
    flow.add_edge(node, node_of[static_cast<std::size_t>(inner_edges[k].second)], detail::MaxFlow::kUnbounded);
  }
  const std::int64_t cut = flow.run(source, sink);
  const auto side = flow.source_side(source);

  SupersetMinimum result{delta(g, core) - static_cast<long>(positive - cut), core};
  for (int i = 0; i < vertex_nodes; ++i)
    if (side[static_cast<std::size_t>(i)]) result.minimizer.insert(free_vertices[static_cast<std::size_t>(i)]);
  return result;
}

StrongCheck is_strong(const BipartiteGraph& g, const VertexSet& a, const VertexSet& b) {
  if (!a.is_subset_of(b)) throw std::invalid_argument("is_strong requires A ⊆ B");
  StrongCheck check;
  check.delta = delta(g, a);
  auto best = min_delta_superset(g, a, b);
  check.min_delta = best.value;
  check.strong = best.value >= check.delta;
  if (!check.strong) check.witness = std::move(best.minimizer);
  return check;
}

StrongCheck is_strong(const BipartiteGraph& g, const VertexSet& a) { return is_strong(g, a, g.all()); }

long d_min(const BipartiteGraph& g, const VertexSet& a) { return min_delta_superset(g, a, g.all()).value; }

long d_rel(const BipartiteGraph& g, const VertexSet& b, const VertexSet& a) {
  return d_min(g, a | b) - d_min(g, a);
}

// Repair loop: while A is not strong, replace it by its least-δ,
// inclusion-smallest violator. That violator is already strong, so the loop
// runs at most once; it is kept in this form to mirror the definition.
VertexSet closure(const BipartiteGraph& g, const VertexSet& a) {
  VertexSet current = a;
  for (;;) {
    auto check = is_strong(g, current);
    if (check.strong) return current;
    current = std::move(*check.witness);
  }
}

VertexSet acl_relative(const BipartiteGraph& g, const VertexSet& a) {
  const long base = d_min(g, a);
  VertexSet out = a;
  for (std::size_t x = 0; x < g.vertex_count(); ++x) {
    const int v = static_cast<int>(x);
    if (a.contains(v)) continue;
    if (d_min(g, a.with(v)) == base) out.insert(v);
  }
  return out;
}

}  // namespace ngon
