#include "ngon/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>

namespace ngon {

BipartiteGraph::BipartiteGraph(int n, std::vector<VertexDecl> vertices,
                               std::vector<std::pair<VertexId, VertexId>> edges)
    : n_(n) {
  if (n < 3) throw std::invalid_argument("gonality n must be at least 3");
  std::sort(vertices.begin(), vertices.end(),
            [](const VertexDecl& a, const VertexDecl& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (i > 0 && vertices[i].id == vertices[i - 1].id)
      throw std::invalid_argument("duplicate vertex id " + std::to_string(vertices[i].id));
    if (vertices[i].part != 0 && vertices[i].part != 1)
      throw std::invalid_argument("vertex " + std::to_string(vertices[i].id) + " has part outside {0,1}");
    ids_.push_back(vertices[i].id);
    parts_.push_back(vertices[i].part);
  }
  const std::size_t count = ids_.size();
  adj_.assign(count, {});
  adj_set_.assign(count, VertexSet(count));
  for (auto [a, b] : edges) {
    auto ia = index_of(a);
    auto ib = index_of(b);
    if (!ia || !ib)
      throw std::invalid_argument("edge " + std::to_string(a) + " " + std::to_string(b) +
                                  " references an unknown vertex");
    if (*ia == *ib) throw std::invalid_argument("loop at vertex " + std::to_string(a));
    if (parts_[static_cast<std::size_t>(*ia)] == parts_[static_cast<std::size_t>(*ib)])
      throw std::invalid_argument("edge " + std::to_string(a) + " " + std::to_string(b) +
                                  " joins two vertices of the same part");
    if (adj_set_[static_cast<std::size_t>(*ia)].contains(*ib))
      throw std::invalid_argument("duplicate edge " + std::to_string(a) + " " + std::to_string(b));
    adj_set_[static_cast<std::size_t>(*ia)].insert(*ib);
    adj_set_[static_cast<std::size_t>(*ib)].insert(*ia);
    edges_.emplace_back(std::min(*ia, *ib), std::max(*ia, *ib));
  }
  std::sort(edges_.begin(), edges_.end());
  for (std::size_t v = 0; v < count; ++v) adj_[v] = adj_set_[v].members();
}

std::optional<int> BipartiteGraph::index_of(VertexId id) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it == ids_.end() || *it != id) return std::nullopt;
  return static_cast<int>(it - ids_.begin());
}

int BipartiteGraph::index(VertexId id) const {
  auto i = index_of(id);
  if (!i) throw std::out_of_range("unknown vertex id " + std::to_string(id));
  return *i;
}

VertexSet BipartiteGraph::subset(std::span<const VertexId> ids) const {
  VertexSet s(vertex_count());
  for (VertexId id : ids) s.insert(index(id));
  return s;
}

std::vector<VertexId> BipartiteGraph::ids_of(const VertexSet& s) const {
  std::vector<VertexId> out;
  s.for_each([&](int v) { out.push_back(id(v)); });
  return out;
}

std::size_t BipartiteGraph::edges_within(const VertexSet& s) const {
  std::size_t twice = 0;
  s.for_each([&](int v) { twice += adj_set_[static_cast<std::size_t>(v)].intersection_size(s); });
  return twice / 2;
}

std::size_t BipartiteGraph::edges_between(const VertexSet& s, const VertexSet& t) const {
  std::size_t c = 0;
  s.for_each([&](int v) { c += adj_set_[static_cast<std::size_t>(v)].intersection_size(t); });
  return c;
}

std::vector<VertexDecl> BipartiteGraph::vertex_decls() const {
  std::vector<VertexDecl> out;
  for (std::size_t i = 0; i < ids_.size(); ++i) out.push_back({ids_[i], parts_[i]});
  return out;
}

std::vector<std::pair<VertexId, VertexId>> BipartiteGraph::edge_ids() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (auto [u, v] : edges_) out.emplace_back(id(u), id(v));
  return out;
}

BipartiteGraph BipartiteGraph::induced(const VertexSet& s) const {
  std::vector<VertexDecl> vs;
  s.for_each([&](int v) { vs.push_back({id(v), part(v)}); });
  std::vector<std::pair<VertexId, VertexId>> es;
  for (auto [u, v] : edges_)
    if (s.contains(u) && s.contains(v)) es.emplace_back(id(u), id(v));
  return BipartiteGraph(n_, std::move(vs), std::move(es));
}

std::vector<int> distances_from(const BipartiteGraph& g, int source) {
  std::vector<int> dist(g.vertex_count(), kInfinite);
  std::deque<int> queue{source};
  dist[static_cast<std::size_t>(source)] = 0;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int w : g.neighbors(u)) {
      if (dist[static_cast<std::size_t>(w)] == kInfinite) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::vector<std::vector<int>> distance_matrix(const BipartiteGraph& g) {
  std::vector<std::vector<int>> m;
  m.reserve(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) m.push_back(distances_from(g, static_cast<int>(v)));
  return m;
}

int distance(const BipartiteGraph& g, VertexId u, VertexId v) {
  int iu = g.index(u);
  int iv = g.index(v);
  return distances_from(g, iu)[static_cast<std::size_t>(iv)];
}

namespace {

// Length of the shortest cycle through the BFS tree rooted at root.
int shortest_cycle_from(const BipartiteGraph& g, int root) {
  std::vector<int> dist(g.vertex_count(), kInfinite);
  std::vector<int> parent(g.vertex_count(), -1);
  std::deque<int> queue{root};
  dist[static_cast<std::size_t>(root)] = 0;
  int best = kInfinite;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int w : g.neighbors(u)) {
      auto wi = static_cast<std::size_t>(w);
      if (dist[wi] == kInfinite) {
        dist[wi] = dist[static_cast<std::size_t>(u)] + 1;
        parent[wi] = u;
        queue.push_back(w);
      } else if (parent[static_cast<std::size_t>(u)] != w) {
        best = std::min(best, dist[static_cast<std::size_t>(u)] + dist[wi] + 1);
      }
    }
  }
  return best;
}

}  // namespace

int girth(const BipartiteGraph& g) {
  int best = kInfinite;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    best = std::min(best, shortest_cycle_from(g, static_cast<int>(v)));
  return best;
}

int diameter(const BipartiteGraph& g) {
  int best = 0;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    for (int d : distances_from(g, static_cast<int>(v))) best = std::max(best, d);
  return best;
}

NgonReport is_generalized_ngon(const BipartiteGraph& g, bool thick) {
  const int n = g.n();
  NgonReport report;
  auto fail = [&](std::string reason, std::vector<VertexId> witness) {
    report.holds = false;
    report.reason = std::move(reason);
    report.witness = std::move(witness);
    return report;
  };
  if (g.vertex_count() == 0) return fail("empty graph", {});

  int diam = 0;
  for (std::size_t u = 0; u < g.vertex_count(); ++u) {
    auto dist = distances_from(g, static_cast<int>(u));
    for (std::size_t v = 0; v < dist.size(); ++v) {
      if (dist[v] > n) {
        std::ostringstream os;
        os << "distance ";
        if (dist[v] == kInfinite) os << "infinite"; else os << dist[v];
        os << " exceeds n=" << n;
        return fail(os.str(), {g.id(static_cast<int>(u)), g.id(static_cast<int>(v))});
      }
      diam = std::max(diam, dist[v]);
    }
  }
  int best = kInfinite;
  int best_root = -1;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    int c = shortest_cycle_from(g, static_cast<int>(v));
    if (c < best) {
      best = c;
      best_root = static_cast<int>(v);
    }
  }
  if (best < 2 * n)
    return fail("cycle of length " + std::to_string(best) + " below 2n=" + std::to_string(2 * n),
                {g.id(best_root)});
  if (diam < n) return fail("diameter " + std::to_string(diam) + " below n=" + std::to_string(n), {});
  if (best > 2 * n)
    return fail(best == kInfinite ? std::string("graph has no cycle")
                                  : "girth " + std::to_string(best) + " exceeds 2n=" + std::to_string(2 * n),
                {});
  if (thick) {
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
      if (g.degree(static_cast<int>(v)) < 3)
        return fail("valency " + std::to_string(g.degree(static_cast<int>(v))) + " below 3",
                    {g.id(static_cast<int>(v))});
  }
  report.holds = true;
  return report;
}

namespace {

struct CycleSearch {
  const BipartiteGraph& g;
  const std::vector<std::vector<int>>& dist;
  int length;
  int start = 0;
  std::vector<int> path;
  VertexSet on_path;
  std::vector<Cycle> out;

  void extend() {
    int last = path.back();
    int k = static_cast<int>(path.size());
    if (k == length) {
      if (g.adjacent(last, start) && path[1] < path.back()) out.push_back(path);
      return;
    }
    for (int w : g.neighbors(last)) {
      if (w <= start || on_path.contains(w)) continue;
      // w becomes vertex k+1 of length; it must still be able to close up.
      if (dist[static_cast<std::size_t>(w)][static_cast<std::size_t>(start)] > length - k) continue;
      path.push_back(w);
      on_path.insert(w);
      extend();
      on_path.erase(w);
      path.pop_back();
    }
  }
};

}  // namespace

std::vector<Cycle> enumerate_cycles(const BipartiteGraph& g, int length) {
  if (length < 3 || length % 2 != 0) return {};
  auto dist = distance_matrix(g);
  CycleSearch search{g, dist, length, 0, {}, VertexSet(g.vertex_count()), {}};
  for (std::size_t s = 0; s < g.vertex_count(); ++s) {
    search.start = static_cast<int>(s);
    search.path = {search.start};
    search.on_path = VertexSet(g.vertex_count(), {search.start});
    search.extend();
  }
  std::sort(search.out.begin(), search.out.end());
  return search.out;
}

std::vector<Cycle> enumerate_ordered_cycles(const BipartiteGraph& g, int length, int start_part) {
  std::vector<Cycle> out;
  for (const Cycle& c : enumerate_cycles(g, length)) {
    const std::size_t len = c.size();
    for (std::size_t r = 0; r < len; ++r) {
      if (g.part(c[r]) != start_part) continue;
      Cycle fwd(len), bwd(len);
      for (std::size_t i = 0; i < len; ++i) {
        fwd[i] = c[(r + i) % len];
        bwd[i] = c[(r + len - i) % len];
      }
      out.push_back(std::move(fwd));
      out.push_back(std::move(bwd));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> enumerate_paths(const BipartiteGraph& g, int length) {
  std::vector<std::vector<int>> out;
  std::vector<int> path;
  VertexSet on_path(g.vertex_count());
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(path.size()) == length + 1) {
      out.push_back(path);
      return;
    }
    for (int w : g.neighbors(path.back())) {
      if (on_path.contains(w)) continue;
      path.push_back(w);
      on_path.insert(w);
      self(self);
      on_path.erase(w);
      path.pop_back();
    }
  };
  for (std::size_t s = 0; s < g.vertex_count(); ++s) {
    path = {static_cast<int>(s)};
    on_path = VertexSet(g.vertex_count(), {static_cast<int>(s)});
    rec(rec);
  }
  return out;
}

}  // namespace ngon
