#pragma once

// Implementation of ngon::for_each_connected_set (ESU-style enumeration).

namespace ngon {

namespace detail {

template <class Visit>
struct ConnectedSetWalker {
  const BipartiteGraph& g;
  VertexSet admissible;
  std::size_t max_size;
  Visit& visit;

  // closed is S ∪ N(S), used to keep the extension set exclusive.
  void extend(const VertexSet& s, VertexSet ext, const VertexSet& closed, std::size_t size) {
    visit(s);
    if (size == max_size) return;
    while (!ext.empty()) {
      const int w = ext.first();
      ext.erase(w);
      VertexSet fresh = g.neighbor_set(w) & admissible;
      fresh -= closed;
      extend(s.with(w), ext | fresh, closed | g.neighbor_set(w), size + 1);
    }
  }
};

}  // namespace detail

template <class Visit>
void for_each_connected_set(const BipartiteGraph& g, const VertexSet& allowed, std::size_t max_size,
                            const std::optional<VertexSet>& focus, Visit&& visit) {
  if (max_size == 0) return;
  const VertexSet roots = focus ? (*focus & allowed) : allowed;
  VertexSet admissible = allowed;
  roots.for_each([&](int root) {
    detail::ConnectedSetWalker<Visit> walker{g, admissible, max_size, visit};
    VertexSet start(g.vertex_count(), {root});
    VertexSet closed = g.neighbor_set(root).with(root);
    VertexSet ext = g.neighbor_set(root) & admissible;
    walker.extend(start, ext, closed, 1);
    // Later roots never revisit sets containing this one.
    admissible.erase(root);
  });
}

}  // namespace ngon
