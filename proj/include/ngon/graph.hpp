#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ngon/vertex_set.hpp"

namespace ngon {

using VertexId = std::int64_t;

/// Distance/girth/diameter value standing for "no path" or "no cycle".
inline constexpr int kInfinite = std::numeric_limits<int>::max();

struct VertexDecl {
  VertexId id;
  int part;  // 0 or 1
};

/// Finite simple bipartite graph with an explicit part label on every vertex
/// and a gonality parameter n ≥ 3.
///
/// Vertices are stored in increasing id order; the position in that order is
/// the dense vertex index used by VertexSet and by every algorithm. The
/// object is immutable after construction.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;

  /// Throws std::invalid_argument on duplicate ids, bad part labels,
  /// loops, repeated edges, unknown endpoints or same-part edges.
  BipartiteGraph(int n, std::vector<VertexDecl> vertices,
                 std::vector<std::pair<VertexId, VertexId>> edges);

  int n() const { return n_; }
  std::size_t vertex_count() const { return ids_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  VertexId id(int v) const { return ids_[static_cast<std::size_t>(v)]; }
  int part(int v) const { return parts_[static_cast<std::size_t>(v)]; }
  std::optional<int> index_of(VertexId id) const;
  /// Throws std::out_of_range for an unknown id.
  int index(VertexId id) const;

  std::span<const int> neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  std::size_t degree(int v) const { return adj_[static_cast<std::size_t>(v)].size(); }
  const VertexSet& neighbor_set(int v) const { return adj_set_[static_cast<std::size_t>(v)]; }
  bool adjacent(int u, int v) const { return adj_set_[static_cast<std::size_t>(u)].contains(v); }

  /// Edges as index pairs (u < v), sorted.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<VertexId>& ids() const { return ids_; }

  VertexSet empty_set() const { return VertexSet(vertex_count()); }
  VertexSet all() const { return VertexSet::full(vertex_count()); }
  /// Throws std::out_of_range for an unknown id.
  VertexSet subset(std::span<const VertexId> ids) const;
  std::vector<VertexId> ids_of(const VertexSet& s) const;

  /// e(S): edges with both ends in S.
  std::size_t edges_within(const VertexSet& s) const;
  /// e(S,T) for disjoint S, T.
  std::size_t edges_between(const VertexSet& s, const VertexSet& t) const;

  std::vector<VertexDecl> vertex_decls() const;
  std::vector<std::pair<VertexId, VertexId>> edge_ids() const;

  /// Subgraph induced on s, keeping ids and n.
  BipartiteGraph induced(const VertexSet& s) const;

  VertexId max_id() const { return ids_.empty() ? -1 : ids_.back(); }

  friend bool operator==(const BipartiteGraph& a, const BipartiteGraph& b) {
    return a.n_ == b.n_ && a.ids_ == b.ids_ && a.parts_ == b.parts_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 3;
  std::vector<VertexId> ids_;
  std::vector<int> parts_;
  std::vector<std::vector<int>> adj_;
  std::vector<VertexSet> adj_set_;
  std::vector<std::pair<int, int>> edges_;
};

/// BFS distances from one vertex (kInfinite for unreachable vertices).
std::vector<int> distances_from(const BipartiteGraph& g, int source);
/// All-pairs distance matrix, row-major.
std::vector<std::vector<int>> distance_matrix(const BipartiteGraph& g);

/// Shortest-path length between two ids; kInfinite if disconnected.
/// Throws std::out_of_range for unknown ids.
int distance(const BipartiteGraph& g, VertexId u, VertexId v);

int girth(const BipartiteGraph& g);
/// kInfinite for a disconnected graph; 0 for graphs with ≤ 1 vertex.
int diameter(const BipartiteGraph& g);

struct NgonReport {
  bool holds = false;
  /// Empty when holds; otherwise names the first failing vertex or pair.
  std::string reason;
  std::vector<VertexId> witness;
};

NgonReport is_generalized_ngon(const BipartiteGraph& g, bool thick);

/// Cycle as a vertex index sequence x_0 … x_{L-1} (closing edge implicit).
using Cycle = std::vector<int>;

/// All simple cycles of the given length, once each up to rotation and
/// reflection. Each cycle starts at its smallest index and its second vertex
/// is smaller than its last.
std::vector<Cycle> enumerate_cycles(const BipartiteGraph& g, int length);

/// All simple cycles of the given length as ordered sequences starting at a
/// vertex of part start_part, in both directions.
std::vector<Cycle> enumerate_ordered_cycles(const BipartiteGraph& g, int length, int start_part);

/// All simple paths with the given number of edges, as ordered sequences.
std::vector<std::vector<int>> enumerate_paths(const BipartiteGraph& g, int length);

}  // namespace ngon
