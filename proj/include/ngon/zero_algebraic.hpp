#pragma once

#include <optional>
#include <vector>

#include "ngon/graph.hpp"

namespace ngon {

enum class PairKind { algebraic, minimally_algebraic };

/// A body B over a base A with δ(B/A) = 0 and every proper nonempty part of
/// B strictly positive over A.
struct ZeroAlgebraicPair {
  VertexSet base;
  VertexSet body;
  PairKind kind = PairKind::minimally_algebraic;

  friend bool operator==(const ZeroAlgebraicPair&, const ZeroAlgebraicPair&) = default;
};

/// Throws std::invalid_argument if base and body intersect. An empty body
/// is never 0-algebraic.
bool is_zero_algebraic(const BipartiteGraph& g, const VertexSet& base, const VertexSet& body);

/// {a ∈ base : e(a, body) ≥ 1}. Throws std::invalid_argument unless body is
/// 0-algebraic over base.
VertexSet minimal_base(const BipartiteGraph& g, const VertexSet& base, const VertexSet& body);

bool is_zero_minimally_algebraic(const BipartiteGraph& g, const VertexSet& base, const VertexSet& body);

/// |B|(n-1) = (n-2)(e(B) + e(B,A)).
bool degree_identity_check(const BipartiteGraph& g, const ZeroAlgebraicPair& pair);

/// Default body-size horizon: 4·ℓ_max·(n-2) with ℓ_max = 3.
std::size_t default_body_cap(int n);

struct PairEnumeration {
  std::vector<ZeroAlgebraicPair> pairs;  // sorted by (body, base)
  std::size_t body_cap = 0;
};

/// Every (A, B) inside g with B nonempty, connected, |B| ≤ body_cap and B
/// 0-minimally algebraic over A.
///
/// When focus is given, only pairs whose body meets focus are returned.
PairEnumeration enumerate_zero_min_pairs(const BipartiteGraph& g, std::optional<std::size_t> body_cap = {},
                                         const std::optional<VertexSet>& focus = {});

/// Calls visit(body) for every connected vertex set inside allowed with at
/// most max_size vertices, each exactly once. When focus is given, only sets
/// meeting focus are visited.
template <class Visit>
void for_each_connected_set(const BipartiteGraph& g, const VertexSet& allowed, std::size_t max_size,
                            const std::optional<VertexSet>& focus, Visit&& visit);

}  // namespace ngon

#include "ngon/detail/connected_sets.hpp"
