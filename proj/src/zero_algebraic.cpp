#include "ngon/zero_algebraic.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "ngon/predimension.hpp"

namespace ngon {

namespace {

void require_disjoint(const VertexSet& base, const VertexSet& body) {
  if (base.intersects(body)) throw std::invalid_argument("base and body must be disjoint");
}

// min over proper nonempty X ⊂ body of δ(X/base). Every such X either holds
// the first body vertex and misses some other v, or misses it and holds v.
long min_proper_relative_delta(const BipartiteGraph& g, const VertexSet& base, const VertexSet& body) {
  const long base_delta = delta(g, base);
  const VertexSet whole = base | body;
  const int pivot = body.first();
  long best = std::numeric_limits<long>::max();
  body.for_each([&](int v) {
    if (v == pivot) return;
    auto with_pivot = min_delta_superset(g, base.with(pivot), whole.without(v));
    auto without_pivot = min_delta_superset(g, base.with(v), whole.without(pivot));
    best = std::min({best, with_pivot.value - base_delta, without_pivot.value - base_delta});
  });
  return best;
}

}  // namespace

bool is_zero_algebraic(const BipartiteGraph& g, const VertexSet& base, const VertexSet& body) {
  require_disjoint(base, body);
  if (body.empty()) return false;
  if (delta_rel(g, body, base) != 0) return false;
  if (body.size() == 1) return true;
  return min_proper_relative_delta(g, base, body) > 0;
}

VertexSet minimal_base(const BipartiteGraph& g, const VertexSet& base, const VertexSet& body) {
  if (!is_zero_algebraic(g, base, body))
    throw std::invalid_argument("minimal_base requires a 0-algebraic body");
  VertexSet out = g.empty_set();
  base.for_each([&](int a) {
    if (g.neighbor_set(a).intersects(body)) out.insert(a);
  });
  return out;
}

bool is_zero_minimally_algebraic(const BipartiteGraph& g, const VertexSet& base, const VertexSet& body) {
  if (!is_zero_algebraic(g, base, body)) return false;
  bool every_base_vertex_attached = true;
  base.for_each([&](int a) {
    if (!g.neighbor_set(a).intersects(body)) every_base_vertex_attached = false;
  });
  return every_base_vertex_attached;
}

bool degree_identity_check(const BipartiteGraph& g, const ZeroAlgebraicPair& pair) {
  const long n = g.n();
  const long lhs = static_cast<long>(pair.body.size()) * (n - 1);
  const long rhs = (n - 2) * static_cast<long>(g.edges_within(pair.body) + g.edges_between(pair.body, pair.base));
  return lhs == rhs;
}

std::size_t default_body_cap(int n) { return 4 * 3 * static_cast<std::size_t>(n - 2); }

namespace {

// Vertices that may sit in a body of two or more vertices. Removing b from
// a 0-algebraic B leaves δ(B∖b / A) = (n-2)deg_{AB}(b) - (n-1), which must be
// positive, and a singleton {b} forces deg_A(b) ≤ 1. For n = 3 this means
// deg_B(b) ≥ 2, so B lies in the 2-core of the degree-≥3 vertices.
VertexSet multi_body_candidates(const BipartiteGraph& g) {
  VertexSet allowed = g.empty_set();
  const std::size_t min_degree = g.n() == 3 ? 3 : 2;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (g.degree(static_cast<int>(v)) >= min_degree) allowed.insert(static_cast<int>(v));
  if (g.n() != 3) return allowed;
  for (bool changed = true; changed;) {
    changed = false;
    const VertexSet snapshot = allowed;
    snapshot.for_each([&](int v) {
      if (g.neighbor_set(v).intersection_size(allowed) < 2) {
        allowed.erase(v);
        changed = true;
      }
    });
  }
  return allowed;
}

// Chooses base vertices among the body's outside neighbours so that
// e(A, body) hits the target. For multi-vertex bodies every body vertex takes
// at most one base edge, and vertices with too few body neighbours must take
// exactly one.
struct BaseSelector {
  const BipartiteGraph& g;
  const VertexSet& body;
  std::vector<int> boundary;
  std::vector<std::size_t> weight;  // e(a, body)
  bool single;
  std::vector<int> taken;           // A-degree of each body vertex
  VertexSet chosen;
  std::vector<VertexSet> out;
  VertexSet must_cover;
  std::vector<std::size_t> last_cover;   // last boundary position adjacent to b
  std::vector<std::size_t> suffix_weight;
  std::size_t uncovered_required = 0;
  bool impossible = false;

  void prepare() {
    const long n = g.n();
    suffix_weight.assign(boundary.size() + 1, 0);
    for (std::size_t i = boundary.size(); i-- > 0;) suffix_weight[i] = suffix_weight[i + 1] + weight[i];
    must_cover = g.empty_set();
    if (single) return;
    last_cover.assign(g.vertex_count(), 0);
    for (std::size_t i = 0; i < boundary.size(); ++i)
      (g.neighbor_set(boundary[i]) & body).for_each([&](int b) { last_cover[static_cast<std::size_t>(b)] = i; });
    body.for_each([&](int b) {
      const long inner = static_cast<long>(g.neighbor_set(b).intersection_size(body));
      if ((n - 2) * inner <= n - 1) must_cover.insert(b);
      if ((n - 2) * (inner + 1) <= n - 1) impossible = true;
    });
    uncovered_required = must_cover.size();
  }

  void run(std::size_t idx, long remaining) {
    if (impossible) return;
    if (remaining == 0) {
      if (uncovered_required == 0) out.push_back(chosen);
      return;
    }
    if (idx == boundary.size() || remaining < 0) return;
    if (static_cast<long>(suffix_weight[idx]) < remaining) return;
    if (static_cast<long>(uncovered_required) > remaining) return;
    const int a = boundary[idx];
    if (static_cast<long>(weight[idx]) <= remaining && can_take(a)) {
      mark(a, +1);
      chosen.insert(a);
      run(idx + 1, remaining - static_cast<long>(weight[idx]));
      chosen.erase(a);
      mark(a, -1);
    }
    if (can_skip(idx)) run(idx + 1, remaining);
  }

  bool can_take(int a) const {
    if (single) return true;
    bool ok = true;
    (g.neighbor_set(a) & body).for_each([&](int b) {
      if (taken[static_cast<std::size_t>(b)] > 0) ok = false;
    });
    return ok;
  }
  // Skipping is fatal if a was the last chance to cover a required vertex.
  bool can_skip(std::size_t idx) const {
    if (single) return true;
    bool ok = true;
    (g.neighbor_set(boundary[idx]) & must_cover).for_each([&](int b) {
      if (taken[static_cast<std::size_t>(b)] == 0 && last_cover[static_cast<std::size_t>(b)] == idx) ok = false;
    });
    return ok;
  }
  void mark(int a, int by) {
    (g.neighbor_set(a) & body).for_each([&](int b) {
      if (must_cover.contains(b)) {
        if (by > 0 && taken[static_cast<std::size_t>(b)] == 0) --uncovered_required;
        if (by < 0 && taken[static_cast<std::size_t>(b)] == 1) ++uncovered_required;
      }
      taken[static_cast<std::size_t>(b)] += by;
    });
  }
};

void collect_pairs_for_body(const BipartiteGraph& g, const VertexSet& body, std::vector<ZeroAlgebraicPair>& out) {
  const long n = g.n();
  const long body_delta = delta(g, body);
  if (body_delta < 0 || body_delta % (n - 2) != 0) return;
  const long attachments = body_delta / (n - 2);

  VertexSet outside = g.empty_set();
  body.for_each([&](int b) { outside |= g.neighbor_set(b); });
  outside -= body;

  BaseSelector sel{g, body, {}, {}, body.size() == 1, std::vector<int>(g.vertex_count(), 0), g.empty_set(), {},
                   g.empty_set(), {}, {}, 0};
  outside.for_each([&](int a) {
    sel.boundary.push_back(a);
    sel.weight.push_back(g.neighbor_set(a).intersection_size(body));
  });
  sel.prepare();
  sel.run(0, attachments);
  for (auto& base : sel.out) {
    if (is_zero_algebraic(g, base, body))
      out.push_back({std::move(base), body, PairKind::minimally_algebraic});
  }
}

}  // namespace

PairEnumeration enumerate_zero_min_pairs(const BipartiteGraph& g, std::optional<std::size_t> body_cap,
                                         const std::optional<VertexSet>& focus) {
  PairEnumeration result;
  result.body_cap = body_cap.value_or(default_body_cap(g.n()));
  if (result.body_cap == 0) return result;

  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const int b = static_cast<int>(v);
    if (focus && !focus->contains(b)) continue;
    collect_pairs_for_body(g, VertexSet(g.vertex_count(), {b}), result.pairs);
  }
  const VertexSet allowed = multi_body_candidates(g);
  for_each_connected_set(g, allowed, result.body_cap, focus, [&](const VertexSet& body) {
    if (body.size() < 2) return;
    collect_pairs_for_body(g, body, result.pairs);
  });

  std::sort(result.pairs.begin(), result.pairs.end(), [](const auto& x, const auto& y) {
    if (auto c = x.body <=> y.body; c != 0) return c < 0;
    return x.base < y.base;
  });
  return result;
}

}  // namespace ngon
