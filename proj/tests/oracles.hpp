#pragma once

// Brute-force reference implementations. They share nothing with the library
// algorithms beyond reading the graph's vertices, parts and edge list, and
// are only meant for graphs of at most ~20 vertices.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <set>
#include <vector>

#include "ngon/graph.hpp"

namespace oracle {

using ngon::BipartiteGraph;
using ngon::VertexSet;
using Mask = std::uint32_t;

inline int popcount(Mask m) { return std::popcount(m); }

inline Mask full_mask(const BipartiteGraph& g) { return g.vertex_count() == 32 ? ~Mask{0} : (Mask{1} << g.vertex_count()) - 1; }

inline Mask to_mask(const VertexSet& s) {
  Mask m = 0;
  for (int v : s.members()) m |= Mask{1} << v;
  return m;
}

inline VertexSet to_set(const BipartiteGraph& g, Mask m) {
  VertexSet s = g.empty_set();
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (m >> v & 1U) s.insert(static_cast<int>(v));
  return s;
}

inline std::vector<Mask> adjacency(const BipartiteGraph& g) {
  std::vector<Mask> adj(g.vertex_count(), 0);
  for (auto [u, v] : g.edges()) {
    adj[static_cast<std::size_t>(u)] |= Mask{1} << v;
    adj[static_cast<std::size_t>(v)] |= Mask{1} << u;
  }
  return adj;
}

inline long edges_in(const BipartiteGraph& g, Mask m) {
  long e = 0;
  for (auto [u, v] : g.edges())
    if ((m >> u & 1U) && (m >> v & 1U)) ++e;
  return e;
}

inline long delta(const BipartiteGraph& g, Mask m) {
  const long n = g.n();
  return (n - 1) * popcount(m) - (n - 2) * edges_in(g, m);
}

// Calls f(x) for every x with core ⊆ x ⊆ universe.
template <class F>
void for_each_between(Mask core, Mask universe, F&& f) {
  const Mask free = universe & ~core;
  for (Mask s = free;; s = (s - 1) & free) {
    f(core | s);
    if (s == 0) break;
  }
}

inline long d_min(const BipartiteGraph& g, Mask a) {
  long best = std::numeric_limits<long>::max();
  for_each_between(a, full_mask(g), [&](Mask x) { best = std::min(best, delta(g, x)); });
  return best;
}

inline bool strong(const BipartiteGraph& g, Mask a, Mask b) {
  const long base = delta(g, a);
  bool ok = true;
  for_each_between(a, b, [&](Mask x) {
    if (delta(g, x) < base) ok = false;
  });
  return ok;
}

// Intersection of all strong supersets, per the definition of cl.
inline Mask closure(const BipartiteGraph& g, Mask a) {
  Mask out = full_mask(g);
  for_each_between(a, full_mask(g), [&](Mask x) {
    if (strong(g, x, full_mask(g))) out &= x;
  });
  return out;
}

inline std::vector<std::vector<int>> floyd(const BipartiteGraph& g) {
  const std::size_t count = g.vertex_count();
  const int inf = ngon::kInfinite;
  std::vector<std::vector<int>> d(count, std::vector<int>(count, inf));
  for (std::size_t v = 0; v < count; ++v) d[v][v] = 0;
  for (auto [u, v] : g.edges()) d[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = d[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = 1;
  for (std::size_t k = 0; k < count; ++k)
    for (std::size_t i = 0; i < count; ++i)
      for (std::size_t j = 0; j < count; ++j)
        if (d[i][k] != inf && d[k][j] != inf) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

// Vertex masks of all simple cycles of the given length, each once.
inline std::set<std::vector<int>> cycles(const BipartiteGraph& g, int length) {
  const auto adj = adjacency(g);
  std::set<std::vector<int>> out;
  std::vector<int> path;
  std::function<void(int)> walk = [&](int v) {
    if (static_cast<int>(path.size()) == length) {
      if (adj[static_cast<std::size_t>(v)] >> path.front() & 1U) {
        // canonical: rotate to the smallest vertex, pick the smaller direction
        auto best = path;
        for (int dir = 0; dir < 2; ++dir) {
          auto seq = path;
          if (dir) std::reverse(seq.begin(), seq.end());
          for (int r = 0; r < length; ++r) {
            std::rotate(seq.begin(), seq.begin() + 1, seq.end());
            best = std::min(best, seq);
          }
        }
        out.insert(best);
      }
      return;
    }
    for (std::size_t w = 0; w < g.vertex_count(); ++w) {
      if (!(adj[static_cast<std::size_t>(v)] >> w & 1U)) continue;
      if (std::find(path.begin(), path.end(), static_cast<int>(w)) != path.end()) continue;
      path.push_back(static_cast<int>(w));
      walk(static_cast<int>(w));
      path.pop_back();
    }
  };
  if (length < 3) return out;
  for (std::size_t s = 0; s < g.vertex_count(); ++s) {
    path = {static_cast<int>(s)};
    walk(static_cast<int>(s));
  }
  return out;
}

inline Mask cycle_mask(const std::vector<int>& c) {
  Mask m = 0;
  for (int v : c) m |= Mask{1} << v;
  return m;
}

inline std::size_t count_automorphisms(const BipartiteGraph& g, bool type_preserving) {
  const std::size_t count = g.vertex_count();
  const auto adj = adjacency(g);
  std::vector<int> image(count, -1);
  std::vector<bool> used(count, false);
  std::size_t total = 0;
  std::function<void(std::size_t)> place = [&](std::size_t v) {
    if (v == count) {
      ++total;
      return;
    }
    for (std::size_t w = 0; w < count; ++w) {
      if (used[w]) continue;
      if (type_preserving && g.part(static_cast<int>(v)) != g.part(static_cast<int>(w))) continue;
      bool ok = true;
      for (std::size_t u = 0; u < v && ok; ++u)
        ok = ((adj[v] >> u) & 1U) == ((adj[w] >> image[u]) & 1U);
      if (!ok) continue;
      image[v] = static_cast<int>(w);
      used[w] = true;
      place(v + 1);
      used[w] = false;
    }
  };
  place(0);
  return total;
}

inline bool zero_algebraic(const BipartiteGraph& g, Mask base, Mask body) {
  if (body == 0 || (base & body)) return false;
  const long base_delta = delta(g, base);
  if (delta(g, base | body) != base_delta) return false;
  for (Mask x = (body - 1) & body; x != 0; x = (x - 1) & body)
    if (delta(g, base | x) - base_delta <= 0) return false;
  return true;
}

inline bool zero_minimally_algebraic(const BipartiteGraph& g, Mask base, Mask body) {
  if (!zero_algebraic(g, base, body)) return false;
  const auto adj = adjacency(g);
  for (std::size_t a = 0; a < g.vertex_count(); ++a)
    if ((base >> a & 1U) && !(adj[a] & body)) return false;
  return true;
}

// All (base, body) pairs, sorted.
inline std::vector<std::pair<Mask, Mask>> zero_min_pairs(const BipartiteGraph& g) {
  const auto adj = adjacency(g);
  std::vector<std::pair<Mask, Mask>> out;
  for (Mask body = 1; body <= full_mask(g) && body != 0; ++body) {
    Mask nbhd = 0;
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
      if (body >> v & 1U) nbhd |= adj[v];
    nbhd &= ~body;
    for_each_between(0, nbhd, [&](Mask base) {
      if (zero_minimally_algebraic(g, base, body)) out.emplace_back(base, body);
    });
    if (body == full_mask(g)) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Copies of body over base: sets B' outside base admitting a part- and
// adjacency-preserving bijection body -> B' that fixes base pointwise.
inline std::size_t count_copies(const BipartiteGraph& g, Mask base, Mask body) {
  const auto adj = adjacency(g);
  std::vector<int> src;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (body >> v & 1U) src.push_back(static_cast<int>(v));
  std::size_t total = 0;
  const Mask outside = full_mask(g) & ~base;
  for (Mask cand = outside;; cand = (cand - 1) & outside) {
    if (popcount(cand) == static_cast<int>(src.size()) && cand != 0) {
      std::vector<int> dst;
      for (std::size_t v = 0; v < g.vertex_count(); ++v)
        if (cand >> v & 1U) dst.push_back(static_cast<int>(v));
      std::sort(dst.begin(), dst.end());
      bool found = false;
      do {
        bool ok = true;
        for (std::size_t i = 0; i < src.size() && ok; ++i) {
          const auto s = static_cast<std::size_t>(src[i]);
          const auto d = static_cast<std::size_t>(dst[i]);
          ok = g.part(src[i]) == g.part(dst[i]) && (adj[s] & base) == (adj[d] & base);
          for (std::size_t j = 0; j < i && ok; ++j)
            ok = ((adj[s] >> src[j]) & 1U) == ((adj[d] >> dst[j]) & 1U);
        }
        found = ok;
      } while (!found && std::next_permutation(dst.begin(), dst.end()));
      if (found) ++total;
    }
    if (cand == 0) break;
  }
  return total;
}

// Path configuration: |A| = 2, and A ∪ B induces a path of length n-1 whose
// endpoints are exactly A.
inline bool path_configuration(const BipartiteGraph& g, Mask base, Mask body) {
  const int n = g.n();
  if (popcount(base) != 2 || popcount(body) != n - 2) return false;
  const Mask all = base | body;
  if (edges_in(g, all) != n - 1) return false;
  const auto adj = adjacency(g);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (!(all >> v & 1U)) continue;
    const int deg = popcount(adj[v] & all);
    if ((base >> v & 1U) ? deg != 1 : deg != 2) return false;
  }
  // n-1 edges on n vertices with these degrees and no cycle is a path; a
  // degree-2 cycle plus isolated endpoints cannot occur since endpoints have
  // degree 1.
  return true;
}

inline long default_mu(const BipartiteGraph& g, Mask base, Mask body) {
  if (path_configuration(g, base, body)) return 1;
  return std::max<long>(delta(g, base), g.n());
}

struct Membership {
  bool short_cycle = false;
  bool long_cycle_low_delta = false;
  bool mu_exceeded = false;
  bool member() const { return !short_cycle && !long_cycle_low_delta && !mu_exceeded; }
};

// Definition-level membership with the default μ; every cycle length and
// body size is covered, so graphs must stay tiny.
inline Membership in_class(const BipartiteGraph& g) {
  const int n = g.n();
  Membership m;
  const int count = static_cast<int>(g.vertex_count());
  for (int k = 2; k < n; ++k)
    if (!cycles(g, 2 * k).empty()) m.short_cycle = true;
  std::vector<Mask> long_cycles;
  for (int k = n + 1; 2 * k <= count; ++k)
    for (const auto& c : cycles(g, 2 * k)) long_cycles.push_back(cycle_mask(c));
  for (Mask x = 0; x <= full_mask(g); ++x) {
    for (Mask c : long_cycles)
      if ((c & x) == c && delta(g, x) < 2L * n + 2) m.long_cycle_low_delta = true;
    if (x == full_mask(g)) break;
  }
  for (auto [base, body] : zero_min_pairs(g))
    if (static_cast<long>(count_copies(g, base, body)) > default_mu(g, base, body)) m.mu_exceeded = true;
  return m;
}

// Random bipartite graph on `count` vertices with random parts.
inline BipartiteGraph random_graph(int n, int count, double p, std::mt19937_64& rng) {
  std::vector<ngon::VertexDecl> vs;
  std::uniform_int_distribution<int> coin(0, 1);
  std::bernoulli_distribution edge(p);
  for (int v = 0; v < count; ++v) vs.push_back({v, coin(rng)});
  std::vector<std::pair<ngon::VertexId, ngon::VertexId>> es;
  for (int u = 0; u < count; ++u)
    for (int v = u + 1; v < count; ++v)
      if (vs[static_cast<std::size_t>(u)].part != vs[static_cast<std::size_t>(v)].part && edge(rng)) es.emplace_back(u, v);
  return BipartiteGraph(n, std::move(vs), std::move(es));
}

inline Mask random_mask(const BipartiteGraph& g, std::mt19937_64& rng) {
  std::uniform_int_distribution<Mask> pick(0, full_mask(g));
  return pick(rng);
}

}  // namespace oracle
