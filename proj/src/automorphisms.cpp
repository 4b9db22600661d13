#include "ngon/automorphisms.hpp"

#include <algorithm>
#include <sstream>

namespace ngon {

namespace {

using Colouring = std::vector<int>;

int colour_count(const Colouring& c) { return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1; }

// Refines all colourings in lock step, numbering colours by their sorted
// signature so that equal colours mean the same thing on every side.
// Returns false as soon as the colour histograms disagree.
bool refine(const BipartiteGraph& g, std::vector<Colouring*> sides) {
  const std::size_t count = g.vertex_count();
  int classes = colour_count(*sides.front());
  for (;;) {
    using Signature = std::pair<int, std::vector<int>>;
    std::vector<std::vector<Signature>> sigs(sides.size(), std::vector<Signature>(count));
    std::vector<Signature> all;
    for (std::size_t s = 0; s < sides.size(); ++s)
      for (std::size_t v = 0; v < count; ++v) {
        Signature sig{(*sides[s])[v], {}};
        for (int w : g.neighbors(static_cast<int>(v))) sig.second.push_back((*sides[s])[static_cast<std::size_t>(w)]);
        std::sort(sig.second.begin(), sig.second.end());
        sigs[s][v] = sig;
        all.push_back(std::move(sig));
      }
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    std::vector<std::vector<int>> histogram(sides.size(), std::vector<int>(all.size(), 0));
    for (std::size_t s = 0; s < sides.size(); ++s)
      for (std::size_t v = 0; v < count; ++v) {
        const int c = static_cast<int>(std::lower_bound(all.begin(), all.end(), sigs[s][v]) - all.begin());
        (*sides[s])[v] = c;
        ++histogram[s][static_cast<std::size_t>(c)];
      }
    for (std::size_t s = 1; s < sides.size(); ++s)
      if (histogram[s] != histogram[0]) return false;
    const int now = static_cast<int>(all.size());
    if (now == classes) return true;
    classes = now;
  }
}

void individualize(Colouring& c, int v) { c[static_cast<std::size_t>(v)] = colour_count(c); }

// Smallest colour with more than one vertex, or -1 if discrete.
int target_colour(const Colouring& c) {
  std::vector<int> sizes(static_cast<std::size_t>(colour_count(c)), 0);
  for (int x : c) ++sizes[static_cast<std::size_t>(x)];
  for (std::size_t k = 0; k < sizes.size(); ++k)
    if (sizes[k] > 1) return static_cast<int>(k);
  return -1;
}

std::vector<int> cell(const Colouring& c, int colour) {
  std::vector<int> out;
  for (std::size_t v = 0; v < c.size(); ++v)
    if (c[v] == colour) out.push_back(static_cast<int>(v));
  return out;
}

struct Searcher {
  const BipartiteGraph& g;
  bool type_preserving;

  // Looks for an automorphism carrying the left colouring onto the right.
  bool search(Colouring left, Colouring right, Perm& out) const {
    if (!refine(g, {&left, &right})) return false;
    const int colour = target_colour(left);
    if (colour < 0) {
      Perm p(left.size());
      std::vector<int> by_colour(left.size());
      for (std::size_t v = 0; v < right.size(); ++v) by_colour[static_cast<std::size_t>(right[v])] = static_cast<int>(v);
      for (std::size_t v = 0; v < left.size(); ++v) p[v] = by_colour[static_cast<std::size_t>(left[v])];
      if (!is_automorphism(g, p, type_preserving)) return false;
      out = std::move(p);
      return true;
    }
    const int v = cell(left, colour).front();
    for (int w : cell(right, colour)) {
      Colouring l = left, r = right;
      individualize(l, v);
      individualize(r, w);
      if (search(std::move(l), std::move(r), out)) return true;
    }
    return false;
  }
};

}  // namespace

bool is_automorphism(const BipartiteGraph& g, const Perm& p, bool type_preserving) {
  if (p.size() != g.vertex_count()) return false;
  for (std::size_t v = 0; v < p.size(); ++v) {
    if (type_preserving && g.part(static_cast<int>(v)) != g.part(p[v])) return false;
    if (g.degree(static_cast<int>(v)) != g.degree(p[v])) return false;
  }
  for (auto [a, b] : g.edges())
    if (!g.adjacent(p[static_cast<std::size_t>(a)], p[static_cast<std::size_t>(b)])) return false;
  return true;
}

PermGroup automorphism_group(const BipartiteGraph& g, bool type_preserving) {
  const std::size_t count = g.vertex_count();
  Colouring start(count, 0);
  if (type_preserving)
    for (std::size_t v = 0; v < count; ++v) start[v] = g.part(static_cast<int>(v));
  refine(g, {&start});

  // Leftmost path of the search tree: the base and its colourings.
  std::vector<int> base;
  std::vector<Colouring> levels{start};
  for (;;) {
    const int colour = target_colour(levels.back());
    if (colour < 0) break;
    const int v = cell(levels.back(), colour).front();
    base.push_back(v);
    Colouring next = levels.back();
    individualize(next, v);
    refine(g, {&next});
    levels.push_back(std::move(next));
  }

  Searcher searcher{g, type_preserving};
  std::vector<Perm> gens;
  for (std::size_t k = base.size(); k-- > 0;) {
    const Colouring& here = levels[k];
    const int b = base[k];
    for (int c : cell(here, here[static_cast<std::size_t>(b)])) {
      if (c == b) continue;
      auto orbit = PermGroup(count, gens).orbit(b);
      if (std::binary_search(orbit.begin(), orbit.end(), c)) continue;
      Colouring left = here, right = here;
      individualize(left, b);
      individualize(right, c);
      Perm found;
      if (searcher.search(std::move(left), std::move(right), found)) gens.push_back(std::move(found));
    }
  }
  return PermGroup(count, std::move(gens));
}

std::string cycle_notation(const BipartiteGraph& g, const Perm& p) {
  std::ostringstream os;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t v = 0; v < p.size(); ++v) {
    if (seen[v] || p[v] == static_cast<int>(v)) continue;
    os << '(';
    std::size_t x = v;
    bool first = true;
    while (!seen[x]) {
      seen[x] = true;
      if (!first) os << ' ';
      os << g.id(static_cast<int>(x));
      first = false;
      x = static_cast<std::size_t>(p[x]);
    }
    os << ')';
  }
  const std::string text = os.str();
  return text.empty() ? "()" : text;
}

}  // namespace ngon
