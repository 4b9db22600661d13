#include "ngon/class_kmu.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "ngon/predimension.hpp"

namespace ngon {

PairConfiguration extract_configuration(const BipartiteGraph& g, const VertexSet& base, const VertexSet& body) {
  const VertexSet whole = base | body;
  BipartiteGraph sub = g.induced(whole);
  VertexSet sub_base = sub.subset(g.ids_of(base));
  VertexSet sub_body = sub.subset(g.ids_of(body));
  return {std::move(sub), std::move(sub_base), std::move(sub_body)};
}

namespace {

struct PairMatcher {
  const PairConfiguration& x;
  const PairConfiguration& y;
  std::vector<int> order;  // vertices of x in matching order
  std::vector<int> image;  // x index -> y index
  std::vector<bool> used;

  int role(const PairConfiguration& c, int v) const { return c.body.contains(v) ? 1 : 0; }

  bool compatible(int u, int w) const {
    if (role(x, u) != role(y, w) || x.graph.part(u) != y.graph.part(w)) return false;
    return x.graph.degree(u) == y.graph.degree(w);
  }

  bool extend(std::size_t k) {
    if (k == order.size()) return true;
    const int u = order[k];
    for (std::size_t w = 0; w < y.graph.vertex_count(); ++w) {
      const int wi = static_cast<int>(w);
      if (used[w] || !compatible(u, wi)) continue;
      bool ok = true;
      for (std::size_t j = 0; j < k && ok; ++j) {
        const int p = order[j];
        ok = x.graph.adjacent(u, p) == y.graph.adjacent(wi, image[static_cast<std::size_t>(p)]);
      }
      if (!ok) continue;
      image[static_cast<std::size_t>(u)] = wi;
      used[w] = true;
      if (extend(k + 1)) return true;
      used[w] = false;
    }
    return false;
  }
};

}  // namespace

bool pairs_isomorphic(const PairConfiguration& x, const PairConfiguration& y) {
  if (x.base.size() != y.base.size() || x.body.size() != y.body.size()) return false;
  if (x.graph.edge_count() != y.graph.edge_count()) return false;
  PairMatcher m{x, y, {}, std::vector<int>(x.graph.vertex_count(), -1), std::vector<bool>(y.graph.vertex_count(), false)};
  // Breadth-first order keeps each new vertex adjacent to matched ones.
  std::vector<bool> placed(x.graph.vertex_count(), false);
  for (std::size_t s = 0; s < x.graph.vertex_count(); ++s) {
    if (placed[s]) continue;
    std::vector<int> queue{static_cast<int>(s)};
    placed[s] = true;
    for (std::size_t h = 0; h < queue.size(); ++h) {
      m.order.push_back(queue[h]);
      for (int w : x.graph.neighbors(queue[h]))
        if (!placed[static_cast<std::size_t>(w)]) {
          placed[static_cast<std::size_t>(w)] = true;
          queue.push_back(w);
        }
    }
  }
  return m.extend(0);
}

bool is_path_configuration(const BipartiteGraph& g, const VertexSet& base, const VertexSet& body) {
  const int n = g.n();
  if (base.size() != 2 || body.size() != static_cast<std::size_t>(n - 2) || base.intersects(body)) return false;
  const VertexSet whole = base | body;
  if (g.edges_within(whole) != static_cast<std::size_t>(n - 1)) return false;
  bool ok = true;
  base.for_each([&](int a) { ok = ok && g.neighbor_set(a).intersection_size(whole) == 1; });
  body.for_each([&](int b) { ok = ok && g.neighbor_set(b).intersection_size(whole) == 2; });
  if (!ok) return false;
  // Degrees 1,2,…,2,1 with n-1 edges on n vertices: a path iff connected.
  VertexSet seen(g.vertex_count(), {base.first()});
  std::vector<int> stack{base.first()};
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    (g.neighbor_set(u) & whole).for_each([&](int w) {
      if (!seen.contains(w)) {
        seen.insert(w);
        stack.push_back(w);
      }
    });
  }
  return seen == whole;
}

MuFunction::MuFunction(int n, long fallback_offset) : n_(n), fallback_offset_(fallback_offset) {
  if (n < 3) throw std::invalid_argument("n must be at least 3");
  if (fallback_offset < 0) throw std::invalid_argument("fallback offset must be non-negative");
}

void MuFunction::add_override(PairConfiguration config, long value) {
  const auto& g = config.graph;
  if (g.n() != n_) throw std::invalid_argument("override configuration has a different n");
  if (!is_zero_minimally_algebraic(g, config.base, config.body))
    throw std::invalid_argument("override configuration is not 0-minimally algebraic");
  if (is_path_configuration(g, config.base, config.body)) {
    if (value != 1) throw std::invalid_argument("the path configuration must have mu = 1");
  } else if (value < std::max<long>(delta(g, config.base), n_)) {
    throw std::invalid_argument("mu override below max{delta(A), n}");
  }
  for (auto& o : overrides_) {
    if (pairs_isomorphic(o.config, config)) {
      o.value = value;
      return;
    }
  }
  overrides_.push_back({std::move(config), value});
}

long MuFunction::operator()(const BipartiteGraph& g, const VertexSet& base, const VertexSet& body) const {
  if (is_path_configuration(g, base, body)) return 1;
  if (!overrides_.empty()) {
    const auto config = extract_configuration(g, base, body);
    for (const auto& o : overrides_)
      if (pairs_isomorphic(o.config, config)) return o.value;
  }
  return std::max<long>(delta(g, base), n_) + fallback_offset_;
}

// Override line: override <value> <|A|> <|B|> <parts> <i-j>...
// Local vertex k < |A| is a base vertex, the rest are body vertices.
std::vector<std::string> MuFunction::serialize() const {
  std::vector<std::string> lines{"fallback " + std::to_string(fallback_offset_)};
  for (const auto& o : overrides_) {
    const auto& g = o.config.graph;
    std::vector<int> order = o.config.base.members();
    for (int b : o.config.body.members()) order.push_back(b);
    std::vector<int> local(g.vertex_count(), -1);
    for (std::size_t k = 0; k < order.size(); ++k) local[static_cast<std::size_t>(order[k])] = static_cast<int>(k);
    std::ostringstream os;
    os << "override " << o.value << ' ' << o.config.base.size() << ' ' << o.config.body.size() << ' ';
    for (int v : order) os << g.part(v);
    std::vector<std::pair<int, int>> es;
    for (auto [u, v] : g.edges()) {
      int a = local[static_cast<std::size_t>(u)];
      int b = local[static_cast<std::size_t>(v)];
      es.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(es.begin(), es.end());
    for (auto [a, b] : es) os << ' ' << a << '-' << b;
    lines.push_back(os.str());
  }
  return lines;
}

MuFunction MuFunction::parse(int n, const std::vector<std::string>& lines) {
  MuFunction mu(n);
  bool fallback_seen = false;
  for (const auto& line : lines) {
    std::istringstream is(line);
    std::string kw;
    is >> kw;
    if (kw == "fallback") {
      long offset = -1;
      if (fallback_seen || !(is >> offset) || offset < 0) throw std::invalid_argument("bad mu fallback: " + line);
      fallback_seen = true;
      mu.fallback_offset_ = offset;
    } else if (kw == "override") {
      long value = 0;
      std::size_t nb = 0, nm = 0;
      std::string parts;
      if (!(is >> value >> nb >> nm >> parts) || parts.size() != nb + nm)
        throw std::invalid_argument("bad mu override: " + line);
      std::vector<VertexDecl> vs;
      for (std::size_t k = 0; k < parts.size(); ++k) {
        if (parts[k] != '0' && parts[k] != '1') throw std::invalid_argument("bad part string: " + parts);
        vs.push_back({static_cast<VertexId>(k), parts[k] - '0'});
      }
      std::vector<std::pair<VertexId, VertexId>> es;
      for (std::string tok; is >> tok;) {
        auto dash = tok.find('-');
        if (dash == std::string::npos) throw std::invalid_argument("bad edge token: " + tok);
        es.emplace_back(std::stoll(tok.substr(0, dash)), std::stoll(tok.substr(dash + 1)));
      }
      BipartiteGraph g(n, std::move(vs), std::move(es));
      VertexSet base(g.vertex_count()), body(g.vertex_count());
      for (std::size_t k = 0; k < nb + nm; ++k) (k < nb ? base : body).insert(static_cast<int>(k));
      mu.add_override({std::move(g), std::move(base), std::move(body)}, value);
    } else {
      throw std::invalid_argument("unknown mu directive: " + line);
    }
  }
  return mu;
}

MuFunction default_mu(int n) { return MuFunction(n); }

namespace {

struct CopySearch {
  const BipartiteGraph& g;
  const VertexSet& base;
  std::vector<int> order;   // body vertices in matching order
  std::vector<int> anchor;  // earlier-matched body neighbour index in order, or -1
  std::vector<int> image;
  VertexSet used;
  std::set<VertexSet> found;
  std::size_t stop_at;

  bool consistent(std::size_t k, int w) const {
    const int u = order[k];
    if (base.contains(w) || used.contains(w) || g.part(w) != g.part(u)) return false;
    bool ok = true;
    base.for_each([&](int a) { ok = ok && (g.adjacent(u, a) == g.adjacent(w, a)); });
    for (std::size_t j = 0; j < k && ok; ++j) ok = g.adjacent(u, order[j]) == g.adjacent(w, image[j]);
    return ok;
  }

  void extend(std::size_t k) {
    if (found.size() >= stop_at) return;
    if (k == order.size()) {
      found.insert(used);
      return;
    }
    const int u = order[k];
    auto try_candidate = [&](int w) {
      if (found.size() >= stop_at || !consistent(k, w)) return;
      image[k] = w;
      used.insert(w);
      extend(k + 1);
      used.erase(w);
    };
    if (anchor[k] >= 0) {
      for (int w : g.neighbors(image[static_cast<std::size_t>(anchor[k])])) try_candidate(w);
      return;
    }
    // Fixed base neighbour, if any, pins the candidates.
    const VertexSet base_nbrs = g.neighbor_set(u) & base;
    if (!base_nbrs.empty()) {
      for (int w : g.neighbors(base_nbrs.first())) try_candidate(w);
      return;
    }
    for (std::size_t w = 0; w < g.vertex_count(); ++w) try_candidate(static_cast<int>(w));
  }
};

CopySearch make_copy_search(const BipartiteGraph& g, const VertexSet& base, const VertexSet& body,
                            std::optional<std::size_t> limit) {
  CopySearch s{g, base, {}, {}, {}, g.empty_set(), {}, limit ? *limit + 1 : std::numeric_limits<std::size_t>::max()};
  // Order: most constrained first, then grow through body adjacency.
  VertexSet remaining = body;
  while (!remaining.empty()) {
    int pick = -1;
    std::size_t best = 0;
    bool best_linked = false;
    remaining.for_each([&](int v) {
      bool linked = false;
      for (int p : s.order) linked = linked || g.adjacent(v, p);
      const std::size_t score = g.neighbor_set(v).intersection_size(base);
      if (pick < 0 || (linked && !best_linked) || (linked == best_linked && score > best)) {
        pick = v;
        best = score;
        best_linked = linked;
      }
    });
    int anchor = -1;
    for (std::size_t j = 0; j < s.order.size() && anchor < 0; ++j)
      if (g.adjacent(pick, s.order[j])) anchor = static_cast<int>(j);
    s.order.push_back(pick);
    s.anchor.push_back(anchor);
    remaining.erase(pick);
  }
  s.image.assign(s.order.size(), -1);
  return s;
}

}  // namespace

std::vector<VertexSet> find_copies(const BipartiteGraph& g, const VertexSet& base, const VertexSet& body,
                                   std::optional<std::size_t> limit) {
  auto search = make_copy_search(g, base, body, limit);
  search.extend(0);
  return {search.found.begin(), search.found.end()};
}

std::size_t count_copies(const BipartiteGraph& g, const VertexSet& base, const VertexSet& body,
                         std::optional<std::size_t> limit) {
  return find_copies(g, base, body, limit).size();
}

std::string condition_name(Condition c) {
  switch (c) {
    case Condition::short_cycle: return "short_cycle";
    case Condition::long_cycle_low_delta: return "long_cycle_low_delta";
    case Condition::mu_exceeded: return "mu_exceeded";
  }
  return "unknown";
}

namespace {

bool touches(const std::optional<VertexSet>& focus, const Cycle& c) {
  if (!focus) return true;
  return std::any_of(c.begin(), c.end(), [&](int v) { return focus->contains(v); });
}

std::vector<VertexId> cycle_ids(const BipartiteGraph& g, const Cycle& c) {
  std::vector<VertexId> out;
  for (int v : c) out.push_back(g.id(v));
  return out;
}

}  // namespace

KmuReport in_class(const BipartiteGraph& g, const MuFunction& mu, const KmuOptions& options) {
  const int n = g.n();
  if (mu.n() != n) throw std::invalid_argument("mu function and graph disagree on n");
  KmuReport report;
  report.horizon = options.horizon.value_or(2 * n + 6);
  report.body_cap = options.body_cap.value_or(default_body_cap(n));

  // Condition 1: no 2m-cycle with m < n.
  for (int m = 2; m < n; ++m)
    for (const auto& c : enumerate_cycles(g, 2 * m))
      if (touches(options.focus, c))
        report.violations.push_back({Condition::short_cycle, cycle_ids(g, c), 2 * m, 2L * n, {}, {}});

  // Condition 2: every set containing a longer cycle has δ ≥ 2n+2.
  std::set<VertexSet> low_delta_seen;
  for (int m = n + 1; 2 * m <= report.horizon; ++m) {
    for (const auto& c : enumerate_cycles(g, 2 * m)) {
      if (!touches(options.focus, c)) continue;
      auto best = min_delta_superset(g, VertexSet(g.vertex_count(), c), g.all());
      if (best.value >= 2L * n + 2) continue;
      if (!low_delta_seen.insert(best.minimizer).second) continue;
      report.violations.push_back(
          {Condition::long_cycle_low_delta, g.ids_of(best.minimizer), best.value, 2L * n + 2, {}, {}});
    }
  }

  // Condition 3: copies of every 0-minimally algebraic body over its base.
  auto pairs = enumerate_zero_min_pairs(g, report.body_cap, options.focus);
  std::map<VertexSet, std::set<VertexSet>> accounted;  // base -> bodies already counted
  for (const auto& pair : pairs.pairs) {
    auto& done = accounted[pair.base];
    if (done.count(pair.body)) continue;
    const long bound = mu(g, pair.base, pair.body);
    auto copies = find_copies(g, pair.base, pair.body, static_cast<std::size_t>(bound));
    if (static_cast<long>(copies.size()) > bound) copies = find_copies(g, pair.base, pair.body);
    done.insert(copies.begin(), copies.end());
    if (static_cast<long>(copies.size()) > bound) {
      report.violations.push_back({Condition::mu_exceeded, g.ids_of(pair.base | pair.body),
                                   static_cast<long>(copies.size()), bound, g.ids_of(pair.base),
                                   g.ids_of(pair.body)});
    }
  }

  report.member = report.violations.empty();
  return report;
}

}  // namespace ngon
