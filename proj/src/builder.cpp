#include "ngon/builder.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "ngon/predimension.hpp"
#include "ngon/witnesses.hpp"

namespace ngon {

AmalgamResult free_amalgam(const BipartiteGraph& m, const BipartiteGraph& e, const Gluing& gluing) {
  if (m.n() != e.n()) throw std::invalid_argument("amalgam parts disagree on n");
  std::set<VertexId> targets;
  for (auto [from, to] : gluing) {
    if (!e.index_of(from)) throw std::invalid_argument("gluing source " + std::to_string(from) + " not in extension");
    if (!m.index_of(to)) throw std::invalid_argument("gluing target " + std::to_string(to) + " not in ambient");
    if (!targets.insert(to).second) throw std::invalid_argument("gluing is not injective");
    if (e.part(e.index(from)) != m.part(m.index(to)))
      throw std::invalid_argument("gluing does not preserve parts at " + std::to_string(from));
  }
  for (auto it = gluing.begin(); it != gluing.end(); ++it)
    for (auto jt = std::next(it); jt != gluing.end(); ++jt)
      if (e.adjacent(e.index(it->first), e.index(jt->first)) != m.adjacent(m.index(it->second), m.index(jt->second)))
        throw std::invalid_argument("gluing is not an isomorphism of induced subgraphs");

  VertexSet base = e.empty_set();
  for (auto [from, to] : gluing) base.insert(e.index(from));
  if (!is_strong(e, base).strong) throw std::invalid_argument("amalgamation base is not strong in the extension");

  AmalgamResult result;
  std::map<VertexId, VertexId> image(gluing.begin(), gluing.end());
  std::vector<VertexDecl> vs = m.vertex_decls();
  VertexId next = m.max_id() + 1;
  for (const auto& v : e.vertex_decls()) {
    if (gluing.count(v.id)) continue;
    image[v.id] = next;
    result.placed[v.id] = next;
    vs.push_back({next, v.part});
    ++next;
  }
  auto es = m.edge_ids();
  for (auto [a, b] : e.edge_ids()) {
    if (gluing.count(a) && gluing.count(b)) continue;
    es.emplace_back(image[a], image[b]);
  }
  result.graph = BipartiteGraph(m.n(), std::move(vs), std::move(es));
  return result;
}

std::string template_name(Template t) {
  switch (t) {
    case Template::pendant_path: return "pendant_path";
    case Template::path_completion: return "path_completion";
    case Template::cycle_attachment: return "cycle_attachment";
    case Template::cl_witness: return "cl_witness";
  }
  return "unknown";
}

std::string StepLog::line() const {
  std::ostringstream os;
  os << "STEP " << step << ' ' << template_name(kind) << ' ' << (accepted ? "accepted" : "rejected:" + reason) << ' '
     << vertices << ' ' << edges;
  return os.str();
}

namespace {

using EdgeList = std::vector<std::pair<VertexId, VertexId>>;

// Path 0 … length whose vertex 0 sits in start_part.
BipartiteGraph typed_path(int n, int length, int start_part) {
  std::vector<VertexDecl> vs;
  EdgeList es;
  for (VertexId v = 0; v <= length; ++v) vs.push_back({v, static_cast<int>((start_part + v) % 2)});
  for (VertexId v = 0; v < length; ++v) es.emplace_back(v, v + 1);
  return BipartiteGraph(n, std::move(vs), std::move(es));
}

BipartiteGraph typed_cycle(int n, int length, int start_part) {
  std::vector<VertexDecl> vs;
  EdgeList es;
  for (VertexId v = 0; v < length; ++v) {
    vs.push_back({v, static_cast<int>((start_part + v) % 2)});
    es.emplace_back(v, (v + 1) % length);
  }
  return BipartiteGraph(n, std::move(vs), std::move(es));
}

BipartiteGraph flip_parts(const BipartiteGraph& g) {
  auto vs = g.vertex_decls();
  for (auto& v : vs) v.part = 1 - v.part;
  return BipartiteGraph(g.n(), std::move(vs), g.edge_ids());
}

struct Candidate {
  BipartiteGraph extension;
  Gluing gluing;
};

// Everything random in grow() goes through here.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}
  std::size_t below(std::size_t bound) { return bound == 0 ? 0 : static_cast<std::size_t>(engine_() % bound); }

 private:
  std::mt19937_64 engine_;
};

std::optional<Candidate> propose(Template kind, const BipartiteGraph& m, Sampler& rng) {
  const int n = m.n();
  const std::size_t count = m.vertex_count();
  if (count == 0) return std::nullopt;
  switch (kind) {
    case Template::pendant_path: {
      const int length = 1 + static_cast<int>(rng.below(static_cast<std::size_t>(n)));
      const int anchor = static_cast<int>(rng.below(count));
      return Candidate{typed_path(n, length, m.part(anchor)), {{0, m.id(anchor)}}};
    }
    case Template::path_completion: {
      const auto dist = distance_matrix(m);
      std::vector<std::pair<int, int>> sites;
      for (int a = 0; a < static_cast<int>(count); ++a)
        for (int b = a + 1; b < static_cast<int>(count); ++b)
          if (dist[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] >= n + 1 &&
              m.part(b) == (m.part(a) + n - 1) % 2)
            sites.emplace_back(a, b);
      if (sites.empty()) return std::nullopt;
      auto [a, b] = sites[rng.below(sites.size())];
      return Candidate{typed_path(n, n - 1, m.part(a)), {{0, m.id(a)}, {n - 1, m.id(b)}}};
    }
    case Template::cycle_attachment: {
      const int wanted = static_cast<int>(rng.below(static_cast<std::size_t>(n)));
      std::vector<int> walk{static_cast<int>(rng.below(count))};
      while (static_cast<int>(walk.size()) <= wanted) {
        std::vector<int> next;
        for (int w : m.neighbors(walk.back()))
          if (std::find(walk.begin(), walk.end(), w) == walk.end()) next.push_back(w);
        if (next.empty()) break;
        walk.push_back(next[rng.below(next.size())]);
      }
      Gluing gluing;
      for (std::size_t i = 0; i < walk.size(); ++i) gluing[static_cast<VertexId>(i)] = m.id(walk[i]);
      return Candidate{typed_cycle(n, 2 * n + 2, m.part(walk.front())), gluing};
    }
    case Template::cl_witness: {
      auto doc = make_cl_witness(n, 2, false);
      const auto base_ids = doc.subsets.at("A0");
      BipartiteGraph e = doc.graph;
      std::vector<VertexId> target;
      // Targets must be quiet so that witness blocks never pile onto each
      // other; stacked blocks make the body enumeration explode.
      auto quiet = [&](int v) {
        if (m.degree(v) > 2) return false;
        for (int w : m.neighbors(v))
          if (m.degree(w) > 2) return false;
        return true;
      };
      std::vector<BaseSetSpec> bases;
      for (const auto& spec : find_base_sets(m))
        if (std::all_of(spec.s.begin(), spec.s.end(), [&](VertexId id) { return quiet(m.index(id)); }))
          bases.push_back(spec);
      if (!bases.empty()) {
        auto spec = bases[rng.below(bases.size())];
        target.assign(spec.s.begin(), spec.s.end());
      } else {
        // No genuine base set yet: try a random independent 4-tuple.
        for (int attempt = 0; attempt < 64 && target.empty(); ++attempt) {
          std::vector<int> pick;
          for (int k = 0; k < 4; ++k) pick.push_back(static_cast<int>(rng.below(count)));
          bool ok = std::all_of(pick.begin(), pick.end(), quiet);
          for (int i = 0; i < 4 && ok; ++i)
            for (int j = i + 1; j < 4 && ok; ++j)
              ok = pick[static_cast<std::size_t>(i)] != pick[static_cast<std::size_t>(j)] &&
                   !m.adjacent(pick[static_cast<std::size_t>(i)], pick[static_cast<std::size_t>(j)]);
          const bool pattern = n % 2 == 1 ? (m.part(pick[0]) == m.part(pick[2]) && m.part(pick[1]) == m.part(pick[3]) &&
                                             m.part(pick[0]) != m.part(pick[1]))
                                          : (m.part(pick[0]) == m.part(pick[1]) && m.part(pick[1]) == m.part(pick[2]) &&
                                             m.part(pick[2]) == m.part(pick[3]));
          if (ok && pattern)
            for (int v : pick) target.push_back(m.id(v));
        }
      }
      if (target.empty()) return std::nullopt;
      // Match s_0's part; for odd n rotating the tuple by one keeps the pattern.
      const int e_part = e.part(e.index(base_ids[0]));
      if (m.part(m.index(target[0])) != e_part) {
        if (n % 2 == 1) std::rotate(target.begin(), target.begin() + 1, target.end());
        else e = flip_parts(e);
      }
      Gluing gluing;
      for (std::size_t k = 0; k < 4; ++k) gluing[base_ids[k]] = target[k];
      return Candidate{std::move(e), std::move(gluing)};
    }
  }
  return std::nullopt;
}

void check_tracked(const BipartiteGraph& g, const std::vector<std::vector<VertexId>>& tracked, int step) {
  for (const auto& ids : tracked) {
    if (!is_strong(g, g.subset(ids)).strong)
      throw std::logic_error("step " + std::to_string(step) + ": previously strong set {" + format_ids(ids) +
                             "} is no longer strong");
  }
}

}  // namespace

GrowResult grow(const BipartiteGraph& seed, int steps, std::uint64_t rng_seed, const MuFunction& mu,
                const GrowOptions& options) {
  if (steps < 0) throw std::invalid_argument("steps must be non-negative");
  {
    auto seed_report = in_class(seed, mu, options.kmu);
    if (!seed_report.member) throw std::invalid_argument("seed graph is not in the class");
  }
  GrowResult result{seed, {}};
  Sampler rng(rng_seed);
  std::vector<std::vector<VertexId>> tracked{seed.ids()};

  for (int step = 1; step <= steps; ++step) {
    StepLog entry;
    entry.step = step;
    entry.kind = static_cast<Template>(rng.below(4));
    const BipartiteGraph& current = result.graph;
    auto candidate = propose(entry.kind, current, rng);
    if (!candidate) {
      entry.reason = "no_site";
    } else {
      try {
        auto amalgam = free_amalgam(current, candidate->extension, candidate->gluing);
        const BipartiteGraph& next = amalgam.graph;
        VertexSet focus = next.empty_set();
        for (auto [from, to] : amalgam.placed) {
          const int v = next.index(to);
          focus.insert(v);
          focus |= next.neighbor_set(v);
        }
        KmuOptions local = options.kmu;
        local.focus = focus;
        auto report = in_class(next, mu, local);
        if (report.member) {
          VertexSet glued = next.empty_set();
          for (auto [from, to] : candidate->gluing) glued.insert(next.index(to));
          tracked.push_back(current.ids());
          tracked.push_back(next.ids_of(closure(next, glued)));
          result.graph = next;
          entry.accepted = true;
          check_tracked(result.graph, tracked, step);
        } else {
          entry.reason = condition_name(report.violations.front().condition);
        }
      } catch (const std::invalid_argument&) {
        entry.reason = "bad_gluing";
      }
    }
    entry.vertices = result.graph.vertex_count();
    entry.edges = result.graph.edge_count();
    result.log.push_back(std::move(entry));
  }

  if (options.final_full_check) {
    auto report = in_class(result.graph, mu, options.kmu);
    if (!report.member)
      throw std::logic_error("grown graph failed the full membership check: " +
                             condition_name(report.violations.front().condition));
  }
  return result;
}

}  // namespace ngon
