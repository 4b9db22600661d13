#include "ngon/group_actions.hpp"

#include <algorithm>
#include <stdexcept>

namespace ngon {

namespace {

void require_polygon(const BipartiteGraph& g, const PermGroup& grp) {
  if (grp.degree() != g.vertex_count()) throw std::invalid_argument("group degree does not match the graph");
  auto report = is_generalized_ngon(g, false);
  if (!report.holds) throw std::invalid_argument("not a generalized " + std::to_string(g.n()) + "-gon: " + report.reason);
}

std::vector<int> neighbours_except(const BipartiteGraph& g, int v, std::initializer_list<int> skip) {
  std::vector<int> out;
  for (int w : g.neighbors(v))
    if (std::find(skip.begin(), skip.end(), w) == skip.end()) out.push_back(w);
  return out;
}

std::vector<VertexId> to_ids(const BipartiteGraph& g, const std::vector<int>& seq) {
  std::vector<VertexId> out;
  for (int v : seq) out.push_back(g.id(v));
  return out;
}

// Transitivity on a family of tuples that the group maps into a superset of
// tuples of the same kind (e.g. cycles of both start types).
bool transitive_on_tuples(const PermGroup& grp, const std::vector<std::vector<int>>& tuples) {
  if (tuples.empty()) return true;
  auto orbit = grp.tuple_orbit(tuples.front());
  return std::all_of(tuples.begin(), tuples.end(), [&](const auto& t) { return orbit.count(t) > 0; });
}

bool cycles_transitive(const BipartiteGraph& g, const PermGroup& grp, int length) {
  for (int t = 0; t < 2; ++t)
    if (!transitive_on_tuples(grp, enumerate_ordered_cycles(g, length, t))) return false;
  return true;
}

// One path per orbit of the group on ordered paths of length n. Conjugate
// paths have conjugate stabilizers, so checking representatives suffices.
std::vector<std::vector<int>> path_representatives(const BipartiteGraph& g, const PermGroup& grp) {
  std::vector<std::vector<int>> reps;
  for (auto& orbit : grp.tuple_orbits(enumerate_paths(g, g.n()))) reps.push_back(orbit.front());
  return reps;
}

}  // namespace

TransitivityReport is_strongly_transitive(const BipartiteGraph& g, const PermGroup& grp) {
  require_polygon(g, grp);
  const int n = g.n();
  TransitivityReport report;
  report.holds = true;
  for (const auto& path : path_representatives(g, grp)) {
    const auto stab = grp.pointwise_stabilizer(path);
    const auto far = neighbours_except(g, path[static_cast<std::size_t>(n)], {path[static_cast<std::size_t>(n - 1)]});
    if (!stab.transitive_on(far)) {
      report.holds = false;
      report.path = to_ids(g, path);
      break;
    }
  }
  report.cycle_form = cycles_transitive(g, grp, 2 * n);
  return report;
}

CycleExtensionReport check_cycle_extension_equivalence(const BipartiteGraph& g, const PermGroup& grp) {
  require_polygon(g, grp);
  const int n = g.n();
  CycleExtensionReport report;
  report.left = report.right = report.equivalent = true;
  for (int t = 0; t < 2; ++t) {
    const bool left = transitive_on_tuples(grp, enumerate_ordered_cycles(g, 2 * n + 2, t));
    const auto apartments = enumerate_ordered_cycles(g, 2 * n, t);
    bool right = transitive_on_tuples(grp, apartments);
    if (right && !apartments.empty()) {
      const auto& x = apartments.front();
      const auto stab = grp.pointwise_stabilizer(x);
      const auto first = neighbours_except(g, x[1], {x[0], x[2]});
      const auto second = neighbours_except(g, x[2], {x[1], x[3]});
      std::vector<std::vector<int>> pairs;
      for (int a : first)
        for (int b : second) pairs.push_back({a, b});
      right = transitive_on_tuples(stab, pairs);
    }
    report.left = report.left && left;
    report.right = report.right && right;
    report.equivalent = report.equivalent && left == right;
  }
  return report;
}

MoufangReport is_moufang(const BipartiteGraph& g, const PermGroup& grp) {
  require_polygon(g, grp);
  const int n = g.n();
  MoufangReport report;
  report.holds = true;
  for (const auto& path : path_representatives(g, grp)) {
    std::vector<int> fixed;
    for (int i = 1; i <= n - 1; ++i)
      for (int w : g.neighbors(path[static_cast<std::size_t>(i)])) fixed.push_back(w);
    std::sort(fixed.begin(), fixed.end());
    fixed.erase(std::unique(fixed.begin(), fixed.end()), fixed.end());
    const auto root_group = grp.pointwise_stabilizer(fixed);
    const auto far = neighbours_except(g, path[static_cast<std::size_t>(n)], {path[static_cast<std::size_t>(n - 1)]});
    if (!root_group.transitive_on(far)) {
      report.holds = false;
      report.path = to_ids(g, path);
      break;
    }
  }
  return report;
}

int stabilizer_transitivity_degree(const BipartiteGraph& g, const PermGroup& grp, VertexId x) {
  const int v = g.index(x);
  const std::vector<int> point{v};
  const auto stab = grp.pointwise_stabilizer(point);
  std::vector<int> nbrs(g.neighbors(v).begin(), g.neighbors(v).end());
  int degree = 0;
  for (std::size_t t = 1; t <= nbrs.size(); ++t) {
    // All ordered t-tuples of distinct neighbours.
    std::vector<std::vector<int>> tuples;
    std::vector<int> current;
    auto extend = [&](auto&& self) -> void {
      if (current.size() == t) {
        tuples.push_back(current);
        return;
      }
      for (int w : nbrs) {
        if (std::find(current.begin(), current.end(), w) != current.end()) continue;
        current.push_back(w);
        self(self);
        current.pop_back();
      }
    };
    extend(extend);
    if (!transitive_on_tuples(stab, tuples)) break;
    degree = static_cast<int>(t);
  }
  return degree;
}

}  // namespace ngon
