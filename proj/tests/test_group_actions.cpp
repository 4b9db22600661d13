#include <algorithm>
#include <random>

#include "doctest.h"
#include "ngon/automorphisms.hpp"
#include "ngon/group_actions.hpp"
#include "ngon/perm_group.hpp"
#include "ngon/witnesses.hpp"
#include "oracles.hpp"

using namespace ngon;

namespace {

BipartiteGraph spider() {
  // Legs of length 1, 2 and 3 from vertex 0.
  std::vector<VertexDecl> vs{{0, 0}, {1, 1}, {2, 1}, {3, 0}, {4, 1}, {5, 0}, {6, 1}};
  return BipartiteGraph(3, vs, {{0, 1}, {0, 2}, {2, 3}, {0, 4}, {4, 5}, {5, 6}});
}

void check_generators(const BipartiteGraph& g, const PermGroup& grp, bool type_preserving) {
  for (const auto& p : grp.generators()) CHECK(is_automorphism(g, p, type_preserving));
}

}  // namespace

TEST_CASE("permutation group basics") {
  const Perm cycle{1, 2, 3, 0};
  const Perm flip{0, 3, 2, 1};
  PermGroup d4(4, {cycle, flip});
  CHECK(d4.order() == 8);
  CHECK(d4.contains(compose(cycle, flip)));
  CHECK_FALSE(d4.contains(Perm{1, 0, 2, 3}));
  CHECK(is_identity(compose(cycle, inverse(cycle))));
  CHECK(compose(cycle, cycle) == Perm{2, 3, 0, 1});
  CHECK(d4.orbit(0).size() == 4);
  const std::vector<int> zero{0};
  CHECK(d4.pointwise_stabilizer(zero).order() == 2);
  CHECK(d4.tuple_orbit({0, 1}).size() == 8);
  CHECK(d4.tuple_orbits({{0, 2}, {1, 3}, {2, 0}, {3, 1}}).size() == 1);
  CHECK(PermGroup::trivial(5).order() == 1);
  CHECK_THROWS_AS(PermGroup(3, {Perm{0, 0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(PermGroup(3, {Perm{0, 1}}), std::invalid_argument);

  PermGroup sym(9, {Perm{1, 0, 2, 3, 4, 5, 6, 7, 8}, Perm{1, 2, 3, 4, 5, 6, 7, 8, 0}});
  CHECK(sym.order() == 362880);
}

TEST_CASE("automorphism group orders match brute force") {
  for (int n = 3; n <= 5; ++n) {
    auto c = make_cycle(n, 2 * n).graph;
    for (bool tp : {false, true}) {
      auto grp = automorphism_group(c, tp);
      check_generators(c, grp, tp);
      CHECK(grp.order() == oracle::count_automorphisms(c, tp));
      CHECK(grp.order() == (tp ? 2 * n : 4 * n));
    }
  }
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 60; ++trial) {
    auto g = oracle::random_graph(3, 8, 0.35, rng);
    for (bool tp : {false, true}) {
      auto grp = automorphism_group(g, tp);
      check_generators(g, grp, tp);
      CHECK(grp.order() == oracle::count_automorphisms(g, tp));
    }
  }
  auto s = spider();
  CHECK(automorphism_group(s, false).order() == 1);
  CHECK(automorphism_group(s, false).generators().empty());
}

TEST_CASE("classical polygons: group orders") {
  auto fano = make_fano().graph;
  auto full = automorphism_group(fano, false);
  auto tp = automorphism_group(fano, true);
  CHECK(tp.order() == 168);
  CHECK(full.order() == 336);
  CHECK(oracle::count_automorphisms(fano, true) == 168);
  check_generators(fano, full, false);
  CHECK(full.orbit(0).size() == 14);
  CHECK(tp.orbit(0).size() == 7);

  auto gq = make_gq22().graph;
  CHECK(automorphism_group(gq, true).order() == 720);
  CHECK(automorphism_group(gq, false).order() == 1440);

  // Shuffling generators changes nothing.
  auto gens = tp.generators();
  std::reverse(gens.begin(), gens.end());
  gens.push_back(compose(gens.front(), gens.back()));
  CHECK(PermGroup(tp.degree(), gens).order() == 168);
}

TEST_CASE("cycle notation") {
  auto c = make_cycle(3, 6).graph;
  CHECK(cycle_notation(c, identity_perm(6)) == "()");
  CHECK(cycle_notation(c, Perm{1, 0, 2, 3, 4, 5}) == "(0 1)");
  CHECK(cycle_notation(c, Perm{0, 2, 3, 1, 4, 5}) == "(1 2 3)");
}

TEST_CASE("Fano plane battery") {
  auto fano = make_fano().graph;
  auto grp = automorphism_group(fano, true);
  auto st = is_strongly_transitive(fano, grp);
  CHECK(st.holds);
  CHECK(st.cycle_form);
  CHECK(st.path.empty());
  CHECK(is_moufang(fano, grp).holds);
  auto ce = check_cycle_extension_equivalence(fano, grp);
  CHECK(ce.left);
  CHECK(ce.right);
  CHECK(ce.equivalent);
  for (VertexId x : fano.ids()) CHECK(stabilizer_transitivity_degree(fano, grp, x) == 3);

  auto trivial = PermGroup::trivial(fano.vertex_count());
  auto none = is_strongly_transitive(fano, trivial);
  CHECK_FALSE(none.holds);
  CHECK_FALSE(none.cycle_form);
  CHECK(none.path.size() == 4);
  CHECK_FALSE(is_moufang(fano, trivial).holds);
  CHECK(stabilizer_transitivity_degree(fano, trivial, 0) == 0);

  const std::vector<int> point{fano.index(0)};
  auto stab = grp.pointwise_stabilizer(point);
  CHECK(stab.order() == 24);
  CHECK_FALSE(is_strongly_transitive(fano, stab).holds);
  CHECK_FALSE(is_strongly_transitive(fano, stab).cycle_form);
  CHECK_FALSE(is_moufang(fano, stab).holds);
  CHECK_THROWS_AS(stabilizer_transitivity_degree(fano, grp, 99), std::out_of_range);
}

TEST_CASE("GQ(2,2) battery") {
  auto gq = make_gq22().graph;
  auto grp = automorphism_group(gq, true);
  auto st = is_strongly_transitive(gq, grp);
  CHECK(st.holds);
  CHECK(st.cycle_form);
  CHECK(is_moufang(gq, grp).holds);
  auto ce = check_cycle_extension_equivalence(gq, grp);
  CHECK(ce.left);
  CHECK(ce.right);
  CHECK(ce.equivalent);
  const int t = stabilizer_transitivity_degree(gq, grp, 0);
  CHECK(t == 3);
  CHECK(t < 6);
}

TEST_CASE("thin polygons under their dihedral group") {
  for (int n = 3; n <= 6; ++n) {
    auto c = make_cycle(n, 2 * n).graph;
    auto grp = automorphism_group(c, true);
    auto st = is_strongly_transitive(c, grp);
    CHECK(st.holds);
    CHECK(st.cycle_form);
    // Each D_1(x_n) minus x_{n-1} is one vertex, so the path form holds
    // for any group; the cycle form does not.
    auto trivial = PermGroup::trivial(c.vertex_count());
    CHECK(is_strongly_transitive(c, trivial).holds);
    CHECK_FALSE(is_strongly_transitive(c, trivial).cycle_form);
  }
}

TEST_CASE("Moufang implies strongly transitive") {
  std::vector<std::pair<BipartiteGraph, PermGroup>> cases;
  auto fano = make_fano().graph;
  auto fano_group = automorphism_group(fano, true);
  cases.emplace_back(fano, fano_group);
  cases.emplace_back(fano, PermGroup::trivial(fano.vertex_count()));
  const std::vector<int> point{0};
  cases.emplace_back(fano, fano_group.pointwise_stabilizer(point));
  for (const auto& gen : fano_group.generators()) cases.emplace_back(fano, PermGroup(fano.vertex_count(), {gen}));
  auto gq = make_gq22().graph;
  cases.emplace_back(gq, automorphism_group(gq, true));
  for (const auto& [g, grp] : cases)
    if (is_moufang(g, grp).holds) CHECK(is_strongly_transitive(g, grp).holds);
}

TEST_CASE("group checks require a polygon") {
  auto s = spider();
  auto grp = automorphism_group(s, true);
  CHECK_THROWS_AS(is_strongly_transitive(s, grp), std::invalid_argument);
  CHECK_THROWS_AS(is_moufang(s, grp), std::invalid_argument);
  CHECK_THROWS_AS(check_cycle_extension_equivalence(s, grp), std::invalid_argument);
  CHECK(stabilizer_transitivity_degree(s, grp, 0) == 0);
  auto path = make_path(3, 2).graph;
  CHECK(stabilizer_transitivity_degree(path, automorphism_group(path, true), 1) == 2);
}
