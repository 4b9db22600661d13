#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "ngon/builder.hpp"
#include "ngon/class_kmu.hpp"
#include "ngon/predimension.hpp"
#include "ngon/witnesses.hpp"
#include "ngon/zero_algebraic.hpp"
#include "oracles.hpp"

using namespace ngon;

namespace {

std::vector<std::pair<oracle::Mask, oracle::Mask>> as_masks(const PairEnumeration& e) {
  std::vector<std::pair<oracle::Mask, oracle::Mask>> out;
  for (const auto& p : e.pairs) out.emplace_back(oracle::to_mask(p.base), oracle::to_mask(p.body));
  std::sort(out.begin(), out.end());
  return out;
}

// Every body 0-algebraic over a, as masks.
std::vector<oracle::Mask> algebraic_bodies(const BipartiteGraph& g, oracle::Mask a) {
  std::vector<oracle::Mask> out;
  const oracle::Mask rest = oracle::full_mask(g) & ~a;
  for (oracle::Mask d = rest; d != 0; d = (d - 1) & rest)
    if (oracle::zero_algebraic(g, a, d)) out.push_back(d);
  return out;
}

}  // namespace

TEST_CASE("path interiors are 0-algebraic exactly when m = n-2") {
  for (int n = 3; n <= 5; ++n)
    for (int m = 1; m <= n; ++m) {
      auto p = make_path(n, m + 1);
      const auto base = p.named("endpoints");
      const auto body = p.named("interior");
      CAPTURE(n);
      CAPTURE(m);
      CHECK(is_zero_algebraic(p.graph, base, body) == (m == n - 2));
      CHECK(is_zero_minimally_algebraic(p.graph, base, body) == (m == n - 2));
      CHECK(oracle::zero_algebraic(p.graph, oracle::to_mask(base), oracle::to_mask(body)) == (m == n - 2));
    }
}

TEST_CASE("cycle witnesses are 0-minimally algebraic over their base") {
  for (int n = 3; n <= 6; ++n)
    for (int ell = 2; ell <= 4; ++ell) {
      CAPTURE(n);
      CAPTURE(ell);
      auto w = make_cl_witness(n, ell, false);
      const auto a0 = w.named("A0");
      const auto c = w.named("C");
      CHECK(is_zero_algebraic(w.graph, a0, c));
      CHECK(is_zero_minimally_algebraic(w.graph, a0, c));
      CHECK(minimal_base(w.graph, a0, c) == a0);
      CHECK(degree_identity_check(w.graph, {a0, c, PairKind::minimally_algebraic}));
      CHECK(static_cast<long>(c.size()) * (n - 1) ==
            (n - 2) * static_cast<long>(w.graph.edges_within(c) + w.graph.edges_between(c, a0)));

      auto wb = make_cl_witness(n, ell, true);
      CHECK(is_zero_minimally_algebraic(wb.graph, wb.named("A0b"), wb.named("C")));
      CHECK(wb.graph.edges_between(wb.named("C"), wb.named("b")) == 1);
      CHECK_FALSE(wb.named("C").intersects(wb.named("A0b")));
    }
  CHECK_THROWS_AS(make_cl_witness(3, 1, false), std::invalid_argument);
}

TEST_CASE("minimal_base") {
  for (int n = 3; n <= 5; ++n) {
    auto p = make_path(n, n - 1);
    CHECK(minimal_base(p.graph, p.named("endpoints"), p.named("interior")) == p.named("endpoints"));

    // Redundant base vertex with no edge into the body.
    auto w = make_cl_witness(n, 2, false);
    auto g = testing_helpers::disjoint_union(w.graph, make_path(n, 0).graph);
    const auto a0 = g.subset(w.subsets.at("A0"));
    const auto c = g.subset(w.subsets.at("C"));
    const auto padded = a0.with(g.index(g.max_id()));
    CHECK(is_zero_algebraic(g, padded, c));
    CHECK_FALSE(is_zero_minimally_algebraic(g, padded, c));
    const auto reduced = minimal_base(g, padded, c);
    CHECK(reduced == a0);
    CHECK(oracle::zero_minimally_algebraic(g, oracle::to_mask(reduced), oracle::to_mask(c)));
    CHECK(minimal_base(g, reduced, c) == reduced);

    auto pp = testing_helpers::disjoint_union(p.graph, make_path(n, 0).graph);
    const auto ends = pp.subset(p.subsets.at("endpoints")).with(pp.index(pp.max_id()));
    CHECK_FALSE(is_zero_minimally_algebraic(pp, ends, pp.subset(p.subsets.at("interior"))));
  }
  auto p = make_path(3, 4);
  CHECK_THROWS_AS(minimal_base(p.graph, p.named("endpoints"), p.named("interior")), std::invalid_argument);
  CHECK_THROWS_AS(is_zero_algebraic(p.graph, p.named("path"), p.named("interior")), std::invalid_argument);
  CHECK_THROWS_AS(is_zero_minimally_algebraic(p.graph, p.named("path"), p.named("interior")), std::invalid_argument);
  CHECK_FALSE(is_zero_algebraic(p.graph, p.named("endpoints"), p.graph.empty_set()));
}

TEST_CASE("enumeration examples") {
  for (int n = 3; n <= 6; ++n) {
    auto p = make_path(n, n - 1);
    auto e = enumerate_zero_min_pairs(p.graph);
    REQUIRE(e.pairs.size() == 1);
    CHECK(e.pairs[0].base == p.named("endpoints"));
    CHECK(e.pairs[0].body == p.named("interior"));
    CHECK(e.body_cap == default_body_cap(n));
    CHECK(default_body_cap(n) == static_cast<std::size_t>(12 * (n - 2)));

    std::vector<VertexDecl> vs;
    for (int v = 0; v < 6; ++v) vs.push_back({v, v % 2});
    CHECK(enumerate_zero_min_pairs(BipartiteGraph(n, vs, {})).pairs.empty());
  }
  // 2n-cycle: count pinned from the brute-force oracle.
  for (int n = 3; n <= 5; ++n) {
    auto c = make_cycle(n, 2 * n).graph;
    const auto expected = oracle::zero_min_pairs(c);
    CHECK(as_masks(enumerate_zero_min_pairs(c)) == expected);
    // Arcs of n-2 interior vertices over their two ends: one per start, 2n of them.
    CHECK(expected.size() == static_cast<std::size_t>(2 * n));
  }
}

TEST_CASE("enumeration agrees with brute force on small graphs") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 3 + trial % 3;
    auto g = oracle::random_graph(n, 8, 0.45, rng);
    CAPTURE(trial);
    const auto mine = enumerate_zero_min_pairs(g);
    CHECK(as_masks(mine) == oracle::zero_min_pairs(g));
    for (const auto& p : mine.pairs) CHECK(degree_identity_check(g, p));
  }
}

TEST_CASE("focused enumeration keeps exactly the pairs whose body meets the focus") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    auto g = oracle::random_graph(3, 9, 0.45, rng);
    auto focus = testing_helpers::random_subset(g, rng, 0.3);
    auto all = enumerate_zero_min_pairs(g).pairs;
    std::erase_if(all, [&](const auto& p) { return !p.body.intersects(focus); });
    CHECK(enumerate_zero_min_pairs(g, {}, focus).pairs == all);
  }
}

TEST_CASE("degree identity on pairs of grown graphs") {
  auto seed = make_cycle(3, 8).graph;
  for (std::uint64_t s : {1u, 2u}) {
    auto g = grow(seed, 15, s, default_mu(3)).graph;
    auto e = enumerate_zero_min_pairs(g);
    CHECK_FALSE(e.pairs.empty());
    for (const auto& p : e.pairs) {
      CHECK(degree_identity_check(g, p));
      CHECK(is_zero_minimally_algebraic(g, p.base, p.body));
    }
  }
}

TEST_CASE("0-algebraic bodies over a strong set are equal or disjoint") {
  std::mt19937_64 rng(13);
  std::vector<BipartiteGraph> graphs;
  for (int trial = 0; trial < 12; ++trial) graphs.push_back(oracle::random_graph(3 + trial % 3, 10, 0.35, rng));
  // Pieces of builder outputs: connected 10-vertex windows.
  auto grown = grow(make_cycle(3, 8).graph, 15, 3, default_mu(3)).graph;
  std::uniform_int_distribution<int> pick(0, static_cast<int>(grown.vertex_count()) - 1);
  for (int k = 0; k < 4; ++k) graphs.push_back(grown.induced(testing_helpers::random_connected_subset(grown, pick(rng), 10, rng)));
  for (auto w : {make_cl_witness(3, 2, false), make_double_path(4), make_path(5, 4)})
    if (w.graph.vertex_count() <= 10) graphs.push_back(w.graph);

  std::size_t strong_sets = 0, bodies_seen = 0;
  for (const auto& g : graphs) {
    const auto full = oracle::full_mask(g);
    const auto minimal_pairs = oracle::zero_min_pairs(g);
    for (oracle::Mask a = 0;; ++a) {
      if (oracle::strong(g, a, full)) {
        ++strong_sets;
        const auto bodies = algebraic_bodies(g, a);
        bodies_seen += bodies.size();
        for (std::size_t i = 0; i < bodies.size(); ++i)
          for (std::size_t j = i + 1; j < bodies.size(); ++j)
            if (bodies[i] & bodies[j]) FAIL("overlapping 0-algebraic bodies");
        // Any D 0-minimally algebraic over a part of A lies in A or is
        // 0-algebraic over A.
        for (auto [a0, d] : minimal_pairs) {
          if ((a0 & a) != a0) continue;
          const bool inside = (d & a) == d;
          if (!inside && !oracle::zero_algebraic(g, a, d)) FAIL("body neither inside nor algebraic over A");
        }
      }
      if (a == full) break;
    }
  }
  CHECK(strong_sets > 0);
  CHECK(bodies_seen > 0);
}
