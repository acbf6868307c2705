#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hypereuler/designs.hpp"
#include "hypereuler/euler.hpp"
#include "hypereuler/kernels.hpp"
#include "support.hpp"

using namespace hypereuler;

namespace {

const Hypergraph two_triangles = Hypergraph::with_order(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
const EulerFamily two_triangle_family{{ClosedTrail{{0, 1, 2, 0}, {0, 1, 2}}, ClosedTrail{{3, 4, 5, 3}, {3, 4, 5}}}};

bool graph_trail_ok(const Multigraph& g, const GraphCircuit& c) {
  if (c.nodes.size() != c.edges.size() + 1 || c.nodes.front() != c.nodes.back()) return false;
  std::set<std::uint32_t> seen;
  for (std::size_t i = 0; i < c.edges.size(); ++i) {
    auto [a, b] = g.edges[c.edges[i]];
    const bool fits = (a == c.nodes[i] && b == c.nodes[i + 1]) || (b == c.nodes[i] && a == c.nodes[i + 1]);
    if (!fits || !seen.insert(c.edges[i]).second) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("validate_tour on the fixture tours") {
  const auto sts7 = sts_fixture(7);
  const auto t7 = support::tour_from_text(sts7, support::kSts7Tour);
  CHECK(validate_tour(sts7, t7));
  const auto sts9 = sts_fixture(9);
  CHECK(validate_tour(sts9, support::tour_from_text(sts9, support::kSts9Tour)));

  ClosedTrail cut = t7;
  cut.edges.erase(cut.edges.begin() + 3);  // drop 357
  cut.anchors.erase(cut.anchors.begin() + 4);
  CHECK_FALSE(validate_tour(sts7, cut));

  CHECK(validate_tour(Hypergraph::with_order(2, {}), ClosedTrail{{1}, {}}));
  CHECK_FALSE(validate_tour(sts7, ClosedTrail{{0}, {}}));
}

TEST_CASE("validate_family") {
  CHECK(validate_family(two_triangles, two_triangle_family));
  CHECK(validate_family(Hypergraph::with_order(1, {}), EulerFamily{}));

  // Bowtie split at its shared vertex: two trails with a common anchor.
  const auto bowtie = Hypergraph::with_order(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
  const EulerFamily shared{{ClosedTrail{{0, 1, 2, 0}, {0, 1, 2}}, ClosedTrail{{2, 3, 4, 2}, {3, 4, 5}}}};
  CHECK_FALSE(validate_family(bowtie, shared));

  EulerFamily twice = two_triangle_family;
  twice.trails[1].edges[0] = 0;
  CHECK_FALSE(validate_family(two_triangles, twice));
}

TEST_CASE("family_to_subgraph and back") {
  const auto sts7 = sts_fixture(7);
  const EulerFamily tour{{support::tour_from_text(sts7, support::kSts7Tour)}};
  const auto s = family_to_subgraph(sts7, tour);
  CHECK(s.satisfies_invariants());
  CHECK(s.nontrivial_components() == 1);
  for (EdgeId e = 0; e < sts7.size(); ++e) CHECK(s.edge_degree(e) == 2);
  const auto back = subgraph_to_family(sts7, s);
  REQUIRE(back.size() == 1);
  CHECK(validate_tour(sts7, back.trails[0]));

  const auto empty = family_to_subgraph(Hypergraph::with_order(3, {}), EulerFamily{});
  CHECK(empty.nontrivial_components() == 0);
  CHECK(subgraph_to_family(Hypergraph::with_order(3, {}), empty).size() == 0);

  const auto s2 = family_to_subgraph(two_triangles, two_triangle_family);
  CHECK(s2.nontrivial_components() == 2);
  CHECK(subgraph_to_family(two_triangles, s2).size() == 2);

  const auto squares = Hypergraph::with_order(8, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {4, 5}, {5, 6}, {6, 7}, {4, 7}});
  const auto fam = solve_family(squares);
  REQUIRE(fam);
  CHECK(fam->size() == 2);

  EulerFamily bad = two_triangle_family;
  bad.trails.pop_back();
  CHECK_THROWS_AS(family_to_subgraph(two_triangles, bad), Error);
}

TEST_CASE("family round trip on random inputs") {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 300; ++i) {
    const auto h = support::random_hypergraph(rng, 6, 6, 2, 4);
    const auto f = solve_family(h);
    if (!f) continue;
    REQUIRE(validate_family(h, *f));
    const auto again = subgraph_to_family(h, family_to_subgraph(h, *f));
    CHECK(validate_family(h, again));
    CHECK(again.size() == f->size());
  }
}

TEST_CASE("graph_euler_circuit") {
  Multigraph tri{3, {}};
  tri.add_edge(0, 1);
  tri.add_edge(1, 2);
  tri.add_edge(2, 0);
  const std::uint32_t all3[] = {0, 1, 2};
  const auto c = graph_euler_circuit(tri, all3);
  CHECK(c.edges.size() == 3);
  CHECK(graph_trail_ok(tri, c));

  Multigraph k5{5, {}};
  for (std::uint32_t a = 0; a < 5; ++a)
    for (std::uint32_t b = a + 1; b < 5; ++b) k5.add_edge(a, b);
  const std::uint32_t all5[] = {0, 1, 2, 3, 4};
  const auto c5 = graph_euler_circuit(k5, all5);
  CHECK(c5.edges.size() == 10);
  CHECK(graph_trail_ok(k5, c5));

  Multigraph bowtie{5, {}};
  for (auto [a, b] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}})
    bowtie.add_edge(a, b);
  const auto cb = graph_euler_circuit(bowtie, all5);
  CHECK(cb.edges.size() == 6);
  CHECK(graph_trail_ok(bowtie, cb));

  Multigraph path{3, {}};
  path.add_edge(0, 1);
  path.add_edge(1, 2);
  CHECK_THROWS_AS(graph_euler_circuit(path, all3), Error);
}

TEST_CASE("solve_family") {
  CHECK_FALSE(solve_family(Hypergraph::with_order(3, {{0, 1, 2}})));
  CHECK(solve_family(Hypergraph::with_order(3, {{0, 1, 2}, {0, 1, 2}})));
  CHECK_FALSE(solve_family(Hypergraph::with_order(3, {{0, 1}, {1, 2}})));
  const auto e = solve_family(Hypergraph::with_order(2, {}));
  REQUIRE(e);
  CHECK(e->size() == 0);
}

TEST_CASE("2-uniform connected families have at most one trail") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 200; ++i) {
    const auto h = support::random_hypergraph(rng, 6, 9, 2, 2);
    if (!is_connected(h)) continue;
    if (auto f = solve_family(h)) CHECK(f->size() <= 1);
  }
}

TEST_CASE("seeded solving returns valid families") {
  const auto sts = gen_sts(13);
  for (std::uint64_t seed : {0, 1, 2, 3}) {
    const auto f = solve_family(sts, {seed});
    REQUIRE(f);
    CHECK(validate_family(sts, *f));
  }
}

TEST_CASE("lovasz_feasible") {
  CHECK_FALSE(lovasz_feasible(Hypergraph::with_order(3, {{0, 1, 2}})));
  CHECK(lovasz_feasible(Hypergraph::with_order(3, {{0, 1, 2}, {0, 1, 2}})));
  CHECK(lovasz_feasible(Hypergraph::with_order(3, {})));
  CHECK_THROWS_AS(lovasz_feasible(sts_fixture(9)), Error);
  CHECK(lovasz_feasible(gen_ts(4, 2)));
  CHECK(lovasz_feasible(sts_fixture(7), {.bound = 14, .threads = 2}));
}

TEST_CASE("brute force oracles") {
  const auto sts7 = sts_fixture(7);
  const auto r = brute_force_tour(sts7);
  REQUIRE(r.status == SearchStatus::found);
  CHECK(validate_tour(sts7, *r.tour));

  CHECK(brute_force_tour(dual_harness(named_cubic("petersen")).dual).status == SearchStatus::absent);
  CHECK(brute_force_tour(Hypergraph::with_order(3, {{0, 1, 2}})).status == SearchStatus::absent);
  CHECK(brute_force_tour(gen_sts(13), {.budget = 5}).status == SearchStatus::unknown);

  CHECK_FALSE(brute_force_family(Hypergraph::with_order(3, {{0, 1, 2}})));
  const auto pair = Hypergraph::with_order(3, {{0, 1, 2}, {0, 1, 2}});
  const auto f = brute_force_family(pair);
  REQUIRE(f);
  CHECK(validate_family(pair, *f));
  CHECK_THROWS_AS(brute_force_family(gen_sts(9)), Error);
}

TEST_CASE("tours imply no nontrivial cut edges") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 200; ++i) {
    const auto h = support::random_connected(rng, 7);
    const auto r = brute_force_tour(h);
    if (r.status != SearchStatus::found) continue;
    for (EdgeId e = 0; e < h.size(); ++e) {
      const auto c = classify_cut_edge(h, e);
      CHECK((c == CutClass::not_cut || c == CutClass::trivial_cut));
    }
  }
}

TEST_CASE("odd_degree_screen") {
  CHECK_FALSE(odd_degree_screen(Hypergraph::with_order(3, {{0, 1}, {1, 2}})));
  CHECK(odd_degree_screen(sts_fixture(7)));
  CHECK_FALSE(odd_degree_screen(Hypergraph::with_order(3, {{0, 1, 2}})));
  CHECK_THROWS_AS(odd_degree_screen(Hypergraph::with_order(3, {{0, 1, 2}, {0, 1}})), Error);
}

TEST_CASE("serial and parallel kernels agree") {
  std::mt19937_64 rng(10);
  for (int i = 0; i < 150; ++i) {
    const auto h = support::random_hypergraph(rng, 6, 7, 2, 4);
    CHECK(kernels::serial::lovasz(h) == kernels::parallel::lovasz(h, 4));
    const auto a = kernels::serial::tour(h, kUnlimited);
    const auto b = kernels::parallel::tour(h, kUnlimited, 4);
    CHECK(a.status == b.status);
    CHECK(a.tour == b.tour);
  }
  const auto p = dual_harness(named_cubic("petersen")).dual;
  CHECK(kernels::parallel::tour(p, kUnlimited, 4).status == SearchStatus::absent);
}

TEST_CASE("canonical form") {
  const ClosedTrail t{{2, 0, 1, 2}, {2, 0, 1}};
  const auto c = canonical(t);
  CHECK(c.anchors.front() == 0);
  CHECK(canonical(c) == c);
  const auto tri = Hypergraph::with_order(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(validate_tour(tri, t));
  CHECK(validate_tour(tri, c));
}
