#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hypereuler/designs.hpp"
#include "hypereuler/io.hpp"
#include "support.hpp"

using namespace hypereuler;

TEST_CASE("terse format") {
  const auto h = io::parse_hypergraph("# a comment\nvertices: a b c d z\na b c\n\nc d   # trailing\nb a c\n");
  CHECK(h.order() == 5);
  CHECK(h.size() == 3);
  CHECK(h.label(4) == "z");
  CHECK(h.degree(4) == 0);
  CHECK(std::ranges::equal(h.edge(0), h.edge(2)));

  const auto implicit = io::parse_hypergraph("x y\ny z\n");
  CHECK(implicit.labels() == std::vector<std::string>{"x", "y", "z"});

  CHECK_THROWS_AS(io::parse_hypergraph("a b\nvertices: a b\n"), Error);
  CHECK_THROWS_AS(io::parse_hypergraph(""), Error);
  CHECK(io::parse_hypergraph("vertices: q\n").size() == 0);
}

TEST_CASE("structured format") {
  const auto h = io::parse_hypergraph(R"({"vertices": ["p", "q", "r"], "edges": [["p", "q"], ["q", "r"]]})");
  CHECK(h.order() == 3);
  CHECK(h.size() == 2);
  CHECK_THROWS_AS(io::parse_hypergraph("{\"edges\": 3}"), Error);
  CHECK_THROWS_AS(io::parse_hypergraph("{broken"), Error);
}

TEST_CASE("write then read round trips") {
  std::mt19937_64 rng(41);
  std::vector<Hypergraph> cases{sts_fixture(9), gen_ts(3, 2), Hypergraph::with_order(3, {})};
  for (int i = 0; i < 50; ++i) cases.push_back(support::random_hypergraph(rng, 7, 6, 1, 4));
  for (const auto& h : cases)
    for (auto f : {io::Format::text, io::Format::structured}) {
      const auto back = io::parse_hypergraph(io::write_hypergraph(h, f));
      CHECK(back.labels() == h.labels());
      CHECK(back.edges() == h.edges());
    }
}

TEST_CASE("certificates") {
  const auto h = sts_fixture(7);
  const auto tour = support::tour_from_text(h, support::kSts7Tour);
  const auto text = io::write_tour(h, tour);
  CHECK(text.starts_with("v 1\ne "));
  const auto parsed = io::parse_certificate(h, text + "FOUND\n");
  REQUIRE(std::holds_alternative<ClosedTrail>(parsed));
  CHECK(std::get<ClosedTrail>(parsed) == tour);

  const auto two = Hypergraph::with_order(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  const auto fam = *solve_family(two);
  const auto ftext = io::write_family(two, fam);
  CHECK(ftext.starts_with("cardinality: 2\n"));
  const auto fparsed = io::parse_certificate(two, ftext);
  REQUIRE(std::holds_alternative<EulerFamily>(fparsed));
  CHECK(std::get<EulerFamily>(fparsed) == fam);

  const auto empty = io::parse_certificate(two, io::write_family(two, EulerFamily{}));
  CHECK(std::get<EulerFamily>(empty).size() == 0);

  CHECK_THROWS_AS(io::parse_certificate(h, "v 1\nv 2\n"), Error);
  CHECK_THROWS_AS(io::parse_certificate(h, "v 1\ne 99\nv 2\n"), Error);
  CHECK_THROWS_AS(io::parse_certificate(h, "v 1\ne 0\n"), Error);
  CHECK_THROWS_AS(io::parse_certificate(h, "v nine\n"), Error);
  CHECK_THROWS_AS(io::parse_certificate(h, "w 1\n"), Error);
}
