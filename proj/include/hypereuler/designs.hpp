#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "hypereuler/euler.hpp"
#include "hypereuler/hypergraph.hpp"

namespace hypereuler {

// Vertices are labelled "1" .. "n".
Hypergraph gen_sts(std::size_t n);
Hypergraph sts_fixture(std::size_t n);
Hypergraph gen_ts(std::size_t n, std::size_t lambda);
Hypergraph complete_uniform(std::size_t n, std::size_t k);
// Complete k-uniform hypergraph; with a seed, edges are greedily removed in
// a seeded random order while every ell-subset stays covered.
Hypergraph gen_covering(std::size_t n, std::size_t k, std::size_t ell,
                        std::optional<std::uint64_t> thin_seed = std::nullopt);

bool is_triple_system(const Hypergraph& h, std::size_t lambda);
bool covers_all_subsets(const Hypergraph& h, std::size_t ell);

struct LabeledTwoSection {
  Multigraph graph;                               // complete graph, edges in lexicographic order
  std::vector<EdgeId> phi;                        // graph edge -> hyperedge
  std::vector<VertexId> label;                    // graph edge -> third vertex
  std::vector<std::vector<std::uint32_t>> index;  // index[u][v] = graph edge

  std::uint32_t edge(VertexId u, VertexId v) const { return index[u][v]; }
  VertexId label_of(VertexId u, VertexId v) const { return label[index[u][v]]; }
};

LabeledTwoSection labeled_two_section(const Hypergraph& h);

// Cycles are vertex lists v0 .. v(k-1); the closing edge is implicit.
std::vector<VertexId> cycle_exchange(const std::vector<VertexId>& cycle, std::size_t i, std::size_t j);
ClosedTrail lift_cycle(const LabeledTwoSection& l, const std::vector<VertexId>& cycle);

struct StsTourOptions {
  VertexId u0 = 0;
  std::uint64_t seed = 1;
  std::size_t max_restarts = 500;
};

struct StsTourReport {
  ClosedTrail tour;
  bool pipeline = false;  // false when the order was too small and minimization was used
  std::size_t m_c = 0;
  std::size_t restarts = 0;
  std::size_t exchanges = 0;
  std::vector<VertexId> hamilton;  // the cycle of G - u0 that was lifted
};

StsTourReport sts_tour_report(const Hypergraph& h, StsTourOptions opt = {});
ClosedTrail sts_tour(const Hypergraph& h, StsTourOptions opt = {});

// Simple cubic graphs by name: k4, prism, petersen, cube.
Multigraph named_cubic(std::string_view name);
Hypergraph graph_as_hypergraph(const Multigraph& g);
bool is_hamilton_cycle(const Multigraph& g, const std::vector<std::uint32_t>& cycle);

struct DualHarness {
  Multigraph graph;
  Hypergraph dual;  // vertex i is graph edge i, edge v is the star of node v

  ClosedTrail hamilton_to_tour(const std::vector<std::uint32_t>& cycle) const;
  std::vector<std::uint32_t> tour_to_hamilton(const ClosedTrail& tour) const;
};

DualHarness dual_harness(const Multigraph& g);

}  // namespace hypereuler
