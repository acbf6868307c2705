#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hypereuler/euler.hpp"
#include "hypereuler/hypergraph.hpp"

namespace hypereuler {

// Minimum-cardinality edge cut via unit-capacity max flow, then minimalized.
// The returned side is the component of H minus the cut containing vertex 0.
EdgeCut minimum_edge_cut(const Hypergraph& h);
std::vector<EdgeId> minimalize_cut(const Hypergraph& h, std::span<const EdgeId> cut);

struct CollapsedHypergraph {
  Hypergraph graph;
  std::vector<VertexId> collapsed_vertex_ids;   // one per part
  std::vector<std::vector<VertexId>> origin;    // new vertex -> original vertices
  std::vector<EdgeId> edge_origin;              // new edge -> original edge
};

// Kept vertices come first in original order, then one new vertex per part.
CollapsedHypergraph collapse(const Hypergraph& h, const std::vector<std::vector<VertexId>>& parts);

// Components are indexed as in connected_components(h, cut).
Multigraph component_multigraph(const Hypergraph& h, std::span<const EdgeId> cut,
                                const EulerFamily& family);

struct ComponentPair {
  std::uint32_t a = 0;
  std::uint32_t b = 0;  // a <= b; a == b is a loop
  bool operator==(const ComponentPair&) const = default;
};

struct ChoiceFunction {
  std::vector<std::pair<EdgeId, ComponentPair>> assignments;
};

Multigraph build_G_alpha(std::size_t component_count, const ChoiceFunction& alpha);
bool even(const Multigraph& g);
bool single_nonempty_component(const Multigraph& g);

struct TrimResult {
  Hypergraph graph;               // same vertices and edge ids as the input
  bool unchanged = true;
  std::vector<EdgeId> degenerate; // trimmed edges of cardinality 1
};
TrimResult trim_cut_edges(const Hypergraph& h, std::span<const EdgeId> cut, const ChoiceFunction& alpha);

// H[union of V(H_j), j in J] and the component H_i, with maps back to H.
Derived union_of_components(const Hypergraph& h, std::span<const EdgeId> cut,
                            std::span<const std::uint32_t> J);
Derived component_hypergraph(const Hypergraph& h, std::span<const EdgeId> cut, std::uint32_t i);

// family_J is expressed in union_of_components(h, cut, J); each rest entry in
// component_hypergraph(h, cut, i).
EulerFamily assemble_family(const Hypergraph& h, std::span<const EdgeId> cut,
                            std::span<const std::uint32_t> J, const EulerFamily& family_J,
                            const std::vector<std::pair<std::uint32_t, EulerFamily>>& families_rest);

// t1 and t2 are tours of side1.graph and side2.graph, the hypergraph with the
// opposite side collapsed; f1 and f2 are the two cut edges of h.
ClosedTrail splice_two_tours(const Hypergraph& h, const CollapsedHypergraph& side1, const ClosedTrail& t1,
                             const CollapsedHypergraph& side2, const ClosedTrail& t2, EdgeId f1, EdgeId f2);

std::optional<EulerFamily> family_via_card2_cut(const Hypergraph& h, std::span<const EdgeId> cut);

struct FindOptions {
  std::uint64_t budget = kUnlimited;  // brute-force nodes, shared across the whole search
};

struct FindStats {
  std::uint64_t calls = 0;
  std::uint64_t brute_force_calls = 0;
  std::uint64_t brute_force_nodes = 0;
  std::uint64_t collapsed = 0;
  std::uint64_t one_component = 0;
  std::uint64_t two_cycle = 0;
  std::uint64_t large_cut = 0;
  std::uint64_t alphas_accepted = 0;
};

struct FindResult {
  SearchStatus status = SearchStatus::absent;
  std::optional<ClosedTrail> tour;
  FindStats stats;
};

FindResult find_euler_tour(const Hypergraph& h, FindOptions opt = {});

}  // namespace hypereuler
