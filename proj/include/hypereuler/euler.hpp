#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hypereuler/hypergraph.hpp"

namespace hypereuler {

struct EulerFamily {
  std::vector<ClosedTrail> trails;

  std::size_t size() const noexcept { return trails.size(); }
  bool operator==(const EulerFamily&) const = default;
};

struct Verdict {
  bool ok = true;
  std::string violation;

  explicit operator bool() const noexcept { return ok; }
  static Verdict fail(std::string why) { return {false, std::move(why)}; }
};

Verdict validate_tour(const Hypergraph& h, const ClosedTrail& t);
Verdict validate_family(const Hypergraph& h, const EulerFamily& f);
bool is_spanning(const Hypergraph& h, const EulerFamily& f);

// Rotate to start at the smallest anchor and read in the lexicographically
// smaller direction.
ClosedTrail canonical(const ClosedTrail& t);

// Spanning subgraph of the incidence graph, kept as a set of incidences.
class FamilySubgraph {
 public:
  explicit FamilySubgraph(const Hypergraph& h);

  std::size_t vertex_count() const noexcept { return vdeg_.size(); }
  std::size_t edge_count() const noexcept { return edeg_.size(); }

  // Whether (v, e) is an incidence of the underlying hypergraph at all.
  bool incident(VertexId v, EdgeId e) const;
  bool has(VertexId v, EdgeId e) const;
  void set(VertexId v, EdgeId e, bool on);
  void toggle(VertexId v, EdgeId e) { set(v, e, !has(v, e)); }

  std::size_t vertex_degree(VertexId v) const { return vdeg_[v]; }
  std::size_t edge_degree(EdgeId e) const { return edeg_[e]; }
  // The two selected vertices of e; requires edge_degree(e) == 2.
  std::pair<VertexId, VertexId> anchors(EdgeId e) const;

  bool satisfies_invariants() const;

  // Component root per node: v-nodes first, then e-nodes.
  std::vector<std::uint32_t> node_components() const;
  std::size_t nontrivial_components() const;
  // Counts isolated v-nodes as components too.
  std::size_t component_count() const;

  bool operator==(const FamilySubgraph& o) const { return sel_ == o.sel_; }

 private:
  std::size_t position(VertexId v, EdgeId e) const;

  std::vector<std::vector<VertexId>> edges_;
  std::vector<std::vector<char>> sel_;
  std::vector<std::uint32_t> vdeg_, edeg_;
};

FamilySubgraph family_to_subgraph(const Hypergraph& h, const EulerFamily& f);
EulerFamily subgraph_to_family(const Hypergraph& h, const FamilySubgraph& s);

struct GraphCircuit {
  std::vector<std::uint32_t> nodes;  // closed: nodes.front() == nodes.back()
  std::vector<std::uint32_t> edges;
};

// Hierholzer on one component, taking the lowest unused edge id first.
GraphCircuit graph_euler_circuit(const Multigraph& g, std::span<const std::uint32_t> component);

struct SolveOptions {
  // Nonzero seeds permute the gadget construction, which changes which
  // family is returned but not whether one exists.
  std::uint64_t seed = 0;
};

std::optional<FamilySubgraph> solve_family_subgraph(const Hypergraph& h, SolveOptions opt = {});
std::optional<EulerFamily> solve_family(const Hypergraph& h, SolveOptions opt = {});

struct LovaszOptions {
  std::size_t bound = 16;
  int threads = 1;
};
bool lovasz_feasible(const Hypergraph& h, LovaszOptions opt = {});

enum class SearchStatus { found, absent, unknown };
std::string_view to_string(SearchStatus s) noexcept;

inline constexpr std::uint64_t kUnlimited = std::numeric_limits<std::uint64_t>::max();

struct TourSearch {
  SearchStatus status = SearchStatus::absent;
  std::optional<ClosedTrail> tour;
  std::uint64_t nodes = 0;
};

struct BruteForceOptions {
  std::uint64_t budget = kUnlimited;
  // With more than one thread every root branch gets the full budget.
  int threads = 1;
};
TourSearch brute_force_tour(const Hypergraph& h, BruteForceOptions opt = {});

std::optional<EulerFamily> brute_force_family(const Hypergraph& h);

bool odd_degree_screen(const Hypergraph& h);

}  // namespace hypereuler
