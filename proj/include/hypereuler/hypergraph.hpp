#pragma once

#include <bitset>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hypereuler/error.hpp"

namespace hypereuler {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

// Vertices are dense ids in label order; edges are positional, so parallel
// edges are distinct records with equal vertex sets.
class Hypergraph {
 public:
  static constexpr std::size_t kMaskLimit = 128;

  Hypergraph(std::vector<std::string> labels, std::vector<std::vector<VertexId>> edges);

  // Anonymous vertices labelled "0", "1", ...
  static Hypergraph with_order(std::size_t order, std::vector<std::vector<VertexId>> edges);

  std::size_t order() const noexcept { return labels_.size(); }
  std::size_t size() const noexcept { return edges_.size(); }

  std::span<const VertexId> edge(EdgeId e) const { return edges_[e]; }
  const std::vector<std::vector<VertexId>>& edges() const noexcept { return edges_; }
  bool contains(EdgeId e, VertexId v) const;

  std::span<const EdgeId> incident(VertexId v) const { return incident_[v]; }
  std::size_t degree(VertexId v) const { return incident_[v].size(); }
  std::size_t flag_count() const noexcept { return flags_; }

  const std::string& label(VertexId v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<VertexId> find(std::string_view label) const;

  // k if every edge has cardinality k (and there is at least one edge).
  std::optional<std::size_t> uniformity() const;
  std::optional<std::size_t> regularity() const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<VertexId>> edges_;
  std::vector<std::vector<EdgeId>> incident_;
  std::vector<std::bitset<kMaskLimit>> masks_;
  std::unordered_map<std::string, VertexId> index_;
  std::size_t flags_ = 0;
};

Hypergraph build_hypergraph(std::vector<std::string> labels,
                            const std::vector<std::vector<std::string>>& edge_lists);

// Loops are stored as (v, v) and count twice towards deg(v).
struct Multigraph {
  std::size_t node_count = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;

  std::uint32_t add_edge(std::uint32_t a, std::uint32_t b);
  std::vector<std::size_t> degrees() const;
  bool is_even() const;
  // Components that contain at least one edge.
  std::size_t nonempty_component_count() const;
  std::vector<std::uint32_t> component_of() const;
};

struct BipartiteIncidenceGraph {
  std::size_t v_count = 0;
  std::size_t e_count = 0;
  std::vector<std::vector<VertexId>> adjacency;  // per e-node

  std::size_t node_count() const noexcept { return v_count + e_count; }
  bool is_connected() const;
};

BipartiteIncidenceGraph incidence_graph(const Hypergraph& h);

struct Component {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;
  bool empty() const noexcept { return edges.empty(); }
};

// Ordered by smallest vertex id. `removed` edges are ignored, which gives the
// components of H minus an edge set without building the subhypergraph.
std::vector<Component> connected_components(const Hypergraph& h,
                                            std::span<const EdgeId> removed = {});
std::size_t component_count(const Hypergraph& h, std::span<const EdgeId> removed = {});
std::size_t nontrivial_component_count(const Hypergraph& h, std::span<const EdgeId> removed = {});
bool is_connected(const Hypergraph& h, std::span<const EdgeId> removed = {});
// Connected once isolated vertices are ignored.
bool has_single_nontrivial_component(const Hypergraph& h);

enum class CutClass { not_cut, trivial_cut, nontrivial_cut, strong_cut };
std::string_view to_string(CutClass c) noexcept;
CutClass classify_cut_edge(const Hypergraph& h, EdgeId e);

Hypergraph dual(const Hypergraph& h);
Multigraph two_section(const Hypergraph& h);

struct Walk {
  std::vector<VertexId> anchors;  // v0 .. vk
  std::vector<EdgeId> edges;      // e1 .. ek

  std::size_t length() const noexcept { return edges.size(); }
  bool closed() const noexcept { return !anchors.empty() && anchors.front() == anchors.back(); }
  bool operator==(const Walk&) const = default;
};

// A closed strict trail uses the same layout with anchors.back() == anchors.front().
using ClosedTrail = Walk;

enum class WalkClass { invalid, walk, trail, strict_trail, path, cycle };
std::string_view to_string(WalkClass c) noexcept;

struct WalkVerdict {
  WalkClass kind = WalkClass::invalid;
  std::string reason;
};
WalkVerdict classify_walk(const Hypergraph& h, const Walk& w);

struct EdgeCut {
  std::vector<VertexId> side;
  std::vector<EdgeId> cut_edges;
};

EdgeCut edge_cut_from_side(const Hypergraph& h, std::span<const VertexId> side);
bool is_minimal_cut(const Hypergraph& h, std::span<const EdgeId> cut);

// A hypergraph derived from a parent together with the maps back to it.
// Each derived edge is a subset of its origin edge, so walks lift directly.
struct Derived {
  Hypergraph graph;
  std::vector<VertexId> vertex_origin;
  std::vector<EdgeId> edge_origin;
};

inline constexpr VertexId kNoVertex = static_cast<VertexId>(-1);

Derived induced(const Hypergraph& h, std::span<const VertexId> vertices);
Derived without_vertices(const Hypergraph& h, std::span<const VertexId> removed);
Derived without_edges(const Hypergraph& h, std::span<const EdgeId> removed);
Derived drop_isolated(const Hypergraph& h);

Walk lift_walk(const Walk& w, std::span<const VertexId> vertex_origin,
               std::span<const EdgeId> edge_origin);

}  // namespace hypereuler
