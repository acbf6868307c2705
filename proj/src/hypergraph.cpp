#include "hypereuler/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace hypereuler {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::unknown_label: return "UnknownLabel";
    case Errc::empty_edge: return "EmptyEdge";
    case Errc::duplicate_label: return "DuplicateLabel";
    case Errc::no_vertices: return "NoVertices";
    case Errc::no_edges: return "NoEdges";
    case Errc::bad_side: return "BadSide";
    case Errc::not_a_cut: return "NotACut";
    case Errc::disconnected: return "Disconnected";
    case Errc::no_cut_exists: return "NoCutExists";
    case Errc::invalid_family: return "InvalidFamily";
    case Errc::bad_degrees: return "BadDegrees";
    case Errc::odd_degree: return "OddDegree";
    case Errc::too_large: return "TooLarge";
    case Errc::not_uniform: return "NotUniform";
    case Errc::overlapping_parts: return "OverlappingParts";
    case Errc::invalid_inputs: return "InvalidInputs";
    case Errc::invalid_pieces: return "InvalidPieces";
    case Errc::collapsed_vertex_not_traversed: return "CollapsedVertexNotTraversed";
    case Errc::bad_cut: return "BadCut";
    case Errc::not_a_cycle: return "NotACycle";
    case Errc::not_interchanging: return "NotInterchanging";
    case Errc::not_covering3: return "NotCovering3";
    case Errc::precondition: return "Precondition";
    case Errc::not_quasi_eulerian: return "NotQuasiEulerian";
    case Errc::not_covering: return "NotCovering";
    case Errc::too_few_edges: return "TooFewEdges";
    case Errc::search_stalled: return "SearchStalled";
    case Errc::bad_order: return "BadOrder";
    case Errc::inadmissible: return "Inadmissible";
    case Errc::unsupported: return "Unsupported";
    case Errc::bad_params: return "BadParams";
    case Errc::not_sts: return "NotSTS";
    case Errc::bad_indices: return "BadIndices";
    case Errc::label_clash: return "LabelClash";
    case Errc::order_too_small: return "OrderTooSmall";
    case Errc::not_cubic_simple: return "NotCubicSimple";
    case Errc::parse_error: return "ParseError";
  }
  return "Error";
}

Hypergraph::Hypergraph(std::vector<std::string> labels, std::vector<std::vector<VertexId>> edges)
    : labels_(std::move(labels)), edges_(std::move(edges)) {
  if (labels_.empty()) throw Error(Errc::no_vertices, "a hypergraph needs at least one vertex");
  for (VertexId v = 0; v < labels_.size(); ++v) {
    if (!index_.emplace(labels_[v], v).second)
      throw Error(Errc::duplicate_label, labels_[v]);
  }
  incident_.resize(labels_.size());
  const bool use_masks = labels_.size() <= kMaskLimit;
  if (use_masks) masks_.resize(edges_.size());
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    auto& ed = edges_[e];
    std::sort(ed.begin(), ed.end());
    ed.erase(std::unique(ed.begin(), ed.end()), ed.end());
    if (ed.empty()) throw Error(Errc::empty_edge, "edge " + std::to_string(e));
    for (VertexId v : ed) {
      if (v >= labels_.size()) throw Error(Errc::unknown_label, "vertex id " + std::to_string(v));
      incident_[v].push_back(e);
      if (use_masks) masks_[e].set(v);
    }
    flags_ += ed.size();
  }
}

Hypergraph Hypergraph::with_order(std::size_t order, std::vector<std::vector<VertexId>> edges) {
  std::vector<std::string> labels(order);
  for (std::size_t i = 0; i < order; ++i) labels[i] = std::to_string(i);
  return Hypergraph(std::move(labels), std::move(edges));
}

bool Hypergraph::contains(EdgeId e, VertexId v) const {
  if (!masks_.empty()) return v < kMaskLimit && masks_[e].test(v);
  return std::binary_search(edges_[e].begin(), edges_[e].end(), v);
}

std::optional<VertexId> Hypergraph::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Hypergraph::uniformity() const {
  if (edges_.empty()) return std::nullopt;
  const std::size_t k = edges_.front().size();
  for (const auto& e : edges_)
    if (e.size() != k) return std::nullopt;
  return k;
}

std::optional<std::size_t> Hypergraph::regularity() const {
  const std::size_t r = incident_.front().size();
  for (const auto& inc : incident_)
    if (inc.size() != r) return std::nullopt;
  return r;
}

Hypergraph build_hypergraph(std::vector<std::string> labels,
                            const std::vector<std::vector<std::string>>& edge_lists) {
  std::unordered_map<std::string, VertexId> index;
  for (VertexId v = 0; v < labels.size(); ++v)
    if (!index.emplace(labels[v], v).second) throw Error(Errc::duplicate_label, labels[v]);
  std::vector<std::vector<VertexId>> edges;
  edges.reserve(edge_lists.size());
  for (const auto& list : edge_lists) {
    if (list.empty()) throw Error(Errc::empty_edge, "edge " + std::to_string(edges.size()));
    auto& ed = edges.emplace_back();
    for (const auto& l : list) {
      auto it = index.find(l);
      if (it == index.end()) throw Error(Errc::unknown_label, l);
      ed.push_back(it->second);
    }
  }
  return Hypergraph(std::move(labels), std::move(edges));
}

// ---------------------------------------------------------------- Multigraph

std::uint32_t Multigraph::add_edge(std::uint32_t a, std::uint32_t b) {
  edges.emplace_back(a, b);
  return static_cast<std::uint32_t>(edges.size() - 1);
}

std::vector<std::size_t> Multigraph::degrees() const {
  std::vector<std::size_t> d(node_count, 0);
  for (auto [a, b] : edges) {
    ++d[a];
    ++d[b];
  }
  return d;
}

bool Multigraph::is_even() const {
  for (auto d : degrees())
    if (d % 2) return false;
  return true;
}

namespace {

struct UnionFind {
  std::vector<std::uint32_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a < b) parent[b] = a;
    else if (b < a) parent[a] = b;
  }
};

}  // namespace

std::vector<std::uint32_t> Multigraph::component_of() const {
  UnionFind uf(node_count);
  for (auto [a, b] : edges) uf.unite(a, b);
  std::vector<std::uint32_t> comp(node_count);
  for (std::uint32_t v = 0; v < node_count; ++v) comp[v] = uf.find(v);
  return comp;
}

std::size_t Multigraph::nonempty_component_count() const {
  auto comp = component_of();
  std::set<std::uint32_t> roots;
  for (auto [a, b] : edges) roots.insert(comp[a]);
  return roots.size();
}

// ---------------------------------------------------------------- incidence

BipartiteIncidenceGraph incidence_graph(const Hypergraph& h) {
  return {h.order(), h.size(), h.edges()};
}

bool BipartiteIncidenceGraph::is_connected() const {
  UnionFind uf(node_count());
  for (std::size_t j = 0; j < e_count; ++j)
    for (VertexId v : adjacency[j]) uf.unite(v, static_cast<std::uint32_t>(v_count + j));
  for (std::uint32_t x = 1; x < node_count(); ++x)
    if (uf.find(x) != uf.find(0)) return false;
  return true;
}

// ---------------------------------------------------------------- components

std::vector<Component> connected_components(const Hypergraph& h, std::span<const EdgeId> removed) {
  std::vector<char> skip(h.size(), 0);
  for (EdgeId e : removed) skip[e] = 1;
  UnionFind uf(h.order());
  for (EdgeId e = 0; e < h.size(); ++e) {
    if (skip[e]) continue;
    auto ed = h.edge(e);
    for (std::size_t i = 1; i < ed.size(); ++i) uf.unite(ed[0], ed[i]);
  }
  std::vector<int> slot(h.order(), -1);
  std::vector<Component> out;
  for (VertexId v = 0; v < h.order(); ++v) {
    auto r = uf.find(v);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[slot[r]].vertices.push_back(v);
  }
  for (EdgeId e = 0; e < h.size(); ++e)
    if (!skip[e]) out[slot[uf.find(h.edge(e)[0])]].edges.push_back(e);
  return out;
}

std::size_t component_count(const Hypergraph& h, std::span<const EdgeId> removed) {
  return connected_components(h, removed).size();
}

std::size_t nontrivial_component_count(const Hypergraph& h, std::span<const EdgeId> removed) {
  std::size_t n = 0;
  for (const auto& c : connected_components(h, removed)) n += !c.empty();
  return n;
}

bool is_connected(const Hypergraph& h, std::span<const EdgeId> removed) {
  return component_count(h, removed) == 1;
}

bool has_single_nontrivial_component(const Hypergraph& h) {
  return nontrivial_component_count(h) == 1;
}

std::string_view to_string(CutClass c) noexcept {
  switch (c) {
    case CutClass::not_cut: return "not_cut";
    case CutClass::trivial_cut: return "trivial_cut";
    case CutClass::nontrivial_cut: return "nontrivial_cut";
    case CutClass::strong_cut: return "strong_cut";
  }
  return "?";
}

CutClass classify_cut_edge(const Hypergraph& h, EdgeId e) {
  const EdgeId removed[] = {e};
  const auto before = connected_components(h);
  const auto after = connected_components(h, removed);
  if (after.size() <= before.size()) return CutClass::not_cut;
  auto nontrivial = [](const std::vector<Component>& cs) {
    return std::count_if(cs.begin(), cs.end(), [](const Component& c) { return !c.empty(); });
  };
  if (nontrivial(after) == nontrivial(before)) return CutClass::trivial_cut;
  if (after.size() == before.size() + h.edge(e).size() - 1) return CutClass::strong_cut;
  return CutClass::nontrivial_cut;
}

// ---------------------------------------------------------------- dual, 2-section

Hypergraph dual(const Hypergraph& h) {
  if (h.size() == 0) throw Error(Errc::no_edges, "dual of an edgeless hypergraph");
  std::vector<std::string> labels(h.size());
  for (EdgeId e = 0; e < h.size(); ++e) labels[e] = "e" + std::to_string(e);
  std::vector<std::vector<VertexId>> edges;
  for (VertexId v = 0; v < h.order(); ++v) {
    auto inc = h.incident(v);
    if (inc.empty()) continue;
    edges.emplace_back(inc.begin(), inc.end());
  }
  return Hypergraph(std::move(labels), std::move(edges));
}

Multigraph two_section(const Hypergraph& h) {
  Multigraph g{h.order(), {}};
  for (const auto& ed : h.edges())
    for (std::size_t i = 0; i < ed.size(); ++i)
      for (std::size_t j = i + 1; j < ed.size(); ++j) g.add_edge(ed[i], ed[j]);
  return g;
}

// ---------------------------------------------------------------- walks

std::string_view to_string(WalkClass c) noexcept {
  switch (c) {
    case WalkClass::invalid: return "invalid";
    case WalkClass::walk: return "walk";
    case WalkClass::trail: return "trail";
    case WalkClass::strict_trail: return "strict_trail";
    case WalkClass::path: return "path";
    case WalkClass::cycle: return "cycle";
  }
  return "?";
}

WalkVerdict classify_walk(const Hypergraph& h, const Walk& w) {
  const std::size_t k = w.edges.size();
  if (w.anchors.size() != k + 1) return {WalkClass::invalid, "anchor count must be edge count + 1"};
  for (VertexId v : w.anchors)
    if (v >= h.order()) return {WalkClass::invalid, "anchor out of range"};
  for (std::size_t i = 0; i < k; ++i) {
    const EdgeId e = w.edges[i];
    const VertexId a = w.anchors[i], b = w.anchors[i + 1];
    if (e >= h.size()) return {WalkClass::invalid, "edge out of range at step " + std::to_string(i)};
    if (a == b) return {WalkClass::invalid, "consecutive anchors equal at step " + std::to_string(i)};
    if (!h.contains(e, a) || !h.contains(e, b))
      return {WalkClass::invalid, "anchor not in edge at step " + std::to_string(i)};
  }

  std::set<EdgeId> edge_set(w.edges.begin(), w.edges.end());
  const bool distinct_edges = edge_set.size() == k;
  std::set<std::pair<VertexId, EdgeId>> flags;
  bool distinct_flags = true;
  for (std::size_t i = 0; i < k && distinct_flags; ++i) {
    distinct_flags = flags.emplace(w.anchors[i], w.edges[i]).second &&
                     flags.emplace(w.anchors[i + 1], w.edges[i]).second;
  }
  auto distinct_prefix = [&](std::size_t count) {
    std::set<VertexId> s(w.anchors.begin(), w.anchors.begin() + static_cast<std::ptrdiff_t>(count));
    return s.size() == count;
  };

  if (w.closed() && k >= 2 && distinct_prefix(k) && distinct_edges) return {WalkClass::cycle, {}};
  if (distinct_prefix(k + 1) && distinct_flags && distinct_edges) return {WalkClass::path, {}};
  if (distinct_edges) return {WalkClass::strict_trail, {}};
  if (distinct_flags) return {WalkClass::trail, {}};
  return {WalkClass::walk, {}};
}

// ---------------------------------------------------------------- cuts

EdgeCut edge_cut_from_side(const Hypergraph& h, std::span<const VertexId> side) {
  std::vector<char> in(h.order(), 0);
  for (VertexId v : side) {
    if (v >= h.order()) throw Error(Errc::bad_side, "vertex out of range");
    in[v] = 1;
  }
  const auto count = std::count(in.begin(), in.end(), 1);
  if (count == 0 || count == static_cast<std::ptrdiff_t>(h.order()))
    throw Error(Errc::bad_side, "side must be a proper nonempty subset");
  EdgeCut cut;
  for (VertexId v = 0; v < h.order(); ++v)
    if (in[v]) cut.side.push_back(v);
  for (EdgeId e = 0; e < h.size(); ++e) {
    bool inside = false, outside = false;
    for (VertexId v : h.edge(e)) (in[v] ? inside : outside) = true;
    if (inside && outside) cut.cut_edges.push_back(e);
  }
  return cut;
}

bool is_minimal_cut(const Hypergraph& h, std::span<const EdgeId> cut) {
  const auto comps = connected_components(h, cut);
  if (comps.size() <= 1) throw Error(Errc::not_a_cut, "H minus F is connected");
  std::vector<std::uint32_t> comp_of(h.order());
  for (std::uint32_t i = 0; i < comps.size(); ++i)
    for (VertexId v : comps[i].vertices) comp_of[v] = i;
  for (EdgeId f : cut) {
    std::vector<char> hit(comps.size(), 0);
    for (VertexId v : h.edge(f)) hit[comp_of[v]] = 1;
    if (std::count(hit.begin(), hit.end(), 1) != static_cast<std::ptrdiff_t>(comps.size()))
      return false;
  }
  return true;
}

// ---------------------------------------------------------------- derived

namespace {

Derived restrict_to(const Hypergraph& h, const std::vector<char>& keep_vertex,
                    const std::vector<char>& keep_edge) {
  Derived d{Hypergraph::with_order(1, {}), {}, {}};
  std::vector<VertexId> local(h.order(), kNoVertex);
  std::vector<std::string> labels;
  for (VertexId v = 0; v < h.order(); ++v) {
    if (!keep_vertex[v]) continue;
    local[v] = static_cast<VertexId>(labels.size());
    labels.push_back(h.label(v));
    d.vertex_origin.push_back(v);
  }
  std::vector<std::vector<VertexId>> edges;
  for (EdgeId e = 0; e < h.size(); ++e) {
    if (!keep_edge[e]) continue;
    std::vector<VertexId> ed;
    for (VertexId v : h.edge(e))
      if (local[v] != kNoVertex) ed.push_back(local[v]);
    if (ed.empty()) continue;
    edges.push_back(std::move(ed));
    d.edge_origin.push_back(e);
  }
  if (labels.empty()) throw Error(Errc::no_vertices, "derived hypergraph would be empty");
  d.graph = Hypergraph(std::move(labels), std::move(edges));
  return d;
}

}  // namespace

Derived induced(const Hypergraph& h, std::span<const VertexId> vertices) {
  std::vector<char> kv(h.order(), 0), ke(h.size(), 1);
  for (VertexId v : vertices) kv[v] = 1;
  return restrict_to(h, kv, ke);
}

Derived without_vertices(const Hypergraph& h, std::span<const VertexId> removed) {
  std::vector<char> kv(h.order(), 1), ke(h.size(), 1);
  for (VertexId v : removed) kv[v] = 0;
  return restrict_to(h, kv, ke);
}

Derived without_edges(const Hypergraph& h, std::span<const EdgeId> removed) {
  std::vector<char> kv(h.order(), 1), ke(h.size(), 1);
  for (EdgeId e : removed) ke[e] = 0;
  return restrict_to(h, kv, ke);
}

Derived drop_isolated(const Hypergraph& h) {
  std::vector<char> kv(h.order(), 0), ke(h.size(), 1);
  for (VertexId v = 0; v < h.order(); ++v) kv[v] = h.degree(v) > 0;
  return restrict_to(h, kv, ke);
}

Walk lift_walk(const Walk& w, std::span<const VertexId> vertex_origin,
               std::span<const EdgeId> edge_origin) {
  Walk out;
  out.anchors.reserve(w.anchors.size());
  out.edges.reserve(w.edges.size());
  for (VertexId v : w.anchors) out.anchors.push_back(vertex_origin[v]);
  for (EdgeId e : w.edges) out.edges.push_back(edge_origin[e]);
  return out;
}

}  // namespace hypereuler
