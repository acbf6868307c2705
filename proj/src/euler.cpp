#include "hypereuler/euler.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "hypereuler/kernels.hpp"
#include "hypereuler/matching.hpp"

namespace hypereuler {

// ---------------------------------------------------------------- validation

namespace {

Verdict check_closed_strict(const Hypergraph& h, const ClosedTrail& t, const std::string& what) {
  if (t.anchors.size() != t.edges.size() + 1)
    return Verdict::fail(what + ": anchor count must be edge count + 1");
  if (!t.closed()) return Verdict::fail(what + ": not closed");
  for (std::size_t i = 0; i < t.edges.size(); ++i) {
    const auto pos = " at step " + std::to_string(i + 1);
    const EdgeId e = t.edges[i];
    const VertexId a = t.anchors[i], b = t.anchors[i + 1];
    if (e >= h.size()) return Verdict::fail(what + ": edge index out of range" + pos);
    if (a >= h.order() || b >= h.order()) return Verdict::fail(what + ": vertex out of range" + pos);
    if (a == b) return Verdict::fail(what + ": consecutive anchors equal" + pos);
    if (!h.contains(e, a) || !h.contains(e, b))
      return Verdict::fail(what + ": anchor not in edge " + std::to_string(e) + pos);
  }
  return {};
}

}  // namespace

Verdict validate_tour(const Hypergraph& h, const ClosedTrail& t) {
  if (h.size() == 0) {
    if (t.edges.empty() && t.anchors.size() == 1 && t.anchors[0] < h.order()) return {};
    return Verdict::fail("edgeless hypergraph admits only a trivial tour");
  }
  if (auto v = check_closed_strict(h, t, "tour"); !v) return v;
  std::vector<char> seen(h.size(), 0);
  for (EdgeId e : t.edges) {
    if (seen[e]) return Verdict::fail("tour: edge " + std::to_string(e) + " traversed twice");
    seen[e] = 1;
  }
  for (EdgeId e = 0; e < h.size(); ++e)
    if (!seen[e]) return Verdict::fail("tour: edge " + std::to_string(e) + " not traversed");
  return {};
}

Verdict validate_family(const Hypergraph& h, const EulerFamily& f) {
  std::vector<int> edge_owner(h.size(), -1), anchor_owner(h.order(), -1);
  for (std::size_t i = 0; i < f.trails.size(); ++i) {
    const auto& t = f.trails[i];
    const auto name = "trail " + std::to_string(i);
    if (t.edges.size() < 2) return Verdict::fail(name + ": a closed strict trail needs two edges");
    if (auto v = check_closed_strict(h, t, name); !v) return v;
    for (EdgeId e : t.edges) {
      if (edge_owner[e] >= 0)
        return Verdict::fail(name + ": edge " + std::to_string(e) + " already traversed");
      edge_owner[e] = static_cast<int>(i);
    }
    for (VertexId v : t.anchors) {
      if (anchor_owner[v] >= 0 && anchor_owner[v] != static_cast<int>(i))
        return Verdict::fail(name + ": anchor " + h.label(v) + " shared with trail " +
                             std::to_string(anchor_owner[v]));
      anchor_owner[v] = static_cast<int>(i);
    }
  }
  for (EdgeId e = 0; e < h.size(); ++e)
    if (edge_owner[e] < 0) return Verdict::fail("edge " + std::to_string(e) + " not traversed");
  return {};
}

bool is_spanning(const Hypergraph& h, const EulerFamily& f) {
  std::vector<char> hit(h.order(), 0);
  for (const auto& t : f.trails)
    for (VertexId v : t.anchors) hit[v] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

ClosedTrail canonical(const ClosedTrail& t) {
  const std::size_t k = t.edges.size();
  if (k == 0) return t;
  const VertexId lo = *std::min_element(t.anchors.begin(), t.anchors.end());
  std::optional<ClosedTrail> best;
  for (std::size_t s = 0; s < k; ++s) {
    if (t.anchors[s] != lo) continue;
    for (int dir : {1, -1}) {
      ClosedTrail c;
      for (std::size_t i = 0; i <= k; ++i) {
        const std::size_t idx = dir > 0 ? (s + i) % k : (s + k - i) % k;
        c.anchors.push_back(t.anchors[idx]);
      }
      for (std::size_t i = 0; i < k; ++i) {
        c.edges.push_back(dir > 0 ? t.edges[(s + i) % k] : t.edges[(s + k - i - 1) % k]);
      }
      if (!best || std::tie(c.anchors, c.edges) < std::tie(best->anchors, best->edges)) best = c;
    }
  }
  return *best;
}

// ---------------------------------------------------------------- FamilySubgraph

FamilySubgraph::FamilySubgraph(const Hypergraph& h)
    : edges_(h.edges()), sel_(h.size()), vdeg_(h.order(), 0), edeg_(h.size(), 0) {
  for (EdgeId e = 0; e < h.size(); ++e) sel_[e].assign(edges_[e].size(), 0);
}

std::size_t FamilySubgraph::position(VertexId v, EdgeId e) const {
  const auto& ed = edges_.at(e);
  auto it = std::lower_bound(ed.begin(), ed.end(), v);
  if (it == ed.end() || *it != v)
    throw Error(Errc::invalid_inputs, "vertex " + std::to_string(v) + " not in edge " + std::to_string(e));
  return static_cast<std::size_t>(it - ed.begin());
}

bool FamilySubgraph::incident(VertexId v, EdgeId e) const {
  if (e >= edges_.size()) return false;
  return std::binary_search(edges_[e].begin(), edges_[e].end(), v);
}

bool FamilySubgraph::has(VertexId v, EdgeId e) const { return sel_[e][position(v, e)] != 0; }

void FamilySubgraph::set(VertexId v, EdgeId e, bool on) {
  char& cell = sel_[e][position(v, e)];
  if ((cell != 0) == on) return;
  cell = on ? 1 : 0;
  if (on) {
    ++vdeg_[v];
    ++edeg_[e];
  } else {
    --vdeg_[v];
    --edeg_[e];
  }
}

std::pair<VertexId, VertexId> FamilySubgraph::anchors(EdgeId e) const {
  std::vector<VertexId> got;
  for (std::size_t i = 0; i < edges_[e].size(); ++i)
    if (sel_[e][i]) got.push_back(edges_[e][i]);
  if (got.size() != 2) throw Error(Errc::bad_degrees, "edge " + std::to_string(e) + " is not at degree 2");
  return {got[0], got[1]};
}

bool FamilySubgraph::satisfies_invariants() const {
  for (auto d : edeg_)
    if (d != 2) return false;
  for (auto d : vdeg_)
    if (d % 2) return false;
  return true;
}

std::vector<std::uint32_t> FamilySubgraph::node_components() const {
  const std::size_t n = vdeg_.size();
  std::vector<std::uint32_t> parent(n + edges_.size());
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t e = 0; e < edges_.size(); ++e)
    for (std::size_t i = 0; i < edges_[e].size(); ++i)
      if (sel_[e][i]) {
        auto a = find(edges_[e][i]), b = find(static_cast<std::uint32_t>(n + e));
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
  for (auto& p : parent) p = find(p);
  return parent;
}

std::size_t FamilySubgraph::nontrivial_components() const {
  const auto comp = node_components();
  std::set<std::uint32_t> roots;
  const std::size_t n = vdeg_.size();
  for (std::size_t e = 0; e < edges_.size(); ++e)
    if (edeg_[e] > 0) roots.insert(comp[n + e]);
  return roots.size();
}

std::size_t FamilySubgraph::component_count() const {
  const auto comp = node_components();
  std::set<std::uint32_t> roots(comp.begin(), comp.end());
  return roots.size();
}

FamilySubgraph family_to_subgraph(const Hypergraph& h, const EulerFamily& f) {
  if (auto v = validate_family(h, f); !v) throw Error(Errc::invalid_family, v.violation);
  FamilySubgraph s(h);
  for (const auto& t : f.trails)
    for (std::size_t i = 0; i < t.edges.size(); ++i) {
      s.set(t.anchors[i], t.edges[i], true);
      s.set(t.anchors[i + 1], t.edges[i], true);
    }
  return s;
}

EulerFamily subgraph_to_family(const Hypergraph& h, const FamilySubgraph& s) {
  if (s.vertex_count() != h.order() || s.edge_count() != h.size() || !s.satisfies_invariants())
    throw Error(Errc::bad_degrees, "subgraph violates the degree conditions");
  // Each edge becomes a graph edge between its two selected vertices.
  Multigraph g{h.order(), {}};
  for (EdgeId e = 0; e < h.size(); ++e) {
    auto [a, b] = s.anchors(e);
    g.add_edge(a, b);
  }
  const auto comp = g.component_of();
  std::map<std::uint32_t, std::vector<std::uint32_t>> groups;
  for (auto [a, b] : g.edges) groups[comp[a]];
  for (std::uint32_t v = 0; v < h.order(); ++v)
    if (groups.count(comp[v])) groups[comp[v]].push_back(v);
  EulerFamily family;
  for (const auto& [root, nodes] : groups) {
    auto circuit = graph_euler_circuit(g, nodes);
    family.trails.push_back(canonical(ClosedTrail{circuit.nodes, circuit.edges}));
  }
  std::sort(family.trails.begin(), family.trails.end(), [](const auto& x, const auto& y) {
    return x.anchors.front() < y.anchors.front();
  });
  return family;
}

// ---------------------------------------------------------------- Hierholzer

GraphCircuit graph_euler_circuit(const Multigraph& g, std::span<const std::uint32_t> component) {
  std::vector<char> in(g.node_count, 0);
  for (auto v : component) in[v] = 1;
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> adj(g.node_count);
  std::size_t inside = 0;
  for (std::uint32_t id = 0; id < g.edges.size(); ++id) {
    auto [a, b] = g.edges[id];
    if (in[a] != in[b]) throw Error(Errc::disconnected, "edge leaves the component");
    if (!in[a]) continue;
    ++inside;
    adj[a].emplace_back(id, b);
    if (a != b) adj[b].emplace_back(id, a);
    else adj[a].emplace_back(id, a);
  }
  for (auto v : component)
    if (adj[v].size() % 2) throw Error(Errc::odd_degree, "node " + std::to_string(v));
  std::optional<std::uint32_t> start;
  for (auto v : component)
    if (!adj[v].empty() && (!start || v < *start)) start = v;

  GraphCircuit out;
  if (!start) {
    if (!component.empty()) out.nodes = {*std::min_element(component.begin(), component.end())};
    return out;
  }
  std::vector<char> used(g.edges.size(), 0);
  std::vector<std::size_t> next(g.node_count, 0);
  // Stack of (node, edge used to reach it).
  std::vector<std::pair<std::uint32_t, std::uint32_t>> stack{{*start, 0}};
  std::vector<std::pair<std::uint32_t, std::uint32_t>> rev;
  while (!stack.empty()) {
    auto v = stack.back().first;
    auto& i = next[v];
    while (i < adj[v].size() && used[adj[v][i].first]) ++i;
    if (i == adj[v].size()) {
      rev.push_back(stack.back());
      stack.pop_back();
    } else {
      auto [id, to] = adj[v][i];
      used[id] = 1;
      stack.emplace_back(to, id);
    }
  }
  if (rev.size() != inside + 1) throw Error(Errc::disconnected, "component edges not connected");
  std::reverse(rev.begin(), rev.end());
  for (std::size_t i = 0; i < rev.size(); ++i) {
    out.nodes.push_back(rev[i].first);
    if (i > 0) out.edges.push_back(rev[i].second);
  }
  return out;
}

// ---------------------------------------------------------------- solve_family

// Degree-constrained subgraph of the incidence graph as a perfect matching.
// Every incidence (v, e) becomes a pair of ports joined by an edge; matching
// the pair means "selected". Edge e gets |e|-2 inner nodes joined to its
// ports, so exactly two of them stay free for selection. Vertex v of degree d
// gets a d-clique of inner nodes joined to its ports, which absorbs any
// number of unselected ports with the same parity as d.
std::optional<FamilySubgraph> solve_family_subgraph(const Hypergraph& h, SolveOptions opt) {
  FamilySubgraph s(h);
  if (h.size() == 0) return s;
  for (const auto& ed : h.edges())
    if (ed.size() < 2) return std::nullopt;

  struct Port {
    VertexId v;
    EdgeId e;
  };
  std::vector<Port> ports;
  std::vector<std::vector<int>> vport(h.order()), eport(h.size());
  for (EdgeId e = 0; e < h.size(); ++e)
    for (VertexId v : h.edge(e)) {
      const int p = static_cast<int>(ports.size());
      ports.push_back({v, e});
      vport[v].push_back(p);
      eport[e].push_back(p);
    }
  // Node layout: v-side port p is 2p, e-side port is 2p+1, inner nodes after.
  int next = static_cast<int>(2 * ports.size());
  std::vector<std::pair<int, int>> edges;
  for (std::size_t p = 0; p < ports.size(); ++p)
    edges.emplace_back(static_cast<int>(2 * p), static_cast<int>(2 * p + 1));
  for (EdgeId e = 0; e < h.size(); ++e) {
    for (std::size_t k = 0; k + 2 < h.edge(e).size(); ++k) {
      const int inner = next++;
      for (int p : eport[e]) edges.emplace_back(2 * p + 1, inner);
    }
  }
  for (VertexId v = 0; v < h.order(); ++v) {
    const int first = next;
    next += static_cast<int>(vport[v].size());
    for (int a = first; a < next; ++a) {
      for (int p : vport[v]) edges.emplace_back(2 * p, a);
      for (int b = a + 1; b < next; ++b) edges.emplace_back(a, b);
    }
  }

  std::vector<int> relabel(static_cast<std::size_t>(next));
  std::iota(relabel.begin(), relabel.end(), 0);
  if (opt.seed != 0) {
    std::mt19937_64 rng(opt.seed);
    std::shuffle(relabel.begin(), relabel.end(), rng);
    std::shuffle(edges.begin(), edges.end(), rng);
    for (auto& [a, b] : edges) {
      a = relabel[a];
      b = relabel[b];
    }
  }
  const auto mate = maximum_matching(static_cast<std::size_t>(next), edges);
  if (std::any_of(mate.begin(), mate.end(), [](int m) { return m == kUnmatched; })) return std::nullopt;
  for (std::size_t p = 0; p < ports.size(); ++p)
    if (mate[relabel[2 * p]] == relabel[2 * p + 1]) s.set(ports[p].v, ports[p].e, true);
  return s;
}

std::optional<EulerFamily> solve_family(const Hypergraph& h, SolveOptions opt) {
  auto s = solve_family_subgraph(h, opt);
  if (!s) return std::nullopt;
  return subgraph_to_family(h, *s);
}

// ---------------------------------------------------------------- oracles

bool lovasz_feasible(const Hypergraph& h, LovaszOptions opt) {
  if (h.order() + h.size() > opt.bound || h.order() + h.size() > 30)
    throw Error(Errc::too_large, "|V|+|E| = " + std::to_string(h.order() + h.size()));
  return opt.threads > 1 ? kernels::parallel::lovasz(h, opt.threads) : kernels::serial::lovasz(h);
}

std::string_view to_string(SearchStatus s) noexcept {
  switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::absent: return "absent";
    case SearchStatus::unknown: return "unknown";
  }
  return "?";
}

TourSearch brute_force_tour(const Hypergraph& h, BruteForceOptions opt) {
  return opt.threads > 1 ? kernels::parallel::tour(h, opt.budget, opt.threads)
                         : kernels::serial::tour(h, opt.budget);
}

std::optional<EulerFamily> brute_force_family(const Hypergraph& h) {
  if (h.size() > 10) throw Error(Errc::too_large, "|E| = " + std::to_string(h.size()));
  FamilySubgraph s(h);
  // Last edge (in id order) touching each vertex; parity is final after it.
  std::vector<int> last(h.order(), -1);
  for (EdgeId e = 0; e < h.size(); ++e)
    for (VertexId v : h.edge(e)) last[v] = static_cast<int>(e);
  std::vector<std::uint32_t> parity(h.order(), 0);

  auto rec = [&](auto&& self, EdgeId e) -> bool {
    if (e == h.size()) return true;
    auto ed = h.edge(e);
    for (std::size_t i = 0; i < ed.size(); ++i)
      for (std::size_t j = i + 1; j < ed.size(); ++j) {
        const VertexId a = ed[i], b = ed[j];
        parity[a] ^= 1;
        parity[b] ^= 1;
        bool ok = true;
        for (VertexId v : ed)
          if (last[v] == static_cast<int>(e) && parity[v]) ok = false;
        if (ok) {
          s.set(a, e, true);
          s.set(b, e, true);
          if (self(self, e + 1)) return true;
          s.set(a, e, false);
          s.set(b, e, false);
        }
        parity[a] ^= 1;
        parity[b] ^= 1;
      }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  return subgraph_to_family(h, s);
}

bool odd_degree_screen(const Hypergraph& h) {
  if (h.size() == 0) return true;
  auto k = h.uniformity();
  if (!k) throw Error(Errc::not_uniform, "odd-degree screen needs a uniform hypergraph");
  if (*k < 2) return false;
  std::size_t odd = 0;
  for (VertexId v = 0; v < h.order(); ++v) odd += h.degree(v) % 2;
  return odd <= (*k - 2) * h.size();
}

}  // namespace hypereuler
