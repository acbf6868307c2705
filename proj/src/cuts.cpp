#include "hypereuler/cuts.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <queue>
#include <set>
#include <string>

namespace hypereuler {

// ---------------------------------------------------------------- max flow

namespace {

class Dinic {
 public:
  explicit Dinic(std::size_t n) : adj_(n), level_(n), it_(n) {}

  void add_arc(int from, int to, int cap) {
    adj_[from].push_back({to, cap, static_cast<int>(adj_[to].size())});
    adj_[to].push_back({from, 0, static_cast<int>(adj_[from].size()) - 1});
  }

  int max_flow(int s, int t) {
    int flow = 0;
    while (bfs(s, t)) {
      std::fill(it_.begin(), it_.end(), 0);
      while (int f = dfs(s, t, std::numeric_limits<int>::max())) flow += f;
    }
    return flow;
  }

  std::vector<char> reachable(int s) const {
    std::vector<char> seen(adj_.size(), 0);
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (const auto& a : adj_[v])
        if (a.cap > 0 && !seen[a.to]) {
          seen[a.to] = 1;
          stack.push_back(a.to);
        }
    }
    return seen;
  }

 private:
  struct Arc {
    int to, cap, rev;
  };

  bool bfs(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<int> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (const auto& a : adj_[v])
        if (a.cap > 0 && level_[a.to] < 0) {
          level_[a.to] = level_[v] + 1;
          q.push(a.to);
        }
    }
    return level_[t] >= 0;
  }

  int dfs(int v, int t, int pushed) {
    if (v == t) return pushed;
    for (int& i = it_[v]; i < static_cast<int>(adj_[v].size()); ++i) {
      Arc& a = adj_[v][i];
      if (a.cap <= 0 || level_[a.to] != level_[v] + 1) continue;
      if (int got = dfs(a.to, t, std::min(pushed, a.cap))) {
        a.cap -= got;
        adj_[a.to][a.rev].cap += got;
        return got;
      }
    }
    return 0;
  }

  std::vector<std::vector<Arc>> adj_;
  std::vector<int> level_, it_;
};

// Vertex v is node v; edge e is split into in-node n+2e and out-node n+2e+1.
Dinic cut_network(const Hypergraph& h) {
  const int n = static_cast<int>(h.order());
  const int inf = static_cast<int>(h.size()) + 1;
  Dinic net(h.order() + 2 * h.size());
  for (EdgeId e = 0; e < h.size(); ++e) {
    const int in = n + 2 * static_cast<int>(e), out = in + 1;
    net.add_arc(in, out, 1);
    for (VertexId v : h.edge(e)) {
      net.add_arc(static_cast<int>(v), in, inf);
      net.add_arc(out, static_cast<int>(v), inf);
    }
  }
  return net;
}

}  // namespace

EdgeCut minimum_edge_cut(const Hypergraph& h) {
  if (h.order() < 2) throw Error(Errc::no_cut_exists, "a single vertex has no proper side");
  if (!is_connected(h)) throw Error(Errc::disconnected, "minimum edge cut needs a connected hypergraph");
  int best = std::numeric_limits<int>::max();
  std::vector<VertexId> best_side;
  for (VertexId t = 1; t < h.order(); ++t) {
    Dinic net = cut_network(h);
    const int flow = net.max_flow(0, static_cast<int>(t));
    if (flow >= best) continue;
    best = flow;
    const auto seen = net.reachable(0);
    best_side.clear();
    for (VertexId v = 0; v < h.order(); ++v)
      if (seen[v]) best_side.push_back(v);
  }
  const auto raw = edge_cut_from_side(h, best_side);
  const auto cut = minimalize_cut(h, raw.cut_edges);
  const auto comps = connected_components(h, cut);
  return edge_cut_from_side(h, comps.front().vertices);
}

std::vector<EdgeId> minimalize_cut(const Hypergraph& h, std::span<const EdgeId> cut) {
  std::vector<EdgeId> f(cut.begin(), cut.end());
  std::sort(f.begin(), f.end());
  f.erase(std::unique(f.begin(), f.end()), f.end());
  if (is_connected(h, f)) throw Error(Errc::not_a_cut, "H minus F is connected");
  for (std::size_t i = 0; i < f.size();) {
    std::vector<EdgeId> smaller = f;
    smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(i));
    if (!is_connected(h, smaller)) f = std::move(smaller);
    else ++i;
  }
  return f;
}

// ---------------------------------------------------------------- collapse

CollapsedHypergraph collapse(const Hypergraph& h, const std::vector<std::vector<VertexId>>& parts) {
  std::vector<int> part_of(h.order(), -1);
  for (std::size_t p = 0; p < parts.size(); ++p)
    for (VertexId v : parts[p]) {
      if (v >= h.order()) throw Error(Errc::overlapping_parts, "vertex out of range");
      if (part_of[v] >= 0 && part_of[v] != static_cast<int>(p))
        throw Error(Errc::overlapping_parts, "vertex " + h.label(v) + " lies in two parts");
      part_of[v] = static_cast<int>(p);
    }
  std::vector<std::string> labels;
  std::vector<std::vector<VertexId>> origin;
  std::vector<VertexId> image(h.order());
  for (VertexId v = 0; v < h.order(); ++v)
    if (part_of[v] < 0) {
      image[v] = static_cast<VertexId>(labels.size());
      labels.push_back(h.label(v));
      origin.push_back({v});
    }
  std::set<std::string> taken(labels.begin(), labels.end());
  CollapsedHypergraph out{Hypergraph::with_order(1, {}), {}, {}, {}};
  for (std::size_t p = 0; p < parts.size(); ++p) {
    std::vector<VertexId> members(parts[p].begin(), parts[p].end());
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    std::string name = "{";
    for (std::size_t i = 0; i < members.size(); ++i) name += (i ? "," : "") + h.label(members[i]);
    name += "}";
    while (taken.count(name)) name += "'";
    taken.insert(name);
    const auto id = static_cast<VertexId>(labels.size());
    for (VertexId v : members) image[v] = id;
    out.collapsed_vertex_ids.push_back(id);
    labels.push_back(name);
    origin.push_back(members);
  }
  std::vector<std::vector<VertexId>> edges;
  for (EdgeId e = 0; e < h.size(); ++e) {
    std::vector<VertexId> ed;
    for (VertexId v : h.edge(e)) ed.push_back(image[v]);
    std::sort(ed.begin(), ed.end());
    ed.erase(std::unique(ed.begin(), ed.end()), ed.end());
    if (ed.size() < 2) continue;
    edges.push_back(std::move(ed));
    out.edge_origin.push_back(e);
  }
  out.graph = Hypergraph(std::move(labels), std::move(edges));
  out.origin = std::move(origin);
  return out;
}

// ---------------------------------------------------------------- component multigraph

namespace {

std::vector<std::uint32_t> component_index(const Hypergraph& h, const std::vector<Component>& comps) {
  std::vector<std::uint32_t> idx(h.order());
  for (std::uint32_t i = 0; i < comps.size(); ++i)
    for (VertexId v : comps[i].vertices) idx[v] = i;
  return idx;
}

bool is_minimal_cut_quiet(const Hypergraph& h, std::span<const EdgeId> cut) {
  try {
    return is_minimal_cut(h, cut);
  } catch (const Error&) {
    return false;
  }
}

}  // namespace

Multigraph component_multigraph(const Hypergraph& h, std::span<const EdgeId> cut,
                                const EulerFamily& family) {
  if (auto v = validate_family(h, family); !v) throw Error(Errc::invalid_inputs, v.violation);
  if (!is_minimal_cut_quiet(h, cut)) throw Error(Errc::invalid_inputs, "F is not a minimal edge cut");
  const auto comps = connected_components(h, cut);
  const auto idx = component_index(h, comps);
  std::vector<std::pair<VertexId, VertexId>> via(h.size());
  for (const auto& t : family.trails)
    for (std::size_t i = 0; i < t.edges.size(); ++i) via[t.edges[i]] = {t.anchors[i], t.anchors[i + 1]};
  Multigraph g{comps.size(), {}};
  for (EdgeId f : cut) {
    auto [x, y] = via[f];
    auto a = idx[x], b = idx[y];
    g.add_edge(std::min(a, b), std::max(a, b));
  }
  return g;
}

Multigraph build_G_alpha(std::size_t component_count, const ChoiceFunction& alpha) {
  Multigraph g{component_count, {}};
  for (const auto& [f, pair] : alpha.assignments) g.add_edge(pair.a, pair.b);
  return g;
}

bool even(const Multigraph& g) { return g.is_even(); }

bool single_nonempty_component(const Multigraph& g) { return g.nonempty_component_count() == 1; }

// ---------------------------------------------------------------- trimming

TrimResult trim_cut_edges(const Hypergraph& h, std::span<const EdgeId> cut, const ChoiceFunction& alpha) {
  const auto comps = connected_components(h, cut);
  const auto idx = component_index(h, comps);
  std::vector<std::vector<VertexId>> edges = h.edges();
  TrimResult out{h, true, {}};
  for (const auto& [f, pair] : alpha.assignments) {
    if (pair.a >= comps.size() || pair.b >= comps.size())
      throw Error(Errc::invalid_inputs, "component index out of range");
    std::vector<VertexId> kept;
    for (VertexId v : h.edge(f))
      if (idx[v] == pair.a || idx[v] == pair.b) kept.push_back(v);
    if (kept.empty())
      throw Error(Errc::invalid_inputs, "edge " + std::to_string(f) + " misses its assigned components");
    if (kept.size() != h.edge(f).size()) out.unchanged = false;
    if (kept.size() < 2) out.degenerate.push_back(f);
    edges[f] = std::move(kept);
  }
  out.graph = Hypergraph(h.labels(), std::move(edges));
  return out;
}

// ---------------------------------------------------------------- assembling

Derived union_of_components(const Hypergraph& h, std::span<const EdgeId> cut,
                            std::span<const std::uint32_t> J) {
  const auto comps = connected_components(h, cut);
  std::vector<VertexId> vs;
  for (auto j : J) {
    if (j >= comps.size()) throw Error(Errc::invalid_inputs, "component index out of range");
    vs.insert(vs.end(), comps[j].vertices.begin(), comps[j].vertices.end());
  }
  std::sort(vs.begin(), vs.end());
  return induced(h, vs);
}

Derived component_hypergraph(const Hypergraph& h, std::span<const EdgeId> cut, std::uint32_t i) {
  const auto comps = connected_components(h, cut);
  if (i >= comps.size()) throw Error(Errc::invalid_inputs, "component index out of range");
  std::vector<char> keep_edge(h.size(), 0);
  for (EdgeId e : comps[i].edges) keep_edge[e] = 1;
  std::vector<EdgeId> drop;
  for (EdgeId e = 0; e < h.size(); ++e)
    if (!keep_edge[e]) drop.push_back(e);
  Derived without = without_edges(h, drop);
  Derived part = induced(without.graph, comps[i].vertices);
  for (auto& v : part.vertex_origin) v = without.vertex_origin[v];
  for (auto& e : part.edge_origin) e = without.edge_origin[e];
  return part;
}

EulerFamily assemble_family(const Hypergraph& h, std::span<const EdgeId> cut,
                            std::span<const std::uint32_t> J, const EulerFamily& family_J,
                            const std::vector<std::pair<std::uint32_t, EulerFamily>>& families_rest) {
  if (family_J.trails.empty()) throw Error(Errc::invalid_pieces, "family for J must be nonempty");
  const Derived joined = union_of_components(h, cut, J);
  if (auto v = validate_family(joined.graph, family_J); !v)
    throw Error(Errc::invalid_pieces, "family for J: " + v.violation);
  EulerFamily out;
  for (const auto& t : family_J.trails)
    out.trails.push_back(lift_walk(t, joined.vertex_origin, joined.edge_origin));
  for (const auto& [i, fam] : families_rest) {
    const Derived part = component_hypergraph(h, cut, i);
    if (auto v = validate_family(part.graph, fam); !v)
      throw Error(Errc::invalid_pieces, "component " + std::to_string(i) + ": " + v.violation);
    for (const auto& t : fam.trails) out.trails.push_back(lift_walk(t, part.vertex_origin, part.edge_origin));
  }
  if (auto v = validate_family(h, out); !v) throw Error(Errc::invalid_pieces, v.violation);
  return out;
}

// ---------------------------------------------------------------- splicing

namespace {

// Rotates t to start at c, oriented so that it leaves c through an edge whose
// origin is `first`. Returns the inner part u .. v between the two edges at c.
Walk open_at(const CollapsedHypergraph& side, const ClosedTrail& t, VertexId c, EdgeId first) {
  const std::size_t k = t.edges.size();
  std::size_t p = k;
  for (std::size_t i = 0; i < k; ++i)
    if (t.anchors[i] == c) p = i;
  if (p == k) throw Error(Errc::collapsed_vertex_not_traversed, "tour avoids the collapsed vertex");
  ClosedTrail r;
  for (std::size_t i = 0; i <= k; ++i) r.anchors.push_back(t.anchors[(p + i) % k]);
  for (std::size_t i = 0; i < k; ++i) r.edges.push_back(t.edges[(p + i) % k]);
  if (side.edge_origin[r.edges.front()] != first) {
    std::reverse(r.anchors.begin(), r.anchors.end());
    std::reverse(r.edges.begin(), r.edges.end());
  }
  if (side.edge_origin[r.edges.front()] != first)
    throw Error(Errc::collapsed_vertex_not_traversed, "collapsed vertex not traversed by the cut edges");
  Walk inner;
  for (std::size_t i = 1; i < k; ++i) {
    const auto& o = side.origin[r.anchors[i]];
    if (o.size() != 1) throw Error(Errc::invalid_inputs, "collapsed vertex appears twice");
    inner.anchors.push_back(o.front());
  }
  for (std::size_t i = 1; i + 1 < k; ++i) inner.edges.push_back(side.edge_origin[r.edges[i]]);
  return inner;
}

}  // namespace

ClosedTrail splice_two_tours(const Hypergraph& h, const CollapsedHypergraph& side1, const ClosedTrail& t1,
                             const CollapsedHypergraph& side2, const ClosedTrail& t2, EdgeId f1, EdgeId f2) {
  if (side1.collapsed_vertex_ids.size() != 1 || side2.collapsed_vertex_ids.size() != 1)
    throw Error(Errc::invalid_inputs, "each side must collapse exactly one part");
  // T1 = c1 f1 u R v f2 c1 and T2 = c2 f2 w S x f1 c2 give u R v f2 w S x f1 u.
  const Walk a = open_at(side1, t1, side1.collapsed_vertex_ids[0], f1);
  const Walk b = open_at(side2, t2, side2.collapsed_vertex_ids[0], f2);
  ClosedTrail out;
  out.anchors = a.anchors;
  out.edges = a.edges;
  out.edges.push_back(f2);
  out.anchors.insert(out.anchors.end(), b.anchors.begin(), b.anchors.end());
  out.edges.insert(out.edges.end(), b.edges.begin(), b.edges.end());
  out.edges.push_back(f1);
  out.anchors.push_back(out.anchors.front());
  if (auto v = validate_tour(h, out); !v) throw Error(Errc::invalid_inputs, "splice: " + v.violation);
  return out;
}

// ---------------------------------------------------------------- cardinality-2 cuts

std::optional<EulerFamily> family_via_card2_cut(const Hypergraph& h, std::span<const EdgeId> cut) {
  if (cut.empty()) throw Error(Errc::bad_cut, "empty cut");
  for (EdgeId f : cut)
    if (f >= h.size() || h.edge(f).size() != 2) throw Error(Errc::bad_cut, "cut edges must have cardinality 2");
  if (!is_minimal_cut_quiet(h, cut)) throw Error(Errc::bad_cut, "not a minimal edge cut");
  const auto comps = connected_components(h, cut);
  if (comps.size() != 2) throw Error(Errc::bad_cut, "expected exactly two components");

  std::vector<char> in_cut(h.size(), 0);
  for (EdgeId f : cut) in_cut[f] = 1;
  FamilySubgraph s(h);
  for (EdgeId f : cut) {
    s.set(h.edge(f)[0], f, true);
    s.set(h.edge(f)[1], f, true);
  }
  for (std::size_t i = 0; i < 2; ++i) {
    const auto side = collapse(h, {comps[1 - i].vertices});
    const auto sub = solve_family_subgraph(side.graph);
    if (!sub) return std::nullopt;
    for (EdgeId e = 0; e < side.graph.size(); ++e) {
      const EdgeId orig = side.edge_origin[e];
      if (in_cut[orig]) continue;
      auto [a, b] = sub->anchors(e);
      s.set(side.origin[a].front(), orig, true);
      s.set(side.origin[b].front(), orig, true);
    }
  }
  return subgraph_to_family(h, s);
}

// ---------------------------------------------------------------- tour search

namespace {

Hypergraph replace_edges(const Hypergraph& h, const std::vector<std::pair<EdgeId, std::vector<VertexId>>>& swaps) {
  auto edges = h.edges();
  for (const auto& [e, verts] : swaps) edges[e] = verts;
  return Hypergraph(h.labels(), std::move(edges));
}

struct Outcome {
  SearchStatus status = SearchStatus::absent;
  std::optional<ClosedTrail> tour;

  static Outcome found(ClosedTrail t) { return {SearchStatus::found, std::move(t)}; }
  static Outcome none() { return {}; }
  static Outcome unknown() { return {SearchStatus::unknown, std::nullopt}; }
};

class TourFinder {
 public:
  TourFinder(std::uint64_t budget, std::size_t depth_cap) : budget_(budget), depth_cap_(depth_cap) {}

  Outcome find(const Hypergraph& input, std::size_t depth) {
    ++stats.calls;
    std::vector<VertexId> drop;
    for (VertexId v = 0; v < input.order(); ++v)
      if (input.degree(v) <= 1) drop.push_back(v);
    if (drop.size() == input.order()) return Outcome::none();
    for (const auto& ed : input.edges())
      if (std::all_of(ed.begin(), ed.end(), [&](VertexId v) { return input.degree(v) <= 1; }))
        return Outcome::none();
    const Derived d = without_vertices(input, drop);
    const Hypergraph& h = d.graph;
    for (const auto& ed : h.edges())
      if (ed.size() < 2) return Outcome::none();

    Outcome r = depth >= depth_cap_ ? brute(h) : dispatch(h, depth);
    if (r.tour) r.tour = lift_walk(*r.tour, d.vertex_origin, d.edge_origin);
    return r;
  }

  FindStats stats;

 private:
  Outcome brute(const Hypergraph& h) {
    ++stats.brute_force_calls;
    if (budget_ == 0) return Outcome::unknown();
    const auto res = brute_force_tour(h, {budget_, 1});
    stats.brute_force_nodes += res.nodes;
    budget_ = budget_ == kUnlimited ? budget_ : budget_ - std::min(budget_, res.nodes);
    if (res.status == SearchStatus::found) return Outcome::found(*res.tour);
    return res.status == SearchStatus::unknown ? Outcome::unknown() : Outcome::none();
  }

  Outcome dispatch(const Hypergraph& h, std::size_t depth) {
    const auto cut = minimum_edge_cut(h).cut_edges;
    auto comps = connected_components(h, cut);
    const std::size_t k = static_cast<std::size_t>(
        std::count_if(comps.begin(), comps.end(), [](const Component& c) { return !c.empty(); }));
    if (k > cut.size()) return Outcome::none();
    if (cut.size() == 2) {
      std::stable_sort(comps.begin(), comps.end(),
                       [](const Component& a, const Component& b) { return a.edges.size() > b.edges.size(); });
      if (k == 2) return collapsed_pair(h, cut, comps, depth);
      if (k == 1) return one_component(h, cut, comps, depth);
      return two_cycle(h);
    }
    if (cut.size() < 2 || comps.size() == 2) return brute(h);
    return large_cut(h, cut, comps, depth);
  }

  Outcome collapsed_pair(const Hypergraph& h, const std::vector<EdgeId>& cut,
                         const std::vector<Component>& comps, std::size_t depth) {
    ++stats.collapsed;
    std::vector<CollapsedHypergraph> sides;
    std::vector<ClosedTrail> tours;
    bool unknown = false;
    for (std::size_t i = 0; i < 2; ++i) {
      std::vector<char> inside(h.order(), 0);
      for (VertexId v : comps[i].vertices) inside[v] = 1;
      std::vector<VertexId> rest;
      for (VertexId v = 0; v < h.order(); ++v)
        if (!inside[v]) rest.push_back(v);
      sides.push_back(collapse(h, {rest}));
      const auto& side = sides.back();
      const VertexId c = side.collapsed_vertex_ids[0];
      std::optional<ClosedTrail> t;
      bool side_unknown = false;
      for (EdgeId e : side.graph.incident(c)) {
        for (VertexId v : side.graph.edge(e)) {
          if (v == c) continue;
          const auto forced = replace_edges(side.graph, {{e, {std::min(v, c), std::max(v, c)}}});
          auto r = find(forced, depth + 1);
          if (r.tour) {
            t = std::move(r.tour);
            break;
          }
          side_unknown |= r.status == SearchStatus::unknown;
        }
        if (t) break;
      }
      if (!t && !side_unknown) return Outcome::none();
      unknown |= side_unknown;
      if (t) tours.push_back(*t);
    }
    if (unknown) return Outcome::unknown();
    return Outcome::found(splice_two_tours(h, sides[0], tours[0], sides[1], tours[1], cut[0], cut[1]));
  }

  Outcome one_component(const Hypergraph& h, const std::vector<EdgeId>& cut,
                        const std::vector<Component>& comps, std::size_t depth) {
    ++stats.one_component;
    const Component& main = comps[0];
    std::vector<char> inside(h.order(), 0);
    for (VertexId v : main.vertices) inside[v] = 1;
    auto trimmed = [&](EdgeId f) {
      std::vector<VertexId> out;
      for (VertexId v : h.edge(f))
        if (inside[v]) out.push_back(v);
      return out;
    };
    const auto f1 = trimmed(cut[0]), f2 = trimmed(cut[1]);
    bool unknown = false;
    if (f1.size() >= 2 && f2.size() >= 2) {
      const Derived d = induced(h, main.vertices);
      auto r = find(d.graph, depth + 1);
      if (r.tour) return Outcome::found(lift_walk(*r.tour, d.vertex_origin, d.edge_origin));
      unknown |= r.status == SearchStatus::unknown;
    }
    for (std::size_t i = 1; i < comps.size(); ++i) {
      const VertexId v = comps[i].vertices.front();
      for (VertexId a : f1)
        for (VertexId b : f2) {
          const auto g = replace_edges(h, {{cut[0], {std::min(a, v), std::max(a, v)}},
                                           {cut[1], {std::min(b, v), std::max(b, v)}}});
          auto r = brute(g);
          if (r.tour) return r;
          unknown |= r.status == SearchStatus::unknown;
        }
    }
    return unknown ? Outcome::unknown() : Outcome::none();
  }

  Outcome two_cycle(const Hypergraph& h) {
    ++stats.two_cycle;
    if (h.size() != 2) return brute(h);
    std::vector<VertexId> shared;
    std::set_intersection(h.edge(0).begin(), h.edge(0).end(), h.edge(1).begin(), h.edge(1).end(),
                          std::back_inserter(shared));
    if (shared.size() < 2) return Outcome::none();
    return Outcome::found(ClosedTrail{{shared[0], shared[1], shared[0]}, {0, 1}});
  }

  Outcome large_cut(const Hypergraph& h, const std::vector<EdgeId>& cut,
                    const std::vector<Component>& comps, std::size_t depth) {
    ++stats.large_cut;
    const std::size_t count = comps.size();
    std::vector<std::uint32_t> comp_of(h.order());
    for (std::uint32_t i = 0; i < count; ++i)
      for (VertexId v : comps[i].vertices) comp_of[v] = i;
    std::vector<std::vector<ComponentPair>> options(cut.size());
    for (std::size_t x = 0; x < cut.size(); ++x) {
      std::vector<std::size_t> hits(count, 0);
      for (VertexId v : h.edge(cut[x])) ++hits[comp_of[v]];
      for (std::uint32_t i = 0; i < count; ++i)
        for (std::uint32_t j = i; j < count; ++j) {
          const bool ok = i == j ? hits[i] >= 2 : hits[i] > 0 && hits[j] > 0;
          if (ok) options[x].push_back({i, j});
        }
    }

    ChoiceFunction alpha;
    std::vector<int> parity(count, 0);
    int odd = 0;
    bool unknown = false;
    std::optional<Outcome> result;

    auto flip = [&](std::uint32_t node) {
      parity[node] ^= 1;
      odd += parity[node] ? 1 : -1;
    };
    auto leaf = [&]() -> std::optional<Outcome> {
      const Multigraph g = build_G_alpha(count, alpha);
      if (!even(g) || !single_nonempty_component(g)) return std::nullopt;
      ++stats.alphas_accepted;
      const TrimResult trim = trim_cut_edges(h, cut, alpha);
      if (trim.unchanged) return brute(h);
      if (!trim.degenerate.empty() || !has_single_nontrivial_component(trim.graph)) return std::nullopt;
      const Derived d = drop_isolated(trim.graph);
      auto r = find(d.graph, depth + 1);
      if (r.tour) return Outcome::found(lift_walk(*r.tour, d.vertex_origin, d.edge_origin));
      unknown |= r.status == SearchStatus::unknown;
      return std::nullopt;
    };
    auto rec = [&](auto&& self, std::size_t x) -> void {
      if (result) return;
      if (x == cut.size()) {
        result = leaf();
        return;
      }
      // Each remaining edge fixes the parity of at most two nodes.
      if (odd > 2 * static_cast<int>(cut.size() - x)) return;
      for (const auto& p : options[x]) {
        if (p.a != p.b) {
          flip(p.a);
          flip(p.b);
        }
        alpha.assignments.emplace_back(cut[x], p);
        self(self, x + 1);
        alpha.assignments.pop_back();
        if (p.a != p.b) {
          flip(p.a);
          flip(p.b);
        }
        if (result) return;
      }
    };
    rec(rec, 0);
    if (result) return *result;
    return unknown ? Outcome::unknown() : Outcome::none();
  }

  std::uint64_t budget_;
  std::size_t depth_cap_;
};

}  // namespace

FindResult find_euler_tour(const Hypergraph& h, FindOptions opt) {
  FindResult out;
  if (h.size() == 0) {
    out.status = SearchStatus::found;
    out.tour = ClosedTrail{{0}, {}};
    return out;
  }
  if (!is_connected(h)) throw Error(Errc::disconnected, "find_euler_tour needs a connected hypergraph");
  TourFinder finder(opt.budget, h.size());
  Outcome r = finder.find(h, 0);
  out.status = r.status;
  out.tour = std::move(r.tour);
  out.stats = finder.stats;
  if (out.tour) {
    if (auto v = validate_tour(h, *out.tour); !v)
      throw Error(Errc::invalid_inputs, "internal: produced tour is invalid: " + v.violation);
  }
  return out;
}

}  // namespace hypereuler
