#include "hypereuler/interchange.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace hypereuler {

namespace {

void check_cycle(const FamilySubgraph& s, const InterchangeCycle& c) {
  const std::size_t k = c.steps.size();
  if (k < 2) throw Error(Errc::not_a_cycle, "a cycle needs at least two e-nodes");
  std::set<VertexId> vs;
  std::set<EdgeId> es;
  for (std::size_t i = 0; i < k; ++i) {
    const auto [v, e] = c.steps[i];
    const VertexId next = c.steps[(i + 1) % k].first;
    if (v >= s.vertex_count() || e >= s.edge_count() || !s.incident(v, e) || !s.incident(next, e))
      throw Error(Errc::not_a_cycle, "step " + std::to_string(i) + " is not an incidence");
    vs.insert(v);
    es.insert(e);
  }
  if (vs.size() != k || es.size() != k) throw Error(Errc::not_a_cycle, "repeated node");
}

void toggle_cycle(FamilySubgraph& s, const InterchangeCycle& c) {
  const std::size_t k = c.steps.size();
  for (std::size_t i = 0; i < k; ++i) {
    const auto [v, e] = c.steps[i];
    s.toggle(v, e);
    s.toggle(c.steps[(i + 1) % k].first, e);
  }
}

// Depth-first enumeration of interchanging cycles by increasing length. Each
// cycle is rooted at its smallest vertex.
class CycleSearch {
 public:
  CycleSearch(const Hypergraph& h, const FamilySubgraph& s, std::size_t max_len, std::uint64_t node_limit)
      : h_(h), s_(s), max_len_(max_len), node_limit_(node_limit), vseen_(h.order(), 0), eseen_(h.size(), 0) {}

  // Calls visit on each cycle until it returns true.
  bool run(const std::function<bool(const InterchangeCycle&)>& visit) {
    visit_ = &visit;
    for (target_ = 2; target_ <= max_len_; ++target_)
      for (root_ = 0; root_ < h_.order(); ++root_) {
        vseen_[root_] = 1;
        const bool done = extend(root_);
        vseen_[root_] = 0;
        if (done) return true;
        if (nodes_ >= node_limit_) return false;
      }
    return false;
  }

 private:
  bool extend(VertexId cur) {
    if (++nodes_ >= node_limit_) return false;
    for (EdgeId e : h_.incident(cur)) {
      if (eseen_[e]) continue;
      const bool in_cur = s_.has(cur, e);
      for (VertexId w : h_.edge(e)) {
        if (w == cur || s_.has(w, e) == in_cur) continue;
        if (w == root_) {
          if (cycle_.steps.size() + 1 != target_) continue;
          cycle_.steps.emplace_back(cur, e);
          const bool stop = (*visit_)(cycle_);
          cycle_.steps.pop_back();
          if (stop) return true;
          continue;
        }
        if (w < root_ || vseen_[w] || cycle_.steps.size() + 1 >= target_) continue;
        vseen_[w] = 1;
        eseen_[e] = 1;
        cycle_.steps.emplace_back(cur, e);
        const bool done = extend(w);
        cycle_.steps.pop_back();
        eseen_[e] = 0;
        vseen_[w] = 0;
        if (done) return true;
        if (nodes_ >= node_limit_) return false;
      }
    }
    return false;
  }

  const Hypergraph& h_;
  const FamilySubgraph& s_;
  std::size_t max_len_;
  std::uint64_t node_limit_;
  std::uint64_t nodes_ = 0;
  std::size_t target_ = 2;
  VertexId root_ = 0;
  std::vector<char> vseen_, eseen_;
  InterchangeCycle cycle_;
  const std::function<bool(const InterchangeCycle&)>* visit_ = nullptr;
};

// Lowest-id non-articulation v-node of each component of G_S, isolated
// v-nodes included.
std::vector<VertexId> non_cut_picks(const Hypergraph& h, const FamilySubgraph& s) {
  const std::size_t n = h.order(), total = n + h.size();
  std::vector<std::vector<std::uint32_t>> adj(total);
  for (EdgeId e = 0; e < h.size(); ++e)
    for (VertexId v : h.edge(e))
      if (s.has(v, e)) {
        adj[v].push_back(static_cast<std::uint32_t>(n + e));
        adj[n + e].push_back(v);
      }
  std::vector<int> disc(total, -1), low(total, 0);
  std::vector<char> articulation(total, 0);
  int timer = 0;
  std::function<void(std::uint32_t, int)> dfs = [&](std::uint32_t u, int parent) {
    disc[u] = low[u] = timer++;
    int children = 0;
    for (auto w : adj[u]) {
      if (disc[w] < 0) {
        ++children;
        dfs(w, static_cast<int>(u));
        low[u] = std::min(low[u], low[w]);
        if (parent >= 0 && low[w] >= disc[u]) articulation[u] = 1;
      } else if (static_cast<int>(w) != parent) {
        low[u] = std::min(low[u], disc[w]);
      }
    }
    if (parent < 0 && children > 1) articulation[u] = 1;
  };
  const auto comp = s.node_components();
  std::map<std::uint32_t, VertexId> pick;
  for (std::uint32_t x = 0; x < total; ++x)
    if (disc[x] < 0) dfs(x, -1);
  for (VertexId v = 0; v < n; ++v)
    if (!articulation[v] && !pick.count(comp[v])) pick[comp[v]] = v;
  std::vector<VertexId> out;
  for (const auto& [root, v] : pick) out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

// Cycle through one non-cut v-node per component of G_S, consecutive picks
// joined by a covering edge.
std::optional<InterchangeCycle> across_components(const Hypergraph& h, const FamilySubgraph& s) {
  const auto picks = non_cut_picks(h, s);
  if (picks.size() < 3 || picks.size() != s.component_count()) return std::nullopt;
  InterchangeCycle c;
  for (std::size_t i = 0; i < picks.size(); ++i) {
    const VertexId a = picks[i], b = picks[(i + 1) % picks.size()];
    std::optional<EdgeId> link;
    for (EdgeId e : h.incident(a))
      if (h.contains(e, b)) {
        link = e;
        break;
      }
    if (!link) return std::nullopt;
    c.steps.emplace_back(a, *link);
  }
  try {
    if (!is_interchanging(s, c)) return std::nullopt;
  } catch (const Error&) {
    return std::nullopt;
  }
  return c;
}

std::size_t nontrivial_after(FamilySubgraph& work, const InterchangeCycle& c) {
  toggle_cycle(work, c);
  const std::size_t n = work.nontrivial_components();
  toggle_cycle(work, c);
  return n;
}

std::optional<InterchangeCycle> bounded_search(const Hypergraph& h, const FamilySubgraph& s,
                                               std::uint64_t node_limit) {
  const std::size_t current = s.nontrivial_components();
  FamilySubgraph work = s;
  std::optional<InterchangeCycle> found;
  CycleSearch search(h, s, std::max<std::size_t>(2, h.size()), node_limit);
  search.run([&](const InterchangeCycle& c) {
    if (nontrivial_after(work, c) < current) {
      found = c;
      return true;
    }
    return false;
  });
  return found;
}

// An interchange that keeps at least two nontrivial components but reaches
// three or more components overall, followed by the cross-component cycle.
std::optional<std::pair<InterchangeCycle, InterchangeCycle>> stepping_pair(const Hypergraph& h,
                                                                           const FamilySubgraph& s,
                                                                           std::uint64_t node_limit) {
  const std::size_t current = s.nontrivial_components();
  FamilySubgraph work = s;
  std::optional<std::pair<InterchangeCycle, InterchangeCycle>> found;
  CycleSearch search(h, s, std::max<std::size_t>(2, h.size()), node_limit);
  search.run([&](const InterchangeCycle& c) {
    toggle_cycle(work, c);
    if (work.component_count() >= 3 && work.nontrivial_components() >= 2) {
      if (auto second = across_components(h, work)) {
        if (nontrivial_after(work, *second) < current) found = std::make_pair(c, *second);
      }
    }
    toggle_cycle(work, c);
    return found.has_value();
  });
  return found;
}

}  // namespace

bool is_interchanging(const FamilySubgraph& s, const InterchangeCycle& c) {
  check_cycle(s, c);
  const std::size_t k = c.steps.size();
  for (std::size_t i = 0; i < k; ++i) {
    const auto [v, e] = c.steps[i];
    if (s.has(v, e) == s.has(c.steps[(i + 1) % k].first, e)) return false;
  }
  return true;
}

FamilySubgraph apply_interchange(const FamilySubgraph& s, const InterchangeCycle& c) {
  if (!is_interchanging(s, c)) throw Error(Errc::not_interchanging, "cycle is not interchanging");
  FamilySubgraph out = s;
  toggle_cycle(out, c);
  return out;
}

bool is_covering_hypergraph(const Hypergraph& h, std::size_t k) {
  if (k < 2 || h.uniformity() != k || h.order() < k) return false;
  std::set<std::vector<VertexId>> covered;
  for (const auto& ed : h.edges())
    for (std::size_t skip = 0; skip < ed.size(); ++skip) {
      std::vector<VertexId> sub;
      for (std::size_t i = 0; i < ed.size(); ++i)
        if (i != skip) sub.push_back(ed[i]);
      covered.insert(sub);
    }
  // Walk every (k-1)-subset of V in lexicographic order.
  std::vector<VertexId> sub(k - 1);
  for (std::size_t i = 0; i + 1 < k; ++i) sub[i] = static_cast<VertexId>(i);
  const auto n = static_cast<VertexId>(h.order());
  for (;;) {
    if (!covered.count(sub)) return false;
    std::size_t i = k - 1;
    while (i > 0 && sub[i - 1] == n - (k - 1) + (i - 1)) --i;
    if (i == 0) return true;
    ++sub[i - 1];
    for (std::size_t j = i; j + 1 < k; ++j) sub[j] = sub[j - 1] + 1;
  }
}

std::vector<InterchangeCycle> interchanging_cycles(const Hypergraph& h, const FamilySubgraph& s,
                                                   std::size_t max_length, std::size_t limit) {
  std::vector<InterchangeCycle> out;
  if (limit == 0) return out;
  CycleSearch search(h, s, max_length, kUnlimited);
  search.run([&](const InterchangeCycle& c) {
    out.push_back(c);
    return out.size() >= limit;
  });
  return out;
}

std::optional<InterchangeCycle> find_diminishing_cycle(const Hypergraph& h, const FamilySubgraph& s) {
  if (!is_covering_hypergraph(h, 3)) throw Error(Errc::not_covering3, "not a covering 3-hypergraph");
  if (s.nontrivial_components() < 2) throw Error(Errc::precondition, "family is already a tour");
  if (s.component_count() >= 3) {
    if (auto c = across_components(h, s)) {
      FamilySubgraph work = s;
      if (nontrivial_after(work, *c) < s.nontrivial_components()) return c;
    }
  }
  return bounded_search(h, s, MinimizeOptions{}.search_nodes);
}

EulerFamily minimize_family(const Hypergraph& h, MinimizeOptions opt, MinimizeStats* stats) {
  MinimizeStats local;
  MinimizeStats& st = stats ? *stats : local;
  auto start = solve_family_subgraph(h);
  if (!start) throw Error(Errc::not_quasi_eulerian, "hypergraph has no Euler family");
  FamilySubgraph s = *start;
  st.initial_cardinality = s.nontrivial_components();
  const bool covering = is_covering_hypergraph(h, 3);
  std::uint64_t seed = 0;

  while (s.nontrivial_components() > 1) {
    std::optional<InterchangeCycle> c;
    if (covering && s.component_count() >= 3) {
      if (auto a = across_components(h, s)) {
        FamilySubgraph work = s;
        if (nontrivial_after(work, *a) < s.nontrivial_components()) c = a;
      }
    }
    if (!c) c = bounded_search(h, s, opt.search_nodes);
    if (c) {
      s = apply_interchange(s, *c);
      ++st.interchanges;
      continue;
    }
    if (covering) {
      if (auto pair = stepping_pair(h, s, opt.search_nodes)) {
        s = apply_interchange(apply_interchange(s, pair->first), pair->second);
        ++st.stepping_moves;
        continue;
      }
    }
    if (st.restarts >= opt.restarts) break;
    ++st.restarts;
    auto fresh = solve_family_subgraph(h, SolveOptions{++seed});
    if (fresh && fresh->nontrivial_components() <= s.nontrivial_components()) s = *fresh;
  }
  if (covering && h.size() >= 2 && s.nontrivial_components() > 1)
    throw Error(Errc::search_stalled, "no diminishing interchange found within the search bounds");
  return subgraph_to_family(h, s);
}

ClosedTrail covering_tour(const Hypergraph& h) {
  const auto k = h.uniformity();
  if (!k || *k < 3 || !is_covering_hypergraph(h, *k))
    throw Error(Errc::not_covering, "expected a covering k-hypergraph with k >= 3");
  if (h.size() < 2) throw Error(Errc::too_few_edges, "a single edge is not eulerian");
  if (*k == 3) {
    auto fam = minimize_family(h);
    if (fam.size() != 1) throw Error(Errc::search_stalled, "minimization did not reach a tour");
    return fam.trails.front();
  }
  // Drop vertex 0. Edges through it lose it; every other edge loses its
  // smallest vertex. Either way that is the first entry. Vertex v becomes v-1.
  std::vector<std::vector<VertexId>> edges;
  for (const auto& ed : h.edges()) {
    auto& next = edges.emplace_back();
    for (std::size_t i = 1; i < ed.size(); ++i) next.push_back(ed[i] - 1);
  }
  std::vector<std::string> labels(h.labels().begin() + 1, h.labels().end());
  const Hypergraph smaller(std::move(labels), std::move(edges));
  ClosedTrail t = covering_tour(smaller);
  for (auto& v : t.anchors) ++v;
  if (auto v = validate_tour(h, t); !v) throw Error(Errc::invalid_inputs, "lifted tour invalid: " + v.violation);
  return t;
}

}  // namespace hypereuler
