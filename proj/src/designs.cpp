#include "hypereuler/designs.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <tuple>

#include "hypereuler/interchange.hpp"

namespace hypereuler {

namespace {

std::vector<std::string> numeric_labels(std::size_t n) {
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i + 1);
  return labels;
}

Hypergraph from_triples(std::size_t n, std::vector<std::vector<VertexId>> triples) {
  return Hypergraph(numeric_labels(n), std::move(triples));
}

// n = 6t+3 on Z_(2t+1) x Z_3 with x o y = (x+y)/2.
std::vector<std::vector<VertexId>> bose(std::size_t n) {
  const std::size_t q = n / 3;
  auto id = [q](std::size_t x, std::size_t i) { return static_cast<VertexId>((i % 3) * q + x); };
  auto op = [q](std::size_t x, std::size_t y) { return ((x + y) * ((q + 1) / 2)) % q; };
  std::vector<std::vector<VertexId>> out;
  for (std::size_t x = 0; x < q; ++x) out.push_back({id(x, 0), id(x, 1), id(x, 2)});
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t x = 0; x < q; ++x)
      for (std::size_t y = x + 1; y < q; ++y) out.push_back({id(x, i), id(y, i), id(op(x, y), i + 1)});
  return out;
}

// n = 6t+1 on Z_(2t) x Z_3 plus a point at infinity, using the
// half-idempotent quasigroup x o y = h(x+y) where h halves evens and sends
// odd s to t + (s-1)/2.
std::vector<std::vector<VertexId>> skolem(std::size_t n) {
  const std::size_t t = (n - 1) / 6, q = 2 * t;
  auto id = [q](std::size_t x, std::size_t i) { return static_cast<VertexId>((i % 3) * q + x); };
  const auto inf = static_cast<VertexId>(n - 1);
  auto op = [q, t](std::size_t x, std::size_t y) {
    const std::size_t s = (x + y) % q;
    return s % 2 == 0 ? s / 2 : t + (s - 1) / 2;
  };
  std::vector<std::vector<VertexId>> out;
  for (std::size_t x = 0; x < t; ++x) out.push_back({id(x, 0), id(x, 1), id(x, 2)});
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t x = 0; x < t; ++x) out.push_back({inf, id(x + t, i), id(x, i + 1)});
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t x = 0; x < q; ++x)
      for (std::size_t y = x + 1; y < q; ++y) out.push_back({id(x, i), id(y, i), id(op(x, y), i + 1)});
  return out;
}

std::vector<std::vector<VertexId>> k_subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<VertexId>> out;
  if (k > n || k == 0) return out;
  std::vector<VertexId> cur(k);
  std::iota(cur.begin(), cur.end(), 0u);
  for (;;) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return out;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
}

// Hill climbing for a TS(n, lambda): join a deficient point x to a
// deficient partner y and a third point z, preferring z deficient with both,
// then evict one triple through each pair that is already saturated.
std::optional<std::vector<std::vector<VertexId>>> ts_hill_climb(std::size_t n, std::size_t lambda,
                                                               std::uint64_t seed) {
  const std::size_t target = lambda * n * (n - 1) / 6;
  std::vector<std::vector<std::size_t>> deficit(n, std::vector<std::size_t>(n, lambda));
  std::vector<std::array<VertexId, 3>> triples;
  std::mt19937_64 rng(seed);
  auto touch = [&](const std::array<VertexId, 3>& t, bool add) {
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) {
        auto& d = deficit[t[i]][t[j]];
        add ? --d : ++d;
        deficit[t[j]][t[i]] = d;
      }
  };
  auto evict_through = [&](VertexId a, VertexId b) {
    std::vector<std::size_t> through;
    for (std::size_t i = 0; i < triples.size(); ++i)
      if (std::ranges::count(triples[i], a) && std::ranges::count(triples[i], b)) through.push_back(i);
    const std::size_t victim = through[rng() % through.size()];
    touch(triples[victim], false);
    triples[victim] = triples.back();
    triples.pop_back();
  };
  std::vector<VertexId> partners, thirds;
  const std::size_t cap = 2000 * target + 10000;
  for (std::size_t step = 0; step < cap && triples.size() < target; ++step) {
    const auto x = static_cast<VertexId>(rng() % n);
    partners.clear();
    for (VertexId y = 0; y < n; ++y)
      if (y != x && deficit[x][y] > 0) partners.push_back(y);
    if (partners.empty()) continue;
    const VertexId y = partners[rng() % partners.size()];
    thirds.clear();
    for (VertexId z : partners)
      if (z != y && deficit[y][z] > 0) thirds.push_back(z);
    if (thirds.empty())
      for (VertexId z : partners)
        if (z != y) thirds.push_back(z);
    if (thirds.empty())
      for (VertexId z = 0; z < n; ++z)
        if (z != x && z != y) thirds.push_back(z);
    const VertexId z = thirds[rng() % thirds.size()];
    if (deficit[x][z] == 0) evict_through(x, z);
    if (deficit[y][z] == 0) evict_through(y, z);
    std::array<VertexId, 3> t{x, y, z};
    std::sort(t.begin(), t.end());
    touch(t, true);
    triples.push_back(t);
  }
  if (triples.size() < target) return std::nullopt;
  std::sort(triples.begin(), triples.end());
  std::vector<std::vector<VertexId>> out;
  for (const auto& t : triples) out.push_back({t[0], t[1], t[2]});
  return out;
}

}  // namespace

Hypergraph gen_sts(std::size_t n) {
  if (n < 3 || (n % 6 != 1 && n % 6 != 3)) throw Error(Errc::bad_order, "STS(" + std::to_string(n) + ") does not exist");
  return from_triples(n, n % 6 == 3 ? bose(n) : skolem(n));
}

Hypergraph sts_fixture(std::size_t n) {
  auto parse = [](std::initializer_list<const char*> words) {
    std::vector<std::vector<VertexId>> out;
    for (const char* w : words) {
      auto& e = out.emplace_back();
      for (const char* c = w; *c; ++c) e.push_back(static_cast<VertexId>(*c - '1'));
    }
    return out;
  };
  if (n == 7) return from_triples(7, parse({"123", "145", "167", "247", "256", "346", "357"}));
  if (n == 9)
    return from_triples(9, parse({"123", "456", "789", "147", "258", "369", "159", "267", "348", "168", "249", "357"}));
  throw Error(Errc::bad_order, "fixtures exist for n = 7 and n = 9");
}

Hypergraph complete_uniform(std::size_t n, std::size_t k) {
  if (n == 0 || k == 0 || k > n) throw Error(Errc::bad_params, "need 1 <= k <= n");
  return from_triples(n, k_subsets(n, k));
}

Hypergraph gen_ts(std::size_t n, std::size_t lambda) {
  if (n < 3 || lambda == 0 || (lambda * (n - 1)) % 2 != 0 || (lambda * n * (n - 1)) % 6 != 0)
    throw Error(Errc::inadmissible, "TS(" + std::to_string(n) + "," + std::to_string(lambda) + ") is inadmissible");
  std::vector<std::vector<VertexId>> edges;
  auto replicate = [&](const Hypergraph& base, std::size_t times) {
    for (std::size_t r = 0; r < times; ++r) edges.insert(edges.end(), base.edges().begin(), base.edges().end());
  };
  if (n % 6 == 1 || n % 6 == 3) {
    replicate(gen_sts(n), lambda);
  } else if (lambda % (n - 2) == 0) {
    replicate(complete_uniform(n, 3), lambda / (n - 2));
  } else {
    auto found = ts_hill_climb(n, lambda, 1);
    if (!found) throw Error(Errc::unsupported, "triple system search gave up");
    edges = std::move(*found);
  }
  return from_triples(n, std::move(edges));
}

bool covers_all_subsets(const Hypergraph& h, std::size_t ell) {
  std::set<std::vector<VertexId>> covered;
  for (const auto& ed : h.edges())
    for (const auto& pick : k_subsets(ed.size(), ell)) {
      std::vector<VertexId> sub;
      for (VertexId i : pick) sub.push_back(ed[i]);
      covered.insert(sub);
    }
  for (const auto& sub : k_subsets(h.order(), ell))
    if (!covered.count(sub)) return false;
  return true;
}

Hypergraph gen_covering(std::size_t n, std::size_t k, std::size_t ell, std::optional<std::uint64_t> thin_seed) {
  if (!(n >= k && k > ell && ell >= 2)) throw Error(Errc::bad_params, "need n >= k > ell >= 2");
  auto edges = k_subsets(n, k);
  if (thin_seed) {
    std::map<std::vector<VertexId>, std::size_t> count;
    auto subsets_of = [&](const std::vector<VertexId>& ed) {
      std::vector<std::vector<VertexId>> subs;
      for (const auto& pick : k_subsets(ed.size(), ell)) {
        std::vector<VertexId> sub;
        for (VertexId i : pick) sub.push_back(ed[i]);
        subs.push_back(std::move(sub));
      }
      return subs;
    };
    for (const auto& ed : edges)
      for (const auto& sub : subsets_of(ed)) ++count[sub];
    std::vector<std::size_t> order(edges.size());
    std::iota(order.begin(), order.end(), 0);
    std::mt19937_64 rng(*thin_seed);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<char> keep(edges.size(), 1);
    for (std::size_t i : order) {
      const auto subs = subsets_of(edges[i]);
      if (std::all_of(subs.begin(), subs.end(), [&](const auto& s) { return count[s] > 1; })) {
        keep[i] = 0;
        for (const auto& s : subs) --count[s];
      }
    }
    std::vector<std::vector<VertexId>> kept;
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (keep[i]) kept.push_back(edges[i]);
    edges = std::move(kept);
  }
  return from_triples(n, std::move(edges));
}

bool is_triple_system(const Hypergraph& h, std::size_t lambda) {
  if (h.uniformity() != 3) return false;
  std::vector<std::vector<std::size_t>> count(h.order(), std::vector<std::size_t>(h.order(), 0));
  for (const auto& ed : h.edges()) {
    ++count[ed[0]][ed[1]];
    ++count[ed[0]][ed[2]];
    ++count[ed[1]][ed[2]];
  }
  for (VertexId a = 0; a < h.order(); ++a)
    for (VertexId b = a + 1; b < h.order(); ++b)
      if (count[a][b] != lambda) return false;
  return true;
}

// ---------------------------------------------------------------- labeled 2-section

LabeledTwoSection labeled_two_section(const Hypergraph& h) {
  if (!is_triple_system(h, 1)) throw Error(Errc::not_sts, "not a Steiner triple system");
  const std::size_t n = h.order();
  LabeledTwoSection l;
  l.graph.node_count = n;
  l.index.assign(n, std::vector<std::uint32_t>(n, 0));
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) l.index[u][v] = l.index[v][u] = l.graph.add_edge(u, v);
  l.phi.assign(l.graph.edges.size(), 0);
  l.label.assign(l.graph.edges.size(), 0);
  for (EdgeId e = 0; e < h.size(); ++e) {
    auto ed = h.edge(e);
    for (std::size_t i = 0; i < 3; ++i) {
      const VertexId a = ed[(i + 1) % 3], b = ed[(i + 2) % 3];
      l.phi[l.index[a][b]] = e;
      l.label[l.index[a][b]] = ed[i];
    }
  }
  return l;
}

std::vector<VertexId> cycle_exchange(const std::vector<VertexId>& cycle, std::size_t i, std::size_t j) {
  const std::size_t k = cycle.size();
  if (i > j) std::swap(i, j);
  if (j >= k || j - i < 2 || (i == 0 && j == k - 1))
    throw Error(Errc::bad_indices, "exchanged edges must be distinct and non-adjacent");
  std::vector<VertexId> out(cycle.begin(), cycle.begin() + static_cast<std::ptrdiff_t>(i + 1));
  for (std::size_t x = j; x > i; --x) out.push_back(cycle[x]);
  out.insert(out.end(), cycle.begin() + static_cast<std::ptrdiff_t>(j + 1), cycle.end());
  return out;
}

ClosedTrail lift_cycle(const LabeledTwoSection& l, const std::vector<VertexId>& cycle) {
  const std::size_t k = cycle.size();
  if (k < 3) throw Error(Errc::invalid_inputs, "a graph cycle needs three vertices");
  for (std::size_t i = 0; i < k; ++i) {
    const VertexId prev = cycle[(i + k - 1) % k], cur = cycle[i], next = cycle[(i + 1) % k];
    if (l.label_of(prev, cur) == next && l.label_of(cur, next) == prev)
      throw Error(Errc::label_clash, "label pattern excluded at position " + std::to_string(i));
  }
  ClosedTrail t;
  for (std::size_t i = 0; i < k; ++i) {
    t.anchors.push_back(cycle[i]);
    t.edges.push_back(l.phi[l.edge(cycle[i], cycle[(i + 1) % k])]);
  }
  t.anchors.push_back(cycle[0]);
  return t;
}

// ---------------------------------------------------------------- STS pipeline

namespace {

struct Profile {
  std::size_t max = 0;
  std::size_t at_max = 0;
  std::size_t squares = 0;

  auto key() const { return std::tie(max, at_max, squares); }
  bool operator<(const Profile& o) const { return key() < o.key(); }
};

Profile profile_of(const std::vector<std::size_t>& m, VertexId u0) {
  Profile p;
  for (VertexId v = 0; v < m.size(); ++v) {
    if (v == u0) continue;
    p.squares += m[v] * m[v];
    if (m[v] > p.max) {
      p.max = m[v];
      p.at_max = 1;
    } else if (m[v] == p.max) {
      ++p.at_max;
    }
  }
  return p;
}

// Cycle of G - u0 alternating between u0-labelled edges (positions 2i, 2i+1)
// and free joins.
std::vector<VertexId> hamilton_extension(const std::vector<std::pair<VertexId, VertexId>>& matching) {
  std::vector<VertexId> cycle;
  for (auto [a, b] : matching) {
    cycle.push_back(a);
    cycle.push_back(b);
  }
  return cycle;
}

}  // namespace

StsTourReport sts_tour_report(const Hypergraph& h, StsTourOptions opt) {
  const LabeledTwoSection l = labeled_two_section(h);
  const std::size_t n = h.order();
  StsTourReport rep;
  if (n < 13) {
    auto fam = minimize_family(h);
    if (fam.size() != 1) throw Error(Errc::search_stalled, "minimization did not reach a tour");
    rep.tour = fam.trails.front();
    return rep;
  }
  rep.pipeline = true;
  const VertexId u0 = opt.u0;
  if (u0 >= n) throw Error(Errc::invalid_inputs, "u0 out of range");

  std::vector<std::pair<VertexId, VertexId>> matching;
  for (std::uint32_t id = 0; id < l.graph.edges.size(); ++id)
    if (l.label[id] == u0) matching.push_back(l.graph.edges[id]);
  std::sort(matching.begin(), matching.end());

  const std::size_t target = (n - 9) / 2;
  const std::size_t len = n - 1;
  std::mt19937_64 rng(opt.seed);
  std::vector<VertexId> cycle = hamilton_extension(matching);
  std::vector<std::size_t> m(n, 0);
  auto recount = [&] {
    std::fill(m.begin(), m.end(), 0);
    for (std::size_t i = 0; i < len; ++i) ++m[l.label_of(cycle[i], cycle[(i + 1) % len])];
  };
  recount();

  for (;;) {
    const std::size_t cap = 10 * n;
    for (std::size_t it = 0; it < cap && profile_of(m, u0).max > target; ++it) {
      // Exchange two free joins (odd positions p < q); the u0 edges stay.
      const Profile now = profile_of(m, u0);
      std::optional<std::tuple<Profile, std::size_t, std::size_t>> best;
      for (std::size_t p = 1; p < len; p += 2)
        for (std::size_t q = p + 2; q < len; q += 2) {
          auto lab = [&](std::size_t a, std::size_t b) { return l.label_of(cycle[a % len], cycle[b % len]); };
          std::vector<std::size_t> trial = m;
          --trial[lab(p, p + 1)];
          --trial[lab(q, q + 1)];
          ++trial[lab(p, q)];
          ++trial[lab(p + 1, q + 1)];
          const Profile pr = profile_of(trial, u0);
          if (pr < now && (!best || pr < std::get<0>(*best))) best = std::make_tuple(pr, p, q);
        }
      if (!best) break;
      cycle = cycle_exchange(cycle, std::get<1>(*best), std::get<2>(*best));
      ++rep.exchanges;
      recount();
    }
    if (profile_of(m, u0).max <= target) break;
    if (++rep.restarts > opt.max_restarts)
      throw Error(Errc::search_stalled, "label profile bound not reached");
    auto shuffled = matching;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    for (auto& [a, b] : shuffled)
      if (rng() & 1) std::swap(a, b);
    cycle = hamilton_extension(shuffled);
    recount();
  }
  rep.m_c = profile_of(m, u0).max;
  rep.hamilton = cycle;

  ClosedTrail tour = lift_cycle(l, cycle);
  std::vector<char> used(h.size(), 0);
  for (EdgeId e : tour.edges) used[e] = 1;
  std::vector<EdgeId> used_ids;
  for (EdgeId e = 0; e < h.size(); ++e)
    if (used[e]) used_ids.push_back(e);
  const Derived rest = without_edges(h, used_ids);
  const VertexId u0_local[] = {u0};
  const Derived rest_minus = without_vertices(rest.graph, u0_local);
  auto family = solve_family(rest_minus.graph);
  if (!family) throw Error(Errc::search_stalled, "remainder has no Euler family");

  std::vector<ClosedTrail> trails;
  for (const auto& t : family->trails) {
    ClosedTrail lifted = lift_walk(t, rest_minus.vertex_origin, rest_minus.edge_origin);
    trails.push_back(lift_walk(lifted, rest.vertex_origin, rest.edge_origin));
  }
  auto min_anchor = [](const ClosedTrail& t) { return *std::min_element(t.anchors.begin(), t.anchors.end()); };
  std::stable_sort(trails.begin(), trails.end(),
                   [&](const auto& a, const auto& b) { return min_anchor(a) < min_anchor(b); });
  for (const auto& r : trails) {
    const std::set<VertexId> on_r(r.anchors.begin(), r.anchors.end());
    std::size_t p = tour.edges.size();
    for (std::size_t i = 0; i < tour.edges.size(); ++i)
      if (on_r.count(tour.anchors[i])) {
        p = i;
        break;
      }
    if (p == tour.edges.size()) throw Error(Errc::search_stalled, "remainder trail shares no anchor with the tour");
    const VertexId at = tour.anchors[p];
    const std::size_t k = r.edges.size();
    std::size_t s = 0;
    while (r.anchors[s] != at) ++s;
    ClosedTrail tail = tour;
    tour.anchors.assign(tail.anchors.begin(), tail.anchors.begin() + static_cast<std::ptrdiff_t>(p + 1));
    tour.edges.assign(tail.edges.begin(), tail.edges.begin() + static_cast<std::ptrdiff_t>(p));
    for (std::size_t i = 1; i <= k; ++i) tour.anchors.push_back(r.anchors[(s + i) % k]);
    for (std::size_t i = 0; i < k; ++i) tour.edges.push_back(r.edges[(s + i) % k]);
    tour.anchors.insert(tour.anchors.end(), tail.anchors.begin() + static_cast<std::ptrdiff_t>(p + 1), tail.anchors.end());
    tour.edges.insert(tour.edges.end(), tail.edges.begin() + static_cast<std::ptrdiff_t>(p), tail.edges.end());
  }
  if (auto v = validate_tour(h, tour); !v) throw Error(Errc::search_stalled, "assembled tour invalid: " + v.violation);
  rep.tour = std::move(tour);
  return rep;
}

ClosedTrail sts_tour(const Hypergraph& h, StsTourOptions opt) { return sts_tour_report(h, opt).tour; }

// ---------------------------------------------------------------- duality

Multigraph named_cubic(std::string_view name) {
  Multigraph g;
  auto ring = [&](std::uint32_t first, std::uint32_t count, std::uint32_t step) {
    for (std::uint32_t i = 0; i < count; ++i) g.add_edge(first + i, first + (i + step) % count);
  };
  if (name == "k4") {
    g.node_count = 4;
    for (std::uint32_t a = 0; a < 4; ++a)
      for (std::uint32_t b = a + 1; b < 4; ++b) g.add_edge(a, b);
  } else if (name == "prism") {
    g.node_count = 6;
    ring(0, 3, 1);
    ring(3, 3, 1);
    for (std::uint32_t i = 0; i < 3; ++i) g.add_edge(i, i + 3);
  } else if (name == "petersen") {
    g.node_count = 10;
    ring(0, 5, 1);
    ring(5, 5, 2);
    for (std::uint32_t i = 0; i < 5; ++i) g.add_edge(i, i + 5);
  } else if (name == "cube") {
    g.node_count = 8;
    for (std::uint32_t a = 0; a < 8; ++a)
      for (std::uint32_t bit = 1; bit < 8; bit <<= 1)
        if (!(a & bit)) g.add_edge(a, a | bit);
  } else {
    throw Error(Errc::bad_params, "unknown cubic graph: " + std::string(name));
  }
  return g;
}

Hypergraph graph_as_hypergraph(const Multigraph& g) {
  std::vector<std::vector<VertexId>> edges;
  for (auto [a, b] : g.edges) edges.push_back({a, b});
  return Hypergraph::with_order(g.node_count, std::move(edges));
}

bool is_hamilton_cycle(const Multigraph& g, const std::vector<std::uint32_t>& cycle) {
  if (cycle.size() != g.node_count || cycle.size() < 3) return false;
  std::set<std::uint32_t> seen(cycle.begin(), cycle.end());
  if (seen.size() != cycle.size() || *seen.rbegin() >= g.node_count) return false;
  std::set<std::pair<std::uint32_t, std::uint32_t>> adj;
  for (auto [a, b] : g.edges) {
    adj.emplace(a, b);
    adj.emplace(b, a);
  }
  for (std::size_t i = 0; i < cycle.size(); ++i)
    if (!adj.count({cycle[i], cycle[(i + 1) % cycle.size()]})) return false;
  return true;
}

DualHarness dual_harness(const Multigraph& g) {
  std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
  for (auto [a, b] : g.edges) {
    if (a == b || !seen.emplace(std::min(a, b), std::max(a, b)).second)
      throw Error(Errc::not_cubic_simple, "graph has a loop or parallel edge");
  }
  for (auto d : g.degrees())
    if (d != 3) throw Error(Errc::not_cubic_simple, "graph is not 3-regular");
  return DualHarness{g, dual(graph_as_hypergraph(g))};
}

ClosedTrail DualHarness::hamilton_to_tour(const std::vector<std::uint32_t>& cycle) const {
  if (!is_hamilton_cycle(graph, cycle)) throw Error(Errc::invalid_inputs, "not a Hamilton cycle");
  const std::size_t n = cycle.size();
  auto edge_between = [&](std::uint32_t a, std::uint32_t b) -> VertexId {
    for (std::uint32_t id = 0; id < graph.edges.size(); ++id) {
      auto [x, y] = graph.edges[id];
      if ((x == a && y == b) || (x == b && y == a)) return id;
    }
    throw Error(Errc::invalid_inputs, "missing edge");
  };
  // e_i joins v_(i-1) and v_i; the tour is e1 e_(v1) e2 e_(v2) ... en e_(v0) e1.
  ClosedTrail t;
  for (std::size_t i = 1; i <= n; ++i) {
    t.anchors.push_back(edge_between(cycle[i - 1], cycle[i % n]));
    t.edges.push_back(cycle[i % n]);
  }
  t.anchors.push_back(t.anchors.front());
  return t;
}

std::vector<std::uint32_t> DualHarness::tour_to_hamilton(const ClosedTrail& tour) const {
  if (auto v = validate_tour(dual, tour); !v) throw Error(Errc::invalid_inputs, v.violation);
  // The tour lists the cycle starting from its second node.
  std::vector<std::uint32_t> cycle{tour.edges.back()};
  cycle.insert(cycle.end(), tour.edges.begin(), tour.edges.end() - 1);
  if (!is_hamilton_cycle(graph, cycle)) throw Error(Errc::invalid_inputs, "tour does not map to a Hamilton cycle");
  return cycle;
}

}  // namespace hypereuler
