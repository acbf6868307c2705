#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "hypereuler/designs.hpp"
#include "hypereuler/hypergraph.hpp"

namespace support {

using namespace hypereuler;

inline std::vector<VertexId> sample(std::mt19937_64& rng, std::size_t n, std::size_t k) {
  std::vector<VertexId> all(n);
  for (VertexId v = 0; v < n; ++v) all[v] = v;
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(k);
  std::sort(all.begin(), all.end());
  return all;
}

// Edge cardinalities uniform in [lo, min(hi, n)]; parallel edges allowed.
inline Hypergraph random_hypergraph(std::mt19937_64& rng, std::size_t n, std::size_t m, std::size_t lo = 2,
                                    std::size_t hi = 4) {
  std::uniform_int_distribution<std::size_t> card(lo, std::min(hi, n));
  std::vector<std::vector<VertexId>> edges;
  for (std::size_t i = 0; i < m; ++i) edges.push_back(sample(rng, n, card(rng)));
  return Hypergraph::with_order(n, edges);
}

inline Hypergraph random_connected(std::mt19937_64& rng, std::size_t max_edges = 8) {
  for (;;) {
    std::uniform_int_distribution<std::size_t> n_dist(3, 7), m_dist(2, max_edges);
    auto h = random_hypergraph(rng, n_dist(rng), m_dist(rng), 2, 4);
    if (is_connected(h)) return h;
  }
}

// A thinned complete 3-uniform hypergraph plus a few random extra triples, so
// there are at least two edges and sometimes parallels.
inline Hypergraph random_covering3(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> n_dist(3, 8), extra(0, 3);
  const std::size_t n = n_dist(rng);
  const Hypergraph base = n == 3 ? complete_uniform(3, 3) : gen_covering(n, 3, 2, rng());
  auto edges = base.edges();
  std::size_t add = extra(rng);
  if (edges.size() + add < 2) add = 2 - edges.size();
  for (std::size_t i = 0; i < add; ++i) edges.push_back(sample(rng, n, 3));
  return Hypergraph::with_order(n, edges);
}

// "(1,145,5,...,1)" with single-character labels; edges are written as the
// concatenation of their vertex labels.
inline ClosedTrail tour_from_text(const Hypergraph& h, std::string_view text) {
  std::vector<std::string> tokens;
  std::string cur;
  for (char c : text) {
    if (c == '(' || c == ')' || c == ' ') continue;
    if (c == ',') {
      tokens.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  tokens.push_back(cur);
  ClosedTrail t;
  std::vector<char> used(h.size(), 0);
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i % 2 == 0) {
      t.anchors.push_back(*h.find(tokens[i]));
      continue;
    }
    std::vector<VertexId> want;
    for (char c : tokens[i]) want.push_back(*h.find(std::string(1, c)));
    std::sort(want.begin(), want.end());
    for (EdgeId e = 0; e < h.size(); ++e) {
      auto ed = h.edge(e);
      if (!used[e] && std::equal(ed.begin(), ed.end(), want.begin(), want.end())) {
        used[e] = 1;
        t.edges.push_back(e);
        break;
      }
    }
  }
  return t;
}

inline constexpr std::string_view kSts7Tour = "(1,145,5,256,2,123,3,357,7,247,4,346,6,167,1)";
inline constexpr std::string_view kSts9Tour =
    "(1,147,7,357,3,369,6,267,2,123,3,348,8,168,6,456,4,249,9,789,8,258,5,159,1)";

}  // namespace support

namespace support {

// Dense clusters joined by a few cross edges, so that small edge cuts with
// several sides are common.
inline Hypergraph random_clustered(std::mt19937_64& rng, std::size_t max_edges = 12) {
  for (;;) {
    std::uniform_int_distribution<std::size_t> clusters_dist(2, 4), size_dist(1, 3), cross_dist(1, 4);
    const std::size_t c = clusters_dist(rng);
    std::vector<std::vector<VertexId>> members(c), edges;
    VertexId next = 0;
    for (auto& m : members)
      for (std::size_t i = size_dist(rng); i > 0; --i) m.push_back(next++);
    for (const auto& m : members) {
      if (m.size() < 2) continue;
      std::uniform_int_distribution<std::size_t> inner(1, 3);
      for (std::size_t i = inner(rng); i > 0; --i) {
        std::uniform_int_distribution<std::size_t> card(2, m.size());
        auto pick = sample(rng, m.size(), card(rng));
        std::vector<VertexId> e;
        for (auto p : pick) e.push_back(m[p]);
        edges.push_back(e);
      }
    }
    for (std::size_t i = cross_dist(rng); i > 0; --i) {
      std::uniform_int_distribution<std::size_t> parts(2, c);
      std::vector<VertexId> e;
      for (auto p : sample(rng, c, parts(rng))) {
        std::uniform_int_distribution<std::size_t> at(0, members[p].size() - 1);
        e.push_back(members[p][at(rng)]);
      }
      std::sort(e.begin(), e.end());
      edges.push_back(e);
    }
    if (edges.size() > max_edges) continue;
    auto h = Hypergraph::with_order(next, edges);
    if (is_connected(h)) return h;
  }
}

}  // namespace support
