#include "hypereuler/kernels.hpp"

#include <omp.h>

#include <atomic>
#include <bit>
#include <vector>

namespace hypereuler::kernels {

namespace {

// ---------------------------------------------------------------- Lovász

struct IncidenceMasks {
  int n = 0;
  int m = 0;
  std::vector<std::uint32_t> adj;
  std::vector<int> deg;

  explicit IncidenceMasks(const Hypergraph& h)
      : n(static_cast<int>(h.order())), m(static_cast<int>(h.size())), adj(n + m, 0), deg(n + m, 0) {
    for (int e = 0; e < m; ++e)
      for (VertexId v : h.edge(static_cast<EdgeId>(e))) {
        adj[v] |= 1u << (n + e);
        adj[n + e] |= 1u << v;
      }
    for (int x = 0; x < n + m; ++x) deg[x] = std::popcount(adj[x]);
  }

  std::uint32_t vmask() const { return (1u << n) - 1; }
  std::uint32_t all() const { return n + m == 32 ? ~0u : (1u << (n + m)) - 1; }

  int edges_between(std::uint32_t a, std::uint32_t b) const {
    int c = 0;
    for (std::uint32_t x = a; x; x &= x - 1) c += std::popcount(adj[std::countr_zero(x)] & b);
    return c;
  }

  // Slack of the inequality for one (S, T); negative means violated.
  int slack(std::uint32_t s, std::uint32_t t) const {
    int value = 2 * std::popcount(s);
    for (std::uint32_t x = t; x; x &= x - 1) value += deg[std::countr_zero(x)];
    value -= 2 * std::popcount(t & ~vmask());
    value -= edges_between(s, t & vmask());
    std::uint32_t rest = all() & ~(s | t);
    while (rest) {
      std::uint32_t comp = rest & (~rest + 1);
      std::uint32_t frontier = comp;
      while (frontier) {
        std::uint32_t grow = 0;
        for (std::uint32_t x = frontier; x; x &= x - 1) grow |= adj[std::countr_zero(x)];
        grow &= rest & ~comp;
        comp |= grow;
        frontier = grow;
      }
      rest &= ~comp;
      if (edges_between(comp, t) % 2) --value;
    }
    return value;
  }

  bool holds_for(std::uint32_t s) const {
    const std::uint32_t free = all() & ~s;
    for (std::uint32_t t = free;; t = (t - 1) & free) {
      if (slack(s, t) < 0) return false;
      if (t == 0) break;
    }
    return true;
  }
};

// ---------------------------------------------------------------- tour search

class TourSearcher {
 public:
  TourSearcher(const Hypergraph& h, std::uint64_t budget)
      : h_(h), budget_(budget), used_(h.size(), 0), unused_deg_(h.order(), 0) {
    for (VertexId v = 0; v < h.order(); ++v) unused_deg_[v] = h.degree(v);
  }

  // Tries tours whose first step traverses edge 0 from a to b.
  SearchStatus run(VertexId a, VertexId b) {
    start_ = a;
    trail_.anchors = {a, b};
    trail_.edges = {0};
    take(0);
    const bool ok = extend(b);
    if (!ok) release(0);
    if (ok) return SearchStatus::found;
    return exhausted_ ? SearchStatus::unknown : SearchStatus::absent;
  }

  const ClosedTrail& trail() const { return trail_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  void take(EdgeId e) {
    used_[e] = 1;
    ++used_count_;
    for (VertexId v : h_.edge(e)) --unused_deg_[v];
  }
  void release(EdgeId e) {
    used_[e] = 0;
    --used_count_;
    for (VertexId v : h_.edge(e)) ++unused_deg_[v];
  }

  bool extend(VertexId cur) {
    if (used_count_ == h_.size()) return cur == start_;
    if (nodes_ >= budget_) {
      exhausted_ = true;
      return false;
    }
    ++nodes_;
    for (EdgeId e : h_.incident(cur)) {
      if (used_[e]) continue;
      take(e);
      const bool last = used_count_ == h_.size();
      if (last || unused_deg_[start_] > 0) {
        for (VertexId w : h_.edge(e)) {
          if (w == cur) continue;
          if (last ? w != start_ : unused_deg_[w] == 0) continue;
          trail_.anchors.push_back(w);
          trail_.edges.push_back(e);
          if (extend(w)) return true;
          trail_.anchors.pop_back();
          trail_.edges.pop_back();
          if (exhausted_) break;
        }
      }
      release(e);
      if (exhausted_) return false;
    }
    return false;
  }

  const Hypergraph& h_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  VertexId start_ = 0;
  std::size_t used_count_ = 0;
  std::vector<char> used_;
  std::vector<std::size_t> unused_deg_;
  ClosedTrail trail_;
};

std::vector<std::pair<VertexId, VertexId>> root_pairs(const Hypergraph& h) {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  auto ed = h.edge(0);
  for (std::size_t i = 0; i < ed.size(); ++i)
    for (std::size_t j = i + 1; j < ed.size(); ++j) pairs.emplace_back(ed[i], ed[j]);
  return pairs;
}

std::optional<TourSearch> trivial_case(const Hypergraph& h) {
  if (h.size() == 0) return TourSearch{SearchStatus::found, ClosedTrail{{0}, {}}, 0};
  if (h.size() == 1) return TourSearch{SearchStatus::absent, std::nullopt, 0};
  return std::nullopt;
}

}  // namespace

namespace serial {

bool lovasz(const Hypergraph& h) {
  const IncidenceMasks g(h);
  const std::uint32_t emask = g.all() & ~g.vmask();
  for (std::uint32_t s = emask;; s = (s - 1) & emask) {
    if (!g.holds_for(s)) return false;
    if (s == 0) break;
  }
  return true;
}

TourSearch tour(const Hypergraph& h, std::uint64_t budget) {
  if (auto t = trivial_case(h)) return *t;
  TourSearch out;
  std::uint64_t left = budget;
  bool unknown = false;
  for (auto [a, b] : root_pairs(h)) {
    TourSearcher s(h, left);
    const auto st = s.run(a, b);
    out.nodes += s.nodes();
    left -= s.nodes();
    if (st == SearchStatus::found) {
      out.status = st;
      out.tour = s.trail();
      return out;
    }
    if (st == SearchStatus::unknown) {
      unknown = true;
      break;
    }
  }
  out.status = unknown ? SearchStatus::unknown : SearchStatus::absent;
  return out;
}

}  // namespace serial

namespace parallel {

bool lovasz(const Hypergraph& h, int threads) {
  const IncidenceMasks g(h);
  const std::uint32_t emask = g.all() & ~g.vmask();
  const std::int64_t count = std::int64_t{1} << g.m;
  std::atomic<bool> ok{true};
#pragma omp parallel for num_threads(threads) schedule(dynamic, 8)
  for (std::int64_t i = 0; i < count; ++i) {
    if (!ok.load(std::memory_order_relaxed)) continue;
    const std::uint32_t s = static_cast<std::uint32_t>(i) << g.n;
    if ((s & emask) == s && !g.holds_for(s)) ok.store(false, std::memory_order_relaxed);
  }
  return ok.load();
}

TourSearch tour(const Hypergraph& h, std::uint64_t budget, int threads) {
  if (auto t = trivial_case(h)) return *t;
  const auto pairs = root_pairs(h);
  const auto count = static_cast<std::int64_t>(pairs.size());
  std::vector<SearchStatus> status(pairs.size(), SearchStatus::absent);
  std::vector<ClosedTrail> trails(pairs.size());
  std::vector<std::uint64_t> nodes(pairs.size(), 0);
  // Branches after a success cannot change the answer; skip them.
  std::atomic<std::int64_t> first_found{count};
#pragma omp parallel for num_threads(threads) schedule(dynamic, 1)
  for (std::int64_t i = 0; i < count; ++i) {
    if (i > first_found.load(std::memory_order_relaxed)) continue;
    TourSearcher s(h, budget);
    status[i] = s.run(pairs[i].first, pairs[i].second);
    nodes[i] = s.nodes();
    if (status[i] == SearchStatus::found) {
      trails[i] = s.trail();
      std::int64_t cur = first_found.load();
      while (i < cur && !first_found.compare_exchange_weak(cur, i)) {
      }
    }
  }
  TourSearch out;
  bool unknown = false;
  for (std::int64_t i = 0; i < count; ++i) {
    out.nodes += nodes[i];
    if (status[i] == SearchStatus::found) {
      out.status = SearchStatus::found;
      out.tour = trails[i];
      return out;
    }
    if (status[i] == SearchStatus::unknown) unknown = true;
  }
  out.status = unknown ? SearchStatus::unknown : SearchStatus::absent;
  return out;
}

}  // namespace parallel

}  // namespace hypereuler::kernels
