#include "hypereuler/matching.hpp"

#include <algorithm>
#include <queue>

namespace hypereuler {

namespace {

class Blossom {
 public:
  Blossom(std::size_t n, const std::vector<std::pair<int, int>>& edges)
      : n_(static_cast<int>(n)), adj_(n), mate_(n, kUnmatched), parent_(n), base_(n),
        used_(n), blossom_(n) {
    for (auto [a, b] : edges) {
      if (a == b) continue;
      adj_[a].push_back(b);
      adj_[b].push_back(a);
    }
  }

  std::vector<int> run() {
    greedy();
    for (int v = 0; v < n_; ++v) {
      if (mate_[v] != kUnmatched) continue;
      int end = find_path(v);
      while (end != kUnmatched) {
        int pv = parent_[end], ppv = mate_[pv];
        mate_[end] = pv;
        mate_[pv] = end;
        end = ppv;
      }
    }
    return mate_;
  }

 private:
  void greedy() {
    for (int v = 0; v < n_; ++v) {
      if (mate_[v] != kUnmatched) continue;
      for (int u : adj_[v]) {
        if (mate_[u] == kUnmatched) {
          mate_[u] = v;
          mate_[v] = u;
          break;
        }
      }
    }
  }

  int lca(int a, int b) {
    std::vector<char> seen(n_, 0);
    for (;;) {
      a = base_[a];
      seen[a] = 1;
      if (mate_[a] == kUnmatched) break;
      a = parent_[mate_[a]];
    }
    for (;;) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[mate_[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      blossom_[base_[v]] = blossom_[base_[mate_[v]]] = 1;
      parent_[v] = child;
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  int find_path(int root) {
    std::fill(used_.begin(), used_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), kUnmatched);
    for (int i = 0; i < n_; ++i) base_[i] = i;
    used_[root] = 1;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int to : adj_[v]) {
        if (base_[v] == base_[to] || mate_[v] == to) continue;
        if (to == root || (mate_[to] != kUnmatched && parent_[mate_[to]] != kUnmatched)) {
          int cur = lca(v, to);
          std::fill(blossom_.begin(), blossom_.end(), 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (int i = 0; i < n_; ++i) {
            if (blossom_[base_[i]]) {
              base_[i] = cur;
              if (!used_[i]) {
                used_[i] = 1;
                q.push(i);
              }
            }
          }
        } else if (parent_[to] == kUnmatched) {
          parent_[to] = v;
          if (mate_[to] == kUnmatched) return to;
          used_[mate_[to]] = 1;
          q.push(mate_[to]);
        }
      }
    }
    return kUnmatched;
  }

  int n_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> mate_, parent_, base_;
  std::vector<char> used_, blossom_;
};

}  // namespace

std::vector<int> maximum_matching(std::size_t node_count,
                                  const std::vector<std::pair<int, int>>& edges) {
  return Blossom(node_count, edges).run();
}

}  // namespace hypereuler
