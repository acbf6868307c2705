// Times the serial and OpenMP exhaustive kernels on the same inputs and
// checks that they agree.

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>

#include "hypereuler/designs.hpp"
#include "hypereuler/kernels.hpp"

using namespace hypereuler;

namespace {

Hypergraph random_hypergraph(std::mt19937_64& rng, std::size_t n, std::size_t m) {
  std::uniform_int_distribution<std::size_t> card(2, 4);
  std::vector<std::vector<VertexId>> edges;
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<VertexId> all(n);
    for (VertexId v = 0; v < n; ++v) all[v] = v;
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(std::min(n, card(rng)));
    edges.push_back(all);
  }
  return Hypergraph::with_order(n, edges);
}

template <class F>
double seconds(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  const int threads = argc > 1 ? std::atoi(argv[1]) : omp_get_max_threads();
  std::mt19937_64 rng(7);
  int mismatches = 0;

  std::vector<Hypergraph> small;
  for (int i = 0; i < 200; ++i) small.push_back(random_hypergraph(rng, 7, 8));
  bool a = false, b = false;
  const double ls = seconds([&] {
    for (const auto& h : small) a ^= kernels::serial::lovasz(h);
  });
  const double lp = seconds([&] {
    for (const auto& h : small) b ^= kernels::parallel::lovasz(h, threads);
  });
  mismatches += a != b;
  std::printf("lovasz  200 inputs  serial %.3fs  parallel(%d) %.3fs\n", ls, threads, lp);

  std::vector<Hypergraph> tours = {dual_harness(named_cubic("petersen")).dual, gen_sts(9), gen_ts(7, 2)};
  for (const auto& h : tours) {
    TourSearch rs, rp;
    const double ts = seconds([&] { rs = kernels::serial::tour(h, kUnlimited); });
    const double tp = seconds([&] { rp = kernels::parallel::tour(h, kUnlimited, threads); });
    mismatches += rs.status != rp.status || rs.tour != rp.tour;
    std::printf("tour    n=%zu m=%zu %-6s serial %.3fs  parallel(%d) %.3fs\n", h.order(), h.size(),
                std::string(to_string(rs.status)).c_str(), ts, threads, tp);
  }
  std::printf("mismatches: %d\n", mismatches);
  return mismatches == 0 ? 0 : 1;
}
