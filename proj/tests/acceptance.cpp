// One line per acceptance criterion; exits nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>

#include "hypereuler/cli.hpp"
#include "hypereuler/cuts.hpp"
#include "hypereuler/interchange.hpp"
#include "hypereuler/io.hpp"
#include "support.hpp"

using namespace hypereuler;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* name, double limit_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome r;
  try {
    r = body();
  } catch (const std::exception& e) {
    r = {false, std::string("exception: ") + e.what()};
  }
  const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (dt > limit_s) {
    r.ok = false;
    r.detail += " (over time limit)";
  }
  failures += !r.ok;
  std::printf("%s  %2d %-40s %7.2fs  %s\n", r.ok ? "PASS" : "FAIL", id, name, dt, r.detail.c_str());
  std::fflush(stdout);
}

int cli(std::initializer_list<std::string> args) {
  std::vector<const char*> argv{"hypereuler"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  return cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
}

std::string write_temp(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / ("hypereuler_acceptance_" + name);
  std::ofstream(path) << body;
  return path.string();
}

Outcome fixtures() {
  for (auto [n, text] : {std::pair{7, support::kSts7Tour}, std::pair{9, support::kSts9Tour}}) {
    const Hypergraph h = sts_fixture(n);
    const auto hf = write_temp("sts" + std::to_string(n), io::write_hypergraph(h));
    const auto cf = write_temp("sts" + std::to_string(n) + ".cert", io::write_tour(h, support::tour_from_text(h, text)));
    if (cli({"check", hf, cf}) != 0) return {false, "check rejected the STS(" + std::to_string(n) + ") tour"};
    auto found = find_euler_tour(h);
    if (found.status != SearchStatus::found || !validate_tour(h, *found.tour)) return {false, "find_euler_tour"};
    auto fam = minimize_family(h);
    if (fam.size() != 1 || !validate_tour(h, fam.trails[0])) return {false, "minimize_family"};
  }
  return {};
}

Outcome negative_ts31() {
  const Hypergraph h = gen_ts(3, 1);
  if (h.size() != 1) return {false, "expected a single triple"};
  if (find_euler_tour(h).status != SearchStatus::absent) return {false, "find_euler_tour"};
  if (brute_force_tour(h).status != SearchStatus::absent) return {false, "brute_force_tour"};
  if (solve_family(h) || brute_force_family(h)) return {false, "family solvers"};
  if (lovasz_feasible(h)) return {false, "lovasz_feasible"};
  try {
    minimize_family(h);
    return {false, "minimize_family produced something"};
  } catch (const Error& e) {
    if (e.code() != Errc::not_quasi_eulerian) return {false, e.what()};
  }
  const auto hf = write_temp("ts31", io::write_hypergraph(h));
  for (const char* algo : {"auto", "brute", "cuts"})
    if (cli({"tour", hf, "--algo", algo}) != 1) return {false, std::string("cli tour --algo ") + algo};
  return {};
}

Outcome covering3() {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const Hypergraph h = support::random_covering3(rng);
    if (!is_covering_hypergraph(h, 3)) return {false, "generator produced a non-covering input"};
    const auto fam = minimize_family(h);
    if (fam.size() != 1 || !validate_tour(h, fam.trails[0])) return {false, "instance " + std::to_string(i)};
  }
  return {true, "200/200"};
}

Outcome covering_k() {
  for (auto [n, k] : {std::pair{5, 4}, std::pair{6, 4}, std::pair{6, 5}}) {
    const Hypergraph h = complete_uniform(n, k);
    if (!validate_tour(h, covering_tour(h)))
      return {false, "(" + std::to_string(n) + "," + std::to_string(k) + ")"};
  }
  return {};
}

Outcome oracle_equivalence() {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::size_t> n_dist(2, 6), m_dist(0, 6);
  int yes = 0;
  for (int i = 0; i < 500; ++i) {
    const Hypergraph h = support::random_hypergraph(rng, n_dist(rng), m_dist(rng), 2, 4);
    const bool a = solve_family(h).has_value();
    const bool b = brute_force_family(h).has_value();
    const bool c = lovasz_feasible(h);
    if (a != b || b != c) return {false, "disagreement on instance " + std::to_string(i)};
    yes += a;
  }
  return {true, std::to_string(yes) + "/500 quasi-eulerian"};
}

// Shared by criteria 6 and 8.
struct Alg1Run {
  int agree = 0, found = 0, cut_checks = 0, cut_ok = 0;
  std::string first_error;
};

const Alg1Run& algorithm1_run() {
  static const Alg1Run run = [] {
    Alg1Run r;
    std::mt19937_64 rng(6);
    for (int i = 0; i < 300; ++i) {
      const Hypergraph h = i % 2 ? support::random_clustered(rng, 8) : support::random_connected(rng, 8);
      const auto a = find_euler_tour(h);
      const auto b = brute_force_tour(h);
      const bool ok = a.status == b.status && (a.status != SearchStatus::found || validate_tour(h, *a.tour));
      r.agree += ok;
      if (!ok && r.first_error.empty()) r.first_error = "instance " + std::to_string(i);
      if (a.status != SearchStatus::found) continue;
      ++r.found;
      const EdgeCut cut = minimum_edge_cut(h);
      ++r.cut_checks;
      const Multigraph g = component_multigraph(h, cut.cut_edges, EulerFamily{{*a.tour}});
      r.cut_ok += g.is_even() && g.edges.size() == cut.cut_edges.size() &&
                  g.node_count == component_count(h, cut.cut_edges);
    }
    return r;
  }();
  return run;
}

Outcome algorithm1() {
  const auto& r = algorithm1_run();
  return {r.agree == 300, std::to_string(r.agree) + "/300 agree, " + std::to_string(r.found) + " eulerian" +
                              (r.first_error.empty() ? "" : ", first failure " + r.first_error)};
}

Outcome component_multigraph_law() {
  const auto& r = algorithm1_run();
  return {r.cut_checks > 0 && r.cut_ok == r.cut_checks,
          std::to_string(r.cut_ok) + "/" + std::to_string(r.cut_checks)};
}

Outcome duality() {
  for (const char* name : {"k4", "prism"}) {
    const auto d = dual_harness(named_cubic(name));
    if (find_euler_tour(d.dual).status != SearchStatus::found) return {false, std::string(name) + " dual"};
  }
  const auto p = dual_harness(named_cubic("petersen"));
  if (brute_force_tour(p.dual).status != SearchStatus::absent) return {false, "petersen dual has a tour"};
  if (find_euler_tour(p.dual).status != SearchStatus::absent) return {false, "petersen dual via cuts"};
  return {};
}

Outcome interchange_safety() {
  std::mt19937_64 rng(9);
  int applied = 0;
  while (applied < 1000) {
    const Hypergraph h = support::random_hypergraph(rng, 6, 7, 2, 4);
    auto s = solve_family_subgraph(h, {rng()});
    if (!s) continue;
    for (const auto& c : interchanging_cycles(h, *s, 6, 50)) {
      const FamilySubgraph t = apply_interchange(*s, c);
      if (!t.satisfies_invariants()) return {false, "invariants broken"};
      if (!is_interchanging(t, c) || apply_interchange(t, c) != *s) return {false, "involution broken"};
      ++applied;
    }
  }
  return {true, std::to_string(applied) + " applications"};
}

Outcome sts_pipeline(std::size_t n) {
  const Hypergraph h = gen_sts(n);
  const auto rep = sts_tour_report(h);
  if (!rep.pipeline) return {false, "pipeline not used"};
  if (rep.m_c > (n - 9) / 2) return {false, "M_C = " + std::to_string(rep.m_c)};
  if (auto v = validate_tour(h, rep.tour); !v) return {false, v.violation};
  return {true, "M_C = " + std::to_string(rep.m_c) + ", restarts " + std::to_string(rep.restarts)};
}

Outcome two_covering_spot() {
  const Hypergraph h = build_hypergraph({"1", "2", "3", "4", "5", "6"},
                                        {{"1", "2", "3", "4"}, {"1", "2", "5", "6"}, {"3", "4", "5", "6"}});
  if (!validate_tour(h, support::tour_from_text(h, "(3,1234,2,1256,5,3456,3)"))) return {false, "fixture tour rejected"};
  if (find_euler_tour(h).status != SearchStatus::found) return {false, "not found eulerian"};
  return {};
}

}  // namespace

int main() {
  criterion(1, "STS(7)/STS(9) fixture tours", 1, fixtures);
  criterion(2, "TS(3,1) is rejected everywhere", 1, negative_ts31);
  criterion(3, "covering 3-hypergraphs minimize to tours", 60, covering3);
  criterion(4, "covering k-hypergraph induction", 10, covering_k);
  criterion(5, "family existence oracles agree", 120, oracle_equivalence);
  criterion(6, "edge-cut search matches brute force", 300, algorithm1);
  criterion(7, "cubic duality", 30, duality);
  criterion(8, "component multigraph is even", 300, component_multigraph_law);
  criterion(9, "interchange keeps invariants", 60, interchange_safety);
  criterion(10, "STS(13) pipeline bound", 30, [] { return sts_pipeline(13); });
  criterion(10, "STS(15) pipeline bound", 30, [] { return sts_pipeline(15); });
  criterion(11, "2-covering (4,6) spot check", 1, two_covering_spot);
  std::printf("%d failed\n", failures);
  return failures == 0 ? 0 : 1;
}
