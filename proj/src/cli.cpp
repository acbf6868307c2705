#include "hypereuler/cli.hpp"

#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hypereuler/cuts.hpp"
#include "hypereuler/designs.hpp"
#include "hypereuler/interchange.hpp"
#include "hypereuler/io.hpp"

namespace hypereuler::cli {

namespace {

constexpr int kFound = 0, kNone = 1, kUnknown = 2, kParse = 64, kInadmissible = 65;

bool is_parse_error(Errc c) {
  switch (c) {
    case Errc::parse_error:
    case Errc::unknown_label:
    case Errc::empty_edge:
    case Errc::duplicate_label:
    case Errc::no_vertices:
      return true;
    default:
      return false;
  }
}

bool is_generator_error(Errc c) {
  return c == Errc::inadmissible || c == Errc::bad_order || c == Errc::bad_params || c == Errc::unsupported ||
         c == Errc::not_cubic_simple;
}

struct Settings {
  std::string file, cert, algo = "auto", format = "text";
  std::uint64_t budget = kUnlimited;
  std::uint64_t seed = 0;
  bool seed_given = false;
  bool minimize = false;
  int threads = 1;
  std::string kind;
  std::vector<std::string> params;
};

// Tours exist only when at most one component carries edges; that component
// is solved on its own and lifted back.
int cmd_tour(const Settings& s, std::ostream& out) {
  const Hypergraph h = io::read_hypergraph_file(s.file);
  if (h.size() == 0) {
    out << io::write_tour(h, ClosedTrail{{0}, {}}) << "FOUND\n";
    return kFound;
  }
  const Derived core = drop_isolated(h);
  if (!is_connected(core.graph)) {
    out << "NONE\n";
    return kNone;
  }
  const Hypergraph& g = core.graph;
  if (s.algo == "auto" && g.uniformity() && !odd_degree_screen(g)) {
    out << "NONE\n";
    return kNone;
  }
  SearchStatus status;
  std::optional<ClosedTrail> tour;
  if (s.algo == "brute") {
    auto r = brute_force_tour(g, {s.budget, s.threads});
    status = r.status;
    tour = r.tour;
  } else {
    auto r = find_euler_tour(g, {s.budget});
    status = r.status;
    tour = r.tour;
  }
  if (status == SearchStatus::found) {
    out << io::write_tour(h, lift_walk(*tour, core.vertex_origin, core.edge_origin)) << "FOUND\n";
    return kFound;
  }
  if (status == SearchStatus::unknown) {
    out << "UNKNOWN\n";
    return kUnknown;
  }
  out << "NONE\n";
  return kNone;
}

int cmd_family(const Settings& s, std::ostream& out) {
  const Hypergraph h = io::read_hypergraph_file(s.file);
  std::optional<EulerFamily> fam = solve_family(h, {s.seed});
  if (!fam) {
    out << "NONE\n";
    return kNone;
  }
  if (s.minimize && fam->size() > 1) fam = minimize_family(h);
  out << io::write_family(h, *fam) << "FOUND\n";
  return kFound;
}

int cmd_check(const Settings& s, std::ostream& out) {
  const Hypergraph h = io::read_hypergraph_file(s.file);
  const auto cert = io::parse_certificate(h, io::read_file(s.cert));
  const Verdict v = std::holds_alternative<ClosedTrail>(cert) ? validate_tour(h, std::get<ClosedTrail>(cert))
                                                              : validate_family(h, std::get<EulerFamily>(cert));
  if (v) {
    out << "valid\n";
    return kFound;
  }
  out << "invalid: " << v.violation << "\n";
  return kNone;
}

std::size_t param(const Settings& s, std::size_t i) {
  if (i >= s.params.size()) throw Error(Errc::bad_params, s.kind + " needs " + std::to_string(i + 1) + " parameters");
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(s.params[i], &used);
    if (used != s.params[i].size()) throw std::invalid_argument(s.params[i]);
    return static_cast<std::size_t>(v);
  } catch (const std::logic_error&) {
    throw Error(Errc::bad_params, "not a number: " + s.params[i]);
  }
}

int cmd_gen(const Settings& s, std::ostream& out) {
  std::optional<Hypergraph> h;
  if (s.kind == "sts") {
    h = gen_sts(param(s, 0));
  } else if (s.kind == "ts") {
    h = gen_ts(param(s, 0), param(s, 1));
  } else if (s.kind == "covering") {
    std::optional<std::uint64_t> thin;
    if (s.seed_given) thin = s.seed;
    h = gen_covering(param(s, 0), param(s, 1), param(s, 2), thin);
  } else if (s.kind == "complete") {
    h = complete_uniform(param(s, 0), param(s, 1));
  } else if (s.kind == "dual-cubic") {
    if (s.params.empty()) throw Error(Errc::bad_params, "dual-cubic needs a graph name");
    h = dual_harness(named_cubic(s.params[0])).dual;
  } else {
    throw Error(Errc::bad_params, "unknown generator " + s.kind);
  }
  out << io::write_hypergraph(*h, s.format == "structured" ? io::Format::structured : io::Format::text);
  return kFound;
}

int cmd_stats(const Settings& s, std::ostream& out) {
  const Hypergraph h = io::read_hypergraph_file(s.file);
  std::vector<std::pair<std::string, std::string>> kv;
  auto opt = [](std::optional<std::size_t> v) { return v ? std::to_string(*v) : std::string("none"); };
  kv.emplace_back("order", std::to_string(h.order()));
  kv.emplace_back("size", std::to_string(h.size()));
  kv.emplace_back("uniform", opt(h.uniformity()));
  kv.emplace_back("regular", opt(h.regularity()));
  kv.emplace_back("connected", is_connected(h) ? "yes" : "no");
  kv.emplace_back("components", std::to_string(component_count(h)));
  std::map<CutClass, std::size_t> classes;
  for (EdgeId e = 0; e < h.size(); ++e) ++classes[classify_cut_edge(h, e)];
  for (CutClass c : {CutClass::not_cut, CutClass::trivial_cut, CutClass::nontrivial_cut, CutClass::strong_cut})
    kv.emplace_back(std::string(to_string(c)), std::to_string(classes[c]));
  std::string min_cut = "none";
  if (h.order() >= 2) min_cut = is_connected(h) ? std::to_string(minimum_edge_cut(h).cut_edges.size()) : "0";
  kv.emplace_back("min_cut", min_cut);
  std::string screen = "n/a";
  if (h.size() == 0 || h.uniformity()) screen = odd_degree_screen(h) ? "pass" : "fail";
  kv.emplace_back("ln_screen", screen);

  if (s.format == "structured") {
    nlohmann::ordered_json doc;
    for (const auto& [k, v] : kv) doc[k] = v;
    out << doc.dump(2) << "\n";
  } else {
    for (const auto& [k, v] : kv) out << k << ":" << v << "\n";
  }
  return kFound;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Euler tours and families of hypergraphs", "hypereuler"};
  app.require_subcommand(1);
  Settings s;
  auto add_threads = [&](CLI::App* c) { c->add_option("--threads", s.threads)->check(CLI::PositiveNumber); };

  auto* tour = app.add_subcommand("tour", "search for an Euler tour");
  tour->add_option("file", s.file)->required();
  tour->add_option("--budget", s.budget, "brute-force node limit");
  tour->add_option("--algo", s.algo)->check(CLI::IsMember({"auto", "brute", "cuts"}));
  add_threads(tour);

  auto* family = app.add_subcommand("family", "find an Euler family");
  family->add_option("file", s.file)->required();
  family->add_flag("--minimize", s.minimize, "reduce to as few trails as possible");
  family->add_option("--seed", s.seed);

  auto* check = app.add_subcommand("check", "validate a tour or family certificate");
  check->add_option("file", s.file)->required();
  check->add_option("certificate", s.cert)->required();

  auto* gen = app.add_subcommand("gen", "generate a design hypergraph");
  gen->add_option("kind", s.kind)->required()->check(
      CLI::IsMember({"sts", "ts", "covering", "complete", "dual-cubic"}));
  gen->add_option("params", s.params);
  auto* seed = gen->add_option("--seed", s.seed, "thin coverings with this seed");
  gen->add_option("--format", s.format)->check(CLI::IsMember({"text", "structured"}));

  auto* stats = app.add_subcommand("stats", "report structural statistics");
  stats->add_option("file", s.file)->required();
  stats->add_option("--format", s.format)->check(CLI::IsMember({"text", "structured"}));

  try {
    std::vector<std::string> args;
    for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kParse;
  }
  s.seed_given = seed->count() > 0;

  try {
    if (*tour) return cmd_tour(s, out);
    if (*family) return cmd_family(s, out);
    if (*check) return cmd_check(s, out);
    if (*gen) return cmd_gen(s, out);
    return cmd_stats(s, out);
  } catch (const Error& e) {
    err << e.what() << "\n";
    if (is_parse_error(e.code())) return kParse;
    if (is_generator_error(e.code())) return kInadmissible;
    return kNone;
  }
}

}  // namespace hypereuler::cli
