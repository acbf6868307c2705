#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "hypereuler/cli.hpp"
#include "hypereuler/designs.hpp"
#include "hypereuler/io.hpp"
#include "support.hpp"

using namespace hypereuler;

namespace {

struct Run {
  int code;
  std::string out;
};

Run invoke(std::vector<std::string> args) {
  std::vector<const char*> argv{"hypereuler"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str()};
}

std::string file(const std::string& name, const std::string& body) {
  const auto dir = std::filesystem::temp_directory_path() / "hypereuler_test_cli";
  std::filesystem::create_directories(dir);
  const auto path = dir / name;
  std::ofstream(path) << body;
  return path.string();
}

const std::string sts7 = file("sts7.txt", io::write_hypergraph(sts_fixture(7)));

}  // namespace

TEST_CASE("tour") {
  const auto r = invoke({"tour", sts7});
  CHECK(r.code == 0);
  CHECK(r.out.ends_with("FOUND\n"));
  const auto cert = file("sts7.cert", r.out);
  CHECK(invoke({"check", sts7, cert}).code == 0);

  for (const char* algo : {"brute", "cuts"}) {
    const auto a = invoke({"tour", sts7, "--algo", algo, "--threads", "2"});
    CHECK(a.code == 0);
    CHECK(invoke({"check", sts7, file("a.cert", a.out)}).code == 0);
  }

  CHECK(invoke({"tour", file("single.txt", "a b c\n")}).out == "NONE\n");
  CHECK(invoke({"tour", file("single.txt", "a b c\n")}).code == 1);
  const auto petersen = file("petersen.txt", io::write_hypergraph(dual_harness(named_cubic("petersen")).dual));
  CHECK(invoke({"tour", petersen}).code == 1);
  CHECK(invoke({"tour", file("sts15.txt", io::write_hypergraph(gen_sts(15))), "--algo", "brute", "--budget", "3"}).code == 2);

  // Isolated vertices are fine; two nonempty components are not.
  const auto iso = file("iso.txt", "vertices: a b c z\na b c\na b c\n");
  const auto ri = invoke({"tour", iso});
  CHECK(ri.code == 0);
  CHECK(invoke({"check", iso, file("iso.cert", ri.out)}).code == 0);
  CHECK(invoke({"tour", file("split.txt", "a b\na b\nc d\nc d\n")}).code == 1);
  const auto edgeless = file("edgeless.txt", "vertices: a\n");
  CHECK(invoke({"tour", edgeless}).code == 0);

  CHECK(invoke({"tour", file("bad.txt", "vertices: a\nb\n")}).code == 64);
  CHECK(invoke({"tour", "/nonexistent/file"}).code == 64);
  CHECK(invoke({"tour", sts7, "--algo", "magic"}).code == 64);
}

TEST_CASE("family") {
  const auto cov = file("cov.txt", io::write_hypergraph(gen_covering(6, 3, 2, 11)));
  const auto r = invoke({"family", cov, "--minimize"});
  CHECK(r.code == 0);
  CHECK(r.out.starts_with("cardinality: 1\n"));
  CHECK(invoke({"check", cov, file("cov.cert", r.out)}).code == 0);

  CHECK(invoke({"family", file("path.txt", "a b\nb c\n")}).code == 1);
  const auto e = invoke({"family", file("edgeless2.txt", "vertices: a b\n")});
  CHECK(e.code == 0);
  CHECK(e.out.starts_with("cardinality: 0\n"));

  const auto two = file("two.txt", "a b\nb c\na c\nd e\ne f\nd f\n");
  const auto f = invoke({"family", two});
  CHECK(f.out.starts_with("cardinality: 2\n"));
  CHECK(invoke({"check", two, file("two.cert", f.out)}).code == 0);
}

TEST_CASE("check") {
  const auto h = sts_fixture(7);
  const auto good = file("fixture.cert", io::write_tour(h, support::tour_from_text(h, support::kSts7Tour)));
  CHECK(invoke({"check", sts7, good}).code == 0);

  auto swapped = support::tour_from_text(h, support::kSts7Tour);
  std::swap(swapped.anchors[1], swapped.anchors[2]);
  const auto bad = invoke({"check", sts7, file("swapped.cert", io::write_tour(h, swapped))});
  CHECK(bad.code == 1);
  CHECK(bad.out.starts_with("invalid: "));

  const auto two = file("two2.txt", "a b\nb c\na c\nd e\ne f\nd f\n");
  const auto dup = file("dup.cert", "cardinality: 2\nv a\ne 0\nv b\ne 1\nv c\ne 2\nv a\n---\nv d\ne 0\nv e\ne 4\nv f\ne 5\nv d\n");
  CHECK(invoke({"check", two, dup}).code == 1);
  CHECK(invoke({"check", sts7, file("junk.cert", "v 1\nq 7\n")}).code == 64);
}

TEST_CASE("gen") {
  const auto s = invoke({"gen", "sts", "7"});
  CHECK(s.code == 0);
  CHECK(is_triple_system(io::parse_hypergraph(s.out), 1));
  const auto t = io::parse_hypergraph(invoke({"gen", "ts", "3", "2"}).out);
  CHECK(t.size() == 2);
  CHECK(io::parse_hypergraph(invoke({"gen", "covering", "5", "3", "2"}).out).size() == 10);
  CHECK(invoke({"gen", "covering", "6", "4", "2", "--seed", "4"}).out == invoke({"gen", "covering", "6", "4", "2", "--seed", "4"}).out);
  CHECK(io::parse_hypergraph(invoke({"gen", "dual-cubic", "k4"}).out).order() == 6);
  CHECK(io::parse_hypergraph(invoke({"gen", "complete", "5", "4", "--format", "structured"}).out).size() == 5);

  CHECK(invoke({"gen", "ts", "5", "1"}).code == 65);
  CHECK(invoke({"gen", "sts", "6"}).code == 65);
  CHECK(invoke({"gen", "sts"}).code == 65);
  CHECK(invoke({"gen", "dual-cubic", "heawood"}).code == 65);
  CHECK(invoke({"gen", "nope"}).code == 64);
}

TEST_CASE("stats") {
  const auto r = invoke({"stats", sts7});
  CHECK(r.code == 0);
  CHECK(r.out.find("uniform:3\nregular:3\n") != std::string::npos);
  CHECK(r.out.find("min_cut:3\nln_screen:pass\n") != std::string::npos);
  CHECK(r.out.starts_with("order:7\nsize:7\n"));
  CHECK(invoke({"stats", file("one.txt", "a b c\n")}).out.find("ln_screen:fail") != std::string::npos);
  CHECK(invoke({"stats", file("edgeless3.txt", "vertices: a b\n")}).out.find("size:0") != std::string::npos);
  const auto js = invoke({"stats", sts7, "--format", "structured"});
  CHECK(js.out.starts_with("{"));
  CHECK(js.out.find("\"ln_screen\": \"pass\"") != std::string::npos);
}

TEST_CASE("output is deterministic") {
  const auto cov = file("cov2.txt", io::write_hypergraph(gen_covering(7, 3, 2, 3)));
  CHECK(invoke({"family", cov, "--minimize", "--seed", "2"}).out == invoke({"family", cov, "--minimize", "--seed", "2"}).out);
  CHECK(invoke({"tour", sts7}).out == invoke({"tour", sts7}).out);
}
