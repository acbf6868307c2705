#include "hypereuler/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace hypereuler::io {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  return s.substr(first, s.find_last_not_of(" \t\r") - first + 1);
}

std::vector<std::string> words(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

template <class F>
void for_each_line(std::string_view text, F&& f) {
  std::size_t lineno = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (!line.empty()) f(line, lineno);
  }
}

// Without a declaration, labels are taken in order of first appearance.
Hypergraph from_lists(std::vector<std::string> declared, const std::vector<std::vector<std::string>>& edges) {
  if (!declared.empty()) return build_hypergraph(std::move(declared), edges);
  std::vector<std::string> labels;
  std::unordered_map<std::string, bool> seen;
  for (const auto& ed : edges)
    for (const auto& l : ed)
      if (seen.emplace(l, true).second) labels.push_back(l);
  return build_hypergraph(std::move(labels), edges);
}

Hypergraph parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::parse_error, e.what());
  }
  if (!doc.is_object() || !doc.contains("edges")) throw Error(Errc::parse_error, "expected an object with `edges`");
  try {
    std::vector<std::string> vertices;
    if (doc.contains("vertices")) vertices = doc.at("vertices").get<std::vector<std::string>>();
    auto edges = doc.at("edges").get<std::vector<std::vector<std::string>>>();
    return from_lists(std::move(vertices), edges);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::parse_error, e.what());
  }
}

}  // namespace

Hypergraph parse_hypergraph(std::string_view text) {
  if (const auto body = trim(text); !body.empty() && body.front() == '{') return parse_json(body);
  std::vector<std::string> declared;
  std::vector<std::vector<std::string>> edges;
  bool first = true;
  for_each_line(text, [&](std::string_view line, std::size_t lineno) {
    if (line.starts_with("vertices:")) {
      if (!first) throw Error(Errc::parse_error, "line " + std::to_string(lineno) + ": `vertices:` must come first");
      declared = words(line.substr(9));
    } else {
      edges.push_back(words(line));
    }
    first = false;
  });
  return from_lists(std::move(declared), edges);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::parse_error, "cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Hypergraph read_hypergraph_file(const std::string& path) { return parse_hypergraph(read_file(path)); }

std::string write_hypergraph(const Hypergraph& h, Format f) {
  if (f == Format::structured) {
    nlohmann::ordered_json doc;
    doc["vertices"] = h.labels();
    auto edges = nlohmann::ordered_json::array();
    for (const auto& ed : h.edges()) {
      auto e = nlohmann::ordered_json::array();
      for (VertexId v : ed) e.push_back(h.label(v));
      edges.push_back(e);
    }
    doc["edges"] = edges;
    return doc.dump(2) + "\n";
  }
  std::string out = "vertices:";
  for (const auto& l : h.labels()) out += " " + l;
  out += "\n";
  for (const auto& ed : h.edges()) {
    for (std::size_t i = 0; i < ed.size(); ++i) out += (i ? " " : "") + h.label(ed[i]);
    out += "\n";
  }
  return out;
}

namespace {

void append_trail(std::string& out, const Hypergraph& h, const ClosedTrail& t) {
  for (std::size_t i = 0; i < t.anchors.size(); ++i) {
    out += "v " + h.label(t.anchors[i]) + "\n";
    if (i < t.edges.size()) out += "e " + std::to_string(t.edges[i]) + "\n";
  }
}

}  // namespace

std::string write_tour(const Hypergraph& h, const ClosedTrail& t) {
  std::string out;
  append_trail(out, h, t);
  return out;
}

std::string write_family(const Hypergraph& h, const EulerFamily& f) {
  std::string out = "cardinality: " + std::to_string(f.size()) + "\n";
  for (std::size_t i = 0; i < f.trails.size(); ++i) {
    if (i) out += "---\n";
    append_trail(out, h, f.trails[i]);
  }
  return out;
}

Certificate parse_certificate(const Hypergraph& h, std::string_view text) {
  bool family = false;
  std::vector<ClosedTrail> trails(1);
  for_each_line(text, [&](std::string_view line, std::size_t lineno) {
    auto fail = [&](const std::string& why) {
      throw Error(Errc::parse_error, "line " + std::to_string(lineno) + ": " + why);
    };
    if (line == "FOUND" || line == "NONE" || line == "UNKNOWN") return;
    if (line.starts_with("cardinality:")) {
      family = true;
      return;
    }
    if (line == "---") {
      family = true;
      trails.emplace_back();
      return;
    }
    const auto w = words(line);
    if (w.size() != 2) fail("expected `v <label>` or `e <index>`");
    auto& t = trails.back();
    if (w[0] == "v") {
      auto v = h.find(w[1]);
      if (!v) fail("unknown vertex " + w[1]);
      if (t.anchors.size() != t.edges.size()) fail("two vertices in a row");
      t.anchors.push_back(*v);
    } else if (w[0] == "e") {
      EdgeId e = 0;
      auto [ptr, ec] = std::from_chars(w[1].data(), w[1].data() + w[1].size(), e);
      if (ec != std::errc{} || ptr != w[1].data() + w[1].size()) fail("bad edge index " + w[1]);
      if (e >= h.size()) fail("edge index out of range " + w[1]);
      if (t.anchors.size() != t.edges.size() + 1) fail("edge without a preceding vertex");
      t.edges.push_back(e);
    } else {
      fail("unknown record " + w[0]);
    }
  });
  for (const auto& t : trails)
    if (!t.anchors.empty() && t.anchors.size() != t.edges.size() + 1)
      throw Error(Errc::parse_error, "trail must end with a vertex");
  if (!family) return trails.front();
  EulerFamily f;
  for (auto& t : trails)
    if (!t.anchors.empty()) f.trails.push_back(std::move(t));
  return f;
}

}  // namespace hypereuler::io
