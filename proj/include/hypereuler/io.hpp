#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include "hypereuler/euler.hpp"
#include "hypereuler/hypergraph.hpp"

namespace hypereuler::io {

enum class Format { text, structured };

// Terse text (one edge per line, `#` comments, optional leading `vertices:`
// line that must then list every vertex) or a JSON object with `vertices`
// and `edges`, detected by a leading '{'. Errors are Errc::parse_error or the
// hypergraph's own.
Hypergraph parse_hypergraph(std::string_view text);
Hypergraph read_hypergraph_file(const std::string& path);
std::string write_hypergraph(const Hypergraph& h, Format f = Format::text);

// `v <label>` / `e <index>` lines. A family starts with `cardinality: k` and
// separates trails with `---`; FOUND/NONE/UNKNOWN lines are ignored.
using Certificate = std::variant<ClosedTrail, EulerFamily>;
Certificate parse_certificate(const Hypergraph& h, std::string_view text);
std::string write_tour(const Hypergraph& h, const ClosedTrail& t);
std::string write_family(const Hypergraph& h, const EulerFamily& f);

std::string read_file(const std::string& path);

}  // namespace hypereuler::io
