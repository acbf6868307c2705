#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hypereuler {

enum class Errc {
  unknown_label,
  empty_edge,
  duplicate_label,
  no_vertices,
  no_edges,
  bad_side,
  not_a_cut,
  disconnected,
  no_cut_exists,
  invalid_family,
  bad_degrees,
  odd_degree,
  too_large,
  not_uniform,
  overlapping_parts,
  invalid_inputs,
  invalid_pieces,
  collapsed_vertex_not_traversed,
  bad_cut,
  not_a_cycle,
  not_interchanging,
  not_covering3,
  precondition,
  not_quasi_eulerian,
  not_covering,
  too_few_edges,
  search_stalled,
  bad_order,
  inadmissible,
  unsupported,
  bad_params,
  not_sts,
  bad_indices,
  label_clash,
  order_too_small,
  not_cubic_simple,
  parse_error,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace hypereuler
