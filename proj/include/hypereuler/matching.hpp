#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace hypereuler {

inline constexpr int kUnmatched = -1;

// Maximum-cardinality matching in a general graph (Edmonds' blossom
// algorithm). Returns mate[v] or kUnmatched.
std::vector<int> maximum_matching(std::size_t node_count,
                                  const std::vector<std::pair<int, int>>& edges);

}  // namespace hypereuler
