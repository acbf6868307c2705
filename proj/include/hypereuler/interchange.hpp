#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hypereuler/euler.hpp"
#include "hypereuler/hypergraph.hpp"

namespace hypereuler {

// v0 e1 v1 e2 ... v(k-1) ek v0 in the incidence graph; steps[i] = (v_i, e_{i+1}).
struct InterchangeCycle {
  std::vector<std::pair<VertexId, EdgeId>> steps;

  std::size_t length() const noexcept { return steps.size(); }
  bool operator==(const InterchangeCycle&) const = default;
};

bool is_interchanging(const FamilySubgraph& s, const InterchangeCycle& c);
FamilySubgraph apply_interchange(const FamilySubgraph& s, const InterchangeCycle& c);

bool is_covering_hypergraph(const Hypergraph& h, std::size_t k);

// Every interchanging cycle with at most max_length e-nodes, up to `limit`
// of them, in search order.
std::vector<InterchangeCycle> interchanging_cycles(const Hypergraph& h, const FamilySubgraph& s,
                                                   std::size_t max_length, std::size_t limit);

std::optional<InterchangeCycle> find_diminishing_cycle(const Hypergraph& h, const FamilySubgraph& s);

struct MinimizeOptions {
  std::size_t restarts = 16;
  std::uint64_t search_nodes = 2'000'000;  // per bounded cycle search
};

struct MinimizeStats {
  std::size_t interchanges = 0;
  std::size_t stepping_moves = 0;
  std::size_t restarts = 0;
  std::size_t initial_cardinality = 0;
};

EulerFamily minimize_family(const Hypergraph& h, MinimizeOptions opt = {}, MinimizeStats* stats = nullptr);

ClosedTrail covering_tour(const Hypergraph& h);

}  // namespace hypereuler
