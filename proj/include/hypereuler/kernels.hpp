#pragma once

// Exhaustive kernels in two flavours: a serial reference and an OpenMP
// version. Both must return identical results; the tests and the bench
// target compare them.

#include <cstdint>

#include "hypereuler/euler.hpp"

namespace hypereuler::kernels {

namespace serial {
bool lovasz(const Hypergraph& h);
TourSearch tour(const Hypergraph& h, std::uint64_t budget);
}  // namespace serial

namespace parallel {
bool lovasz(const Hypergraph& h, int threads);
TourSearch tour(const Hypergraph& h, std::uint64_t budget, int threads);
}  // namespace parallel

}  // namespace hypereuler::kernels
