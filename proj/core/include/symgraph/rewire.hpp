#pragma once

#include <cstdint>

#include "symgraph/graph.hpp"

namespace symgraph {

// Degree-preserving double-edge swaps restricted to one provenance class, so
// the quotient graph of the result is unchanged. Swaps that would create a
// duplicate edge or a self-loop are rejected.

Graph swap_intra(const Graph& g, ClusterId k, std::uint64_t seed,
                 long long attempts);

Graph swap_inter(const Graph& g, ClusterId j, ClusterId k, std::uint64_t seed,
                 long long attempts);

// Randomize every provenance class, with ceil(swaps_per_edge * class size)
// attempted swaps per class. Per-class streams are derived from the seed, so
// the result does not depend on processing order.
Graph randomize(const Graph& g, const Partition& part, std::uint64_t seed,
                double swaps_per_edge = 10.0);

}  // namespace symgraph
