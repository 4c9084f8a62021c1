#pragma once

#include "symgraph/graph.hpp"

namespace symgraph {

// Orbits of the automorphism group acting on vertices, plus the generators
// found along the way. Clusters of the partition are ordered by smallest
// contained vertex.
struct OrbitPartition {
    Partition partition;
    std::vector<Permutation> generators;
};

struct SearchLimits {
    // Hard cap on backtracking nodes; exceeding it throws, never approximates.
    long long max_nodes = 5'000'000;
};

// Exhaustive n! oracle; refuses n > 8.
OrbitPartition orbits_bruteforce(const Graph& g);

// Individualization-refinement backtracking seeded with the coarsest
// equitable coloring.
OrbitPartition orbits(const Graph& g, SearchLimits limits = {});

bool orbit_partition_is_equitable(const Graph& g, const OrbitPartition& o);

}  // namespace symgraph
