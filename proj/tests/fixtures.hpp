#pragma once

#include <vector>

#include "symgraph/graph.hpp"
#include "symgraph/quotient.hpp"
#include "symgraph/rng.hpp"

namespace fixtures {

using namespace symgraph;

// Three clusters, self-loops (1,2,0); C1-C2 carries weights (1,2) and C1-C3
// carries (2,1).
inline QuotientGraph three_cluster_a() {
    return QuotientGraph({1, 2, 0}, {{0, 1, 1, 2}, {0, 2, 2, 1}});
}

// Three clusters, self-loops (1,2,0); C1-C2 carries weights (2,1) and C1-C3
// carries (1,2). Minimal sizes (2,4,1); doubled to (4,8,2) at s=2.
inline QuotientGraph three_cluster_b() {
    return QuotientGraph({1, 2, 0}, {{0, 1, 2, 1}, {0, 2, 1, 2}});
}

// Two clusters, self-loops (0,1), one pair with weights (2,3). Minimal sizes
// (3,2); the s=1 realization is K_{3,2} plus the C2-internal edge.
inline QuotientGraph two_cluster_quotient() {
    return QuotientGraph({0, 1}, {{0, 1, 2, 3}});
}

// Ten-vertex graph with a two-cluster coarsest equitable partition (vertices
// 0-7: three neighbors inside the eight, one outside; vertices 8-9: four
// outside neighbors plus each other) whose orbits are all singletons. Found
// by quotient-preserving rewiring of the deterministic realization.
inline Graph rigid_graph() {
    std::vector<Edge> edges = {
        {0, 4}, {0, 5}, {0, 6}, {0, 9}, {1, 3}, {1, 4}, {1, 7},
        {1, 9}, {2, 3}, {2, 4}, {2, 5}, {2, 8}, {3, 7}, {3, 9},
        {4, 8}, {5, 6}, {5, 8}, {6, 7}, {6, 8}, {7, 9}, {8, 9}};
    return Graph(10, std::move(edges));
}

inline Graph path3() { return Graph(3, {{0, 1}, {1, 2}}); }

inline Graph cycle(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.push_back(make_edge(i, (i + 1) % n));
    return Graph(n, std::move(edges));
}

inline Graph complete(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
    return Graph(n, std::move(edges));
}

// Erdos-Renyi style graph from the project's seeded streams.
inline Graph random_graph(int n, double density, std::uint64_t seed) {
    auto rng = make_stream(seed, "test-graph", n);
    auto threshold =
        static_cast<std::uint64_t>(density * 1000000.0);
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (bounded(rng, 1000000) < threshold) edges.push_back({i, j});
    return Graph(n, std::move(edges));
}

// Random feasible quotient: spanning-tree pair edges always admit a positive
// null vector, so feasibility holds by construction.
inline QuotientGraph random_feasible_quotient(int max_p, long long max_entry,
                                              std::uint64_t seed) {
    auto rng = make_stream(seed, "test-quotient", 0);
    int p = 1 + static_cast<int>(bounded(rng, max_p));
    std::vector<long long> self(p);
    for (auto& d : self) d = static_cast<long long>(bounded(rng, max_entry + 1));
    std::vector<QuotientPair> pairs;
    for (int k = 1; k < p; ++k) {
        if (bounded(rng, 4) == 0) continue;  // occasionally disconnected
        int j = static_cast<int>(bounded(rng, k));
        long long w0 = 1 + static_cast<long long>(bounded(rng, max_entry));
        long long w1 = 1 + static_cast<long long>(bounded(rng, max_entry));
        pairs.push_back({j, k, w0, w1});
    }
    return QuotientGraph(std::move(self), std::move(pairs));
}

}  // namespace fixtures
