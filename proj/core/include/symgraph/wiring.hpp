#pragma once

#include <cstdint>
#include <vector>

#include "symgraph/cardinality.hpp"
#include "symgraph/quotient.hpp"

namespace symgraph {

// Circulant intra-cluster edges on local indices 0..n_k-1: offsets
// +-1..Q_kk/2 when Q_kk is even; +-1..(Q_kk-1)/2 plus the antipodal offset
// n_k/2 when odd (n_k even in that case).
std::vector<Edge> wire_intra(int n_k, long long q_kk);

// Offset plan for the biregular bipartite wiring between a cluster pair.
struct InterClusterPlan {
    int n_k, n_l;
    long long q_kl, q_lk;  // edges each side receives from the other
    long long h;           // gcd(n_k, n_l)
    long long d_k, d_l;    // n_k = d_k h, n_l = d_l h
    long long m;           // q_lk / d_k == q_kl / d_l
    std::vector<long long> b;  // composition of h into m positive parts
};

enum class BChoice { Deterministic, SeededRandom };

InterClusterPlan make_plan(int n_k, int n_l, long long q_kl, long long q_lk,
                           BChoice choice = BChoice::Deterministic,
                           std::uint64_t seed = 0, std::uint64_t stream_id = 0);

// Edges (local index in C_k, local index in C_l).
std::vector<std::pair<int, int>> wire_inter(const InterClusterPlan& plan);
// Same edge set generated from the other side; test oracle for the
// edge-set-equality property.
std::vector<std::pair<int, int>> wire_inter_dual(const InterClusterPlan& plan);

struct GeneratedGraph {
    Graph graph;
    Partition partition;  // cluster i occupies a contiguous index block
};

// Full graph realizing the quotient with the given cluster sizes; edges carry
// provenance tags.
GeneratedGraph generate(const QuotientGraph& q, const CardinalitySolution& sol,
                        BChoice b_choice = BChoice::Deterministic,
                        std::uint64_t seed = 0);

}  // namespace symgraph
