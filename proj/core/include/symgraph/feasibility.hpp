#pragma once

#include <vector>

#include "symgraph/quotient.hpp"

namespace symgraph {

// Constraint system over the per-cluster variables x_i. Each row couples the
// two clusters of one quotient pair edge: exactly one positive and one
// negative entry.
struct FeasibilitySystem {
    struct Row {
        ClusterId j, k;           // the pair edge (j < k)
        long long coef_j;         // positive entry, column j
        long long coef_k;         // negative entry, column k
    };
    int p = 0;
    std::vector<Row> rows;
    std::vector<long long> x_lower;  // x^L_i >= 1
    std::vector<bool> doubled;       // odd self-loop: n_i = 2 x_i

    std::vector<std::vector<long long>> matrix() const;
};

FeasibilitySystem build_system(const QuotientGraph& q);

struct FeasibilityResult {
    bool feasible = false;
    // Feasible: strictly positive integer null vector, primitive (gcd 1)
    // within each connected component of the constraint graph.
    std::vector<long long> certificate;
    // Infeasible: a cycle of pair edges whose ratio product is inconsistent.
    std::vector<std::pair<ClusterId, ClusterId>> witness_cycle;
    // Connected component id per cluster (isolated clusters get their own).
    std::vector<int> component;
};

FeasibilityResult is_feasible(const FeasibilitySystem& sys);

}  // namespace symgraph
