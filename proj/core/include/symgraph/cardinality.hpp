#pragma once

#include <optional>

#include "symgraph/feasibility.hpp"

namespace symgraph {

struct CardinalitySolution {
    std::vector<long long> x;   // per-cluster ILP variables, >= x_lower
    std::vector<long long> n;   // cluster sizes, n_i = (2) s x_i
    long long s = 1;            // integer scale factor
    std::vector<bool> doubled;  // odd self-loop clusters

    long long total_n() const;
};

// Minimal-cardinality solution. Each connected component of the constraint
// graph has a one-dimensional null space spanned by the primitive certificate
// v, so the feasible x per component are {t v : t >= 1} and the minimum for
// any strictly positive cost is t* = max_i ceil(x_lower_i / v_i). The cost
// vector is accepted for interface fidelity but does not change the result.
CardinalitySolution solve_minimal(
    const FeasibilitySystem& sys,
    const std::optional<std::vector<double>>& cost = std::nullopt);

CardinalitySolution scale(const CardinalitySolution& sol, long long s);

}  // namespace symgraph
