#include "symgraph/cardinality.hpp"

#include <algorithm>
#include <stdexcept>

namespace symgraph {

long long CardinalitySolution::total_n() const {
    long long t = 0;
    for (long long v : n) t += v;
    return t;
}

CardinalitySolution solve_minimal(
    const FeasibilitySystem& sys,
    const std::optional<std::vector<double>>& cost) {
    if (cost) {
        if (static_cast<int>(cost->size()) != sys.p)
            throw std::invalid_argument("cost vector size mismatch");
        for (double c : *cost)
            if (c <= 0) throw std::invalid_argument("cost must be strictly positive");
    }
    FeasibilityResult feas = is_feasible(sys);
    if (!feas.feasible)
        throw std::domain_error("infeasible system has no cardinality solution");

    int p = sys.p;
    int comp_count = 0;
    for (int i = 0; i < p; ++i) comp_count = std::max(comp_count, feas.component[i] + 1);

    // Whether a component is coupled by any row; isolated clusters take their
    // lower bound directly.
    std::vector<bool> has_row(comp_count, false);
    for (const auto& row : sys.rows) has_row[feas.component[row.j]] = true;

    std::vector<long long> t(comp_count, 1);
    for (int i = 0; i < p; ++i) {
        int c = feas.component[i];
        if (!has_row[c]) continue;
        long long v = feas.certificate[i];
        t[c] = std::max(t[c], (sys.x_lower[i] + v - 1) / v);
    }

    CardinalitySolution sol;
    sol.x.resize(p);
    sol.doubled = sys.doubled;
    sol.s = 1;
    for (int i = 0; i < p; ++i) {
        int c = feas.component[i];
        sol.x[i] = has_row[c] ? t[c] * feas.certificate[i] : sys.x_lower[i];
    }
    sol.n.resize(p);
    for (int i = 0; i < p; ++i) sol.n[i] = (sol.doubled[i] ? 2 : 1) * sol.x[i];
    return sol;
}

CardinalitySolution scale(const CardinalitySolution& sol, long long s) {
    if (s < 1) throw std::invalid_argument("scale factor must be >= 1");
    CardinalitySolution out = sol;
    out.s = sol.s * s;
    for (size_t i = 0; i < out.n.size(); ++i)
        out.n[i] = (out.doubled[i] ? 2 : 1) * out.s * out.x[i];
    return out;
}

}  // namespace symgraph
