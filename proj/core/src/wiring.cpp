#include "symgraph/wiring.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "symgraph/rng.hpp"

namespace symgraph {

std::vector<Edge> wire_intra(int n_k, long long q_kk) {
    if (q_kk < 0) throw std::invalid_argument("negative self-loop count");
    if (n_k <= q_kk)
        throw std::domain_error("cluster size must exceed self-loop count");
    if (q_kk % 2 == 1 && n_k % 2 == 1)
        throw std::domain_error("odd self-loop count requires even cluster size");
    std::vector<Edge> edges;
    if (q_kk == 0) return edges;
    long long half = q_kk / 2;
    for (int i = 0; i < n_k; ++i)
        for (long long j = 1; j <= half; ++j)
            edges.push_back(make_edge(i, static_cast<int>((i + j) % n_k)));
    if (q_kk % 2 == 1)
        for (int i = 0; i < n_k / 2; ++i)
            edges.push_back(make_edge(i, i + n_k / 2));
    // Offset pairs +-j produce each edge twice.
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return edges;
}

InterClusterPlan make_plan(int n_k, int n_l, long long q_kl, long long q_lk,
                           BChoice choice, std::uint64_t seed,
                           std::uint64_t stream_id) {
    if (n_k < 1 || n_l < 1 || q_kl < 1 || q_lk < 1)
        throw std::invalid_argument("plan arguments must be positive");
    if (static_cast<long long>(n_k) * q_kl != static_cast<long long>(n_l) * q_lk)
        throw std::domain_error("edge-count balance n_k Q_kl = n_l Q_lk violated");
    if (n_k < q_lk || n_l < q_kl)
        throw std::domain_error("cluster too small for requested cross-degree");
    InterClusterPlan plan;
    plan.n_k = n_k;
    plan.n_l = n_l;
    plan.q_kl = q_kl;
    plan.q_lk = q_lk;
    plan.h = std::gcd(static_cast<long long>(n_k), static_cast<long long>(n_l));
    plan.d_k = n_k / plan.h;
    plan.d_l = n_l / plan.h;
    plan.m = q_lk / plan.d_k;  // d_k | q_lk since gcd(d_k, d_l) = 1
    if (choice == BChoice::Deterministic) {
        // Balanced composition of h into m parts.
        long long base = plan.h / plan.m, extra = plan.h % plan.m;
        for (long long j = 0; j < plan.m; ++j)
            plan.b.push_back(base + (j < extra ? 1 : 0));
    } else {
        // Uniform composition: m-1 distinct cut points among h-1 positions.
        auto rng = make_stream(seed, "bseq", stream_id);
        std::vector<long long> positions(plan.h - 1);
        std::iota(positions.begin(), positions.end(), 1);
        for (long long i = 0; i < plan.m - 1; ++i) {
            auto j = i + static_cast<long long>(bounded(rng, positions.size() - i));
            std::swap(positions[i], positions[j]);
        }
        std::vector<long long> cuts(positions.begin(), positions.begin() + plan.m - 1);
        cuts.push_back(0);
        cuts.push_back(plan.h);
        std::sort(cuts.begin(), cuts.end());
        for (size_t i = 1; i < cuts.size(); ++i)
            plan.b.push_back(cuts[i] - cuts[i - 1]);
    }
    return plan;
}

std::vector<std::pair<int, int>> wire_inter(const InterClusterPlan& plan) {
    std::vector<long long> prefix(plan.m + 1, 0);
    for (long long j = 1; j <= plan.m; ++j) prefix[j] = prefix[j - 1] + plan.b[j - 1];
    std::vector<std::pair<int, int>> edges;
    edges.reserve(plan.n_k * plan.q_kl);
    for (int i = 0; i < plan.n_k; ++i)
        for (long long r1 = 0; r1 < plan.d_l; ++r1)
            for (long long r2 = 1; r2 <= plan.m; ++r2)
                edges.push_back(
                    {i, static_cast<int>((i + r1 * plan.h + prefix[r2]) % plan.n_l)});
    return edges;
}

std::vector<std::pair<int, int>> wire_inter_dual(const InterClusterPlan& plan) {
    // Prefix sums of b reversed.
    std::vector<long long> prefix(plan.m + 1, 0);
    for (long long j = 1; j <= plan.m; ++j)
        prefix[j] = prefix[j - 1] + plan.b[plan.m - j];
    std::vector<std::pair<int, int>> edges;
    edges.reserve(plan.n_l * plan.q_lk);
    for (int i = 0; i < plan.n_l; ++i)
        for (long long r3 = 0; r3 < plan.d_k; ++r3)
            for (long long r4 = 1; r4 <= plan.m; ++r4)
                edges.push_back(
                    {static_cast<int>((i + r3 * plan.h + prefix[r4]) % plan.n_k), i});
    return edges;
}

GeneratedGraph generate(const QuotientGraph& q, const CardinalitySolution& sol,
                        BChoice b_choice, std::uint64_t seed) {
    int p = q.num_clusters();
    if (static_cast<int>(sol.n.size()) != p)
        throw std::invalid_argument("solution/quotient size mismatch");
    std::vector<int> offset(p + 1, 0);
    for (int i = 0; i < p; ++i)
        offset[i + 1] = offset[i] + static_cast<int>(sol.n[i]);
    int n = offset[p];

    std::vector<Edge> edges;
    std::vector<std::optional<Provenance>> prov;
    for (int k = 0; k < p; ++k) {
        for (auto [a, b] : wire_intra(static_cast<int>(sol.n[k]), q.self_loop(k))) {
            edges.push_back(make_edge(offset[k] + a, offset[k] + b));
            prov.push_back(Provenance::self_loop(k));
        }
    }
    for (size_t e = 0; e < q.pairs().size(); ++e) {
        const auto& pe = q.pairs()[e];
        auto plan = make_plan(static_cast<int>(sol.n[pe.j]),
                              static_cast<int>(sol.n[pe.k]), pe.w_low, pe.w_high,
                              b_choice, seed, e);
        for (auto [a, b] : wire_inter(plan)) {
            edges.push_back(make_edge(offset[pe.j] + a, offset[pe.k] + b));
            prov.push_back(Provenance::pair_edge(pe.j, pe.k));
        }
    }
    std::vector<ClusterId> cluster_of(n);
    for (int k = 0; k < p; ++k)
        for (int v = offset[k]; v < offset[k + 1]; ++v) cluster_of[v] = k;

    GeneratedGraph out{Graph(n, std::move(edges), std::move(prov)),
                       n > 0 ? Partition(std::move(cluster_of)) : Partition()};
    return out;
}

}  // namespace symgraph
