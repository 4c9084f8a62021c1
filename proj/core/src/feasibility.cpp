#include "symgraph/feasibility.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include <boost/rational.hpp>

namespace symgraph {

std::vector<std::vector<long long>> FeasibilitySystem::matrix() const {
    std::vector<std::vector<long long>> m(rows.size(),
                                          std::vector<long long>(p, 0));
    for (size_t r = 0; r < rows.size(); ++r) {
        m[r][rows[r].j] = rows[r].coef_j;
        m[r][rows[r].k] = rows[r].coef_k;
    }
    return m;
}

FeasibilitySystem build_system(const QuotientGraph& q) {
    int p = q.num_clusters();
    FeasibilitySystem sys;
    sys.p = p;
    sys.doubled.resize(p);
    for (int i = 0; i < p; ++i) sys.doubled[i] = (q.self_loop(i) % 2 == 1);
    for (const auto& e : q.pairs()) {
        // Constraint Q_jk n_j = Q_kj n_k, written over x with n = (2)x.
        long long cj = e.w_low * (sys.doubled[e.j] ? 2 : 1);
        long long ck = -e.w_high * (sys.doubled[e.k] ? 2 : 1);
        sys.rows.push_back({e.j, e.k, cj, ck});
    }
    // Lower bound on n_i: at least the largest demand any neighbor places on
    // this cluster, and at least Q_ii + 1; halved (rounded up) when doubled.
    sys.x_lower.assign(p, 1);
    for (int i = 0; i < p; ++i) {
        long long L = q.self_loop(i) + 1;
        for (const auto& e : q.pairs()) {
            if (e.j == i) L = std::max(L, e.w_high);  // n_i >= Q_ki
            if (e.k == i) L = std::max(L, e.w_low);
        }
        sys.x_lower[i] = sys.doubled[i] ? (L + 1) / 2 : L;
    }
    return sys;
}

namespace {

using Rational = boost::rational<long long>;

}  // namespace

FeasibilityResult is_feasible(const FeasibilitySystem& sys) {
    int p = sys.p;
    FeasibilityResult res;
    res.component.assign(p, -1);

    // Clusters as nodes, rows as exact ratio constraints.
    struct Arc {
        int to;
        size_t row;
    };
    std::vector<std::vector<Arc>> adj(p);
    for (size_t r = 0; r < sys.rows.size(); ++r) {
        adj[sys.rows[r].j].push_back({sys.rows[r].k, r});
        adj[sys.rows[r].k].push_back({sys.rows[r].j, r});
    }

    std::vector<Rational> val(p, Rational(0));
    std::vector<int> parent(p, -1);       // BFS tree parent
    std::vector<size_t> parent_row(p, 0); // row used to reach this cluster
    int comp_count = 0;
    for (int root = 0; root < p; ++root) {
        if (res.component[root] != -1) continue;
        int comp = comp_count++;
        res.component[root] = comp;
        val[root] = Rational(1);
        std::queue<int> bfs;
        bfs.push(root);
        while (!bfs.empty()) {
            int u = bfs.front();
            bfs.pop();
            for (const Arc& arc : adj[u]) {
                if (res.component[arc.to] != -1) continue;
                const auto& row = sys.rows[arc.row];
                long long a = row.coef_j, b = -row.coef_k;
                // a x_j = b x_k
                if (arc.to == row.k)
                    val[arc.to] = val[u] * Rational(a, b);
                else
                    val[arc.to] = val[u] * Rational(b, a);
                res.component[arc.to] = comp;
                parent[arc.to] = u;
                parent_row[arc.to] = arc.row;
                bfs.push(arc.to);
            }
        }
    }

    // Every non-tree row must agree with the propagated ratios.
    for (size_t r = 0; r < sys.rows.size(); ++r) {
        const auto& row = sys.rows[r];
        if (Rational(row.coef_j) * val[row.j] !=
            Rational(-row.coef_k) * val[row.k]) {
            // Witness: tree path between the endpoints plus this pair edge.
            auto depth = [&](int v) {
                int d = 0;
                for (int x = v; parent[x] != -1; x = parent[x]) ++d;
                return d;
            };
            int u = row.j, w = row.k;
            int du = depth(u), dw = depth(w);
            auto add_edge = [&](size_t ri) {
                res.witness_cycle.push_back({sys.rows[ri].j, sys.rows[ri].k});
            };
            while (du > dw) {
                add_edge(parent_row[u]);
                u = parent[u];
                --du;
            }
            while (dw > du) {
                add_edge(parent_row[w]);
                w = parent[w];
                --dw;
            }
            while (u != w) {
                add_edge(parent_row[u]);
                add_edge(parent_row[w]);
                u = parent[u];
                w = parent[w];
            }
            add_edge(r);
            std::sort(res.witness_cycle.begin(), res.witness_cycle.end());
            res.feasible = false;
            return res;
        }
    }

    // Clear denominators per component with the lcm, then divide by the gcd.
    res.certificate.assign(p, 0);
    std::vector<long long> lcm_den(comp_count, 1), gcd_num(comp_count, 0);
    for (int i = 0; i < p; ++i) {
        int c = res.component[i];
        lcm_den[c] = std::lcm(lcm_den[c], val[i].denominator());
    }
    for (int i = 0; i < p; ++i) {
        int c = res.component[i];
        res.certificate[i] = val[i].numerator() * (lcm_den[c] / val[i].denominator());
        gcd_num[c] = std::gcd(gcd_num[c], res.certificate[i]);
    }
    for (int i = 0; i < p; ++i) res.certificate[i] /= gcd_num[res.component[i]];
    res.feasible = true;
    return res;
}

}  // namespace symgraph
