#include "symgraph/rewire.hpp"

#include <cmath>
#include <set>
#include <stdexcept>
#include <vector>

#include "symgraph/quotient.hpp"
#include "symgraph/rng.hpp"

namespace symgraph {

namespace {

struct EdgePool {
    std::vector<Edge> edges;
    std::vector<std::optional<Provenance>> prov;
    std::set<Edge> present;

    explicit EdgePool(const Graph& g)
        : edges(g.edges()), prov(g.provenance()),
          present(edges.begin(), edges.end()) {
        if (prov.size() != edges.size())
            throw std::invalid_argument("graph carries no provenance tags");
    }

    std::vector<size_t> class_indices(const Provenance& tag) const {
        std::vector<size_t> idx;
        for (size_t i = 0; i < edges.size(); ++i)
            if (prov[i] && *prov[i] == tag) idx.push_back(i);
        return idx;
    }

    Graph build(int n) const { return Graph(n, edges, prov); }
};

// Attempted double-edge swaps within one class. For intra classes both
// replacement orientations are tried the way the swap is written: edges
// (a,b),(c,d) become (a,d),(c,b).
void run_swaps_intra(EdgePool& pool, const std::vector<size_t>& cls,
                     std::mt19937_64& rng, long long attempts) {
    if (cls.size() < 2) return;
    for (long long t = 0; t < attempts; ++t) {
        size_t e1 = cls[bounded(rng, cls.size())];
        size_t e2 = cls[bounded(rng, cls.size())];
        if (e1 == e2) continue;
        auto [a, b] = pool.edges[e1];
        auto [c, d] = pool.edges[e2];
        // Undirected edges: pick one of the two pairings at random.
        if (bounded(rng, 2) == 1) std::swap(c, d);
        // Replacements (a,d) and (c,b).
        if (a == d || c == b) continue;
        Edge n1 = make_edge(a, d), n2 = make_edge(c, b);
        if (n1 == n2) continue;
        if (pool.present.count(n1) || pool.present.count(n2)) continue;
        pool.present.erase(pool.edges[e1]);
        pool.present.erase(pool.edges[e2]);
        pool.edges[e1] = n1;
        pool.edges[e2] = n2;
        pool.present.insert(n1);
        pool.present.insert(n2);
    }
}

// Bipartite classes keep sides fixed: (u_i,w_i'),(u_j,w_j') become
// (u_i,w_j'),(u_j,w_i').
void run_swaps_inter(EdgePool& pool, const std::vector<size_t>& cls,
                     const Partition& part, ClusterId j, std::mt19937_64& rng,
                     long long attempts) {
    if (cls.size() < 2) return;
    for (long long t = 0; t < attempts; ++t) {
        size_t e1 = cls[bounded(rng, cls.size())];
        size_t e2 = cls[bounded(rng, cls.size())];
        if (e1 == e2) continue;
        auto [a, b] = pool.edges[e1];
        auto [c, d] = pool.edges[e2];
        if (part.cluster_of(a) != j) std::swap(a, b);
        if (part.cluster_of(c) != j) std::swap(c, d);
        if (a == c || b == d) continue;
        Edge n1 = make_edge(a, d), n2 = make_edge(c, b);
        if (pool.present.count(n1) || pool.present.count(n2)) continue;
        pool.present.erase(pool.edges[e1]);
        pool.present.erase(pool.edges[e2]);
        pool.edges[e1] = n1;
        pool.edges[e2] = n2;
        pool.present.insert(n1);
        pool.present.insert(n2);
    }
}

}  // namespace

Graph swap_intra(const Graph& g, ClusterId k, std::uint64_t seed,
                 long long attempts) {
    if (attempts < 0) throw std::invalid_argument("negative attempt count");
    EdgePool pool(g);
    auto cls = pool.class_indices(Provenance::self_loop(k));
    auto rng = make_stream(seed, "intra", static_cast<std::uint64_t>(k));
    run_swaps_intra(pool, cls, rng, attempts);
    return pool.build(g.num_vertices());
}

Graph swap_inter(const Graph& g, ClusterId j, ClusterId k, std::uint64_t seed,
                 long long attempts) {
    if (attempts < 0) throw std::invalid_argument("negative attempt count");
    if (j > k) std::swap(j, k);
    EdgePool pool(g);
    auto cls = pool.class_indices(Provenance::pair_edge(j, k));
    // The inter swap keeps each endpoint on its own side; recover sides from
    // the provenance tag itself.
    std::vector<ClusterId> side(g.num_vertices(), 0);
    for (size_t i : cls) {
        auto [u, v] = pool.edges[i];
        side[u] = 0;
        side[v] = 1;
    }
    auto rng = make_stream(seed, "inter",
                           (static_cast<std::uint64_t>(j) << 32) |
                               static_cast<std::uint64_t>(k));
    // Reuse the generic routine with a side lookup.
    if (cls.size() >= 2) {
        for (long long t = 0; t < attempts; ++t) {
            size_t e1 = cls[bounded(rng, cls.size())];
            size_t e2 = cls[bounded(rng, cls.size())];
            if (e1 == e2) continue;
            auto [a, b] = pool.edges[e1];
            auto [c, d] = pool.edges[e2];
            if (side[a] != 0) std::swap(a, b);
            if (side[c] != 0) std::swap(c, d);
            if (a == c || b == d) continue;
            Edge n1 = make_edge(a, d), n2 = make_edge(c, b);
            if (pool.present.count(n1) || pool.present.count(n2)) continue;
            pool.present.erase(pool.edges[e1]);
            pool.present.erase(pool.edges[e2]);
            pool.edges[e1] = n1;
            pool.edges[e2] = n2;
            pool.present.insert(n1);
            pool.present.insert(n2);
        }
    }
    return pool.build(g.num_vertices());
}

Graph randomize(const Graph& g, const Partition& part, std::uint64_t seed,
                double swaps_per_edge) {
    if (swaps_per_edge < 0) throw std::invalid_argument("negative swap rate");
    extract_quotient(g, part);  // throws if the partition is not equitable
    EdgePool pool(g);
    auto attempts_for = [&](size_t class_size) {
        return static_cast<long long>(
            std::ceil(swaps_per_edge * static_cast<double>(class_size)));
    };
    for (ClusterId k = 0; k < part.num_clusters(); ++k) {
        auto cls = pool.class_indices(Provenance::self_loop(k));
        if (cls.empty()) continue;
        auto rng = make_stream(seed, "intra", static_cast<std::uint64_t>(k));
        run_swaps_intra(pool, cls, rng, attempts_for(cls.size()));
    }
    for (ClusterId j = 0; j < part.num_clusters(); ++j) {
        for (ClusterId k = j + 1; k < part.num_clusters(); ++k) {
            auto cls = pool.class_indices(Provenance::pair_edge(j, k));
            if (cls.empty()) continue;
            auto rng = make_stream(seed, "inter",
                                   (static_cast<std::uint64_t>(j) << 32) |
                                       static_cast<std::uint64_t>(k));
            run_swaps_inter(pool, cls, part, j, rng, attempts_for(cls.size()));
        }
    }
    return pool.build(g.num_vertices());
}

}  // namespace symgraph
