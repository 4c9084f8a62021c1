#include "symgraph/automorphism.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "symgraph/quotient.hpp"

namespace symgraph {

namespace {

struct DisjointSet {
    std::vector<int> parent;
    explicit DisjointSet(int n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

Partition dsu_to_partition(DisjointSet& dsu, int n) {
    std::map<int, int> order;
    std::vector<ClusterId> out(n);
    for (int v = 0; v < n; ++v) {
        int r = dsu.find(v);
        auto it = order.find(r);
        if (it == order.end()) it = order.emplace(r, (int)order.size()).first;
        out[v] = it->second;
    }
    return Partition(std::move(out));
}

// Backtracking search for an automorphism consistent with a pair of aligned
// colorings (same graph, two colorings sharing canonical color ids).
class MappingSearch {
public:
    MappingSearch(const Graph& g, long long budget) : g_(g), budget_(budget) {}

    std::optional<Permutation> run(std::vector<int> color_a,
                                   std::vector<int> color_b) {
        return search(std::move(color_a), std::move(color_b));
    }

    long long budget_left() const { return budget_; }

private:
    std::optional<Permutation> search(std::vector<int> color_a,
                                      std::vector<int> color_b) {
        if (--budget_ < 0)
            throw std::runtime_error("orbit search budget exceeded");
        color_a = refine_colors(g_, std::move(color_a));
        color_b = refine_colors(g_, std::move(color_b));
        // Canonical ids must produce matching cell sizes.
        int n = g_.num_vertices();
        std::map<int, std::vector<Vertex>> cells_a, cells_b;
        for (Vertex v = 0; v < n; ++v) {
            cells_a[color_a[v]].push_back(v);
            cells_b[color_b[v]].push_back(v);
        }
        if (cells_a.size() != cells_b.size()) return std::nullopt;
        for (auto ita = cells_a.begin(), itb = cells_b.begin();
             ita != cells_a.end(); ++ita, ++itb)
            if (ita->first != itb->first ||
                ita->second.size() != itb->second.size())
                return std::nullopt;

        // All cells singleton: the color-matching bijection is the candidate.
        auto target = std::find_if(cells_a.begin(), cells_a.end(), [](auto& c) {
            return c.second.size() > 1;
        });
        if (target == cells_a.end()) {
            std::vector<Vertex> image(n);
            for (auto& [c, vs] : cells_a) image[vs[0]] = cells_b[c][0];
            Permutation perm(std::move(image));
            if (is_automorphism(g_, perm)) return perm;
            return std::nullopt;
        }

        int cell_color = target->first;
        Vertex a = target->second.front();
        int fresh = n + 1;  // color id outside the refined range
        for (Vertex b : cells_b[cell_color]) {
            auto ca = color_a;
            auto cb = color_b;
            ca[a] = fresh;
            cb[b] = fresh;
            if (auto found = search(std::move(ca), std::move(cb))) return found;
        }
        return std::nullopt;
    }

    const Graph& g_;
    long long budget_;
};

}  // namespace

OrbitPartition orbits_bruteforce(const Graph& g) {
    int n = g.num_vertices();
    if (n > 8) throw std::invalid_argument("brute-force orbits limited to n <= 8");
    OrbitPartition out;
    if (n == 0) return out;
    DisjointSet dsu(n);
    std::vector<Vertex> image(n);
    std::iota(image.begin(), image.end(), 0);
    do {
        Permutation perm(image);
        if (is_automorphism(g, perm)) {
            bool moves = false;
            for (int v = 0; v < n; ++v) {
                if (perm(v) != v) moves = true;
                dsu.unite(v, perm(v));
            }
            if (moves) out.generators.push_back(perm);
        }
    } while (std::next_permutation(image.begin(), image.end()));
    out.partition = dsu_to_partition(dsu, n);
    return out;
}

OrbitPartition orbits(const Graph& g, SearchLimits limits) {
    int n = g.num_vertices();
    OrbitPartition out;
    if (n == 0) return out;
    std::vector<int> base(n, 0);
    base = refine_colors(g, std::move(base));

    DisjointSet dsu(n);
    long long budget = limits.max_nodes;
    std::map<int, std::vector<Vertex>> cells;
    for (Vertex v = 0; v < n; ++v) cells[base[v]].push_back(v);
    int fresh = n + 1;
    for (auto& [color, members] : cells) {
        // Orbit reps seen so far inside this cell, in vertex order.
        std::vector<Vertex> reps;
        for (Vertex w : members) {
            bool merged = false;
            for (Vertex r : reps) {
                if (dsu.find(r) == dsu.find(w)) {
                    merged = true;
                    break;
                }
                auto ca = base;
                auto cb = base;
                ca[r] = fresh;
                cb[w] = fresh;
                MappingSearch search(g, budget);
                auto found = search.run(std::move(ca), std::move(cb));
                budget = search.budget_left();
                if (found) {
                    for (int v = 0; v < n; ++v) dsu.unite(v, (*found)(v));
                    out.generators.push_back(*found);
                    merged = true;
                    break;
                }
            }
            if (!merged) reps.push_back(w);
        }
    }
    out.partition = dsu_to_partition(dsu, n);
    return out;
}

bool orbit_partition_is_equitable(const Graph& g, const OrbitPartition& o) {
    return is_equitable(g, o.partition);
}

}  // namespace symgraph
