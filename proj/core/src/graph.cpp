#include "symgraph/graph.hpp"

#include <algorithm>
#include <numeric>

namespace symgraph {

Graph::Graph(int n, std::vector<Edge> edges,
             std::vector<std::optional<Provenance>> provenance)
    : n_(n), adj_(std::max(n, 0)) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    if (!provenance.empty() && provenance.size() != edges.size())
        throw std::invalid_argument("provenance size mismatch");

    // Canonicalize and sort edges, keeping provenance aligned.
    std::vector<size_t> order(edges.size());
    std::iota(order.begin(), order.end(), 0);
    for (auto& e : edges) {
        if (e.first == e.second) throw std::invalid_argument("self-loop");
        if (e.first > e.second) std::swap(e.first, e.second);
        if (e.first < 0 || e.second >= n_)
            throw std::invalid_argument("edge endpoint out of range");
    }
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return edges[a] < edges[b];
    });
    edges_.reserve(edges.size());
    if (!provenance.empty()) provenance_.reserve(edges.size());
    for (size_t idx : order) {
        if (!edges_.empty() && edges_.back() == edges[idx])
            throw std::invalid_argument("duplicate edge");
        edges_.push_back(edges[idx]);
        if (!provenance.empty()) provenance_.push_back(provenance[idx]);
    }
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

Partition::Partition(std::vector<ClusterId> cluster_of)
    : cluster_of_(std::move(cluster_of)) {
    p_ = 0;
    for (ClusterId c : cluster_of_) {
        if (c < 0) throw std::invalid_argument("negative cluster index");
        p_ = std::max(p_, c + 1);
    }
    sizes_.assign(p_, 0);
    for (ClusterId c : cluster_of_) ++sizes_[c];
    for (int k = 0; k < p_; ++k)
        if (sizes_[k] == 0) throw std::invalid_argument("empty cluster");
}

std::vector<std::vector<Vertex>> Partition::clusters() const {
    std::vector<std::vector<Vertex>> out(p_);
    for (Vertex v = 0; v < num_vertices(); ++v) out[cluster_of_[v]].push_back(v);
    return out;
}

Permutation::Permutation(std::vector<Vertex> image) : image_(std::move(image)) {
    std::vector<bool> seen(image_.size(), false);
    for (Vertex v : image_) {
        if (v < 0 || v >= static_cast<int>(image_.size()) || seen[v])
            throw std::invalid_argument("not a bijection");
        seen[v] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<Vertex> im(n);
    std::iota(im.begin(), im.end(), 0);
    return Permutation(std::move(im));
}

Permutation Permutation::compose(const Permutation& other) const {
    if (size() != other.size()) throw std::invalid_argument("size mismatch");
    std::vector<Vertex> im(size());
    for (int v = 0; v < size(); ++v) im[v] = image_[other.image_[v]];
    return Permutation(std::move(im));
}

int degree_to_cluster(const Graph& g, Vertex v, const Partition& part,
                      ClusterId k) {
    g.check_vertex(v);
    if (part.num_vertices() != g.num_vertices())
        throw std::invalid_argument("partition/graph size mismatch");
    if (k < 0 || k >= part.num_clusters())
        throw std::invalid_argument("cluster index out of range");
    int d = 0;
    for (Vertex a : g.neighbors(v))
        if (part.cluster_of(a) == k) ++d;
    return d;
}

bool is_automorphism(const Graph& g, const Permutation& perm) {
    if (perm.size() != g.num_vertices())
        throw std::invalid_argument("permutation/graph size mismatch");
    for (auto [u, v] : g.edges())
        if (!g.has_edge(perm(u), perm(v))) return false;
    return true;
}

bool refines(const Partition& finer, const Partition& coarser) {
    if (finer.num_vertices() != coarser.num_vertices())
        throw std::invalid_argument("partition size mismatch");
    std::vector<ClusterId> target(finer.num_clusters(), -1);
    for (Vertex v = 0; v < finer.num_vertices(); ++v) {
        ClusterId f = finer.cluster_of(v);
        ClusterId c = coarser.cluster_of(v);
        if (target[f] == -1)
            target[f] = c;
        else if (target[f] != c)
            return false;
    }
    return true;
}

}  // namespace symgraph
