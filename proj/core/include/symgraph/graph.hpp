#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace symgraph {

using Vertex = int;
using ClusterId = int;
using Edge = std::pair<Vertex, Vertex>;  // canonical: first < second

inline Edge make_edge(Vertex u, Vertex v) {
    if (u == v) throw std::invalid_argument("self-loop not allowed");
    return u < v ? Edge{u, v} : Edge{v, u};
}

// Tag identifying which quotient feature created an edge.
struct Provenance {
    enum class Kind { SelfLoop, PairEdge };
    Kind kind;
    ClusterId a;  // SelfLoop: the cluster; PairEdge: lower cluster
    ClusterId b;  // PairEdge: higher cluster; unused for SelfLoop

    static Provenance self_loop(ClusterId i) { return {Kind::SelfLoop, i, -1}; }
    static Provenance pair_edge(ClusterId j, ClusterId k) {
        if (j > k) std::swap(j, k);
        return {Kind::PairEdge, j, k};
    }
    bool operator==(const Provenance&) const = default;
};

// Simple undirected unweighted graph. Immutable after construction.
// Provenance is optional metadata and never affects equality.
class Graph {
public:
    Graph() : n_(0) {}
    explicit Graph(int n) : n_(n), adj_(std::max(n, 0)) {
        if (n < 0) throw std::invalid_argument("negative vertex count");
    }
    Graph(int n, std::vector<Edge> edges,
          std::vector<std::optional<Provenance>> provenance = {});

    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }

    // Edges sorted lexicographically, smaller endpoint first.
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Vertex>& neighbors(Vertex v) const {
        check_vertex(v);
        return adj_[v];
    }
    int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
    bool has_edge(Vertex u, Vertex v) const;

    bool has_provenance() const { return !provenance_.empty(); }
    // Indexed like edges(); empty when the graph carries no tags.
    const std::vector<std::optional<Provenance>>& provenance() const {
        return provenance_;
    }

    bool operator==(const Graph& o) const {
        return n_ == o.n_ && edges_ == o.edges_;
    }

    void check_vertex(Vertex v) const {
        if (v < 0 || v >= n_) throw std::invalid_argument("vertex out of range");
    }

private:
    int n_;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<std::optional<Provenance>> provenance_;
};

// Assignment of vertices to clusters 0..p-1; every cluster nonempty.
class Partition {
public:
    Partition() : p_(0) {}
    explicit Partition(std::vector<ClusterId> cluster_of);

    int num_vertices() const { return static_cast<int>(cluster_of_.size()); }
    int num_clusters() const { return p_; }
    ClusterId cluster_of(Vertex v) const { return cluster_of_.at(v); }
    const std::vector<ClusterId>& assignment() const { return cluster_of_; }
    int size_of(ClusterId k) const { return sizes_.at(k); }
    const std::vector<int>& sizes() const { return sizes_; }
    std::vector<std::vector<Vertex>> clusters() const;

    bool operator==(const Partition&) const = default;

private:
    std::vector<ClusterId> cluster_of_;
    int p_;
    std::vector<int> sizes_;
};

// Bijection on [0, n).
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<Vertex> image);
    static Permutation identity(int n);

    int size() const { return static_cast<int>(image_.size()); }
    Vertex operator()(Vertex v) const { return image_.at(v); }
    const std::vector<Vertex>& image() const { return image_; }

    Permutation compose(const Permutation& other) const;  // this after other
    bool operator==(const Permutation&) const = default;

private:
    std::vector<Vertex> image_;
};

// Number of neighbors of v inside cluster k.
int degree_to_cluster(const Graph& g, Vertex v, const Partition& part,
                      ClusterId k);

// True iff perm maps the edge set onto itself.
bool is_automorphism(const Graph& g, const Permutation& perm);

// True iff part2 refines part1 (every cluster of part2 inside one of part1).
bool refines(const Partition& finer, const Partition& coarser);

}  // namespace symgraph
