#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "symgraph/graph.hpp"

namespace symgraph {

// Directed weight pair attached to an unordered cluster pair (j, k), j < k.
// w_low is the multiplicity toward the lower-indexed cluster (each vertex of
// cluster j receives w_low edges from cluster k); w_high toward the higher.
struct QuotientPair {
    ClusterId j, k;  // j < k
    long long w_low, w_high;
    bool operator==(const QuotientPair&) const = default;
};

// Quotient graph: per-cluster self-loop counts plus weighted pair edges.
class QuotientGraph {
public:
    QuotientGraph() = default;
    QuotientGraph(std::vector<long long> self_loops,
                  std::vector<QuotientPair> pairs);

    int num_clusters() const { return static_cast<int>(self_loops_.size()); }
    long long self_loop(ClusterId i) const { return self_loops_.at(i); }
    const std::vector<long long>& self_loops() const { return self_loops_; }
    const std::vector<QuotientPair>& pairs() const { return pairs_; }

    // Entry Q[i][j]: edges each vertex of cluster i receives from cluster j.
    long long entry(ClusterId i, ClusterId j) const;

    bool operator==(const QuotientGraph&) const = default;

private:
    std::vector<long long> self_loops_;
    std::vector<QuotientPair> pairs_;  // sorted by (j, k)
};

std::vector<std::vector<long long>> q_matrix(const QuotientGraph& q);

bool is_equitable(const Graph& g, const Partition& part);

// Requires an equitable partition; throws std::domain_error naming a
// violating vertex pair and cluster otherwise.
QuotientGraph extract_quotient(const Graph& g, const Partition& part);

// Coarsest equitable partition (minimal balanced coloring), computed by
// iterative refinement from the trivial partition. Clusters are ordered by
// smallest contained vertex.
Partition coarsest_equitable(const Graph& g);

// One-pass-to-fixed-point color refinement with canonical color ids.
// Color ids are assigned by lexicographic order of the refinement signatures,
// so two colorings with equal signature multisets receive aligned ids.
std::vector<int> refine_colors(const Graph& g, std::vector<int> colors);

// Relabel arbitrary color values into a Partition with clusters ordered by
// smallest contained vertex.
Partition colors_to_partition(const std::vector<int>& colors);

// Quotient file format (1-indexed, '#' comments):
//   quotient <p>
//   self <i> <d>
//   edge <j> <k> <w0> <w1>
QuotientGraph parse_quotient(const std::string& text);
std::string serialize_quotient(const QuotientGraph& q);

}  // namespace symgraph
