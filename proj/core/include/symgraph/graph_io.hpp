#pragma once

#include <string>

#include "symgraph/graph.hpp"

namespace symgraph {

struct GraphFile {
    Graph graph;
    // Cluster assignment from the file; vertices may be unassigned (-1).
    // Valid as a Partition only when every vertex is assigned.
    std::vector<ClusterId> cluster_of;

    bool fully_assigned() const;
    Partition partition() const;  // throws when a vertex is unassigned
};

// Edge-list format (1-indexed, '#' comments):
//   graph <n>
//   node <id> <cluster>       cluster 0 = unassigned
//   edge <u> <v> [provenance] with u < v; provenance self:<i> or edge:<j>-<k>
GraphFile parse_graph(const std::string& text);
std::string serialize_graph(const Graph& g, const std::vector<ClusterId>& cluster_of);
std::string serialize_graph(const Graph& g, const Partition& part);

// Undirected DOT export; vertices colored by cluster, edges styled by
// provenance tag.
std::string to_dot(const Graph& g, const std::vector<ClusterId>& cluster_of);

}  // namespace symgraph
