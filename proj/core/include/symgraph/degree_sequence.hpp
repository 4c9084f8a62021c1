#pragma once

#include <vector>

namespace symgraph {

// Erdos-Gallai: realizability of a non-increasing sequence as the degree
// sequence of a simple undirected graph.
bool check_erdos_gallai(const std::vector<long long>& seq);

// Gale-Ryser: realizability of two non-increasing sequences as the two sides
// of a simple bipartite graph.
bool check_gale_ryser(const std::vector<long long>& a,
                      const std::vector<long long>& b);

}  // namespace symgraph
