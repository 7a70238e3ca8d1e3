#pragma once

#include <vector>

#include "leafspan/graph.hpp"

namespace leafspan {

struct SpanningTreeWitness {
    int root = 0;
    // parent[v] is the tree parent of v, -1 for the root. Every parent edge
    // exists in the host graph.
    std::vector<int> parent;
    int leaf_count = 0;
};

struct LeafNumberResult {
    int leaf_number = 0;
    SpanningTreeWitness witness;
    // A minimum connected dominating set; |cds| = n - leaf_number for n >= 3.
    VertexSet cds;
};

// Maximum leaf count over all spanning trees of a connected graph, computed
// through the max-leaf / minimum-connected-dominating-set duality. Rejects
// n = 1 (no leaf is defined) and disconnected input with domain_error.
LeafNumberResult leaf_number(const Graph& g);

// Lexicographically smallest minimum connected dominating set. For n = 2
// returns a single vertex by convention. Rejects disconnected input.
VertexSet min_connected_dominating_set(const Graph& g);

constexpr int leaf_oracle_max_order = 9;

// Independent maximum-leaf computation by direct spanning-tree enumeration.
// Throws budget_error above leaf_oracle_max_order vertices.
int leaf_number_oracle(const Graph& g);

}  // namespace leafspan
