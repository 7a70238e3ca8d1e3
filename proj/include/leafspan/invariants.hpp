#pragma once

#include <optional>
#include <vector>

#include "leafspan/graph.hpp"

namespace leafspan {

struct ConnectivityResult {
    int kappa = 0;
    // Deleting these vertices disconnects the graph. Empty when no separating
    // set exists (complete graphs, already-disconnected graphs, K1).
    VertexSet min_cut;
};

// Exact vertex connectivity. By convention kappa(K_n) = n - 1 and kappa = 0
// for disconnected graphs.
ConnectivityResult vertex_connectivity(const Graph& g);

// True iff n >= 3 and kappa >= 2.
bool is_two_connected(const Graph& g);

struct IndependenceResult {
    int alpha = 0;
    VertexSet witness;
    // sigma[k-1] is the minimum degree sum over independent k-sets, for
    // k = 1..alpha. Values for k > alpha do not exist.
    std::vector<int> sigma;

    std::optional<int> sigma_k(int k) const {
        if (k < 1 || k > static_cast<int>(sigma.size())) return std::nullopt;
        return sigma[static_cast<std::size_t>(k) - 1];
    }
};

IndependenceResult independence(const Graph& g);

bool is_triangle_free(const Graph& g);

// The common degree when the graph is regular, absent otherwise.
std::optional<int> regularity(const Graph& g);

}  // namespace leafspan
