#pragma once

#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "leafspan/enumeration.hpp"
#include "leafspan/graph.hpp"

namespace testsupport {

// One shared enumeration per order; several suites walk the same corpora.
inline const std::vector<leafspan::Graph>& connected_of_order(int n) {
    static std::map<int, std::vector<leafspan::Graph>> cache;
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, leafspan::enumerate_connected(n)).first;
    return it->second;
}

inline leafspan::Graph relabel(const leafspan::Graph& g, const std::vector<int>& perm) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < g.order(); ++u)
        for (int v : g.neighbors(u))
            if (u < v) edges.emplace_back(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    return leafspan::Graph(g.order(), edges);
}

inline std::vector<int> random_permutation(int n, std::mt19937& rng) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

inline leafspan::Graph random_graph(int n, double p, std::mt19937& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return leafspan::Graph(n, edges);
}

}  // namespace testsupport
