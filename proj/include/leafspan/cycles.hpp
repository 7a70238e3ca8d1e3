#pragma once

#include <optional>
#include <vector>

#include "leafspan/graph.hpp"

namespace leafspan {

struct CycleWitness {
    // Distinct vertices in cyclic order; consecutive pairs and the wrap-around
    // pair are edges. Normalized to start at the smallest vertex and proceed
    // toward its smaller neighbor on the cycle.
    std::vector<int> vertices;
    int length() const { return static_cast<int>(vertices.size()); }
};

struct PathWitness {
    // Distinct vertices in path order; consecutive pairs are edges. Normalized
    // so the smaller endpoint comes first.
    std::vector<int> vertices;
    int order() const { return static_cast<int>(vertices.size()); }
};

struct CircumferenceResult {
    int length = 0;
    std::optional<CycleWitness> witness;  // absent iff the graph is acyclic
    bool acyclic() const { return !witness.has_value(); }
};

// Exact longest cycle length, length 0 with no witness for forests.
CircumferenceResult circumference(const Graph& g);

struct LongestPathResult {
    int order = 0;
    PathWitness witness;
};

// Exact longest path order; 1 for K1.
LongestPathResult longest_path(const Graph& g);

// n >= 3 and some cycle spans all vertices.
bool is_hamiltonian(const Graph& g);

// Some path spans all vertices.
bool is_traceable(const Graph& g);

struct LongestCycleProperties {
    // (1) No consecutive cycle pair c_i, c_i+1 has a common neighbor off the
    // cycle.
    bool no_common_offcycle_neighbor = true;
    // (2) For off-cycle x, y (x = y allowed) and positions i != j with
    // c_i, c_j in N(x): c_i+1 and c_j+1 do not both lie in N(y).
    bool no_crossing_pair = true;
    // (3) Every path of G - V(C) whose endpoints have two distinct neighbors
    // on C between them has order <= floor(k/2) - 1.
    bool detour_path_short = true;
    // Same with the weaker premise that each endpoint merely has some
    // neighbor on C. Not asserted; can fail even for longest cycles.
    bool detour_path_short_weak = true;
    bool detour_readings_disagree = false;

    bool all() const { return no_common_offcycle_neighbor && no_crossing_pair && detour_path_short; }
};

// Structural checks that hold whenever `c` is a genuinely longest cycle.
// Throws domain_error when `c` is not a cycle of g.
LongestCycleProperties longest_cycle_properties(const Graph& g, const CycleWitness& c);

constexpr int dp_oracle_max_order = 20;

// Independent subset-DP engines used to cross-check the search versions.
// Throw budget_error above dp_oracle_max_order vertices.
int circumference_dp_oracle(const Graph& g);
int longest_path_dp_oracle(const Graph& g);

}  // namespace leafspan
