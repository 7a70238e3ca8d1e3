#pragma once

#include <optional>
#include <vector>

#include "leafspan/graph.hpp"

namespace leafspan {

// Petersen graph on 10 vertices, Kneser labeling: vertex i is the i-th pair
// of {0..4} in lexicographic order, edges join disjoint pairs.
Graph petersen();

// Petersen with one vertex replaced by a triangle: vertex 0 is deleted, the
// remaining vertices shift down by one, triangle {9,10,11} is added and its
// vertices attach to the three former neighbors of 0 in ascending order.
Graph petersen_triangle();

// Cycle on n-1 vertices 0..n-2 plus vertex n-1 adjacent to 0 and 2. n >= 5.
Graph sharpness_g1(int n);

// Cycle on n-2 vertices 0..n-3 plus vertex n-2 adjacent to 0, 2 and vertex
// n-1 adjacent to n-6, n-4. n >= 8.
Graph sharpness_g2(int n);

// Full join templates. Hub vertices come first, then the cells in order.
Graph family_f3(int a, int b, int c);  // K2 v (Ka + Kb + Kc), a,b,c >= 2
Graph family_f4(int a, int b);         // K3 v (aK2 + bK3), a,b >= 0, a+b = 4
Graph family_f5(int s);                // Ks v (sK2 + K3), s >= 4
Graph family_f6(int s);                // Ks v (s+1)K2, s >= 4

// Two blocks, each hamiltonian or K2, linked by one edge between their
// vertex-0 copies.
Graph compose_f1(const Graph& part_a, const Graph& part_b);

// Two blocks, each hamiltonian or K2, glued at one shared vertex (vertex 0
// of both parts), with no other contact.
Graph compose_f2(const Graph& part_a, const Graph& part_b);

enum class FamilySubclass { F1, F2, F3, F4, F5, F6 };

const char* to_string(FamilySubclass c);

struct MembershipResult {
    bool member = false;
    std::optional<FamilySubclass> subclass;
    // Witness layout: F1/F2 -> {A, B} (for F2 both sides include the shared
    // vertex); F3..F6 -> {hub, cell, cell, ...}.
    std::vector<VertexSet> partition;
};

constexpr int family_membership_max_order = 16;

// Decides membership in F1 | ... | F6 by structural search and returns a
// certifying partition. Throws budget_error above
// family_membership_max_order vertices.
MembershipResult is_in_family_F(const Graph& g);

}  // namespace leafspan
