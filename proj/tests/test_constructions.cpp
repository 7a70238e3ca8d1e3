#include <algorithm>
#include <random>
#include <utility>
#include <vector>

#include "doctest.h"
#include "leafspan/constructions.hpp"
#include "leafspan/cycles.hpp"
#include "leafspan/enumeration.hpp"
#include "leafspan/errors.hpp"
#include "leafspan/invariants.hpp"
#include "support.hpp"

namespace {

using namespace leafspan;

int max_common_neighbors(const Graph& g) {
    int best = 0;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            best = std::max(best, (g.neighbors(u) & g.neighbors(v)).count());
    return best;
}

void check_template(const Graph& g, FamilySubclass expected) {
    CAPTURE(write_graph6(g));
    CHECK(is_two_connected(g));
    const IndependenceResult ind = independence(g);
    REQUIRE(ind.sigma_k(3).has_value());
    CHECK(*ind.sigma_k(3) >= g.order());
    const MembershipResult m = is_in_family_F(g);
    CHECK(m.member);
    CHECK(m.subclass == expected);
}

void check_partition_covers(const Graph& g, const MembershipResult& m) {
    VertexSet all;
    int total = 0;
    for (const VertexSet& part : m.partition) {
        all |= part;
        total += part.count();
    }
    CHECK(all == g.vertices());
    if (m.subclass == FamilySubclass::F2)
        CHECK(total == g.order() + 1);  // shared cut vertex counted twice
    else
        CHECK(total == g.order());
}

}  // namespace

TEST_CASE("petersen structure") {
    Graph p = petersen();
    CHECK(p.order() == 10);
    CHECK(p.size() == 15);
    CHECK(regularity(p) == 3);
    CHECK(is_triangle_free(p));
    // Girth 5: triangle-free plus no two vertices share two neighbors.
    CHECK(max_common_neighbors(p) == 1);
}

TEST_CASE("petersen triangle expansion structure") {
    Graph pt = petersen_triangle();
    CHECK(pt.order() == 12);
    CHECK(pt.size() == 18);
    CHECK(regularity(pt) == 3);
    CHECK_FALSE(is_triangle_free(pt));
    CHECK(pt.has_edge(9, 10));
    CHECK(pt.has_edge(10, 11));
    CHECK(pt.has_edge(9, 11));
    // Vertices 0..8 are the nine kept Petersen vertices.
    Graph rest = induced_subgraph(pt, VertexSet::first_n(9));
    Graph hole = induced_subgraph(petersen(), petersen().vertices() - VertexSet::single(0));
    CHECK(are_isomorphic(rest, hole));
    CHECK(vertex_connectivity(pt).kappa == 3);
}

TEST_CASE("sharpness graphs") {
    for (int n = 5; n <= 16; ++n) {
        Graph g = sharpness_g1(n);
        CHECK(g.order() == n);
        CHECK(g.size() == n + 1);
        CHECK(degree_profile(g).min_degree == 2);
        CHECK(circumference(g).length == n - 1);
    }
    for (int n = 8; n <= 16; ++n) {
        Graph g = sharpness_g2(n);
        CHECK(g.order() == n);
        CHECK(g.size() == n + 2);
        CHECK(degree_profile(g).min_degree == 2);
        CHECK(circumference(g).length == n - 2);
    }
    CHECK_THROWS_AS(sharpness_g1(4), domain_error);
    CHECK_THROWS_AS(sharpness_g2(7), domain_error);
}

TEST_CASE("family template orders follow their formulas") {
    for (int a = 2; a <= 4; ++a)
        for (int b = 2; b <= 4; ++b)
            for (int c = 2; c <= 4; ++c) CHECK(family_f3(a, b, c).order() == a + b + c + 2);
    for (int a = 0; a <= 4; ++a) CHECK(family_f4(a, 4 - a).order() == 2 * a + 3 * (4 - a) + 3);
    for (int s = 4; s <= 8; ++s) CHECK(family_f5(s).order() == 3 * s + 3);
    for (int s = 4; s <= 8; ++s) CHECK(family_f6(s).order() == 3 * s + 2);
    CHECK_THROWS_AS(family_f3(1, 2, 2), domain_error);
    CHECK_THROWS_AS(family_f4(2, 3), domain_error);
    CHECK_THROWS_AS(family_f5(3), domain_error);
    CHECK_THROWS_AS(family_f6(3), domain_error);
}

TEST_CASE("templates satisfy the family preconditions and are recognized") {
    check_template(family_f3(2, 2, 2), FamilySubclass::F3);
    check_template(family_f3(2, 3, 4), FamilySubclass::F3);
    check_template(family_f3(4, 4, 4), FamilySubclass::F3);
    for (int a = 0; a <= 4; ++a) check_template(family_f4(a, 4 - a), FamilySubclass::F4);
    check_template(family_f5(4), FamilySubclass::F5);
    check_template(family_f6(4), FamilySubclass::F6);
}

TEST_CASE("membership rejects near misses") {
    CHECK_FALSE(is_in_family_F(petersen()).member);
    CHECK_FALSE(is_in_family_F(petersen_triangle()).member);
    CHECK_FALSE(is_in_family_F(Graph::cycle(8)).member);
    CHECK_FALSE(is_in_family_F(Graph::complete(6)).member);
    CHECK_FALSE(is_in_family_F(sharpness_g2(10)).member);
    CHECK_FALSE(is_in_family_F(Graph(1)).member);
    CHECK_FALSE(is_in_family_F(Graph::complete(2)).member);
}

TEST_CASE("membership accepts proper two-connected spanning subgraphs") {
    // Drop one hub-to-cell edge from the full f3 join; 2-connectivity
    // survives, so the subgraph stays in the family.
    Graph full = family_f3(2, 2, 3);
    int hub = 0;
    int cell_vertex = 2;
    REQUIRE(full.has_edge(hub, cell_vertex));
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < full.order(); ++u)
        for (int v : full.neighbors(u))
            if (u < v && !(u == hub && v == cell_vertex)) edges.emplace_back(u, v);
    Graph trimmed(full.order(), edges);
    REQUIRE(is_two_connected(trimmed));
    MembershipResult m = is_in_family_F(trimmed);
    CHECK(m.member);
    CHECK(m.subclass == FamilySubclass::F3);
    check_partition_covers(trimmed, m);
}

TEST_CASE("membership survives random two-connected trims") {
    std::mt19937 rng(613);
    const Graph templates[] = {family_f3(2, 3, 2), family_f4(2, 2), family_f5(4), family_f6(4)};
    for (const Graph& full : templates) {
        Graph g = full;
        int removed = 0;
        for (int attempt = 0; attempt < 40 && removed < 4; ++attempt) {
            std::vector<std::pair<int, int>> edges;
            for (int u = 0; u < g.order(); ++u)
                for (int v : g.neighbors(u))
                    if (u < v) edges.emplace_back(u, v);
            std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
            const std::pair<int, int> dropped = edges[pick(rng)];
            edges.erase(std::remove(edges.begin(), edges.end(), dropped), edges.end());
            Graph trimmed(g.order(), edges);
            if (!is_two_connected(trimmed)) continue;
            g = trimmed;
            ++removed;
            CAPTURE(write_graph6(g));
            CHECK(is_in_family_F(g).member);
        }
        CHECK(removed == 4);
    }
}

TEST_CASE("composed cut structures land in the cut subclasses") {
    Graph c4 = Graph::cycle(4);
    Graph bridge = compose_f1(c4, Graph::complete(2));
    CHECK(bridge.order() == 6);
    MembershipResult m1 = is_in_family_F(bridge);
    CHECK(m1.member);
    CHECK(m1.subclass == FamilySubclass::F1);
    check_partition_covers(bridge, m1);

    Graph glued = compose_f2(c4, Graph::cycle(5));
    CHECK(glued.order() == 8);
    MembershipResult m2 = is_in_family_F(glued);
    CHECK(m2.member);
    CHECK(m2.subclass == FamilySubclass::F2);
    check_partition_covers(glued, m2);

    CHECK(is_in_family_F(Graph::path(4)).member);  // K2 - K2 bridge
    CHECK_THROWS_AS(compose_f1(Graph::path(3), Graph::complete(2)), domain_error);
    CHECK_THROWS_AS(compose_f2(Graph::path(4), Graph::complete(3)), domain_error);
}

TEST_CASE("membership respects its order budget") {
    CHECK_THROWS_AS(is_in_family_F(family_f3(5, 5, 5)), budget_error);
    CHECK_NOTHROW(is_in_family_F(family_f3(4, 4, 6)));
}

TEST_CASE("membership partition certifies the join structure") {
    Graph g = family_f5(4);
    MembershipResult m = is_in_family_F(g);
    REQUIRE(m.member);
    REQUIRE(m.subclass == FamilySubclass::F5);
    REQUIRE(m.partition.size() >= 2);
    check_partition_covers(g, m);
    const VertexSet hub = m.partition.front();
    CHECK(hub.count() == 4);
    // Hub vertices see everything.
    for (int h : hub) CHECK(g.closed_neighborhood(h) == g.vertices());
    // Cells are pairwise non-adjacent outside the hub.
    for (std::size_t i = 1; i < m.partition.size(); ++i)
        for (std::size_t j = i + 1; j < m.partition.size(); ++j)
            CHECK(cross_edge_count(g, m.partition[i], m.partition[j]) == 0);
}
