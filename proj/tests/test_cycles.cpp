#include <algorithm>

#include "doctest.h"
#include "leafspan/constructions.hpp"
#include "leafspan/cycles.hpp"
#include "leafspan/errors.hpp"
#include "support.hpp"

namespace {

using namespace leafspan;

void check_cycle_witness(const Graph& g, const CircumferenceResult& r) {
    REQUIRE(r.witness.has_value());
    const auto& vs = r.witness->vertices;
    REQUIRE(static_cast<int>(vs.size()) == r.length);
    REQUIRE(r.length >= 3);
    VertexSet seen;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        CHECK_FALSE(seen.test(vs[i]));
        seen.set(vs[i]);
        CHECK(g.has_edge(vs[i], vs[(i + 1) % vs.size()]));
    }
    // Normal form: minimal vertex first, smaller second endpoint.
    CHECK(vs[0] == *std::min_element(vs.begin(), vs.end()));
    CHECK(vs[1] < vs.back());
}

void check_path_witness(const Graph& g, const LongestPathResult& r) {
    const auto& vs = r.witness.vertices;
    REQUIRE(static_cast<int>(vs.size()) == r.order);
    REQUIRE(r.order >= 1);
    VertexSet seen;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        CHECK_FALSE(seen.test(vs[i]));
        seen.set(vs[i]);
        if (i + 1 < vs.size()) CHECK(g.has_edge(vs[i], vs[i + 1]));
    }
    if (vs.size() > 1) CHECK(vs.front() < vs.back());
}

}  // namespace

TEST_CASE("circumference on standard graphs") {
    CHECK(circumference(Graph::cycle(9)).length == 9);
    CHECK(circumference(Graph::complete(5)).length == 5);
    CHECK(circumference(petersen()).length == 9);
    CHECK(circumference(petersen_triangle()).length == 11);
    CHECK(circumference(sharpness_g1(12)).length == 11);
    CHECK(circumference(sharpness_g2(12)).length == 10);
    CHECK(circumference(join(Graph(3), Graph(3))).length == 6);

    CircumferenceResult tree = circumference(Graph::path(7));
    CHECK(tree.length == 0);
    CHECK(tree.acyclic());
    CHECK_FALSE(tree.witness.has_value());
    CHECK(circumference(Graph(1)).acyclic());
}

TEST_CASE("longest path on standard graphs") {
    CHECK(longest_path(Graph::path(7)).order == 7);
    CHECK(longest_path(Graph(1)).order == 1);
    CHECK(longest_path(petersen()).order == 10);
    CHECK(longest_path(Graph(3)).order == 1);
    CHECK(longest_path(disjoint_union(Graph::path(3), Graph::complete(4))).order == 4);
    // Spider with three legs of length 2: best path spans two legs.
    Graph spider(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
    CHECK(longest_path(spider).order == 5);
}

TEST_CASE("hamiltonicity and traceability") {
    CHECK(is_hamiltonian(Graph::cycle(5)));
    CHECK_FALSE(is_hamiltonian(petersen()));
    CHECK(is_traceable(petersen()));
    CHECK_FALSE(is_hamiltonian(Graph::complete(2)));
    CHECK(is_traceable(Graph::complete(2)));
    CHECK(is_traceable(Graph(1)));
    CHECK_FALSE(is_hamiltonian(Graph(1)));
    CHECK_FALSE(is_traceable(join(Graph(1), Graph(3))));
}

TEST_CASE("witnesses are sound and normalized over small corpora") {
    for (int n = 2; n <= 7; ++n)
        for (const Graph& g : testsupport::connected_of_order(n)) {
            CircumferenceResult c = circumference(g);
            LongestPathResult p = longest_path(g);
            if (!c.acyclic()) check_cycle_witness(g, c);
            check_path_witness(g, p);
            CHECK(c.length <= p.order);
            CHECK(p.order <= n);
        }
}

TEST_CASE("search engines agree with subset dynamic programming") {
    for (int n = 2; n <= 7; ++n)
        for (const Graph& g : testsupport::connected_of_order(n)) {
            CHECK(circumference(g).length == circumference_dp_oracle(g));
            CHECK(longest_path(g).order == longest_path_dp_oracle(g));
        }
    CHECK(circumference_dp_oracle(petersen()) == 9);
    CHECK(longest_path_dp_oracle(petersen()) == 10);
    CHECK_THROWS_AS(circumference_dp_oracle(Graph(21)), budget_error);
    CHECK_THROWS_AS(longest_path_dp_oracle(Graph(21)), budget_error);
}

TEST_CASE("cycle properties hold on computed longest cycles") {
    Graph p = petersen();
    LongestCycleProperties props = longest_cycle_properties(p, *circumference(p).witness);
    CHECK(props.no_common_offcycle_neighbor);
    CHECK(props.no_crossing_pair);
    CHECK(props.detour_path_short);
    CHECK(props.detour_path_short_weak);
    CHECK_FALSE(props.detour_readings_disagree);
    CHECK(props.all());
}

TEST_CASE("cycle properties flag a non-maximal cycle") {
    // House: C5 plus an apex over one cycle edge. The 5-cycle is not longest,
    // and the apex sits on two consecutive cycle vertices.
    Graph house(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 5}});
    REQUIRE(circumference(house).length == 6);
    CycleWitness c5{{0, 1, 2, 3, 4}};
    LongestCycleProperties props = longest_cycle_properties(house, c5);
    CHECK_FALSE(props.no_common_offcycle_neighbor);
    CHECK_FALSE(props.all());
}

TEST_CASE("cycle properties flag a crossing pair") {
    // C6 with two outside vertices x = 6 ~ {0, 2}, y = 7 ~ {1, 3}:
    // successors 1 and 3 of the x-anchors both land in N(y).
    Graph g(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {6, 0}, {6, 2}, {7, 1}, {7, 3}});
    CycleWitness c6{{0, 1, 2, 3, 4, 5}};
    LongestCycleProperties props = longest_cycle_properties(g, c6);
    CHECK_FALSE(props.no_crossing_pair);
}

TEST_CASE("detour reading split on a pendant triangle") {
    // C5 with a triangle hung on one cycle vertex: the off-cycle edge has
    // both endpoints attached to the same single cycle vertex, so the
    // distinct-anchors premise is vacuous while the lenient reading trips.
    Graph g(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {5, 6}, {0, 5}, {0, 6}});
    REQUIRE(circumference(g).length == 5);
    CircumferenceResult c = circumference(g);
    LongestCycleProperties props = longest_cycle_properties(g, *c.witness);
    CHECK(props.detour_path_short);
    CHECK_FALSE(props.detour_path_short_weak);
    CHECK(props.detour_readings_disagree);
    CHECK(props.all());
}

TEST_CASE("cycle properties validate their input") {
    Graph p = petersen();
    CHECK_THROWS_AS(longest_cycle_properties(p, CycleWitness{{0, 1, 2}}), domain_error);
    CHECK_THROWS_AS(longest_cycle_properties(p, CycleWitness{{0, 7}}), domain_error);
}

TEST_CASE("cycle properties over the order-7 corpus") {
    for (const Graph& g : testsupport::connected_of_order(7)) {
        CircumferenceResult c = circumference(g);
        if (c.acyclic()) continue;
        LongestCycleProperties props = longest_cycle_properties(g, *c.witness);
        CHECK(props.all());
    }
}
