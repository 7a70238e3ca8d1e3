#include "leafspan/constructions.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "leafspan/cycles.hpp"
#include "leafspan/errors.hpp"
#include "leafspan/invariants.hpp"

namespace leafspan {

namespace {

std::vector<std::pair<int, int>> edges_of(const Graph& g) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < g.order(); ++u)
        for (int v : g.neighbors(u))
            if (u < v) e.emplace_back(u, v);
    return e;
}

}  // namespace

Graph petersen() {
    return Graph(10, {{0, 7}, {0, 8}, {0, 9}, {1, 5}, {1, 6}, {1, 9}, {2, 4}, {2, 6}, {2, 8},
                      {3, 4}, {3, 5}, {3, 7}, {4, 9}, {5, 8}, {6, 7}});
}

Graph petersen_triangle() {
    const Graph p = petersen();
    VertexSet keep = p.vertices();
    keep.reset(0);
    auto edges = edges_of(induced_subgraph(p, keep));
    // Former neighbors of vertex 0 were 7, 8, 9; after the shift they are
    // 6, 7, 8 and receive one triangle vertex each.
    edges.insert(edges.end(), {{9, 10}, {10, 11}, {9, 11}, {6, 9}, {7, 10}, {8, 11}});
    return Graph(12, edges);
}

Graph sharpness_g1(int n) {
    if (n < 5) throw domain_error("sharpness_g1 needs n >= 5");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n - 1; ++i) edges.emplace_back(i, (i + 1) % (n - 1));
    edges.emplace_back(n - 1, 0);
    edges.emplace_back(n - 1, 2);
    return Graph(n, edges);
}

Graph sharpness_g2(int n) {
    if (n < 8) throw domain_error("sharpness_g2 needs n >= 8");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n - 2; ++i) edges.emplace_back(i, (i + 1) % (n - 2));
    edges.emplace_back(n - 2, 0);
    edges.emplace_back(n - 2, 2);
    edges.emplace_back(n - 1, n - 6);
    edges.emplace_back(n - 1, n - 4);
    return Graph(n, edges);
}

Graph family_f3(int a, int b, int c) {
    if (a < 2 || b < 2 || c < 2) throw domain_error("family_f3 needs a,b,c >= 2");
    return join(Graph::complete(2),
                disjoint_union(disjoint_union(Graph::complete(a), Graph::complete(b)), Graph::complete(c)));
}

Graph family_f4(int a, int b) {
    if (a < 0 || b < 0 || a + b != 4) throw domain_error("family_f4 needs a,b >= 0 with a+b = 4");
    Graph cells = a > 0 ? Graph::complete(2) : Graph::complete(3);
    for (int i = 1; i < a; ++i) cells = disjoint_union(cells, Graph::complete(2));
    for (int i = a > 0 ? 0 : 1; i < b; ++i) cells = disjoint_union(cells, Graph::complete(3));
    return join(Graph::complete(3), cells);
}

Graph family_f5(int s) {
    if (s < 4) throw domain_error("family_f5 needs s >= 4");
    Graph cells = Graph::complete(2);
    for (int i = 1; i < s; ++i) cells = disjoint_union(cells, Graph::complete(2));
    cells = disjoint_union(cells, Graph::complete(3));
    return join(Graph::complete(s), cells);
}

Graph family_f6(int s) {
    if (s < 4) throw domain_error("family_f6 needs s >= 4");
    Graph cells = Graph::complete(2);
    for (int i = 0; i < s; ++i) cells = disjoint_union(cells, Graph::complete(2));
    return join(Graph::complete(s), cells);
}

namespace {

bool hamiltonian_or_k2(const Graph& g) {
    if (g.order() == 2) return g.size() == 1;
    return is_hamiltonian(g);
}

void check_part(const Graph& g, const char* name) {
    if (!hamiltonian_or_k2(g)) throw domain_error(std::string(name) + " part must be hamiltonian or K2");
}

}  // namespace

Graph compose_f1(const Graph& part_a, const Graph& part_b) {
    check_part(part_a, "first");
    check_part(part_b, "second");
    return disjoint_union(part_a, part_b).with_edge(0, part_a.order());
}

Graph compose_f2(const Graph& part_a, const Graph& part_b) {
    check_part(part_a, "first");
    check_part(part_b, "second");
    const int na = part_a.order();
    auto edges = edges_of(part_a);
    const auto remap = [na](int v) { return v == 0 ? 0 : na + v - 1; };
    for (const auto& [u, v] : edges_of(part_b)) edges.emplace_back(remap(u), remap(v));
    return Graph(na + part_b.order() - 1, edges);
}

const char* to_string(FamilySubclass c) {
    switch (c) {
        case FamilySubclass::F1: return "F1";
        case FamilySubclass::F2: return "F2";
        case FamilySubclass::F3: return "F3";
        case FamilySubclass::F4: return "F4";
        case FamilySubclass::F5: return "F5";
        case FamilySubclass::F6: return "F6";
    }
    return "?";
}

namespace {

Graph without_edge(const Graph& g, int u, int v) {
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(g.order()));
    for (int w = 0; w < g.order(); ++w) adj[static_cast<std::size_t>(w)] = g.neighbors(w).bits();
    adj[static_cast<std::size_t>(u)] &= ~(std::uint64_t{1} << v);
    adj[static_cast<std::size_t>(v)] &= ~(std::uint64_t{1} << u);
    return Graph::from_adjacency(g.order(), adj);
}

std::optional<MembershipResult> try_f1(const Graph& g) {
    for (const auto& [u, v] : edges_of(g)) {
        const auto comps = components(without_edge(g, u, v));
        if (comps.size() != 2) continue;
        const VertexSet a = comps[0].test(u) ? comps[0] : comps[1];
        const VertexSet b = comps[0].test(u) ? comps[1] : comps[0];
        if (!b.test(v)) continue;
        if (hamiltonian_or_k2(induced_subgraph(g, a)) && hamiltonian_or_k2(induced_subgraph(g, b)))
            return MembershipResult{true, FamilySubclass::F1, {a, b}};
    }
    return std::nullopt;
}

std::optional<MembershipResult> try_f2(const Graph& g) {
    for (int x = 0; x < g.order(); ++x) {
        VertexSet rest = g.vertices();
        rest.reset(x);
        const auto comps = components(g, rest);
        const int t = static_cast<int>(comps.size());
        if (t < 2) continue;
        // component 0 always sits on the A side; bit i places component i+1
        for (std::uint32_t mask = 0; mask + 1 < (std::uint32_t{1} << (t - 1)); ++mask) {
            VertexSet a = VertexSet::single(x) | comps[0];
            VertexSet b = VertexSet::single(x);
            for (int i = 1; i < t; ++i)
                (mask >> (i - 1)) & 1 ? a |= comps[static_cast<std::size_t>(i)]
                                      : b |= comps[static_cast<std::size_t>(i)];
            const Graph ga = induced_subgraph(g, a), gb = induced_subgraph(g, b);
            const bool both_k2 = ga.order() == 2 && ga.size() == 1 && gb.order() == 2 && gb.size() == 1;
            if (both_k2 || (is_hamiltonian(ga) && is_hamiltonian(gb)))
                return MembershipResult{true, FamilySubclass::F2, {a, b}};
        }
    }
    return std::nullopt;
}

template <typename Fn>
void for_each_subset_of_size(int n, int k, Fn&& fn) {
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask)
        if (std::popcount(mask) == k)
            if (fn(VertexSet{mask})) return;
}

// Distributes components (all of size <= 3, counted by size in n1/n2/n3)
// into t2 two-slots and t3 three-slots. Returns {two-comps stored alone,
// two-comps paired with a single, all-singles three-slots} when possible.
std::optional<std::array<int, 3>> pack_2_3(int n1, int n2, int n3, int t2, int t3) {
    if (n3 > t3) return std::nullopt;
    for (int alone = std::min(t2, n2); alone >= 0; --alone) {
        const int paired = n2 - alone;
        const int triple_singles = t3 - n3 - paired;
        if (triple_singles < 0) continue;
        if (2 * (t2 - alone) + paired + 3 * triple_singles == n1)
            return std::array<int, 3>{alone, paired, triple_singles};
    }
    return std::nullopt;
}

// Builds the cell list for a successful pack_2_3 split.
std::vector<VertexSet> build_cells(const std::vector<VertexSet>& comps, const std::array<int, 3>& split,
                                   int t2, int t3) {
    std::vector<VertexSet> by_size[4];
    for (const VertexSet& c : comps) by_size[c.count()].push_back(c);
    const auto [alone, paired, triple_singles] = split;
    std::vector<VertexSet> cells;
    std::size_t i1 = 0, i2 = 0;
    for (int i = 0; i < alone; ++i) cells.push_back(by_size[2][i2++]);
    for (int i = 0; i < t2 - alone; ++i) {
        VertexSet cell = by_size[1][i1++];
        cell |= by_size[1][i1++];
        cells.push_back(cell);
    }
    for (const VertexSet& c : by_size[3]) cells.push_back(c);
    for (int i = 0; i < paired; ++i) {
        VertexSet cell = by_size[2][i2++];
        cell |= by_size[1][i1++];
        cells.push_back(cell);
    }
    for (int i = 0; i < triple_singles; ++i) {
        VertexSet cell = by_size[1][i1++];
        cell |= by_size[1][i1++];
        cell |= by_size[1][i1++];
        cells.push_back(cell);
    }
    (void)t3;
    return cells;
}

std::optional<MembershipResult> try_f3(const Graph& g) {
    const int n = g.order();
    if (n < 8) return std::nullopt;
    std::optional<MembershipResult> result;
    for_each_subset_of_size(n, 2, [&](VertexSet hub) {
        const auto comps = components(g, g.vertices() - hub);
        const int t = static_cast<int>(comps.size());
        // reach[i][sa][sb]: first i components can fill cell A to sa and B to sb
        std::vector<std::array<std::array<bool, 17>, 17>> reach(static_cast<std::size_t>(t) + 1);
        reach[0][0][0] = true;
        for (int i = 0; i < t; ++i) {
            const int s = comps[static_cast<std::size_t>(i)].count();
            for (int sa = 0; sa <= n - 2; ++sa)
                for (int sb = 0; sb + sa <= n - 2; ++sb) {
                    if (!reach[static_cast<std::size_t>(i)][static_cast<std::size_t>(sa)][static_cast<std::size_t>(sb)]) continue;
                    auto& nxt = reach[static_cast<std::size_t>(i) + 1];
                    if (sa + s <= n - 2) nxt[static_cast<std::size_t>(sa + s)][static_cast<std::size_t>(sb)] = true;
                    if (sb + s <= n - 2) nxt[static_cast<std::size_t>(sa)][static_cast<std::size_t>(sb + s)] = true;
                    nxt[static_cast<std::size_t>(sa)][static_cast<std::size_t>(sb)] = true;
                }
        }
        for (int sa = 2; sa <= n - 6; ++sa)
            for (int sb = 2; sa + sb <= n - 4; ++sb) {
                if (n - 2 - sa - sb < 2) continue;
                if (!reach[static_cast<std::size_t>(t)][static_cast<std::size_t>(sa)][static_cast<std::size_t>(sb)]) continue;
                VertexSet cell_a, cell_b, cell_c;
                int ra = sa, rb = sb;
                for (int i = t - 1; i >= 0; --i) {
                    const VertexSet& comp = comps[static_cast<std::size_t>(i)];
                    const int s = comp.count();
                    const auto& prev = reach[static_cast<std::size_t>(i)];
                    if (ra >= s && prev[static_cast<std::size_t>(ra - s)][static_cast<std::size_t>(rb)]) {
                        cell_a |= comp;
                        ra -= s;
                    } else if (rb >= s && prev[static_cast<std::size_t>(ra)][static_cast<std::size_t>(rb - s)]) {
                        cell_b |= comp;
                        rb -= s;
                    } else {
                        cell_c |= comp;
                    }
                }
                result = MembershipResult{true, FamilySubclass::F3, {hub, cell_a, cell_b, cell_c}};
                return true;
            }
        return false;
    });
    return result;
}

std::optional<MembershipResult> try_pack_family(const Graph& g, FamilySubclass tag, int hub_size, int t2,
                                                int t3) {
    std::optional<MembershipResult> result;
    for_each_subset_of_size(g.order(), hub_size, [&](VertexSet hub) {
        const auto comps = components(g, g.vertices() - hub);
        int count[4] = {0, 0, 0, 0};
        for (const VertexSet& c : comps) {
            if (c.count() > 3) return false;
            ++count[c.count()];
        }
        const auto split = pack_2_3(count[1], count[2], count[3], t2, t3);
        if (!split) return false;
        std::vector<VertexSet> partition{hub};
        for (VertexSet& cell : build_cells(comps, *split, t2, t3)) partition.push_back(cell);
        result = MembershipResult{true, tag, std::move(partition)};
        return true;
    });
    return result;
}

}  // namespace

MembershipResult is_in_family_F(const Graph& g) {
    if (g.order() > family_membership_max_order)
        throw budget_error("family membership limited to order <= " +
                           std::to_string(family_membership_max_order) + ", got " +
                           std::to_string(g.order()));
    if (auto r = try_f1(g)) return *r;
    if (auto r = try_f2(g)) return *r;
    if (is_two_connected(g)) {
        const int n = g.order();
        if (auto r = try_f3(g)) return *r;
        if (n >= 11 && n <= 15)
            if (auto r = try_pack_family(g, FamilySubclass::F4, 3, 15 - n, n - 11)) return *r;
        if (n >= 15 && (n - 3) % 3 == 0 && (n - 3) / 3 >= 4)
            if (auto r = try_pack_family(g, FamilySubclass::F5, (n - 3) / 3, (n - 3) / 3, 1)) return *r;
        if (n >= 14 && (n - 2) % 3 == 0 && (n - 2) / 3 >= 4)
            if (auto r = try_pack_family(g, FamilySubclass::F6, (n - 2) / 3, (n - 2) / 3 + 1, 0)) return *r;
    }
    return {};
}

}  // namespace leafspan
