#include "leafspan/invariants.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <climits>
#include <numeric>
#include <queue>

namespace leafspan {

namespace {

constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

// Unit-capacity max flow on the vertex-split digraph: vertex v becomes arc
// in(v) -> out(v) of capacity 1, each edge uv becomes out(u) -> in(v) and
// out(v) -> in(u) of effectively infinite capacity. A maximum out(s) -> in(t)
// flow equals the minimum vertex cut separating non-adjacent s and t.
class SplitFlow {
public:
    SplitFlow(const Graph& g, int s, int t) : n_(g.order()), src_(out(s)), dst_(in(t)) {
        head_.assign(static_cast<std::size_t>(2 * n_), -1);
        for (int v = 0; v < n_; ++v) add_arc(in(v), out(v), 1);
        for (int u = 0; u < n_; ++u)
            for (int v : g.neighbors(u))
                if (u < v) {
                    add_arc(out(u), in(v), kInf);
                    add_arc(out(v), in(u), kInf);
                }
    }

    int max_flow() {
        int total = 0;
        while (build_levels()) {
            it_ = head_;
            while (int pushed = augment(src_, kInf)) total += pushed;
        }
        return total;
    }

    // Vertices v with in(v) reachable and out(v) not, in the final residual
    // graph. Valid only after max_flow().
    VertexSet cut_vertices() const {
        std::vector<char> seen(static_cast<std::size_t>(2 * n_), 0);
        std::queue<int> q;
        seen[static_cast<std::size_t>(src_)] = 1;
        q.push(src_);
        while (!q.empty()) {
            const int u = q.front();
            q.pop();
            for (int e = head_[static_cast<std::size_t>(u)]; e != -1; e = arcs_[static_cast<std::size_t>(e)].next)
                if (arcs_[static_cast<std::size_t>(e)].cap > 0 && !seen[static_cast<std::size_t>(arcs_[static_cast<std::size_t>(e)].to)]) {
                    seen[static_cast<std::size_t>(arcs_[static_cast<std::size_t>(e)].to)] = 1;
                    q.push(arcs_[static_cast<std::size_t>(e)].to);
                }
        }
        VertexSet cut;
        for (int v = 0; v < n_; ++v)
            if (seen[static_cast<std::size_t>(in(v))] && !seen[static_cast<std::size_t>(out(v))]) cut.set(v);
        return cut;
    }

private:
    static constexpr int kInf = 1 << 28;

    struct Arc {
        int to, next, cap;
    };

    static int in(int v) { return 2 * v; }
    static int out(int v) { return 2 * v + 1; }

    void add_arc(int from, int to, int cap) {
        arcs_.push_back({to, head_[static_cast<std::size_t>(from)], cap});
        head_[static_cast<std::size_t>(from)] = static_cast<int>(arcs_.size()) - 1;
        arcs_.push_back({from, head_[static_cast<std::size_t>(to)], 0});
        head_[static_cast<std::size_t>(to)] = static_cast<int>(arcs_.size()) - 1;
    }

    bool build_levels() {
        level_.assign(static_cast<std::size_t>(2 * n_), -1);
        std::queue<int> q;
        level_[static_cast<std::size_t>(src_)] = 0;
        q.push(src_);
        while (!q.empty()) {
            const int u = q.front();
            q.pop();
            for (int e = head_[static_cast<std::size_t>(u)]; e != -1; e = arcs_[static_cast<std::size_t>(e)].next) {
                const Arc& a = arcs_[static_cast<std::size_t>(e)];
                if (a.cap > 0 && level_[static_cast<std::size_t>(a.to)] == -1) {
                    level_[static_cast<std::size_t>(a.to)] = level_[static_cast<std::size_t>(u)] + 1;
                    q.push(a.to);
                }
            }
        }
        return level_[static_cast<std::size_t>(dst_)] != -1;
    }

    int augment(int u, int limit) {
        if (u == dst_) return limit;
        for (int& e = it_[static_cast<std::size_t>(u)]; e != -1; e = arcs_[static_cast<std::size_t>(e)].next) {
            Arc& a = arcs_[static_cast<std::size_t>(e)];
            if (a.cap <= 0 || level_[static_cast<std::size_t>(a.to)] != level_[static_cast<std::size_t>(u)] + 1) continue;
            if (const int pushed = augment(a.to, std::min(limit, a.cap))) {
                a.cap -= pushed;
                arcs_[static_cast<std::size_t>(e ^ 1)].cap += pushed;
                return pushed;
            }
        }
        return 0;
    }

    int n_, src_, dst_;
    std::vector<Arc> arcs_;
    std::vector<int> head_, level_, it_;
};

bool is_complete(const Graph& g) {
    return g.size() == static_cast<long>(g.order()) * (g.order() - 1) / 2;
}

}  // namespace

ConnectivityResult vertex_connectivity(const Graph& g) {
    const int n = g.order();
    if (!is_connected(g)) return {0, VertexSet{}};
    if (is_complete(g)) return {n - 1, VertexSet{}};

    int s0 = 0;
    for (int v = 1; v < n; ++v)
        if (g.degree(v) < g.degree(s0)) s0 = v;

    // A minimum separator either avoids s0 (then s0 against some vertex
    // outside N[s0] realizes it) or contains s0 (then two of s0's neighbors
    // lie in different components and realize it). Trying every source in
    // {s0} + N(s0) against all its non-neighbors covers both cases.
    std::vector<int> sources{s0};
    for (int v : g.neighbors(s0)) sources.push_back(v);

    int best = n;
    int best_s = -1, best_t = -1;
    for (int s : sources)
        for (int t = 0; t < n; ++t) {
            if (t == s || g.has_edge(s, t)) continue;
            SplitFlow flow(g, s, t);
            const int f = flow.max_flow();
            if (f < best) {
                best = f;
                best_s = s;
                best_t = t;
            }
        }

    SplitFlow flow(g, best_s, best_t);
    flow.max_flow();
    return {best, flow.cut_vertices()};
}

bool is_two_connected(const Graph& g) {
    return g.order() >= 3 && vertex_connectivity(g).kappa >= 2;
}

namespace {

// Maximum clique with a greedy-coloring bound; run on the complement it
// yields the maximum independent set.
class MaxClique {
public:
    MaxClique(int n, const std::array<std::uint64_t, Graph::max_order>& adj) : n_(n), adj_(adj) {}

    void run() {
        std::uint64_t all = n_ == 64 ? ~std::uint64_t{0} : bit(n_) - 1;
        expand(0, 0, all);
    }

    int best = 0;
    std::uint64_t best_set = 0;

private:
    void expand(std::uint64_t chosen, int size, std::uint64_t cands) {
        if (cands == 0) {
            if (size > best) {
                best = size;
                best_set = chosen;
            }
            return;
        }
        int color[Graph::max_order], order[Graph::max_order];
        int cnt = 0, nc = 0;
        std::uint64_t uncolored = cands;
        while (uncolored) {
            ++nc;
            std::uint64_t avail = uncolored;
            while (avail) {
                const int v = std::countr_zero(avail);
                avail &= ~(adj_[static_cast<std::size_t>(v)] | bit(v));
                uncolored &= ~bit(v);
                color[cnt] = nc;
                order[cnt] = v;
                ++cnt;
            }
        }
        std::uint64_t pool = cands;
        for (int i = cnt - 1; i >= 0; --i) {
            if (size + color[i] <= best) return;
            const int v = order[i];
            expand(chosen | bit(v), size + 1, pool & adj_[static_cast<std::size_t>(v)]);
            pool &= ~bit(v);
        }
    }

    int n_;
    const std::array<std::uint64_t, Graph::max_order>& adj_;
};

// Minimum degree sum over independent k-sets, via DFS over vertices sorted by
// ascending degree with a sorted-window lower bound.
int min_degree_sum(const Graph& g, int k) {
    const int n = g.order();
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&g](int a, int b) {
        return g.degree(a) != g.degree(b) ? g.degree(a) < g.degree(b) : a < b;
    });
    std::vector<long> prefix(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 0; i < n; ++i)
        prefix[static_cast<std::size_t>(i) + 1] = prefix[static_cast<std::size_t>(i)] + g.degree(order[static_cast<std::size_t>(i)]);

    long best = LONG_MAX;
    auto dfs = [&](auto&& self, int from, int chosen, long sum, std::uint64_t banned) -> void {
        if (chosen == k) {
            best = std::min(best, sum);
            return;
        }
        const int need = k - chosen;
        for (int i = from; i + need <= n; ++i) {
            if (sum + prefix[static_cast<std::size_t>(i + need)] - prefix[static_cast<std::size_t>(i)] >= best) return;
            const int v = order[static_cast<std::size_t>(i)];
            if (banned & bit(v)) continue;
            self(self, i + 1, chosen + 1, sum + g.degree(v), banned | g.closed_neighborhood(v).bits());
        }
    };
    dfs(dfs, 0, 0, 0, 0);
    return static_cast<int>(best);
}

}  // namespace

IndependenceResult independence(const Graph& g) {
    const int n = g.order();
    const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : bit(n) - 1;
    std::array<std::uint64_t, Graph::max_order> co{};
    for (int v = 0; v < n; ++v) co[static_cast<std::size_t>(v)] = all & ~g.closed_neighborhood(v).bits();

    MaxClique mc(n, co);
    mc.run();

    IndependenceResult r;
    r.alpha = mc.best;
    r.witness = VertexSet{mc.best_set};
    r.sigma.reserve(static_cast<std::size_t>(r.alpha));
    for (int k = 1; k <= r.alpha; ++k) r.sigma.push_back(min_degree_sum(g, k));
    return r;
}

bool is_triangle_free(const Graph& g) {
    for (int u = 0; u < g.order(); ++u)
        for (int v : g.neighbors(u)) {
            if (v <= u) continue;
            if (!(g.neighbors(u) & g.neighbors(v)).empty()) return false;
        }
    return true;
}

std::optional<int> regularity(const Graph& g) {
    if (g.order() == 0) return std::nullopt;
    const int k = g.degree(0);
    for (int v = 1; v < g.order(); ++v)
        if (g.degree(v) != k) return std::nullopt;
    return k;
}

}  // namespace leafspan
