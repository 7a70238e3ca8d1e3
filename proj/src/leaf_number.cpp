#include "leafspan/leaf_number.hpp"

#include <algorithm>
#include <array>
#include <bit>

#include "leafspan/errors.hpp"

namespace leafspan {

namespace {

constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

// Branch and bound over vertex subsets for minimum connected dominating
// sets. Branches on an undominated vertex (one of its closed neighbors must
// join) or, once domination holds, on the free boundary of a component of
// G[S] (one boundary vertex must join to merge components). Excluding every
// candidate makes the node infeasible, so the split is exhaustive.
class CdsSolver {
public:
    explicit CdsSolver(const Graph& g) : n_(g.order()) {
        all_ = n_ == 64 ? ~std::uint64_t{0} : bit(n_) - 1;
        for (int v = 0; v < n_; ++v) {
            adj_[static_cast<std::size_t>(v)] = g.neighbors(v).bits();
            closed_[static_cast<std::size_t>(v)] = g.closed_neighborhood(v).bits();
        }
    }

    // Minimum CDS size; an optimal set is left in best_set().
    int minimize() {
        decision_ = false;
        best_ = n_;
        best_set_ = all_;
        rec(0, 0);
        return best_;
    }

    // True iff some CDS S with |S| <= cap satisfies include ⊆ S and
    // S \ include avoids `exclude`.
    bool feasible(std::uint64_t include, std::uint64_t exclude, int cap) {
        decision_ = true;
        found_ = false;
        best_ = cap + 1;
        rec(include, exclude & ~include);
        return found_;
    }

    std::uint64_t best_set() const { return best_set_; }

private:
    std::uint64_t reach(std::uint64_t from, std::uint64_t within) const {
        std::uint64_t r = from & within, frontier = r;
        while (frontier) {
            std::uint64_t next = 0;
            for (std::uint64_t f = frontier; f;) {
                const int v = std::countr_zero(f);
                f &= f - 1;
                next |= adj_[static_cast<std::size_t>(v)];
            }
            next &= within & ~r;
            r |= next;
            frontier = next;
        }
        return r;
    }

    void rec(std::uint64_t S, std::uint64_t X) {
        if (decision_ && found_) return;
        const std::uint64_t F = all_ & ~S & ~X;
        std::uint64_t undom = 0;
        for (int v = 0; v < n_; ++v) {
            const std::uint64_t cl = closed_[static_cast<std::size_t>(v)];
            if (!(cl & S)) {
                if (!(cl & F)) return;  // v can never be dominated
                undom |= bit(v);
            }
        }
        const int sc = std::popcount(S);
        bool s_connected = true;
        if (S) {
            const std::uint64_t comp = reach(bit(std::countr_zero(S)), S);
            s_connected = comp == S;
            if (!undom && s_connected) {
                if (decision_) {
                    if (sc <= best_ - 1) {
                        found_ = true;
                        best_set_ = S;
                    }
                    return;
                }
                if (sc < best_) {
                    best_ = sc;
                    best_set_ = S;
                }
                return;
            }
            // all of S must sit in one component of G[S ∪ F]
            const std::uint64_t wide = reach(bit(std::countr_zero(S)), S | F);
            if (S & ~wide) return;
        }

        int lb = S ? 0 : 1;
        if (undom) {
            int maxcov = 0;
            for (std::uint64_t f = F; f;) {
                const int v = std::countr_zero(f);
                f &= f - 1;
                maxcov = std::max(maxcov, std::popcount(closed_[static_cast<std::size_t>(v)] & undom));
            }
            if (maxcov == 0) return;
            lb = std::max(lb, (std::popcount(undom) + maxcov - 1) / maxcov);
        }
        if (!s_connected) lb = std::max(lb, 1);
        if (sc + lb >= best_) return;

        std::uint64_t cands;
        if (undom) {
            // fail-first: the undominated vertex with fewest remaining cover options
            int pick = -1, pick_opts = n_ + 1;
            for (std::uint64_t u = undom; u;) {
                const int v = std::countr_zero(u);
                u &= u - 1;
                const int opts = std::popcount(closed_[static_cast<std::size_t>(v)] & F);
                if (opts < pick_opts) {
                    pick_opts = opts;
                    pick = v;
                }
            }
            cands = closed_[static_cast<std::size_t>(pick)] & F;
        } else {
            const std::uint64_t comp = reach(bit(std::countr_zero(S)), S);
            std::uint64_t boundary = 0;
            for (std::uint64_t c = comp; c;) {
                const int v = std::countr_zero(c);
                c &= c - 1;
                boundary |= adj_[static_cast<std::size_t>(v)];
            }
            cands = boundary & F;
        }
        while (cands) {
            const int v = std::countr_zero(cands);
            cands &= cands - 1;
            rec(S | bit(v), X);
            if (decision_ && found_) return;
            X |= bit(v);
        }
    }

    int n_;
    std::uint64_t all_ = 0;
    std::array<std::uint64_t, Graph::max_order> adj_{}, closed_{};
    bool decision_ = false, found_ = false;
    int best_ = 0;
    std::uint64_t best_set_ = 0;
};

}  // namespace

VertexSet min_connected_dominating_set(const Graph& g) {
    if (!is_connected(g)) throw domain_error("minimum connected dominating set needs a connected graph");
    if (g.order() < 2) throw domain_error("minimum connected dominating set needs n >= 2");
    if (g.order() == 2) return VertexSet::single(0);

    CdsSolver solver(g);
    const int m = solver.minimize();

    // Lexicographically smallest optimum, grown element by element: fix the
    // smallest next vertex that still extends to an optimal CDS using larger
    // vertices only.
    std::uint64_t prefix = 0;
    int size = 0, floor = 0;
    while (size < m) {
        for (int c = floor; c < g.order(); ++c) {
            const std::uint64_t below = bit(c) - 1;
            if (solver.feasible(prefix | bit(c), below & ~prefix, m)) {
                prefix |= bit(c);
                floor = c + 1;
                ++size;
                break;
            }
        }
    }
    return VertexSet{prefix};
}

LeafNumberResult leaf_number(const Graph& g) {
    if (g.order() < 2) throw domain_error("leaf number is undefined for n = 1");
    if (!is_connected(g)) throw domain_error("leaf number needs a connected graph");

    const VertexSet cds = min_connected_dominating_set(g);
    const int n = g.order();

    SpanningTreeWitness w;
    w.root = cds.lowest();
    w.parent.assign(static_cast<std::size_t>(n), -1);

    // BFS tree of G[cds] from the smallest CDS vertex, then hang every
    // non-CDS vertex as a leaf under its smallest CDS neighbor.
    std::vector<int> queue{w.root};
    VertexSet seen = VertexSet::single(w.root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const int u = queue[head];
        for (int v : g.neighbors(u)) {
            if (!cds.test(v) || seen.test(v)) continue;
            seen.set(v);
            w.parent[static_cast<std::size_t>(v)] = u;
            queue.push_back(v);
        }
    }
    for (int v : g.vertices()) {
        if (cds.test(v)) continue;
        w.parent[static_cast<std::size_t>(v)] = (g.neighbors(v) & cds).lowest();
    }

    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v)
        if (w.parent[static_cast<std::size_t>(v)] != -1) {
            ++deg[static_cast<std::size_t>(v)];
            ++deg[static_cast<std::size_t>(w.parent[static_cast<std::size_t>(v)])];
        }
    w.leaf_count = static_cast<int>(std::count(deg.begin(), deg.end(), 1));

    return LeafNumberResult{w.leaf_count, std::move(w), cds};
}

namespace {

// Spanning-tree enumeration by edge-subset DFS: every edge is either skipped
// or, when it joins two different components, taken.
class TreeEnumerator {
public:
    explicit TreeEnumerator(const Graph& g) : n_(g.order()) {
        for (int u = 0; u < n_; ++u)
            for (int v : g.neighbors(u))
                if (u < v) edges_.push_back({u, v});
    }

    int max_leaves() {
        best_ = 0;
        std::vector<int> comp(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v) comp[static_cast<std::size_t>(v)] = v;
        std::vector<int> deg(static_cast<std::size_t>(n_), 0);
        rec(0, n_ - 1, comp, deg);
        return best_;
    }

private:
    void rec(std::size_t idx, int need, std::vector<int>& comp, std::vector<int>& deg) {
        if (need == 0) {
            const int leaves = static_cast<int>(std::count(deg.begin(), deg.end(), 1));
            best_ = std::max(best_, leaves);
            return;
        }
        if (edges_.size() - idx < static_cast<std::size_t>(need)) return;
        const auto [u, v] = edges_[idx];
        const int cu = comp[static_cast<std::size_t>(u)], cv = comp[static_cast<std::size_t>(v)];
        if (cu != cv) {
            std::vector<int> merged = comp;
            for (int& c : merged)
                if (c == cv) c = cu;
            ++deg[static_cast<std::size_t>(u)];
            ++deg[static_cast<std::size_t>(v)];
            rec(idx + 1, need - 1, merged, deg);
            --deg[static_cast<std::size_t>(u)];
            --deg[static_cast<std::size_t>(v)];
        }
        rec(idx + 1, need, comp, deg);
    }

    int n_;
    std::vector<std::pair<int, int>> edges_;
    int best_ = 0;
};

}  // namespace

int leaf_number_oracle(const Graph& g) {
    if (g.order() < 2) throw domain_error("leaf number is undefined for n = 1");
    if (g.order() > leaf_oracle_max_order)
        throw budget_error("spanning-tree oracle limited to order <= " +
                           std::to_string(leaf_oracle_max_order) + ", got " +
                           std::to_string(g.order()));
    if (!is_connected(g)) throw domain_error("leaf number needs a connected graph");
    TreeEnumerator e(g);
    return e.max_leaves();
}

}  // namespace leafspan
