#include "leafspan/cycles.hpp"

#include <algorithm>
#include <array>
#include <bit>

#include "leafspan/errors.hpp"

namespace leafspan {

namespace {

constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

std::uint64_t reachable(const std::array<std::uint64_t, Graph::max_order>& adj, std::uint64_t from,
                        std::uint64_t within) {
    std::uint64_t reach = from & within, frontier = reach;
    while (frontier) {
        std::uint64_t next = 0;
        for (std::uint64_t f = frontier; f;) {
            const int v = std::countr_zero(f);
            f &= f - 1;
            next |= adj[static_cast<std::size_t>(v)];
        }
        next &= within & ~reach;
        reach |= next;
        frontier = next;
    }
    return reach;
}

// Longest cycle through start s using only vertices >= s. Every cycle is
// found from its smallest vertex, so scanning s ascending is exhaustive.
class CycleSearch {
public:
    CycleSearch(const Graph& g) : n_(g.order()) {
        for (int v = 0; v < n_; ++v) adj_[static_cast<std::size_t>(v)] = g.neighbors(v).bits();
    }

    CircumferenceResult run() {
        best_ = 0;
        best_cycle_.clear();
        for (s_ = 0; s_ < n_ && best_ < n_ - s_; ++s_) {
            const std::uint64_t allowed = (~std::uint64_t{0}) << s_;
            for (int v = 0; v < n_; ++v)
                radj_[static_cast<std::size_t>(v)] = adj_[static_cast<std::size_t>(v)] & allowed;
            path_.assign(1, s_);
            extend(s_, bit(s_));
        }
        CircumferenceResult r;
        r.length = best_;
        if (best_ > 0) r.witness = CycleWitness{normalize_cycle(best_cycle_)};
        return r;
    }

    static std::vector<int> normalize_cycle(std::vector<int> cyc);

private:
    void extend(int u, std::uint64_t visited) {
        const int depth = static_cast<int>(path_.size());
        if (depth >= 3 && (adj_[static_cast<std::size_t>(u)] & bit(s_)) && depth > best_) {
            best_ = depth;
            best_cycle_ = path_;
            if (best_ == n_) return;
        }
        std::uint64_t cand = radj_[static_cast<std::size_t>(u)] & ~visited;
        if (!cand) return;
        const std::uint64_t reach = reachable(radj_, bit(u), (~visited) | bit(u));
        if (depth + std::popcount(reach & ~visited) <= best_) return;
        if (!(reach & radj_[static_cast<std::size_t>(s_)])) return;  // cannot close back to s
        while (cand) {
            const int w = std::countr_zero(cand);
            cand &= cand - 1;
            path_.push_back(w);
            extend(w, visited | bit(w));
            path_.pop_back();
            if (best_ == n_) return;
        }
    }

    int n_, s_ = 0, best_ = 0;
    std::array<std::uint64_t, Graph::max_order> adj_{}, radj_{};
    std::vector<int> path_, best_cycle_;
};

std::vector<int> CycleSearch::normalize_cycle(std::vector<int> cyc) {
    const auto mn = std::min_element(cyc.begin(), cyc.end());
    std::rotate(cyc.begin(), mn, cyc.end());
    if (cyc.size() >= 3 && cyc.back() < cyc[1]) std::reverse(cyc.begin() + 1, cyc.end());
    return cyc;
}

class PathSearch {
public:
    PathSearch(const Graph& g) : n_(g.order()) {
        for (int v = 0; v < n_; ++v) adj_[static_cast<std::size_t>(v)] = g.neighbors(v).bits();
    }

    LongestPathResult run() {
        best_ = 0;
        for (int s = 0; s < n_ && best_ < n_; ++s) {
            path_.assign(1, s);
            extend(s, bit(s));
        }
        LongestPathResult r;
        r.order = best_;
        r.witness.vertices = best_path_;
        if (!r.witness.vertices.empty() && r.witness.vertices.front() > r.witness.vertices.back())
            std::reverse(r.witness.vertices.begin(), r.witness.vertices.end());
        return r;
    }

private:
    void extend(int u, std::uint64_t visited) {
        const int depth = static_cast<int>(path_.size());
        if (depth > best_) {
            best_ = depth;
            best_path_ = path_;
            if (best_ == n_) return;
        }
        std::uint64_t cand = adj_[static_cast<std::size_t>(u)] & ~visited;
        if (!cand) return;
        const std::uint64_t reach = reachable(adj_, bit(u), (~visited) | bit(u));
        if (depth + std::popcount(reach & ~visited) <= best_) return;
        while (cand) {
            const int w = std::countr_zero(cand);
            cand &= cand - 1;
            path_.push_back(w);
            extend(w, visited | bit(w));
            path_.pop_back();
            if (best_ == n_) return;
        }
    }

    int n_, best_ = 0;
    std::array<std::uint64_t, Graph::max_order> adj_{};
    std::vector<int> path_, best_path_;
};

}  // namespace

CircumferenceResult circumference(const Graph& g) {
    CycleSearch search(g);
    return search.run();
}

LongestPathResult longest_path(const Graph& g) {
    PathSearch search(g);
    return search.run();
}

bool is_hamiltonian(const Graph& g) {
    return g.order() >= 3 && circumference(g).length == g.order();
}

bool is_traceable(const Graph& g) { return longest_path(g).order == g.order(); }

namespace {

void check_is_cycle(const Graph& g, const CycleWitness& c) {
    const int k = c.length();
    if (k < 3) throw domain_error("cycle witness needs at least 3 vertices");
    std::uint64_t seen = 0;
    for (int i = 0; i < k; ++i) {
        const int v = c.vertices[static_cast<std::size_t>(i)];
        if (v < 0 || v >= g.order()) throw domain_error("cycle witness vertex out of range");
        if (seen & bit(v)) throw domain_error("cycle witness repeats a vertex");
        seen |= bit(v);
        const int w = c.vertices[static_cast<std::size_t>((i + 1) % k)];
        if (!g.has_edge(v, w)) throw domain_error("cycle witness misses edge");
    }
}

// Max order over paths of `g` restricted to `within` whose endpoint pair
// satisfies `accept`. Single vertices count as paths with both endpoints
// equal.
template <typename Accept>
int max_accepted_path(const Graph& g, std::uint64_t within, Accept&& accept) {
    std::array<std::uint64_t, Graph::max_order> adj{};
    for (int v = 0; v < g.order(); ++v)
        adj[static_cast<std::size_t>(v)] = g.neighbors(v).bits() & within;
    int best = 0;
    auto dfs = [&](auto&& self, int a, int u, std::uint64_t visited, int depth) -> void {
        if (depth > best && accept(a, u)) best = depth;
        std::uint64_t cand = adj[static_cast<std::size_t>(u)] & ~visited;
        if (!cand) return;
        const std::uint64_t reach = reachable(adj, bit(u), (~visited) | bit(u));
        if (depth + std::popcount(reach & ~visited) <= best) return;
        while (cand) {
            const int w = std::countr_zero(cand);
            cand &= cand - 1;
            self(self, a, w, visited | bit(w), depth + 1);
        }
    };
    for (std::uint64_t m = within; m;) {
        const int a = std::countr_zero(m);
        m &= m - 1;
        dfs(dfs, a, a, bit(a), 1);
    }
    return best;
}

}  // namespace

LongestCycleProperties longest_cycle_properties(const Graph& g, const CycleWitness& c) {
    check_is_cycle(g, c);
    const int k = c.length();
    std::uint64_t on_cycle = 0;
    for (int v : c.vertices) on_cycle |= bit(v);
    const std::uint64_t off = ~on_cycle & (g.order() == 64 ? ~std::uint64_t{0} : bit(g.order()) - 1);

    LongestCycleProperties r;

    for (int i = 0; i < k; ++i) {
        const int u = c.vertices[static_cast<std::size_t>(i)];
        const int v = c.vertices[static_cast<std::size_t>((i + 1) % k)];
        if ((g.neighbors(u) & g.neighbors(v)).bits() & off) r.no_common_offcycle_neighbor = false;
    }

    // successor[v]: the cycle vertex after v in witness order.
    std::array<int, Graph::max_order> successor{};
    for (int i = 0; i < k; ++i)
        successor[static_cast<std::size_t>(c.vertices[static_cast<std::size_t>(i)])] =
            c.vertices[static_cast<std::size_t>((i + 1) % k)];
    for (std::uint64_t xm = off; xm && r.no_crossing_pair;) {
        const int x = std::countr_zero(xm);
        xm &= xm - 1;
        const std::uint64_t nx = g.neighbors(x).bits() & on_cycle;
        for (std::uint64_t im = nx; im && r.no_crossing_pair;) {
            const int ci = std::countr_zero(im);
            im &= im - 1;
            for (std::uint64_t jm = im; jm;) {  // all cj in N_C(x) with cj > ci
                const int cj = std::countr_zero(jm);
                jm &= jm - 1;
                const std::uint64_t succs =
                    bit(successor[static_cast<std::size_t>(ci)]) | bit(successor[static_cast<std::size_t>(cj)]);
                for (std::uint64_t ym = off; ym;) {
                    const int y = std::countr_zero(ym);
                    ym &= ym - 1;
                    if ((g.neighbors(y).bits() & succs) == succs) {
                        r.no_crossing_pair = false;
                        break;
                    }
                }
                if (!r.no_crossing_pair) break;
            }
        }
    }

    const int bound = k / 2 - 1;
    const auto cyc_neighbors = [&](int v) { return g.neighbors(v).bits() & on_cycle; };
    const int longest_off = max_accepted_path(g, off, [](int, int) { return true; });
    if (longest_off > bound) {
        const int strong = max_accepted_path(g, off, [&](int a, int b) {
            const std::uint64_t na = cyc_neighbors(a), nb = cyc_neighbors(b);
            if (!na || !nb) return false;
            // some u in N_C(a), w in N_C(b) with u != w
            return !(na == nb && std::popcount(na) == 1);
        });
        const int weak = max_accepted_path(g, off, [&](int a, int b) {
            return cyc_neighbors(a) != 0 && cyc_neighbors(b) != 0;
        });
        r.detour_path_short = strong <= bound;
        r.detour_path_short_weak = weak <= bound;
    }
    r.detour_readings_disagree = r.detour_path_short != r.detour_path_short_weak;
    return r;
}

namespace {

void check_dp_budget(const Graph& g) {
    if (g.order() > dp_oracle_max_order)
        throw budget_error("subset-DP oracle limited to order <= " +
                           std::to_string(dp_oracle_max_order) + ", got " +
                           std::to_string(g.order()));
}

}  // namespace

int circumference_dp_oracle(const Graph& g) {
    check_dp_budget(g);
    const int n = g.order();
    int best = 0;
    // dp[mask] = endpoint set over paths that start at s and cover exactly
    // mask, for vertices restricted to {s..n-1}.
    for (int s = 0; s < n; ++s) {
        const int w = n - s;  // working universe {s, .., n-1} remapped to {0, .., w-1}
        std::vector<std::uint32_t> adj(static_cast<std::size_t>(w), 0);
        for (int v = 0; v < w; ++v)
            adj[static_cast<std::size_t>(v)] =
                static_cast<std::uint32_t>(g.neighbors(v + s).bits() >> s) & ((w == 32 ? 0 : (1u << w)) - 1u);
        std::vector<std::uint32_t> dp(std::size_t{1} << w, 0);
        dp[1] = 1;  // path = {s}, endpoint s
        for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << w); ++mask) {
            if (!(mask & 1)) continue;
            const std::uint32_t ends = dp[mask];
            if (!ends) continue;
            const int sz = std::popcount(mask);
            if (sz >= 3 && (ends & adj[0]) && sz > best) best = sz;
            for (std::uint32_t e = ends; e;) {
                const int u = std::countr_zero(e);
                e &= e - 1;
                std::uint32_t nxt = adj[static_cast<std::size_t>(u)] & ~mask;
                while (nxt) {
                    const int v = std::countr_zero(nxt);
                    nxt &= nxt - 1;
                    dp[mask | (std::uint32_t{1} << v)] |= std::uint32_t{1} << v;
                }
            }
        }
    }
    return best;
}

int longest_path_dp_oracle(const Graph& g) {
    check_dp_budget(g);
    const int n = g.order();
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) adj[static_cast<std::size_t>(v)] = static_cast<std::uint32_t>(g.neighbors(v).bits());
    std::vector<std::uint32_t> dp(std::size_t{1} << n, 0);
    for (int v = 0; v < n; ++v) dp[std::size_t{1} << v] = std::uint32_t{1} << v;
    int best = n > 0 ? 1 : 0;
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
        const std::uint32_t ends = dp[mask];
        if (!ends) continue;
        const int sz = std::popcount(mask);
        if (sz > best) best = sz;
        for (std::uint32_t e = ends; e;) {
            const int u = std::countr_zero(e);
            e &= e - 1;
            std::uint32_t nxt = adj[static_cast<std::size_t>(u)] & ~mask;
            while (nxt) {
                const int v = std::countr_zero(nxt);
                nxt &= nxt - 1;
                dp[mask | (std::uint32_t{1} << v)] |= std::uint32_t{1} << v;
            }
        }
    }
    return best;
}

}  // namespace leafspan
