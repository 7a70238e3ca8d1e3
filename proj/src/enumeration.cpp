#include "leafspan/enumeration.hpp"

#include <algorithm>
#include <array>
#include <cstring>
#include <istream>
#include <unordered_set>

namespace leafspan {

namespace {

constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

// Exact minimal-encoding search. Positions are filled left to right; the
// column of adjacency bits toward already-placed vertices is compared against
// the incumbent with most-significant-row-first ordering, so whole subtrees
// with a larger prefix are cut. Interchangeable candidates (identical rows
// outside the pair) are expanded once.
class CanonSearch {
public:
    explicit CanonSearch(const Graph& g) : g_(g), n_(g.order()) {}

    std::vector<std::uint64_t> run() {
        rec(0, 0, false);
        return std::vector<std::uint64_t>(best_.begin(), best_.begin() + n_);
    }

private:
    struct Cand {
        std::uint64_t col;
        int v;
    };

    void rec(int level, std::uint64_t used, bool better) {
        if (level == n_) {
            best_ = cur_;
            have_best_ = true;
            ++gen_;
            return;
        }
        Cand cands[Graph::max_order];
        int ncand = 0;
        for (int v = 0; v < n_; ++v) {
            if (used & bit(v)) continue;
            std::uint64_t col = 0;
            for (int i = 0; i < level; ++i)
                col |= static_cast<std::uint64_t>(g_.has_edge(v, placed_[i])) << (level - 1 - i);
            cands[ncand++] = {col, v};
        }
        std::sort(cands, cands + ncand, [](const Cand& a, const Cand& b) {
            return a.col != b.col ? a.col < b.col : a.v < b.v;
        });
        int ntried = 0;
        Cand tried[Graph::max_order];
        for (int c = 0; c < ncand; ++c) {
            const Cand& cand = cands[c];
            if (!better && have_best_ && cand.col > best_[level]) break;  // sorted: rest are worse
            bool twin = false;
            for (int t = 0; t < ntried && !twin; ++t) {
                if (tried[t].col != cand.col) continue;
                const std::uint64_t out = ~(bit(cand.v) | bit(tried[t].v));
                twin = ((g_.neighbors(cand.v).bits() ^ g_.neighbors(tried[t].v).bits()) & out) == 0;
            }
            if (twin) continue;
            const bool child_better = better || !have_best_ || cand.col < best_[level];
            cur_[level] = cand.col;
            placed_[level] = cand.v;
            const std::uint64_t mark = gen_;
            rec(level + 1, used | bit(cand.v), child_better);
            // A new incumbent below shares this prefix, so the path is no
            // longer strictly ahead of it.
            if (gen_ != mark) better = false;
            tried[ntried++] = cand;
        }
    }

    const Graph& g_;
    int n_;
    std::array<std::uint64_t, Graph::max_order> cur_{}, best_{};
    std::array<int, Graph::max_order> placed_{};
    std::uint64_t gen_ = 0;
    bool have_best_ = false;
};

std::string encode_columns(int n, const std::vector<std::uint64_t>& cols) {
    std::string out;
    out.push_back(static_cast<char>(63 + n));
    int chunk = 0, have = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            chunk = (chunk << 1) | static_cast<int>((cols[static_cast<std::size_t>(j)] >> (j - 1 - i)) & 1);
            if (++have == 6) {
                out.push_back(static_cast<char>(63 + chunk));
                chunk = have = 0;
            }
        }
    }
    if (have > 0) out.push_back(static_cast<char>(63 + (chunk << (6 - have))));
    return out;
}

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
    if (g.order() > canonical_form_max_order)
        throw budget_error("canonical form limited to order <= " +
                           std::to_string(canonical_form_max_order) + ", got " +
                           std::to_string(g.order()));
    CanonSearch search(g);
    return CanonicalForm{encode_columns(g.order(), search.run())};
}

bool are_isomorphic(const Graph& g, const Graph& h) {
    if (g.order() != h.order()) return false;
    if (g.size() != h.size()) return false;
    return canonical_form(g) == canonical_form(h);
}

namespace {

// Canonical graph6 line of an order <= 10 graph fits 9 bytes; fixed-size key
// keeps the dedup set compact at corpus scale.
struct PackedForm {
    std::array<char, 12> b{};
    bool operator==(const PackedForm&) const = default;
};

struct PackedFormHash {
    std::size_t operator()(const PackedForm& f) const {
        std::uint64_t lo, hi = 0;
        std::memcpy(&lo, f.b.data(), 8);
        std::memcpy(&hi, f.b.data() + 4, 8);
        std::uint64_t x = lo * 0x9e3779b97f4a7c15ull ^ hi;
        x ^= x >> 32;
        x *= 0xd6e8feb86659fd93ull;
        x ^= x >> 32;
        return static_cast<std::size_t>(x);
    }
};

PackedForm pack(const std::string& s) {
    PackedForm f;
    std::copy(s.begin(), s.end(), f.b.begin());
    return f;
}

std::string unpack(const PackedForm& f) {
    return std::string(f.b.data(), std::strlen(f.b.data()));
}

}  // namespace

void enumerate_connected(int n, const std::function<void(const Graph&)>& sink, int order_cap) {
    if (n < 1) throw domain_error("order must be >= 1");
    const int cap = std::min(order_cap, max_enumeration_cap);
    if (n > cap)
        throw budget_error("enumeration of order " + std::to_string(n) +
                           " exceeds cap " + std::to_string(cap));
    std::vector<Graph> reps{Graph(1)};
    for (int k = 2; k <= n; ++k) {
        std::unordered_set<PackedForm, PackedFormHash> seen;
        std::vector<PackedForm> forms;
        seen.reserve(k >= 10 ? std::size_t{13000000} : std::size_t{1} << (2 * k));
        // Every connected graph of order k arises from a connected graph of
        // order k-1 by adding a vertex with a nonempty neighborhood.
        for (const Graph& parent : reps) {
            std::vector<std::uint64_t> adj(static_cast<std::size_t>(k), 0);
            for (std::uint64_t mask = 1; mask < bit(k - 1); ++mask) {
                for (int v = 0; v < k - 1; ++v)
                    adj[static_cast<std::size_t>(v)] =
                        parent.neighbors(v).bits() | (((mask >> v) & 1) << (k - 1));
                adj[static_cast<std::size_t>(k - 1)] = mask;
                const Graph child = Graph::from_adjacency(k, adj);
                const PackedForm f = pack(canonical_form(child).bytes);
                if (seen.insert(f).second) forms.push_back(f);
            }
        }
        std::sort(forms.begin(), forms.end(),
                  [](const PackedForm& a, const PackedForm& b) { return a.b < b.b; });
        reps.clear();
        if (k == n) {
            for (const PackedForm& f : forms) sink(parse_graph6(unpack(f)));
        } else {
            reps.reserve(forms.size());
            for (const PackedForm& f : forms) reps.push_back(parse_graph6(unpack(f)));
        }
    }
    if (n == 1) sink(Graph(1));
}

std::vector<Graph> enumerate_connected(int n, int order_cap) {
    std::vector<Graph> out;
    enumerate_connected(n, [&out](const Graph& g) { out.push_back(g); }, order_cap);
    return out;
}

// --- corpus streaming -----------------------------------------------------

CorpusReader::CorpusReader(std::istream& in, bool strict) : in_(in), strict_(strict) {}

std::optional<CorpusItem> CorpusReader::next() {
    std::string line;
    while (std::getline(in_, line)) {
        ++line_;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.rfind(">>graph6<<", 0) == 0) line.erase(0, 10);
        if (line.empty()) continue;
        try {
            return CorpusItem{parse_graph6(line), line_};
        } catch (const parse_error& e) {
            if (strict_) throw parse_error("line " + std::to_string(line_) + ": " + e.what(), e.offset);
            errors_.push_back({line_, e.what()});
        }
    }
    return std::nullopt;
}

}  // namespace leafspan
