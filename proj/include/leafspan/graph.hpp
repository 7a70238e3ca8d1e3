#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "leafspan/errors.hpp"

namespace leafspan {

/// Set of vertices out of {0..63}, stored as a single bitmask word.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

    static VertexSet of(std::initializer_list<int> vs) {
        std::uint64_t b = 0;
        for (int v : vs) b |= std::uint64_t{1} << v;
        return VertexSet(b);
    }
    static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }
    /// {0, 1, ..., n-1}
    static constexpr VertexSet first_n(int n) {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    int count() const { return std::popcount(bits_); }
    constexpr bool test(int v) const { return (bits_ >> v) & 1; }
    void set(int v) { bits_ |= std::uint64_t{1} << v; }
    void reset(int v) { bits_ &= ~(std::uint64_t{1} << v); }
    /// Smallest member, -1 when empty.
    int lowest() const { return bits_ == 0 ? -1 : std::countr_zero(bits_); }

    constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
    constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
    /// Set difference.
    constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
    VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
    VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
    VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }

    bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }
    bool contains_all(VertexSet o) const { return (o.bits_ & ~bits_) == 0; }

    bool operator==(const VertexSet&) const = default;

    /// Ascending iteration over members: `for (int v : set) ...`
    class iterator {
    public:
        constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
        int operator*() const { return std::countr_zero(rest_); }
        iterator& operator++() { rest_ &= rest_ - 1; return *this; }
        bool operator!=(const iterator& o) const { return rest_ != o.rest_; }
    private:
        std::uint64_t rest_;
    };
    iterator begin() const { return iterator(bits_); }
    iterator end() const { return iterator(0); }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (int v : *this) out.push_back(v);
        return out;
    }

private:
    std::uint64_t bits_ = 0;
};

/// Immutable simple graph of order at most 64. The open neighborhood of each
/// vertex is one bitmask word, so set-level operations are O(1) per vertex.
class Graph {
public:
    static constexpr int max_order = 64;

    /// Edgeless graph on n vertices.
    explicit Graph(int n);
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    /// Builds from raw neighborhood masks; validates symmetry, loop-freeness
    /// and bit range.
    static Graph from_adjacency(int n, std::vector<std::uint64_t> adj);

    static Graph complete(int n);
    static Graph cycle(int n);  // n >= 3
    static Graph path(int n);   // n >= 1

    int order() const { return n_; }
    /// Number of edges.
    int size() const;
    bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1; }
    VertexSet neighbors(int v) const { return VertexSet(adj_[v]); }
    VertexSet closed_neighborhood(int v) const { return VertexSet(adj_[v] | (std::uint64_t{1} << v)); }
    int degree(int v) const { return std::popcount(adj_[v]); }
    VertexSet vertices() const { return VertexSet::first_n(n_); }

    /// Copy with one extra edge.
    Graph with_edge(int u, int v) const;

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    std::vector<std::uint64_t> adj_;

    void check_vertex(int v) const;
    void validate() const;
};

// --- graph6 wire format ---------------------------------------------------

/// Decodes one graph6 line (order <= 64; long-form size prefix accepted).
/// Throws parse_error with the byte offset of the offending character.
Graph parse_graph6(std::string_view line);

/// Canonical-padding graph6 encoding; parse_graph6 round-trips it bit-exactly.
std::string write_graph6(const Graph& g);

// --- construction algebra -------------------------------------------------

/// G with H plus all cross edges. G's vertices keep their labels, H's are
/// shifted by |G|.
Graph join(const Graph& g, const Graph& h);

/// Block-diagonal union, same labeling convention as join.
Graph disjoint_union(const Graph& g, const Graph& h);

/// Subgraph induced by s, vertices relabeled to 0..|s|-1 in ascending order.
Graph induced_subgraph(const Graph& g, VertexSet s);

/// e(A,B): number of edges with one end in a and the other in b.
int cross_edge_count(const Graph& g, VertexSet a, VertexSet b);

struct DegreeProfile {
    int min_degree = 0;
    int max_degree = 0;
    std::vector<int> sorted_degrees;
    bool connected = false;
};
DegreeProfile degree_profile(const Graph& g);

bool is_connected(const Graph& g);

/// Vertices reachable from v in the subgraph induced by `within` (v must be
/// in `within`).
VertexSet component_containing(const Graph& g, int v, VertexSet within);

/// Connected components of the subgraph induced by `within`.
std::vector<VertexSet> components(const Graph& g, VertexSet within);

inline std::vector<VertexSet> components(const Graph& g) { return components(g, g.vertices()); }

}  // namespace leafspan
