#include "leafspan/graph.hpp"

#include <algorithm>
#include <numeric>

namespace leafspan {

namespace {
constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << v; }
}

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n), 0) {
    if (n < 1 || n > max_order)
        throw capacity_error("graph order must be in [1, 64], got " + std::to_string(n));
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
    for (auto [u, v] : edges) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw domain_error("loop edge at vertex " + std::to_string(u));
        adj_[u] |= bit(v);
        adj_[v] |= bit(u);
    }
}

Graph Graph::from_adjacency(int n, std::vector<std::uint64_t> adj) {
    Graph g(n);
    if (adj.size() != static_cast<std::size_t>(n))
        throw domain_error("adjacency vector size does not match order");
    g.adj_ = std::move(adj);
    g.validate();
    return g;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw domain_error("vertex " + std::to_string(v) + " out of range for order " + std::to_string(n_));
}

void Graph::validate() const {
    const std::uint64_t range = VertexSet::first_n(n_).bits();
    for (int v = 0; v < n_; ++v) {
        if (adj_[v] & ~range) throw domain_error("adjacency bit beyond order");
        if (adj_[v] & bit(v)) throw domain_error("loop at vertex " + std::to_string(v));
        for (int u : VertexSet(adj_[v]))
            if (!(adj_[u] & bit(v))) throw domain_error("asymmetric adjacency");
    }
}

Graph Graph::complete(int n) {
    Graph g(n);
    const std::uint64_t all = VertexSet::first_n(n).bits();
    for (int v = 0; v < n; ++v) g.adj_[v] = all & ~bit(v);
    return g;
}

Graph Graph::cycle(int n) {
    if (n < 3) throw domain_error("cycle needs order >= 3");
    Graph g(n);
    for (int v = 0; v < n; ++v) {
        g.adj_[v] |= bit((v + 1) % n);
        g.adj_[(v + 1) % n] |= bit(v);
    }
    return g;
}

Graph Graph::path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) {
        g.adj_[v] |= bit(v + 1);
        g.adj_[v + 1] |= bit(v);
    }
    return g;
}

int Graph::size() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += std::popcount(adj_[v]);
    return twice / 2;
}

Graph Graph::with_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw domain_error("loop edge");
    Graph g = *this;
    g.adj_[u] |= bit(v);
    g.adj_[v] |= bit(u);
    return g;
}

// --- graph6 ---------------------------------------------------------------

namespace {

// graph6 packs the upper triangle column-major, 6 bits per character offset
// by 63, most significant bit first.
constexpr int kG6Offset = 63;

[[noreturn]] void fail(const std::string& what, std::size_t pos) {
    throw parse_error(what + " (byte " + std::to_string(pos) + ")", pos);
}

int decode_char(std::string_view line, std::size_t pos) {
    const unsigned char c = static_cast<unsigned char>(line[pos]);
    if (c < 63 || c > 126) fail("invalid graph6 character", pos);
    return c - kG6Offset;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
    if (line.empty()) fail("empty graph6 line", 0);
    std::size_t pos = 0;
    long n;
    if (line[pos] == '~') {
        // long form: '~' + three chars, 18-bit order
        if (line.size() < 4) fail("truncated long-form order", line.size());
        if (line[1] == '~') fail("8-byte order form not supported", 1);
        n = 0;
        for (int i = 1; i <= 3; ++i) n = (n << 6) | decode_char(line, i);
        pos = 4;
    } else {
        n = decode_char(line, pos);
        pos = 1;
    }
    if (n == 0) fail("graph of order 0", 0);
    if (n > Graph::max_order) fail("order " + std::to_string(n) + " exceeds 64", 0);

    const int order = static_cast<int>(n);
    const long nbits = static_cast<long>(order) * (order - 1) / 2;
    const std::size_t nbytes = static_cast<std::size_t>((nbits + 5) / 6);
    if (line.size() < pos + nbytes) fail("truncated edge bits", line.size());
    if (line.size() > pos + nbytes) fail("trailing garbage", pos + nbytes);

    std::vector<std::uint64_t> adj(static_cast<std::size_t>(order), 0);
    long k = 0;
    int chunk = 0, have = 0;
    std::size_t at = pos;
    for (int j = 1; j < order; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            if (have == 0) {
                chunk = decode_char(line, at++);
                have = 6;
            }
            if (chunk & (1 << (have - 1))) {
                adj[static_cast<std::size_t>(i)] |= bit(j);
                adj[static_cast<std::size_t>(j)] |= bit(i);
            }
            --have;
        }
    }
    return Graph::from_adjacency(order, std::move(adj));
}

std::string write_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(kG6Offset + n));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(kG6Offset + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(kG6Offset + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(kG6Offset + (n & 63)));
    }
    int chunk = 0, have = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            chunk = (chunk << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++have == 6) {
                out.push_back(static_cast<char>(kG6Offset + chunk));
                chunk = have = 0;
            }
        }
    }
    if (have > 0) out.push_back(static_cast<char>(kG6Offset + (chunk << (6 - have))));
    return out;
}

// --- construction algebra -------------------------------------------------

Graph join(const Graph& g, const Graph& h) {
    const int ng = g.order(), nh = h.order();
    if (ng + nh > Graph::max_order)
        throw capacity_error("join order " + std::to_string(ng + nh) + " exceeds 64");
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(ng + nh), 0);
    const std::uint64_t gmask = VertexSet::first_n(ng).bits();
    const std::uint64_t hmask = VertexSet::first_n(ng + nh).bits() & ~gmask;
    for (int v = 0; v < ng; ++v) adj[static_cast<std::size_t>(v)] = g.neighbors(v).bits() | hmask;
    for (int v = 0; v < nh; ++v)
        adj[static_cast<std::size_t>(ng + v)] = (h.neighbors(v).bits() << ng) | gmask;
    return Graph::from_adjacency(ng + nh, std::move(adj));
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    const int ng = g.order(), nh = h.order();
    if (ng + nh > Graph::max_order)
        throw capacity_error("disjoint union order " + std::to_string(ng + nh) + " exceeds 64");
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(ng + nh), 0);
    for (int v = 0; v < ng; ++v) adj[static_cast<std::size_t>(v)] = g.neighbors(v).bits();
    for (int v = 0; v < nh; ++v) adj[static_cast<std::size_t>(ng + v)] = h.neighbors(v).bits() << ng;
    return Graph::from_adjacency(ng + nh, std::move(adj));
}

Graph induced_subgraph(const Graph& g, VertexSet s) {
    if (s.empty()) throw domain_error("induced subgraph of empty vertex set");
    if (!g.vertices().contains_all(s)) throw domain_error("vertex set not within graph");
    std::vector<int> label(static_cast<std::size_t>(g.order()), -1);
    int next = 0;
    for (int v : s) label[static_cast<std::size_t>(v)] = next++;
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(next), 0);
    for (int v : s)
        for (int u : g.neighbors(v) & s)
            adj[static_cast<std::size_t>(label[static_cast<std::size_t>(v)])] |=
                bit(label[static_cast<std::size_t>(u)]);
    return Graph::from_adjacency(next, std::move(adj));
}

int cross_edge_count(const Graph& g, VertexSet a, VertexSet b) {
    if (a.intersects(b)) throw domain_error("cross_edge_count requires disjoint sets");
    if (!g.vertices().contains_all(a | b)) throw domain_error("vertex set not within graph");
    int count = 0;
    for (int v : a) count += (g.neighbors(v) & b).count();
    return count;
}

VertexSet component_containing(const Graph& g, int v, VertexSet within) {
    if (!within.test(v)) throw domain_error("start vertex not in the induced set");
    VertexSet seen = VertexSet::single(v);
    VertexSet frontier = seen;
    while (!frontier.empty()) {
        VertexSet next;
        for (int u : frontier) next |= g.neighbors(u);
        next = (next & within) - seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

std::vector<VertexSet> components(const Graph& g, VertexSet within) {
    std::vector<VertexSet> out;
    VertexSet rest = within;
    while (!rest.empty()) {
        VertexSet comp = component_containing(g, rest.lowest(), rest);
        out.push_back(comp);
        rest -= comp;
    }
    return out;
}

bool is_connected(const Graph& g) {
    return component_containing(g, 0, g.vertices()) == g.vertices();
}

DegreeProfile degree_profile(const Graph& g) {
    DegreeProfile p;
    p.sorted_degrees.reserve(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) p.sorted_degrees.push_back(g.degree(v));
    std::sort(p.sorted_degrees.begin(), p.sorted_degrees.end());
    p.min_degree = p.sorted_degrees.front();
    p.max_degree = p.sorted_degrees.back();
    p.connected = is_connected(g);
    return p;
}

}  // namespace leafspan
