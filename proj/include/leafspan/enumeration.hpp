#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "leafspan/graph.hpp"

namespace leafspan {

/// Relabeling-invariant encoding: the graph6 line of the lexicographically
/// minimal edge bitstring over all vertex orderings. Two graphs have equal
/// forms iff they are isomorphic.
struct CanonicalForm {
    std::string bytes;
    auto operator<=>(const CanonicalForm&) const = default;
};

inline constexpr int canonical_form_max_order = 12;

/// Exact minimization by backtracking over vertex placements with
/// prefix-dominance pruning. Budget: order <= 12.
CanonicalForm canonical_form(const Graph& g);

bool are_isomorphic(const Graph& g, const Graph& h);

inline constexpr int default_enumeration_cap = 9;
inline constexpr int max_enumeration_cap = 10;

/// One representative per isomorphism class of connected graphs of order n,
/// sorted by canonical form. The representative emitted is the canonical
/// graph itself, so output is independent of generation order.
/// order_cap gates the expensive sizes; raising it past 9 is an explicit
/// opt-in (10 is the hard ceiling).
std::vector<Graph> enumerate_connected(int n, int order_cap = default_enumeration_cap);

/// Streaming variant for corpus-scale sizes.
void enumerate_connected(int n, const std::function<void(const Graph&)>& sink,
                         int order_cap = default_enumeration_cap);

// --- corpus streaming -----------------------------------------------------

struct CorpusItem {
    Graph graph;
    long line = 0;  // 1-based source line
};

struct CorpusError {
    long line = 0;
    std::string message;
};

/// Lazily parses a graph6 line stream. A ">>graph6<<" header and blank lines
/// are skipped. In strict mode the first malformed line throws; otherwise it
/// is recorded and the stream continues.
class CorpusReader {
public:
    explicit CorpusReader(std::istream& in, bool strict = false);

    std::optional<CorpusItem> next();

    const std::vector<CorpusError>& errors() const { return errors_; }

private:
    std::istream& in_;
    bool strict_;
    long line_ = 0;
    std::vector<CorpusError> errors_;
};

}  // namespace leafspan
