#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sepdepth/graph.hpp"

namespace sepdepth {

/// Deduplicated collection of minimal separators, sorted by (size, lex).
struct SeparatorSet {
    std::vector<VertexSet> separators;
    std::optional<std::uint32_t> bound; // max size used during enumeration, if any

    std::size_t size() const { return separators.size(); }
    bool contains(const VertexSet& s) const;
};

/// How the size bound interacts with enumeration. Sound mode expands the
/// candidate closure unrestricted and filters only the output; Aggressive
/// also drops oversized intermediate candidates, which is faster but is only
/// trusted after validation against Sound on the test corpus.
enum class BoundedMode { Sound, Aggressive };

/// Enumeration accounting consumed by the solver's statistics.
struct EnumerationTally {
    std::uint64_t generated = 0; // distinct minimal separators discovered
    std::uint64_t filtered = 0;  // of those, dropped by the size bound
};

/// Components C of G[within] \ s whose neighborhood (inside `within`) is
/// exactly s, in smallest-member order.
std::vector<VertexSet> full_components_within(const Graph& g, const VertexSet& within,
                                              const VertexSet& s);
std::vector<VertexSet> full_components(const Graph& g, const VertexSet& s);

/// True iff G[within] \ s has at least two full components associated with s.
bool is_minimal_separator_within(const Graph& g, const VertexSet& within, const VertexSet& s);
bool is_minimal_separator(const Graph& g, const VertexSet& s);

/// All minimal separators of the induced subgraph G[within], optionally
/// restricted to size <= max_size. Output sorted (size, lex).
std::vector<VertexSet> enumerate_minimal_separators_within(
    const Graph& g, const VertexSet& within, std::optional<std::uint32_t> max_size = {},
    BoundedMode mode = BoundedMode::Sound, EnumerationTally* tally = nullptr);

/// Whole-graph wrapper. Disconnected inputs are handled per component (the
/// empty set, which separates vertices of distinct components, is not listed).
SeparatorSet enumerate_minimal_separators(const Graph& g,
                                          std::optional<std::uint32_t> max_size = {},
                                          BoundedMode mode = BoundedMode::Sound);

/// Oracle: filters all 2^n subsets through is_minimal_separator. Refuses
/// above the configured budget.
SeparatorSet minimal_separators_bruteforce(const Graph& g);

} // namespace sepdepth
