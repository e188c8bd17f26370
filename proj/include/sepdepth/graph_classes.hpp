#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sepdepth/graph.hpp"
#include "sepdepth/separators.hpp"

namespace sepdepth {

/// Clique tree of a chordal graph: maximal cliques as nodes, tree edges
/// annotated with the endpoint-clique intersections.
struct CliqueTree {
    struct Edge {
        std::uint32_t a, b;
        VertexSet separator; // cliques[a] & cliques[b]
    };
    std::vector<VertexSet> cliques;
    std::vector<Edge> edges;
};

/// Perfect elimination ordering (each vertex's later neighbors form a clique)
/// when the graph is chordal, std::nullopt otherwise. Lex-BFS with
/// lowest-vertex-id tie-breaking, then verification.
std::optional<std::vector<std::uint32_t>> is_chordal(const Graph& g);

/// Clique tree via PEO clique extraction plus a maximum-weight spanning tree
/// on intersection sizes. Non-chordal input is a domain error. For a
/// disconnected graph the component trees are joined by empty-intersection
/// edges (which chordal_minimal_separators ignores).
CliqueTree clique_tree(const Graph& g);

/// Deduplicated nonempty edge intersections of the clique tree; equals the
/// minimal separator set of the underlying chordal graph.
SeparatorSet chordal_minimal_separators(const CliqueTree& ct);

/// True iff the graph has no induced P_4 (checked by recursive
/// complement-component decomposition).
bool is_cograph(const Graph& g);

enum class MinorPattern { K4, K23 };

/// Branch-set search for an H-minor; budget-guarded.
bool has_minor(const Graph& g, MinorPattern h);

/// Neither K_4 nor K_{2,3} occurs as a minor; budget-guarded.
bool is_outerplanar(const Graph& g);

} // namespace sepdepth
