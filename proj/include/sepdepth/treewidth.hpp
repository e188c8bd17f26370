#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "sepdepth/graph.hpp"

namespace sepdepth {

/// Tree decomposition witness: bags plus tree edges over bag indices.
struct TreeDecomposition {
    std::vector<VertexSet> bags;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> tree_edges;

    /// max bag size - 1; -1 for the empty decomposition.
    int width() const {
        int w = -1;
        for (const VertexSet& b : bags) w = std::max(w, static_cast<int>(b.count()) - 1);
        return w;
    }
};

/// lower <= tw(G) <= upper, with the elimination order witnessing `upper`.
struct TwBounds {
    int lower = 0;
    int upper = 0;
    std::vector<std::uint32_t> upper_order;
};

/// Exact treewidth by dynamic programming over vertex subsets of elimination
/// prefixes. Refuses above the configured budget (callers fall back to
/// bounds). Disconnected graphs are solved per component and the component
/// decompositions joined by arbitrary tree edges. tw of the empty graph is -1
/// by convention.
std::pair<int, TreeDecomposition> treewidth_exact(const Graph& g);

/// Greedy min-fill elimination (ties: fill, then degree, then vertex id).
std::pair<int, std::vector<std::uint32_t>> treewidth_upper(const Graph& g);

/// Degeneracy lower bound: max over the min-degree sequence under repeated
/// min-degree deletion.
int treewidth_lower(const Graph& g);

TwBounds treewidth_bounds(const Graph& g);

/// Checks the three defining properties plus that tree_edges form a tree.
/// Malformed bag indices or foreign universes raise InputError.
bool verify_tree_decomposition(const Graph& g, const TreeDecomposition& td);

/// Width of the elimination order (max forward degree in the fill-in graph).
int elimination_width(const Graph& g, const std::vector<std::uint32_t>& order);

/// Decomposition induced by an elimination order; width() equals
/// elimination_width of the order.
TreeDecomposition tree_decomposition_from_order(const Graph& g,
                                                const std::vector<std::uint32_t>& order);

// Subset variants used by the solver's pruning bound; they operate on the
// induced subgraph without materializing it for keying purposes.
int min_fill_width_within(const Graph& g, const VertexSet& within);
int degeneracy_within(const Graph& g, const VertexSet& within);
/// Exact width of the induced subgraph (no witness); |within| must be within
/// the exact budget.
int treewidth_exact_width_within(const Graph& g, const VertexSet& within);

} // namespace sepdepth
