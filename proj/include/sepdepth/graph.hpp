#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "sepdepth/vertex_set.hpp"

namespace sepdepth {

/// Simple undirected graph over vertices 0..n-1 with bitset adjacency rows.
/// Immutable after construction; all operations on it are pure.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from unordered endpoint pairs. Duplicate edges collapse;
    /// out-of-range endpoints and self-loops raise InputError.
    static Graph from_edges(std::uint32_t n,
                            std::span<const std::pair<std::uint32_t, std::uint32_t>> edges);

    static Graph from_edges(std::uint32_t n,
                            std::initializer_list<std::pair<std::uint32_t, std::uint32_t>> edges);

    std::uint32_t vertex_count() const { return n_; }
    std::uint64_t edge_count() const { return m_; }

    const VertexSet& neighbors(std::uint32_t v) const { return adj_[v]; }
    bool adjacent(std::uint32_t u, std::uint32_t v) const { return adj_[u].test(v); }
    std::uint32_t degree(std::uint32_t v) const { return adj_[v].count(); }

    VertexSet vertex_set() const { return VertexSet::full(n_); }

    /// Sorted (u < v) unique edge list.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges() const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }

private:
    std::uint32_t n_ = 0;
    std::uint64_t m_ = 0;
    std::vector<VertexSet> adj_;
};

/// Induced subgraph as a view: parent graph, kept vertex set and the relabel
/// bijection kept <-> {0..|kept|-1} (ascending member order).
class SubgraphView {
public:
    SubgraphView(const Graph& parent, VertexSet kept);

    std::uint32_t size() const { return static_cast<std::uint32_t>(to_parent_.size()); }
    const Graph& parent() const { return *parent_; }
    const VertexSet& kept() const { return kept_; }

    std::uint32_t to_parent(std::uint32_t view_id) const { return to_parent_[view_id]; }
    /// -1 when the parent vertex is not kept.
    std::int32_t to_view(std::uint32_t parent_id) const { return to_view_[parent_id]; }

    bool has_edge(std::uint32_t view_u, std::uint32_t view_v) const {
        return parent_->adjacent(to_parent_[view_u], to_parent_[view_v]);
    }

    /// Materializes the view as a standalone relabeled Graph.
    Graph materialize() const;

private:
    const Graph* parent_;
    VertexSet kept_;
    std::vector<std::uint32_t> to_parent_;
    std::vector<std::int32_t> to_view_;
};

SubgraphView induced_subgraph(const Graph& g, const VertexSet& keep);

/// Connected components, ordered by smallest member. The *_within variants
/// restrict the graph to an induced vertex subset without materializing it.
std::vector<VertexSet> connected_components(const Graph& g);
std::vector<VertexSet> components_within(const Graph& g, const VertexSet& within);

/// Component of `start` inside `within`.
VertexSet component_of(const Graph& g, const VertexSet& within, std::uint32_t start);

VertexSet open_neighborhood(const Graph& g, const VertexSet& s);
/// N(s) restricted to `within`; s itself is excluded.
VertexSet open_neighborhood_within(const Graph& g, const VertexSet& within, const VertexSet& s);

bool is_complete(const Graph& g);
bool is_complete_within(const Graph& g, const VertexSet& within);

bool is_connected(const Graph& g);
bool is_connected_within(const Graph& g, const VertexSet& within);

/// Length (edge count) of some shortest path realized between two vertices of
/// the induced subgraph, found by a double BFS sweep; 0 for |within| <= 1.
/// A valid lower bound on the diameter of the induced subgraph.
std::uint32_t pseudo_diameter_within(const Graph& g, const VertexSet& within);

} // namespace sepdepth
