#pragma once

#include <cstdint>

#include "sepdepth/graph.hpp"

namespace sepdepth::gen {

Graph path(std::uint32_t n);
Graph cycle(std::uint32_t n);          // n >= 3
Graph complete(std::uint32_t n);
Graph complete_bipartite(std::uint32_t a, std::uint32_t b);

/// rows x cols grid; vertex (i, j) (1-based) gets id (i-1)*cols + (j-1).
Graph grid(std::uint32_t rows, std::uint32_t cols);

/// Grid-plus-pendant-paths construction: a rows x cols grid where every
/// last-column vertex carries a pendant path of 2^k - 1 vertices. Vertices
/// are labeled grid first (row-major), then the pendant paths in row order.
struct Broom {
    Graph graph;
    VertexSet grid_vertices; // V_G
    VertexSet path_vertices; // V_P
};
Broom broom(std::uint32_t rows, std::uint32_t cols, std::uint32_t k);

/// As broom, but pendant paths hang off both the first and last column of
/// every row (paths in row order, column 1 before column cols). cols >= 2.
struct DoubleBroom {
    Graph graph;
    VertexSet grid_vertices;
    VertexSet path_vertices;
};
DoubleBroom double_broom(std::uint32_t rows, std::uint32_t cols, std::uint32_t k);

/// Grid plus `hubs` extra vertices, where every (boundary column vertex, hub)
/// pair is joined through a fresh path of 2^k - 1 vertices. Labels: grid
/// (row-major), then connector paths in construction order (rows ascending,
/// column 1 before column cols, hubs ascending), then the hubs last.
struct CornerGraph {
    Graph graph;
    VertexSet grid_vertices;
    VertexSet connector_vertices;
    VertexSet hub_vertices; // W
};
CornerGraph corner_graph(std::uint32_t rows, std::uint32_t cols, std::uint32_t k,
                         std::uint32_t hubs);

/// Two terminals a = 0, b = 1 joined by k internally disjoint paths
/// a - x_i - y_i - b (x_i = 2 + 2i, y_i = 3 + 2i). Has 2^k + 1 minimal
/// separators and treewidth 2 for k >= 2.
Graph exp_sep_graph(std::uint32_t k);

/// Seeded random k-tree: K_{k+1} plus n - k - 1 vertices each attached to a
/// random existing k-clique. Chordal with tw = k for n > k.
Graph random_ktree(std::uint32_t n, std::uint32_t k, std::uint64_t seed);

/// Seeded random cograph on n vertices (random recursive union/join cotree).
Graph random_cograph(std::uint32_t n, std::uint64_t seed);

/// Seeded random maximal outerplanar graph: a cycle on n >= 3 vertices with a
/// random recursive triangulation (2n - 3 edges).
Graph random_maximal_outerplanar(std::uint32_t n, std::uint64_t seed);

} // namespace sepdepth::gen
