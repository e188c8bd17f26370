#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sepdepth/graph.hpp"
#include "sepdepth/td_solver.hpp"

namespace sepdepth {

/// PACE-style .gr document: `p tdp <n> <m>` header, one `<u> <v>` edge per
/// line, 1-based endpoints, `c` comment lines. Duplicate edges are accepted
/// and deduplicated (counted); self-loops are rejected.
struct GrDocument {
    std::uint32_t n = 0;
    std::uint64_t declared_m = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges; // 1-based, u < v, sorted unique
    std::vector<std::string> comments;
    std::uint64_t duplicates_removed = 0;
};

/// Tree document: first line the height, then n parent lines (1-based, 0 for
/// roots).
struct TreeDocument {
    std::int32_t depth = 0;
    std::vector<std::uint32_t> parent; // 1-based vertex ids, 0 = root
};

GrDocument parse_gr(std::string_view text);
std::string write_gr(const GrDocument& doc);

Graph to_graph(const GrDocument& doc);
GrDocument from_graph(const Graph& g);

std::string write_tree(const TreedepthDecomposition& t);
TreeDocument parse_tree(std::string_view text, std::uint32_t n);

TreedepthDecomposition to_decomposition(const TreeDocument& doc);

} // namespace sepdepth
