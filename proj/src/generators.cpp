#include "sepdepth/generators.hpp"

#include <string>
#include <utility>
#include <vector>

#include "sepdepth/budgets.hpp"
#include "sepdepth/errors.hpp"
#include "sepdepth/prng.hpp"

namespace sepdepth::gen {
namespace {

using EdgeList = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

void require_positive(std::uint64_t value, const char* what) {
    if (value == 0) throw InputError(std::string(what) + " must be positive");
}

std::uint64_t checked_vertex_count(std::uint64_t v) {
    if (v > budgets().generator_vertices)
        throw BudgetError("construction needs " + std::to_string(v) +
                          " vertices, over the cap of " +
                          std::to_string(budgets().generator_vertices));
    return v;
}

// 2^k - 1 with an overflow guard folded into the vertex cap.
std::uint64_t pendant_length(std::uint32_t k) {
    if (k >= 63) throw BudgetError("pendant path length 2^k - 1 overflows");
    return (1ULL << k) - 1;
}

void add_grid_edges(EdgeList& es, std::uint32_t rows, std::uint32_t cols) {
    auto id = [cols](std::uint32_t i, std::uint32_t j) { return i * cols + j; };
    for (std::uint32_t i = 0; i < rows; ++i)
        for (std::uint32_t j = 0; j < cols; ++j) {
            if (j + 1 < cols) es.emplace_back(id(i, j), id(i, j + 1));
            if (i + 1 < rows) es.emplace_back(id(i, j), id(i + 1, j));
        }
}

// Appends a pendant path of `len` vertices starting at id `next`, attached to
// `anchor`; returns the id just past the path (len may be 0).
std::uint32_t attach_path(EdgeList& es, std::uint32_t anchor, std::uint32_t next,
                          std::uint64_t len) {
    std::uint32_t prev = anchor;
    for (std::uint64_t t = 0; t < len; ++t) {
        es.emplace_back(prev, next);
        prev = next++;
    }
    return next;
}

} // namespace

Graph path(std::uint32_t n) {
    require_positive(n, "path length");
    EdgeList es;
    for (std::uint32_t v = 0; v + 1 < n; ++v) es.emplace_back(v, v + 1);
    return Graph::from_edges(n, es);
}

Graph cycle(std::uint32_t n) {
    if (n < 3) throw InputError("cycle needs at least 3 vertices");
    EdgeList es;
    for (std::uint32_t v = 0; v + 1 < n; ++v) es.emplace_back(v, v + 1);
    es.emplace_back(n - 1, 0u);
    return Graph::from_edges(n, es);
}

Graph complete(std::uint32_t n) {
    require_positive(n, "vertex count");
    checked_vertex_count(n);
    EdgeList es;
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i + 1; j < n; ++j) es.emplace_back(i, j);
    return Graph::from_edges(n, es);
}

Graph complete_bipartite(std::uint32_t a, std::uint32_t b) {
    require_positive(a, "first side");
    require_positive(b, "second side");
    checked_vertex_count(std::uint64_t{a} + b);
    EdgeList es;
    for (std::uint32_t i = 0; i < a; ++i)
        for (std::uint32_t j = 0; j < b; ++j) es.emplace_back(i, a + j);
    return Graph::from_edges(a + b, es);
}

Graph grid(std::uint32_t rows, std::uint32_t cols) {
    require_positive(rows, "row count");
    require_positive(cols, "column count");
    checked_vertex_count(std::uint64_t{rows} * cols);
    EdgeList es;
    add_grid_edges(es, rows, cols);
    return Graph::from_edges(rows * cols, es);
}

Broom broom(std::uint32_t rows, std::uint32_t cols, std::uint32_t k) {
    require_positive(rows, "rows");
    require_positive(cols, "cols");
    require_positive(k, "k");
    const std::uint64_t plen = pendant_length(k);
    const std::uint64_t total =
        checked_vertex_count(std::uint64_t{rows} * cols + std::uint64_t{rows} * plen);
    auto n = static_cast<std::uint32_t>(total);

    EdgeList es;
    add_grid_edges(es, rows, cols);
    std::uint32_t next = rows * cols;
    for (std::uint32_t i = 0; i < rows; ++i)
        next = attach_path(es, i * cols + (cols - 1), next, plen);

    Broom out{Graph::from_edges(n, es), VertexSet(n), VertexSet(n)};
    for (std::uint32_t v = 0; v < rows * cols; ++v) out.grid_vertices.set(v);
    for (std::uint32_t v = rows * cols; v < n; ++v) out.path_vertices.set(v);
    return out;
}

DoubleBroom double_broom(std::uint32_t rows, std::uint32_t cols, std::uint32_t k) {
    require_positive(rows, "rows");
    require_positive(k, "k");
    if (cols < 2) throw InputError("double broom needs cols >= 2");
    const std::uint64_t plen = pendant_length(k);
    const std::uint64_t total =
        checked_vertex_count(std::uint64_t{rows} * cols + 2 * std::uint64_t{rows} * plen);
    auto n = static_cast<std::uint32_t>(total);

    EdgeList es;
    add_grid_edges(es, rows, cols);
    std::uint32_t next = rows * cols;
    for (std::uint32_t i = 0; i < rows; ++i) {
        next = attach_path(es, i * cols, next, plen);
        next = attach_path(es, i * cols + (cols - 1), next, plen);
    }

    DoubleBroom out{Graph::from_edges(n, es), VertexSet(n), VertexSet(n)};
    for (std::uint32_t v = 0; v < rows * cols; ++v) out.grid_vertices.set(v);
    for (std::uint32_t v = rows * cols; v < n; ++v) out.path_vertices.set(v);
    return out;
}

CornerGraph corner_graph(std::uint32_t rows, std::uint32_t cols, std::uint32_t k,
                         std::uint32_t hubs) {
    require_positive(rows, "rows");
    require_positive(k, "k");
    if (cols < 2) throw InputError("corner graph needs cols >= 2");
    const std::uint64_t plen = pendant_length(k);
    const std::uint64_t grid_n = std::uint64_t{rows} * cols;
    const std::uint64_t connector_n = 2 * std::uint64_t{rows} * hubs * plen;
    const std::uint64_t total = checked_vertex_count(grid_n + connector_n + hubs);
    auto n = static_cast<std::uint32_t>(total);
    const auto hub_base = static_cast<std::uint32_t>(grid_n + connector_n);

    EdgeList es;
    add_grid_edges(es, rows, cols);
    std::uint32_t next = static_cast<std::uint32_t>(grid_n);
    for (std::uint32_t i = 0; i < rows; ++i)
        for (std::uint32_t j : {0u, cols - 1}) {
            std::uint32_t boundary = i * cols + j;
            for (std::uint32_t w = 0; w < hubs; ++w) {
                std::uint32_t path_start = next;
                next = attach_path(es, boundary, next, plen);
                // other end of the connector path joins the hub; plen >= 1
                // since k >= 1, so next - 1 is the path's last vertex
                es.emplace_back(next - 1, hub_base + w);
                (void)path_start;
            }
        }

    CornerGraph out{Graph::from_edges(n, es), VertexSet(n), VertexSet(n), VertexSet(n)};
    for (std::uint32_t v = 0; v < grid_n; ++v) out.grid_vertices.set(v);
    for (std::uint32_t v = static_cast<std::uint32_t>(grid_n); v < hub_base; ++v)
        out.connector_vertices.set(v);
    for (std::uint32_t v = hub_base; v < n; ++v) out.hub_vertices.set(v);
    return out;
}

Graph exp_sep_graph(std::uint32_t k) {
    require_positive(k, "k");
    checked_vertex_count(2 + 2 * std::uint64_t{k});
    EdgeList es;
    for (std::uint32_t i = 0; i < k; ++i) {
        std::uint32_t x = 2 + 2 * i, y = 3 + 2 * i;
        es.emplace_back(0u, x);
        es.emplace_back(x, y);
        es.emplace_back(y, 1u);
    }
    return Graph::from_edges(2 + 2 * k, es);
}

Graph random_ktree(std::uint32_t n, std::uint32_t k, std::uint64_t seed) {
    if (k == 0 || k >= n) throw InputError("k-tree needs 1 <= k < n");
    checked_vertex_count(n);
    SplitMix64 rng(seed);
    EdgeList es;
    std::vector<std::vector<std::uint32_t>> cliques; // k-cliques available for attachment
    for (std::uint32_t i = 0; i <= k; ++i)
        for (std::uint32_t j = i + 1; j <= k; ++j) es.emplace_back(i, j);
    for (std::uint32_t drop = 0; drop <= k; ++drop) {
        std::vector<std::uint32_t> c;
        for (std::uint32_t i = 0; i <= k; ++i)
            if (i != drop) c.push_back(i);
        cliques.push_back(std::move(c));
    }
    for (std::uint32_t v = k + 1; v < n; ++v) {
        const auto pick = static_cast<std::size_t>(rng.next_below(cliques.size()));
        std::vector<std::uint32_t> base = cliques[pick];
        for (std::uint32_t u : base) es.emplace_back(u, v);
        for (std::uint32_t drop = 0; drop < base.size(); ++drop) {
            std::vector<std::uint32_t> c;
            for (std::uint32_t idx = 0; idx < base.size(); ++idx)
                if (idx != drop) c.push_back(base[idx]);
            c.push_back(v);
            cliques.push_back(std::move(c));
        }
    }
    return Graph::from_edges(n, es);
}

namespace {

void build_cotree(SplitMix64& rng, std::uint32_t count, std::uint32_t first_id, bool join,
                  EdgeList& es, std::vector<std::pair<std::uint32_t, std::uint32_t>>& ranges) {
    // ranges collects the leaf id intervals of the two children so the caller
    // can wire a join; recursion labels leaves first_id .. first_id+count-1
    if (count == 1) return;
    auto left = static_cast<std::uint32_t>(1 + rng.next_below(count - 1));
    std::uint32_t right = count - left;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> ignored;
    build_cotree(rng, left, first_id, !join, es, ignored);
    build_cotree(rng, right, first_id + left, !join, es, ignored);
    if (join)
        for (std::uint32_t a = first_id; a < first_id + left; ++a)
            for (std::uint32_t b = first_id + left; b < first_id + count; ++b)
                es.emplace_back(a, b);
    ranges.emplace_back(first_id, first_id + count);
}

} // namespace

Graph random_cograph(std::uint32_t n, std::uint64_t seed) {
    require_positive(n, "vertex count");
    checked_vertex_count(n);
    SplitMix64 rng(seed);
    EdgeList es;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> ranges;
    bool root_join = (rng.next() & 1u) != 0;
    build_cotree(rng, n, 0, root_join, es, ranges);
    return Graph::from_edges(n, es);
}

namespace {

void triangulate(SplitMix64& rng, std::uint32_t lo, std::uint32_t hi, EdgeList& es) {
    // polygon arc lo..hi (consecutive ids); add the ear at a random apex
    if (hi - lo < 2) return;
    auto apex = static_cast<std::uint32_t>(lo + 1 + rng.next_below(hi - lo - 1));
    if (apex - lo >= 2) es.emplace_back(lo, apex);
    if (hi - apex >= 2) es.emplace_back(apex, hi);
    triangulate(rng, lo, apex, es);
    triangulate(rng, apex, hi, es);
}

} // namespace

Graph random_maximal_outerplanar(std::uint32_t n, std::uint64_t seed) {
    if (n < 3) throw InputError("maximal outerplanar graph needs n >= 3");
    checked_vertex_count(n);
    SplitMix64 rng(seed);
    EdgeList es;
    for (std::uint32_t v = 0; v + 1 < n; ++v) es.emplace_back(v, v + 1);
    es.emplace_back(n - 1, 0u);
    triangulate(rng, 0, n - 1, es);
    return Graph::from_edges(n, es);
}

} // namespace sepdepth::gen
