#include "sepdepth/treewidth.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>

#include "sepdepth/budgets.hpp"
#include "sepdepth/errors.hpp"

namespace sepdepth {
namespace {

// --- exact treewidth: DP over subsets of an at-most-20-vertex graph ------
//
// f[S] = width of the best elimination of the prefix set S, i.e.
// min over v in S of max(f[S \ v], q(S \ v, v)), where q(X, v) counts the
// vertices outside X u {v} adjacent to the component of v in G[X u {v}].

struct SmallGraph {
    std::uint32_t n = 0;
    std::vector<std::uint32_t> adj; // adjacency masks
};

SmallGraph to_small(const Graph& g, const std::vector<std::uint32_t>& verts) {
    SmallGraph s;
    s.n = static_cast<std::uint32_t>(verts.size());
    s.adj.assign(s.n, 0);
    for (std::uint32_t i = 0; i < s.n; ++i)
        for (std::uint32_t j = i + 1; j < s.n; ++j)
            if (g.adjacent(verts[i], verts[j])) {
                s.adj[i] |= 1u << j;
                s.adj[j] |= 1u << i;
            }
    return s;
}

std::uint32_t component_mask(const SmallGraph& g, std::uint32_t allowed, std::uint32_t v) {
    std::uint32_t comp = 1u << v;
    std::uint32_t frontier = comp;
    while (frontier) {
        std::uint32_t next = 0;
        std::uint32_t f = frontier;
        while (f) {
            std::uint32_t u = static_cast<std::uint32_t>(std::countr_zero(f));
            f &= f - 1;
            next |= g.adj[u];
        }
        next &= allowed;
        next &= ~comp;
        comp |= next;
        frontier = next;
    }
    return comp;
}

int elimination_cost(const SmallGraph& g, std::uint32_t prefix, std::uint32_t v) {
    std::uint32_t comp = component_mask(g, prefix | (1u << v), v);
    std::uint32_t reach = 0;
    std::uint32_t c = comp;
    while (c) {
        std::uint32_t u = static_cast<std::uint32_t>(std::countr_zero(c));
        c &= c - 1;
        reach |= g.adj[u];
    }
    reach &= ~(prefix | (1u << v));
    return std::popcount(reach);
}

// Returns (width, elimination order over small-graph ids).
std::pair<int, std::vector<std::uint32_t>> exact_small(const SmallGraph& g) {
    const std::uint32_t n = g.n;
    if (n == 0) return {-1, {}};
    const std::uint32_t full = (n == 32) ? ~0u : (1u << n) - 1;
    std::vector<std::int8_t> f(full + 1u, 0);
    std::vector<std::int8_t> pick(full + 1u, -1);
    f[0] = -1;
    for (std::uint32_t s = 1; s <= full; ++s) {
        int best = std::numeric_limits<int>::max();
        int best_v = -1;
        std::uint32_t it = s;
        while (it) {
            std::uint32_t v = static_cast<std::uint32_t>(std::countr_zero(it));
            it &= it - 1;
            std::uint32_t rest = s & ~(1u << v);
            int cost = std::max(static_cast<int>(f[rest]), elimination_cost(g, rest, v));
            if (cost < best) {
                best = cost;
                best_v = static_cast<int>(v);
            }
        }
        f[s] = static_cast<std::int8_t>(best);
        pick[s] = static_cast<std::int8_t>(best_v);
    }
    std::vector<std::uint32_t> order(n);
    std::uint32_t s = full;
    for (std::uint32_t i = n; i-- > 0;) {
        auto v = static_cast<std::uint32_t>(pick[s]);
        order[i] = v;
        s &= ~(1u << v);
    }
    return {f[full], order};
}

// --- elimination simulation on the full graph ----------------------------

struct Elimination {
    int width = -1;
    std::vector<VertexSet> bags;            // bag per order position
    std::vector<std::int32_t> parent_pos;   // linked order position, -1 for roots
};

Elimination simulate_elimination(const Graph& g, const std::vector<std::uint32_t>& order) {
    const std::uint32_t n = g.vertex_count();
    std::vector<std::uint32_t> position(n, 0);
    for (std::uint32_t i = 0; i < order.size(); ++i) position[order[i]] = i;
    std::vector<VertexSet> adj(n, VertexSet(n));
    for (std::uint32_t v = 0; v < n; ++v) adj[v] = g.neighbors(v);
    VertexSet remaining = VertexSet::full(n);

    Elimination out;
    out.bags.reserve(n);
    out.parent_pos.assign(n, -1);
    for (std::uint32_t i = 0; i < order.size(); ++i) {
        std::uint32_t v = order[i];
        VertexSet nb = adj[v] & remaining;
        out.width = std::max(out.width, static_cast<int>(nb.count()));
        VertexSet bag = nb;
        bag.set(v);
        out.bags.push_back(std::move(bag));
        // connect to the earliest-eliminated current neighbor
        std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
        for (std::uint32_t u : nb) best = std::min(best, position[u]);
        if (best != std::numeric_limits<std::uint32_t>::max())
            out.parent_pos[i] = static_cast<std::int32_t>(best);
        // fill: current neighbors become a clique
        for (std::uint32_t u : nb) {
            adj[u] |= nb;
            adj[u].reset(u);
        }
        remaining.reset(v);
    }
    return out;
}

} // namespace

int elimination_width(const Graph& g, const std::vector<std::uint32_t>& order) {
    return simulate_elimination(g, order).width;
}

TreeDecomposition tree_decomposition_from_order(const Graph& g,
                                                const std::vector<std::uint32_t>& order) {
    if (order.size() != g.vertex_count())
        throw InputError("elimination order does not cover the graph");
    Elimination e = simulate_elimination(g, order);
    TreeDecomposition td;
    td.bags = std::move(e.bags);
    std::vector<std::uint32_t> roots;
    for (std::uint32_t i = 0; i < td.bags.size(); ++i) {
        if (e.parent_pos[i] >= 0)
            td.tree_edges.emplace_back(i, static_cast<std::uint32_t>(e.parent_pos[i]));
        else
            roots.push_back(i);
    }
    // roots correspond to components; chain them so tree_edges form one tree
    for (std::size_t i = 1; i < roots.size(); ++i)
        td.tree_edges.emplace_back(roots[i - 1], roots[i]);
    return td;
}

std::pair<int, TreeDecomposition> treewidth_exact(const Graph& g) {
    const std::uint32_t n = g.vertex_count();
    // the subset DP handles at most 26 vertices regardless of the env budget
    if (n > budgets().treewidth_exact || n > 26)
        throw BudgetError("treewidth_exact: " + std::to_string(n) +
                          " vertices exceeds the budget of " +
                          std::to_string(std::min(budgets().treewidth_exact, 26u)));
    if (n == 0) return {-1, {}};
    // Solve per component (the width is the max), then eliminate components
    // one after another; tree_decomposition_from_order chains their trees.
    std::vector<std::uint32_t> order;
    order.reserve(n);
    int width = 0;
    for (const VertexSet& comp : connected_components(g)) {
        std::vector<std::uint32_t> verts = comp.members();
        auto [w, small_order] = exact_small(to_small(g, verts));
        width = std::max(width, w);
        for (std::uint32_t id : small_order) order.push_back(verts[id]);
    }
    TreeDecomposition td = tree_decomposition_from_order(g, order);
    return {width, std::move(td)};
}

int treewidth_exact_width_within(const Graph& g, const VertexSet& within) {
    std::uint32_t n = within.count();
    if (n > budgets().treewidth_exact || n > 26)
        throw BudgetError("treewidth_exact: subproblem exceeds the exact budget");
    if (n == 0) return -1;
    int width = 0;
    for (const VertexSet& comp : components_within(g, within))
        width = std::max(width, exact_small(to_small(g, comp.members())).first);
    return width;
}

namespace {

int min_fill_order_within(const Graph& g, const VertexSet& within,
                          std::vector<std::uint32_t>* order_out) {
    const std::uint32_t n = g.vertex_count();
    std::vector<VertexSet> adj(n, VertexSet(n));
    for (std::uint32_t v : within) adj[v] = g.neighbors(v) & within;
    VertexSet remaining = within;
    int width = -1;
    if (order_out) order_out->clear();

    while (!remaining.empty()) {
        std::uint32_t best_v = 0;
        std::uint64_t best_fill = std::numeric_limits<std::uint64_t>::max();
        std::uint32_t best_deg = 0;
        for (std::uint32_t v : remaining) {
            VertexSet nb = adj[v] & remaining;
            std::uint32_t deg = nb.count();
            std::uint64_t fill = 0;
            for (std::uint32_t u : nb) {
                VertexSet missing = nb - adj[u];
                missing.reset(u);
                fill += missing.count();
            }
            fill /= 2;
            if (fill < best_fill || (fill == best_fill && deg < best_deg)) {
                best_fill = fill;
                best_deg = deg;
                best_v = v;
            }
        }
        VertexSet nb = adj[best_v] & remaining;
        width = std::max(width, static_cast<int>(nb.count()));
        for (std::uint32_t u : nb) {
            adj[u] |= nb;
            adj[u].reset(u);
        }
        remaining.reset(best_v);
        if (order_out) order_out->push_back(best_v);
    }
    return width;
}

} // namespace

std::pair<int, std::vector<std::uint32_t>> treewidth_upper(const Graph& g) {
    std::vector<std::uint32_t> order;
    int width = min_fill_order_within(g, g.vertex_set(), &order);
    if (g.vertex_count() == 0) return {-1, {}};
    return {std::max(width, 0), std::move(order)};
}

int min_fill_width_within(const Graph& g, const VertexSet& within) {
    if (within.empty()) return -1;
    return std::max(min_fill_order_within(g, within, nullptr), 0);
}

int degeneracy_within(const Graph& g, const VertexSet& within) {
    VertexSet remaining = within;
    int degeneracy = 0;
    while (!remaining.empty()) {
        std::uint32_t best_v = 0;
        std::uint32_t best_deg = std::numeric_limits<std::uint32_t>::max();
        for (std::uint32_t v : remaining) {
            std::uint32_t deg = (g.neighbors(v) & remaining).count();
            if (deg < best_deg) {
                best_deg = deg;
                best_v = v;
            }
        }
        degeneracy = std::max(degeneracy, static_cast<int>(best_deg));
        remaining.reset(best_v);
    }
    return degeneracy;
}

int treewidth_lower(const Graph& g) {
    if (g.vertex_count() == 0) return -1;
    return degeneracy_within(g, g.vertex_set());
}

TwBounds treewidth_bounds(const Graph& g) {
    TwBounds b;
    b.lower = treewidth_lower(g);
    auto [ub, order] = treewidth_upper(g);
    b.upper = ub;
    b.upper_order = std::move(order);
    return b;
}

bool verify_tree_decomposition(const Graph& g, const TreeDecomposition& td) {
    const std::uint32_t n = g.vertex_count();
    const auto bag_count = static_cast<std::uint32_t>(td.bags.size());
    for (const VertexSet& bag : td.bags)
        if (bag.universe() != n) throw InputError("bag universe does not match the graph");
    for (const auto& [a, b] : td.tree_edges)
        if (a >= bag_count || b >= bag_count) throw InputError("tree edge index out of range");

    // tree over bag indices: |E| = |V| - 1 and connected (trivially true when
    // there are no bags, which only verifies for the empty graph)
    if (bag_count == 0) return n == 0;
    if (td.tree_edges.size() != bag_count - 1) return false;
    {
        std::vector<std::vector<std::uint32_t>> adj(bag_count);
        for (const auto& [a, b] : td.tree_edges) {
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
        std::vector<char> seen(bag_count, 0);
        std::vector<std::uint32_t> stack{0};
        seen[0] = 1;
        std::uint32_t reached = 1;
        while (!stack.empty()) {
            std::uint32_t cur = stack.back();
            stack.pop_back();
            for (std::uint32_t nxt : adj[cur])
                if (!seen[nxt]) {
                    seen[nxt] = 1;
                    ++reached;
                    stack.push_back(nxt);
                }
        }
        if (reached != bag_count) return false;
    }

    // property 1: bags cover V
    VertexSet covered(n);
    for (const VertexSet& bag : td.bags) covered |= bag;
    if (covered != VertexSet::full(n)) return false;

    // property 3: per-vertex bag sets induce connected subtrees
    std::vector<std::vector<std::uint32_t>> bags_of(n);
    for (std::uint32_t i = 0; i < bag_count; ++i)
        for (std::uint32_t v : td.bags[i]) bags_of[v].push_back(i);
    for (std::uint32_t v = 0; v < n; ++v) {
        const auto& mine = bags_of[v];
        if (mine.empty()) return false;
        std::vector<char> in_mine(bag_count, 0);
        for (std::uint32_t i : mine) in_mine[i] = 1;
        std::vector<std::vector<std::uint32_t>> adj(bag_count);
        for (const auto& [a, b] : td.tree_edges)
            if (in_mine[a] && in_mine[b]) {
                adj[a].push_back(b);
                adj[b].push_back(a);
            }
        std::vector<char> seen(bag_count, 0);
        std::vector<std::uint32_t> stack{mine[0]};
        seen[mine[0]] = 1;
        std::size_t reached = 1;
        while (!stack.empty()) {
            std::uint32_t cur = stack.back();
            stack.pop_back();
            for (std::uint32_t nxt : adj[cur])
                if (!seen[nxt]) {
                    seen[nxt] = 1;
                    ++reached;
                    stack.push_back(nxt);
                }
        }
        if (reached != mine.size()) return false;
    }

    // property 2: every edge inside some bag
    for (const auto& [u, v] : g.edges()) {
        bool found = false;
        for (std::uint32_t i : bags_of[u])
            if (td.bags[i].test(v)) {
                found = true;
                break;
            }
        if (!found) return false;
    }
    return true;
}

} // namespace sepdepth
