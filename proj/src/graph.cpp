#include "sepdepth/graph.hpp"

#include <string>

#include "sepdepth/errors.hpp"

namespace sepdepth {

Graph Graph::from_edges(std::uint32_t n,
                        std::span<const std::pair<std::uint32_t, std::uint32_t>> edges) {
    Graph g;
    g.n_ = n;
    g.adj_.assign(n, VertexSet(n));
    for (const auto& [u, v] : edges) {
        if (u >= n || v >= n)
            throw InputError("edge endpoint out of range: (" + std::to_string(u) + ", " +
                             std::to_string(v) + ") with n = " + std::to_string(n));
        if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
        if (!g.adj_[u].test(v)) {
            g.adj_[u].set(v);
            g.adj_[v].set(u);
            ++g.m_;
        }
    }
    return g;
}

Graph Graph::from_edges(std::uint32_t n,
                        std::initializer_list<std::pair<std::uint32_t, std::uint32_t>> edges) {
    return from_edges(n, std::span<const std::pair<std::uint32_t, std::uint32_t>>(
                             edges.begin(), edges.size()));
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> Graph::edges() const {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    out.reserve(m_);
    for (std::uint32_t u = 0; u < n_; ++u)
        for (std::int32_t v = adj_[u].next_after(u); v >= 0;
             v = adj_[u].next_after(static_cast<std::uint32_t>(v)))
            out.emplace_back(u, static_cast<std::uint32_t>(v));
    return out;
}

SubgraphView::SubgraphView(const Graph& parent, VertexSet kept)
    : parent_(&parent), kept_(std::move(kept)) {
    if (kept_.universe() != parent.vertex_count())
        throw InputError("subgraph vertex set universe does not match the graph");
    to_view_.assign(parent.vertex_count(), -1);
    to_parent_ = kept_.members();
    for (std::uint32_t i = 0; i < to_parent_.size(); ++i)
        to_view_[to_parent_[i]] = static_cast<std::int32_t>(i);
}

Graph SubgraphView::materialize() const {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> es;
    for (std::uint32_t i = 0; i < size(); ++i) {
        VertexSet nb = parent_->neighbors(to_parent_[i]) & kept_;
        for (std::uint32_t w : nb) {
            auto j = static_cast<std::uint32_t>(to_view_[w]);
            if (i < j) es.emplace_back(i, j);
        }
    }
    return Graph::from_edges(size(), es);
}

SubgraphView induced_subgraph(const Graph& g, const VertexSet& keep) {
    return SubgraphView(g, keep);
}

VertexSet component_of(const Graph& g, const VertexSet& within, std::uint32_t start) {
    VertexSet comp(g.vertex_count());
    comp.set(start);
    VertexSet frontier = comp;
    while (!frontier.empty()) {
        VertexSet next(g.vertex_count());
        for (std::uint32_t v : frontier) next |= g.neighbors(v);
        next &= within;
        next -= comp;
        comp |= next;
        frontier = std::move(next);
    }
    return comp;
}

std::vector<VertexSet> components_within(const Graph& g, const VertexSet& within) {
    std::vector<VertexSet> comps;
    VertexSet remaining = within;
    for (std::int32_t v = remaining.first(); v >= 0; v = remaining.first()) {
        VertexSet comp = component_of(g, remaining, static_cast<std::uint32_t>(v));
        remaining -= comp;
        comps.push_back(std::move(comp));
    }
    return comps; // first() scans ascending, so order is by smallest member
}

std::vector<VertexSet> connected_components(const Graph& g) {
    return components_within(g, g.vertex_set());
}

VertexSet open_neighborhood_within(const Graph& g, const VertexSet& within, const VertexSet& s) {
    VertexSet nb(g.vertex_count());
    for (std::uint32_t v : s) nb |= g.neighbors(v);
    nb &= within;
    nb -= s;
    return nb;
}

VertexSet open_neighborhood(const Graph& g, const VertexSet& s) {
    if (s.universe() != g.vertex_count())
        throw InputError("vertex set universe does not match the graph");
    return open_neighborhood_within(g, g.vertex_set(), s);
}

bool is_complete_within(const Graph& g, const VertexSet& within) {
    std::uint32_t k = within.count();
    if (k <= 1) return true;
    for (std::uint32_t v : within)
        if ((g.neighbors(v) & within).count() != k - 1) return false;
    return true;
}

bool is_complete(const Graph& g) { return is_complete_within(g, g.vertex_set()); }

bool is_connected_within(const Graph& g, const VertexSet& within) {
    std::int32_t v = within.first();
    if (v < 0) return true; // empty graph counts as connected here
    return component_of(g, within, static_cast<std::uint32_t>(v)) == within;
}

bool is_connected(const Graph& g) { return is_connected_within(g, g.vertex_set()); }

namespace {

// BFS over the induced subgraph; returns (farthest vertex, distance), with the
// smallest-id vertex among the farthest for determinism.
std::pair<std::uint32_t, std::uint32_t> bfs_eccentricity(const Graph& g, const VertexSet& within,
                                                         std::uint32_t start) {
    VertexSet seen(g.vertex_count());
    seen.set(start);
    VertexSet frontier = seen;
    std::uint32_t dist = 0;
    std::uint32_t far = start;
    while (true) {
        VertexSet next(g.vertex_count());
        for (std::uint32_t v : frontier) next |= g.neighbors(v);
        next &= within;
        next -= seen;
        if (next.empty()) break;
        ++dist;
        far = static_cast<std::uint32_t>(next.first());
        seen |= next;
        frontier = std::move(next);
    }
    return {far, dist};
}

} // namespace

std::uint32_t pseudo_diameter_within(const Graph& g, const VertexSet& within) {
    std::int32_t v0 = within.first();
    if (v0 < 0) return 0;
    auto [far, d1] = bfs_eccentricity(g, within, static_cast<std::uint32_t>(v0));
    auto [far2, d2] = bfs_eccentricity(g, within, far);
    (void)far2;
    return d1 > d2 ? d1 : d2;
}

} // namespace sepdepth
