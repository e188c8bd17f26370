#include "sepdepth/graph_classes.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "sepdepth/budgets.hpp"
#include "sepdepth/errors.hpp"

namespace sepdepth {
namespace {

// Lex-BFS visit order; ties broken by lowest vertex id. A label collects, for
// each visited neighbor, the letter n - visit_time, so earlier visits weigh
// more and plain lexicographic comparison picks the right maximum (a label
// extending another is larger, as required).
std::vector<std::uint32_t> lex_bfs_order(const Graph& g) {
    const std::uint32_t n = g.vertex_count();
    std::vector<std::vector<std::uint32_t>> label(n);
    std::vector<char> visited(n, 0);
    std::vector<std::uint32_t> order;
    order.reserve(n);
    for (std::uint32_t step = 0; step < n; ++step) {
        std::int32_t pick = -1;
        for (std::uint32_t v = 0; v < n; ++v) {
            if (visited[v]) continue;
            if (pick < 0 || std::lexicographical_compare(label[pick].begin(), label[pick].end(),
                                                         label[v].begin(), label[v].end()))
                pick = static_cast<std::int32_t>(v);
        }
        auto v = static_cast<std::uint32_t>(pick);
        visited[v] = 1;
        order.push_back(v);
        for (std::uint32_t u : g.neighbors(v))
            if (!visited[u]) label[u].push_back(n - step);
    }
    return order;
}

bool verify_peo(const Graph& g, const std::vector<std::uint32_t>& peo) {
    const std::uint32_t n = g.vertex_count();
    std::vector<std::uint32_t> pos(n, 0);
    for (std::uint32_t i = 0; i < n; ++i) pos[peo[i]] = i;
    for (std::uint32_t v = 0; v < n; ++v) {
        VertexSet later(n);
        for (std::uint32_t u : g.neighbors(v))
            if (pos[u] > pos[v]) later.set(u);
        if (later.count() < 2) continue;
        std::uint32_t anchor = 0;
        std::uint32_t best = n;
        for (std::uint32_t u : later)
            if (pos[u] < best) {
                best = pos[u];
                anchor = u;
            }
        later.reset(anchor);
        if (!later.is_subset_of(g.neighbors(anchor))) return false;
    }
    return true;
}

} // namespace

std::optional<std::vector<std::uint32_t>> is_chordal(const Graph& g) {
    std::vector<std::uint32_t> order = lex_bfs_order(g);
    std::reverse(order.begin(), order.end()); // reversed Lex-BFS order is a PEO iff chordal
    if (!verify_peo(g, order)) return std::nullopt;
    return order;
}

CliqueTree clique_tree(const Graph& g) {
    auto peo = is_chordal(g);
    if (!peo) throw DomainError("clique tree requires a chordal graph");
    const std::uint32_t n = g.vertex_count();

    std::vector<std::uint32_t> pos(n, 0);
    for (std::uint32_t i = 0; i < n; ++i) pos[(*peo)[i]] = i;

    // candidate cliques: each vertex together with its later neighbors
    std::vector<VertexSet> cands;
    cands.reserve(n);
    for (std::uint32_t v = 0; v < n; ++v) {
        VertexSet c(n);
        c.set(v);
        for (std::uint32_t u : g.neighbors(v))
            if (pos[u] > pos[v]) c.set(u);
        cands.push_back(std::move(c));
    }
    std::sort(cands.begin(), cands.end(), [](const VertexSet& a, const VertexSet& b) {
        std::uint32_t ca = a.count(), cb = b.count();
        if (ca != cb) return ca > cb;
        return VertexSet::lex_less(a, b);
    });
    CliqueTree ct;
    for (VertexSet& c : cands) {
        bool dominated = false;
        for (const VertexSet& kept : ct.cliques)
            if (c.is_subset_of(kept)) {
                dominated = true;
                break;
            }
        if (!dominated) ct.cliques.push_back(std::move(c));
    }
    std::sort(ct.cliques.begin(), ct.cliques.end(), VertexSet::lex_less);

    // maximum-weight spanning tree on intersection sizes (Kruskal)
    const auto q = static_cast<std::uint32_t>(ct.cliques.size());
    struct Cand {
        std::uint32_t w, a, b;
    };
    std::vector<Cand> cand_edges;
    for (std::uint32_t a = 0; a < q; ++a)
        for (std::uint32_t b = a + 1; b < q; ++b) {
            std::uint32_t w = (ct.cliques[a] & ct.cliques[b]).count();
            if (w > 0) cand_edges.push_back({w, a, b});
        }
    std::sort(cand_edges.begin(), cand_edges.end(), [](const Cand& x, const Cand& y) {
        if (x.w != y.w) return x.w > y.w;
        if (x.a != y.a) return x.a < y.a;
        return x.b < y.b;
    });
    std::vector<std::uint32_t> rep(q);
    for (std::uint32_t i = 0; i < q; ++i) rep[i] = i;
    auto find = [&](std::uint32_t x) {
        while (rep[x] != x) x = rep[x] = rep[rep[x]];
        return x;
    };
    for (const Cand& c : cand_edges) {
        std::uint32_t ra = find(c.a), rb = find(c.b);
        if (ra == rb) continue;
        rep[ra] = rb;
        ct.edges.push_back({c.a, c.b, ct.cliques[c.a] & ct.cliques[c.b]});
    }
    // disconnected graphs leave a forest; chain the remaining roots with
    // empty-intersection edges so the result is a single tree
    std::int32_t prev_root = -1;
    for (std::uint32_t i = 0; i < q; ++i) {
        if (find(i) != i) continue;
        if (prev_root >= 0) {
            rep[find(static_cast<std::uint32_t>(prev_root))] = find(i);
            ct.edges.push_back({static_cast<std::uint32_t>(prev_root), i, VertexSet(n)});
        }
        prev_root = static_cast<std::int32_t>(i);
    }
    return ct;
}

SeparatorSet chordal_minimal_separators(const CliqueTree& ct) {
    std::unordered_set<VertexSet, VertexSetHash> seen;
    SeparatorSet out;
    for (const CliqueTree::Edge& e : ct.edges) {
        if (e.separator.empty()) continue;
        if (seen.insert(e.separator).second) out.separators.push_back(e.separator);
    }
    std::sort(out.separators.begin(), out.separators.end(), VertexSet::size_lex_less);
    return out;
}

namespace {

std::vector<VertexSet> complement_components_within(const Graph& g, const VertexSet& within) {
    std::vector<VertexSet> comps;
    VertexSet remaining = within;
    while (!remaining.empty()) {
        auto start = static_cast<std::uint32_t>(remaining.first());
        VertexSet comp(g.vertex_count());
        comp.set(start);
        VertexSet frontier = comp;
        while (!frontier.empty()) {
            VertexSet next(g.vertex_count());
            for (std::uint32_t v : frontier) {
                VertexSet non_nb = within - g.neighbors(v);
                non_nb.reset(v);
                next |= non_nb;
            }
            next -= comp;
            comp |= next;
            frontier = std::move(next);
        }
        remaining -= comp;
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool cograph_within(const Graph& g, const VertexSet& within) {
    if (within.count() <= 1) return true;
    std::vector<VertexSet> comps = components_within(g, within);
    if (comps.size() == 1) {
        comps = complement_components_within(g, within);
        if (comps.size() == 1) return false; // G and its complement both connected
    }
    for (const VertexSet& c : comps)
        if (!cograph_within(g, c)) return false;
    return true;
}

// --- minor containment by branch-set backtracking -------------------------

struct MinorSpec {
    std::uint32_t parts;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> required; // adjacent part pairs
    std::vector<std::uint32_t> symmetry_class; // parts of equal class are interchangeable
};

MinorSpec spec_for(MinorPattern h) {
    if (h == MinorPattern::K4)
        return {4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}, {0, 0, 0, 0}};
    // K_{2,3}: parts 0,1 on one side, 2,3,4 on the other
    return {5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}}, {0, 0, 1, 1, 1}};
}

class MinorSearch {
public:
    MinorSearch(const Graph& g, const MinorSpec& spec) : g_(g), spec_(spec) {
        sets_.assign(spec.parts, VertexSet(g.vertex_count()));
    }

    bool run() { return extend(0); }

private:
    bool extend(std::uint32_t v) {
        const std::uint32_t n = g_.vertex_count();
        if (v == n) return accept();
        // count empty parts; they need at least that many future vertices
        std::uint32_t empty_parts = 0;
        for (const VertexSet& b : sets_)
            if (b.empty()) ++empty_parts;
        if (empty_parts > n - v) return false;

        for (std::uint32_t part = 0; part < spec_.parts; ++part) {
            if (sets_[part].empty() && !may_open(part)) continue;
            sets_[part].set(v);
            if (connectable(v + 1)) {
                if (extend(v + 1)) return true;
            }
            sets_[part].reset(v);
        }
        return extend(v + 1); // leave v out (deleted vertex)
    }

    // symmetry breaking: within a class, parts open in order
    bool may_open(std::uint32_t part) const {
        for (std::uint32_t p = 0; p < part; ++p)
            if (spec_.symmetry_class[p] == spec_.symmetry_class[part] && sets_[p].empty())
                return false;
        return true;
    }

    // every already-started part must be joinable into one piece using only
    // vertices that are still unassigned (ids >= next)
    bool connectable(std::uint32_t next) const {
        const std::uint32_t n = g_.vertex_count();
        VertexSet future(n);
        for (std::uint32_t u = next; u < n; ++u) future.set(u);
        for (const VertexSet& b : sets_) {
            if (b.empty()) continue;
            VertexSet scope = b | future;
            VertexSet reach = component_of(g_, scope, static_cast<std::uint32_t>(b.first()));
            if (!b.is_subset_of(reach)) return false;
        }
        return true;
    }

    bool accept() const {
        for (const VertexSet& b : sets_) {
            if (b.empty()) return false;
            if (!is_connected_within(g_, b)) return false;
        }
        for (const auto& [i, j] : spec_.required) {
            bool touching = false;
            for (std::uint32_t u : sets_[i])
                if (g_.neighbors(u).intersects(sets_[j])) {
                    touching = true;
                    break;
                }
            if (!touching) return false;
        }
        return true;
    }

    const Graph& g_;
    const MinorSpec& spec_;
    std::vector<VertexSet> sets_;
};

} // namespace

bool is_cograph(const Graph& g) { return cograph_within(g, g.vertex_set()); }

bool has_minor(const Graph& g, MinorPattern h) {
    if (g.vertex_count() > budgets().minor_check)
        throw BudgetError("has_minor: " + std::to_string(g.vertex_count()) +
                          " vertices exceeds the budget of " +
                          std::to_string(budgets().minor_check));
    MinorSpec spec = spec_for(h);
    if (g.vertex_count() < spec.parts) return false;
    MinorSearch search(g, spec);
    return search.run();
}

bool is_outerplanar(const Graph& g) {
    return !has_minor(g, MinorPattern::K4) && !has_minor(g, MinorPattern::K23);
}

} // namespace sepdepth
