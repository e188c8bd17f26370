#include "sepdepth/td_solver.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <limits>
#include <unordered_map>

#include "sepdepth/budgets.hpp"
#include "sepdepth/treewidth.hpp"

namespace sepdepth {
namespace {

// Large finite limit standing in for "no cap"; keeps cap arithmetic safely
// inside int range.
constexpr int kNoLimit = 1 << 29;

// td(P_len) in closed form.
inline int path_treedepth(std::uint64_t len) { return static_cast<int>(std::bit_width(len)); }

struct Entry {
    int value = 0;      // exact treedepth when `exact`, otherwise unused
    int lb = 1;         // proven lower bound (every nonempty subproblem has td >= 1)
    bool exact = false;
    VertexSet top_chain; // when exact: the vertices forming the top path of an
                         // optimal decomposition (the whole set for cliques)
};

class Solver {
public:
    Solver(const Graph& g, SolveConfig cfg) : g_(g), cfg_(cfg) {}

    SolveStats stats;

    // Fail-soft search: returns td(G[w]) when it is < limit, otherwise some
    // lower bound of td(G[w]) that is >= limit. `w` must induce a connected
    // nonempty subgraph.
    int solve_connected(const VertexSet& w, int limit) {
        if (auto it = memo_.find(w); it != memo_.end()) {
            if (it->second.exact) return it->second.value;
            if (it->second.lb >= limit) return it->second.lb;
        }

        const auto size = static_cast<int>(w.count());
        if (is_complete_within(g_, w)) {
            ++stats.subproblems;
            store_exact(w, size, w);
            return size;
        }

        // Cheap lower bounds: non-complete connected graphs need depth 2, and
        // any realized shortest path of d edges embeds P_{d+1}.
        int lb = stored_lb(w);
        lb = std::max(lb, 2);
        lb = std::max(lb, path_treedepth(pseudo_diameter_within(g_, w) + 1ULL));
        if (lb >= limit) {
            store_lb(w, lb);
            return lb;
        }

        if (cfg_.path_shortcut) {
            if (int td = try_path(w); td > 0) {
                ++stats.subproblems;
                return td;
            }
        }

        ++stats.subproblems;
        lb = std::max(lb, degeneracy_within(g_, w) + 1); // td >= tw + 1
        if (lb >= limit) {
            store_lb(w, lb);
            return lb;
        }

        int size_bound = std::numeric_limits<int>::max();
        if (cfg_.pruning == Pruning::TwoTw) size_bound = 2 * treewidth_upper_bound(w);

        EnumerationTally tally;
        std::optional<std::uint32_t> enum_bound;
        if (size_bound != std::numeric_limits<int>::max())
            enum_bound = static_cast<std::uint32_t>(size_bound);
        std::vector<VertexSet> seps = enumerate_minimal_separators_within(
            g_, w, enum_bound, BoundedMode::Sound, &tally);
        stats.separators_enumerated += tally.generated;
        stats.separators_pruned += tally.filtered;
        assert(!seps.empty()); // connected non-complete graphs have a separator

        int best = kNoLimit;
        const VertexSet* best_sep = nullptr;
        long floor = kNoLimit; // min over lower bounds of all candidates
        for (const VertexSet& s : seps) {
            const auto s_size = static_cast<int>(s.count());
            const int cutoff = std::min(best, limit);
            if (s_size + 1 >= cutoff) {
                floor = std::min(floor, static_cast<long>(s_size) + 1);
                break;
            }
            stats.max_separator_size =
                std::max(stats.max_separator_size, static_cast<std::uint32_t>(s_size));
            const int cap = cutoff - s_size; // need the worst component below cap
            int acc = 0;
            bool aborted = false;
            for (const VertexSet& comp : components_within(g_, w - s)) {
                acc = std::max(acc, solve_connected(comp, cap));
                if (acc >= cap) {
                    aborted = true;
                    break;
                }
            }
            const int cand = s_size + acc;
            floor = std::min(floor, static_cast<long>(cand));
            if (!aborted && cand < best) {
                best = cand;
                best_sep = &s;
            }
            if (best == lb) break; // nothing can beat the proven lower bound
        }

        if (best < limit) {
            assert(best_sep != nullptr);
            store_exact(w, best, *best_sep);
            return best;
        }
        int ret = static_cast<int>(std::min<long>(floor, kNoLimit));
        ret = std::max(ret, lb);
        store_lb(w, ret);
        return ret;
    }

    // Height of the decomposition obtained by repeatedly deleting the vertex
    // that minimizes the largest remaining component; a cheap upper bound
    // used to seed the exact search.
    int heuristic_height(const VertexSet& w) {
        if (w.empty()) return 0;
        std::vector<VertexSet> comps = components_within(g_, w);
        if (comps.size() > 1) {
            int h = 0;
            for (const VertexSet& c : comps) h = std::max(h, heuristic_height(c));
            return h;
        }
        if (is_complete_within(g_, w)) return static_cast<int>(w.count());
        std::uint32_t best_v = 0;
        std::uint32_t best_metric = std::numeric_limits<std::uint32_t>::max();
        for (std::uint32_t v : w) {
            VertexSet rest = w;
            rest.reset(v);
            std::uint32_t largest = 0;
            for (const VertexSet& c : components_within(g_, rest))
                largest = std::max(largest, c.count());
            if (largest < best_metric) {
                best_metric = largest;
                best_v = v;
            }
        }
        VertexSet rest = w;
        rest.reset(best_v);
        return 1 + heuristic_height(rest);
    }

    // Writes the optimal decomposition of the (connected) subproblem `w` into
    // `parent`, hanging its top chain under `attach`.
    void emit_decomposition(const VertexSet& w, std::int32_t attach,
                            std::vector<std::int32_t>& parent) {
        solve_connected(w, kNoLimit);
        const Entry& e = memo_.at(w);
        assert(e.exact);
        std::int32_t prev = attach;
        for (std::uint32_t v : e.top_chain) {
            parent[v] = prev;
            prev = static_cast<std::int32_t>(v);
        }
        VertexSet rest = w - e.top_chain;
        for (const VertexSet& comp : components_within(g_, rest))
            emit_decomposition(comp, prev, parent);
    }

private:
    int stored_lb(const VertexSet& w) const {
        auto it = memo_.find(w);
        return it == memo_.end() ? 1 : it->second.lb;
    }

    void store_exact(const VertexSet& w, int value, const VertexSet& chain) {
        Entry& e = fetch(w);
        e.exact = true;
        e.value = value;
        e.lb = value;
        e.top_chain = chain;
    }

    void store_lb(const VertexSet& w, int lb) {
        Entry& e = fetch(w);
        e.lb = std::max(e.lb, lb);
    }

    Entry& fetch(const VertexSet& w) {
        auto it = memo_.find(w);
        if (it != memo_.end()) return it->second;
        if (cfg_.memo_limit && memo_.size() >= *cfg_.memo_limit) throw MemoLimitError(stats);
        return memo_.emplace(w, Entry{}).first->second;
    }

    // Per-subproblem treewidth upper bound feeding the pruning rule; exact
    // when allowed and affordable, otherwise greedy min-fill.
    int treewidth_upper_bound(const VertexSet& w) {
        if (cfg_.tw_mode == TwMode::ExactWithinBudget && w.count() <= budgets().treewidth_exact)
            return treewidth_exact_width_within(g_, w);
        return min_fill_width_within(g_, w);
    }

    // Path-shaped subproblems in closed form: the minimal separators of a
    // path are its interior singletons, so the recurrence reduces to
    // 1 + min over interior v of max(td of the two sides), and the first
    // achiever in (size, lex) order is the smallest-id optimal vertex.
    // Returns 0 when `w` is not a path.
    int try_path(const VertexSet& w) {
        const std::uint32_t len = w.count(); // >= 3: smaller sets are complete
        std::uint32_t endpoint = 0;
        std::uint32_t ends = 0;
        for (std::uint32_t v : w) {
            std::uint32_t d = (g_.neighbors(v) & w).count();
            if (d > 2) return 0;
            if (d == 1) {
                if (ends == 0) endpoint = v;
                ++ends;
                if (ends > 2) return 0;
            }
        }
        if (ends != 2) return 0; // all-degree-2 connected means a cycle

        std::vector<std::uint32_t> position(g_.vertex_count(), 0);
        VertexSet unvisited = w;
        std::uint32_t cur = endpoint;
        for (std::uint32_t pos = 0; pos < len; ++pos) {
            position[cur] = pos;
            unvisited.reset(cur);
            VertexSet next = g_.neighbors(cur) & unvisited;
            if (pos + 1 < len) cur = static_cast<std::uint32_t>(next.first());
        }

        int best = std::numeric_limits<int>::max();
        std::uint32_t best_v = endpoint;
        for (std::uint32_t v : w) {
            std::uint32_t p = position[v];
            if (p == 0 || p == len - 1) continue;
            int cand = 1 + std::max(path_treedepth(p), path_treedepth(len - 1 - p));
            if (cand < best) {
                best = cand;
                best_v = v;
            }
        }
        VertexSet chain(g_.vertex_count());
        chain.set(best_v);
        store_exact(w, best, chain);
        return best;
    }

    const Graph& g_;
    SolveConfig cfg_;
    std::unordered_map<VertexSet, Entry, VertexSetHash> memo_;
};

std::int32_t recompute_height(const std::vector<std::int32_t>& parent) {
    const auto n = static_cast<std::uint32_t>(parent.size());
    std::vector<std::int32_t> depth(n, 0);
    std::int32_t height = 0;
    for (std::uint32_t v = 0; v < n; ++v) {
        // chains are short here (produced by the solver), plain walking is fine
        std::uint32_t steps = 1;
        for (std::int32_t p = parent[v]; p >= 0; p = parent[p]) ++steps;
        depth[v] = static_cast<std::int32_t>(steps);
        height = std::max(height, depth[v]);
    }
    return height;
}

} // namespace

SolveResult treedepth(const Graph& g, const SolveConfig& cfg) {
    Solver solver(g, cfg);
    SolveResult result;
    result.decomposition.parent.assign(g.vertex_count(), -1);

    std::vector<VertexSet> comps = connected_components(g);
    for (const VertexSet& comp : comps) {
        int ub = solver.heuristic_height(comp);
        int td = solver.solve_connected(comp, ub + 1);
        result.treedepth = std::max(result.treedepth, td);
    }
    for (const VertexSet& comp : comps)
        solver.emit_decomposition(comp, -1, result.decomposition.parent);
    result.decomposition.height = recompute_height(result.decomposition.parent);
    assert(result.decomposition.height == result.treedepth);
    result.stats = solver.stats;
    return result;
}

SeparatorSet optimal_top_separators(const Graph& g) {
    if (g.vertex_count() == 0 || !is_connected(g))
        throw DomainError("optimal top separators need a connected graph");
    if (is_complete(g)) throw DomainError("a complete graph has no separators");
    if (g.vertex_count() > budgets().optimal_top_separators)
        throw BudgetError("optimal_top_separators: " + std::to_string(g.vertex_count()) +
                          " vertices exceeds the budget of " +
                          std::to_string(budgets().optimal_top_separators));

    Solver solver(g, SolveConfig{});
    VertexSet all = g.vertex_set();
    int ub = solver.heuristic_height(all);
    const int td = solver.solve_connected(all, ub + 1);

    SeparatorSet out;
    for (VertexSet& s : enumerate_minimal_separators(g).separators) {
        int below = 0;
        for (const VertexSet& comp : components_within(g, all - s))
            below = std::max(below, solver.solve_connected(comp, kNoLimit));
        if (static_cast<int>(s.count()) + below == td) out.separators.push_back(std::move(s));
    }
    return out; // enumeration order is (size, lex); filtering preserves it
}

VertexSet top_separator(const TreedepthDecomposition& t) {
    const auto n = static_cast<std::uint32_t>(t.parent.size());
    std::vector<std::vector<std::uint32_t>> children(n);
    std::int32_t root = -1;
    std::uint32_t roots = 0;
    for (std::uint32_t v = 0; v < n; ++v) {
        if (t.parent[v] < 0) {
            root = static_cast<std::int32_t>(v);
            ++roots;
        } else {
            children[t.parent[v]].push_back(v);
        }
    }
    if (roots != 1)
        throw DomainError("top separator is defined for decompositions with a single root");

    VertexSet ts(n);
    auto cur = static_cast<std::uint32_t>(root);
    while (true) {
        ts.set(cur);
        if (children[cur].size() != 1) break; // branching vertex (inclusive) or leaf
        cur = children[cur][0];
    }
    return ts;
}

std::pair<bool, std::int32_t> verify_treedepth_decomposition(const Graph& g,
                                                             const TreedepthDecomposition& t) {
    const std::uint32_t n = g.vertex_count();
    if (t.parent.size() != n) return {false, 0};
    for (std::uint32_t v = 0; v < n; ++v)
        if (t.parent[v] < -1 || t.parent[v] >= static_cast<std::int32_t>(n)) return {false, 0};

    // depths with cycle detection: 0 unknown, -1 in progress
    std::vector<std::int32_t> depth(n, 0);
    for (std::uint32_t v = 0; v < n; ++v) {
        if (depth[v] > 0) continue;
        std::vector<std::uint32_t> chain;
        std::int32_t cur = static_cast<std::int32_t>(v);
        while (cur >= 0 && depth[cur] == 0) {
            depth[cur] = -1;
            chain.push_back(static_cast<std::uint32_t>(cur));
            cur = t.parent[cur];
        }
        if (cur >= 0 && depth[cur] == -1) return {false, 0}; // parent cycle
        std::int32_t base = cur < 0 ? 0 : depth[cur];
        for (auto it = chain.rbegin(); it != chain.rend(); ++it) depth[*it] = ++base;
    }

    std::int32_t height = 0;
    for (std::uint32_t v = 0; v < n; ++v) height = std::max(height, depth[v]);

    for (const auto& [u, v] : g.edges()) {
        std::uint32_t a = u, b = v;
        if (depth[a] < depth[b]) std::swap(a, b); // a is the deeper one
        std::int32_t cur = static_cast<std::int32_t>(a);
        while (depth[cur] > depth[b]) cur = t.parent[cur];
        if (cur != static_cast<std::int32_t>(b)) return {false, height};
    }
    return {true, height};
}

} // namespace sepdepth
