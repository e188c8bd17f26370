#include "sepdepth/oracle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "sepdepth/budgets.hpp"
#include "sepdepth/errors.hpp"
#include "sepdepth/prng.hpp"

namespace sepdepth {
namespace {

int td_recurse(const Graph& g, const VertexSet& within,
               std::unordered_map<VertexSet, int, VertexSetHash>& memo) {
    if (within.empty()) return 0;
    auto it = memo.find(within);
    if (it != memo.end()) return it->second;

    std::vector<VertexSet> comps = components_within(g, within);
    int result;
    if (comps.size() > 1) {
        result = 0;
        for (const VertexSet& c : comps) result = std::max(result, td_recurse(g, c, memo));
    } else {
        result = static_cast<int>(within.count());
        for (std::uint32_t v : within) {
            VertexSet rest = within;
            rest.reset(v);
            result = std::min(result, 1 + td_recurse(g, rest, memo));
        }
    }
    memo.emplace(within, result);
    return result;
}

} // namespace

int treedepth_bruteforce(const Graph& g) {
    if (g.vertex_count() > budgets().oracle_treedepth)
        throw BudgetError("treedepth_bruteforce: " + std::to_string(g.vertex_count()) +
                          " vertices exceeds the budget of " +
                          std::to_string(budgets().oracle_treedepth));
    std::unordered_map<VertexSet, int, VertexSetHash> memo;
    return td_recurse(g, g.vertex_set(), memo);
}

int treewidth_bruteforce(const Graph& g) {
    const std::uint32_t n = g.vertex_count();
    if (n > budgets().oracle_treewidth)
        throw BudgetError("treewidth_bruteforce: " + std::to_string(n) +
                          " vertices exceeds the budget of " +
                          std::to_string(budgets().oracle_treewidth));
    if (n == 0) return -1;

    std::vector<std::uint32_t> base_adj(n, 0);
    for (std::uint32_t v = 0; v < n; ++v)
        for (std::uint32_t u : g.neighbors(v)) base_adj[v] |= 1u << u;

    std::vector<std::uint32_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0u);
    int best = static_cast<int>(n) - 1;
    do {
        std::vector<std::uint32_t> adj = base_adj;
        std::uint32_t remaining = (n == 32) ? ~0u : (1u << n) - 1;
        int width = 0;
        for (std::uint32_t v : perm) {
            std::uint32_t nb = adj[v] & remaining & ~(1u << v);
            width = std::max(width, std::popcount(nb));
            if (width >= best) break;
            std::uint32_t it = nb;
            while (it) {
                std::uint32_t u = static_cast<std::uint32_t>(std::countr_zero(it));
                it &= it - 1;
                adj[u] |= nb;
            }
            remaining &= ~(1u << v);
        }
        best = std::min(best, width);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

namespace {

// --- exhaustive corpus ----------------------------------------------------
//
// Connected graphs are generated up to isomorphism by extension: every
// connected graph on k+1 vertices arises from some connected graph on k
// vertices (drop a non-cut vertex) by attaching a new vertex with a nonempty
// neighborhood. Deduplication uses the minimum adjacency bitstring over all
// vertex permutations, which is affordable at n <= 7.

using EdgeMask = std::uint32_t; // packed upper triangle, n <= 8 -> <= 28 bits

inline std::uint32_t pair_index(std::uint32_t n, std::uint32_t i, std::uint32_t j) {
    // i < j
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

EdgeMask canonical_mask(std::uint32_t n, EdgeMask mask) {
    std::vector<std::uint32_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0u);
    EdgeMask best = ~EdgeMask{0};
    do {
        EdgeMask relabeled = 0;
        for (std::uint32_t i = 0; i < n; ++i)
            for (std::uint32_t j = i + 1; j < n; ++j)
                if ((mask >> pair_index(n, i, j)) & 1u) {
                    std::uint32_t a = perm[i], b = perm[j];
                    if (a > b) std::swap(a, b);
                    relabeled |= EdgeMask{1} << pair_index(n, a, b);
                }
        best = std::min(best, relabeled);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

Graph graph_from_mask(std::uint32_t n, EdgeMask mask) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> es;
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i + 1; j < n; ++j)
            if ((mask >> pair_index(n, i, j)) & 1u) es.emplace_back(i, j);
    return Graph::from_edges(n, es);
}

std::vector<EdgeMask> extend_representatives(std::uint32_t n,
                                             const std::vector<EdgeMask>& smaller) {
    // lift each (n-1)-vertex representative, then attach vertex n-1 with every
    // nonempty neighborhood; canonicalize and dedupe
    std::unordered_set<EdgeMask> seen;
    std::vector<EdgeMask> reps;
    for (EdgeMask base : smaller) {
        EdgeMask lifted = 0;
        for (std::uint32_t i = 0; i + 1 < n; ++i)
            for (std::uint32_t j = i + 1; j + 1 < n; ++j)
                if ((base >> pair_index(n - 1, i, j)) & 1u)
                    lifted |= EdgeMask{1} << pair_index(n, i, j);
        for (std::uint32_t nbhd = 1; nbhd < (1u << (n - 1)); ++nbhd) {
            EdgeMask mask = lifted;
            for (std::uint32_t i = 0; i + 1 < n; ++i)
                if ((nbhd >> i) & 1u) mask |= EdgeMask{1} << pair_index(n, i, n - 1);
            EdgeMask canon = canonical_mask(n, mask);
            if (seen.insert(canon).second) reps.push_back(canon);
        }
    }
    std::sort(reps.begin(), reps.end());
    return reps;
}

const std::vector<std::vector<EdgeMask>>& representative_masks(std::uint32_t max_n) {
    static std::vector<std::vector<EdgeMask>> levels{{}, {0}}; // n = 0 unused, n = 1
    while (levels.size() <= max_n)
        levels.push_back(
            extend_representatives(static_cast<std::uint32_t>(levels.size()), levels.back()));
    return levels;
}

} // namespace

Graph random_connected_graph(std::uint32_t n, std::uint64_t seed, std::uint64_t p_numer,
                             std::uint64_t p_denom) {
    if (p_numer == 0 || p_numer >= p_denom)
        throw InputError("edge probability must lie strictly between 0 and 1");
    if (n == 0) return Graph::from_edges(0, {});
    SplitMix64 rng(seed);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<std::pair<std::uint32_t, std::uint32_t>> es;
        for (std::uint32_t i = 0; i < n; ++i)
            for (std::uint32_t j = i + 1; j < n; ++j)
                if (rng.chance(p_numer, p_denom)) es.emplace_back(i, j);
        Graph g = Graph::from_edges(n, es);
        if (is_connected(g)) return g;
    }
    throw BudgetError("random_connected_graph: retry limit hit (edge probability too small?)");
}

std::vector<Graph> corpus(const CorpusSpec& spec) {
    std::vector<Graph> out;
    if (spec.mode == CorpusSpec::Mode::ExhaustiveConnected) {
        // the packed edge masks and the permutation canonicalizer stop at 8
        if (spec.max_n > budgets().exhaustive_corpus || spec.max_n > 8)
            throw BudgetError("exhaustive corpus limited to " +
                              std::to_string(std::min(budgets().exhaustive_corpus, 8u)) +
                              " vertices");
        const auto& levels = representative_masks(spec.max_n);
        for (std::uint32_t n = 1; n <= spec.max_n; ++n)
            for (EdgeMask mask : levels[n]) out.push_back(graph_from_mask(n, mask));
    } else {
        if (spec.samples == 0) throw InputError("random corpus requires samples >= 1");
        if (spec.min_n > spec.max_n) throw InputError("random corpus: min_n > max_n");
        std::uint32_t span = spec.max_n - spec.min_n + 1;
        for (std::uint32_t i = 0; i < spec.samples; ++i) {
            std::uint64_t s = mix_seed(spec.seed, i);
            auto n = static_cast<std::uint32_t>(spec.min_n + (s % span));
            out.push_back(random_connected_graph(n, mix_seed(s, 0x7fff), spec.p_numer,
                                                 spec.p_denom));
        }
    }
    return out;
}

std::uint64_t labeled_copies(const Graph& g) {
    const std::uint32_t n = g.vertex_count();
    if (n > 8) throw BudgetError("labeled_copies limited to 8 vertices");
    std::vector<std::uint32_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0u);
    std::uint64_t automorphisms = 0;
    std::uint64_t total = 0;
    do {
        ++total;
        bool ok = true;
        for (std::uint32_t i = 0; ok && i < n; ++i)
            for (std::uint32_t j = i + 1; ok && j < n; ++j)
                if (g.adjacent(i, j) != g.adjacent(perm[i], perm[j])) ok = false;
        if (ok) ++automorphisms;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total / automorphisms;
}

std::uint64_t connected_labeled_graph_count(std::uint32_t n) {
    // c_n = 2^C(n,2) - sum_{k=1}^{n-1} C(n-1, k-1) * c_k * 2^C(n-k, 2)
    if (n == 0) return 0;
    std::vector<std::uint64_t> c(n + 1, 0);
    c[1] = 1;
    auto choose2 = [](std::uint64_t m) { return m * (m - 1) / 2; };
    for (std::uint32_t m = 2; m <= n; ++m) {
        std::uint64_t total = 1ULL << choose2(m);
        std::uint64_t binom = 1; // C(m-1, k-1), starting at k = 1
        for (std::uint32_t k = 1; k < m; ++k) {
            total -= binom * c[k] * (1ULL << choose2(m - k));
            binom = binom * (m - 1 - (k - 1)) / k; // -> C(m-1, k)
        }
        c[m] = total;
    }
    return c[n];
}

} // namespace sepdepth
