#include "sepdepth/separators.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_set>

#include "sepdepth/budgets.hpp"
#include "sepdepth/errors.hpp"

namespace sepdepth {

bool SeparatorSet::contains(const VertexSet& s) const {
    return std::any_of(separators.begin(), separators.end(),
                       [&](const VertexSet& t) { return t == s; });
}

std::vector<VertexSet> full_components_within(const Graph& g, const VertexSet& within,
                                              const VertexSet& s) {
    std::vector<VertexSet> full;
    VertexSet rest = within - s;
    for (VertexSet& comp : components_within(g, rest)) {
        if (open_neighborhood_within(g, within, comp) == s) full.push_back(std::move(comp));
    }
    return full;
}

std::vector<VertexSet> full_components(const Graph& g, const VertexSet& s) {
    if (s.universe() != g.vertex_count())
        throw InputError("vertex set universe does not match the graph");
    return full_components_within(g, g.vertex_set(), s);
}

bool is_minimal_separator_within(const Graph& g, const VertexSet& within, const VertexSet& s) {
    std::uint32_t full = 0;
    VertexSet rest = within - s;
    for (const VertexSet& comp : components_within(g, rest)) {
        if (open_neighborhood_within(g, within, comp) == s && ++full >= 2) return true;
    }
    return false;
}

bool is_minimal_separator(const Graph& g, const VertexSet& s) {
    if (s.universe() != g.vertex_count())
        throw InputError("vertex set universe does not match the graph");
    return is_minimal_separator_within(g, g.vertex_set(), s);
}

namespace {

// Candidate generation: neighborhoods of the components left after removing
// `removed` from the working universe. Candidates are re-checked with
// is_minimal_separator_within before emission.
void push_candidates(const Graph& g, const VertexSet& within, const VertexSet& removed,
                     std::vector<VertexSet>& out) {
    VertexSet rest = within - removed;
    for (const VertexSet& comp : components_within(g, rest))
        out.push_back(open_neighborhood_within(g, within, comp));
}

} // namespace

std::vector<VertexSet> enumerate_minimal_separators_within(const Graph& g,
                                                           const VertexSet& within,
                                                           std::optional<std::uint32_t> max_size,
                                                           BoundedMode mode,
                                                           EnumerationTally* tally) {
    std::unordered_set<VertexSet, VertexSetHash> seen;
    std::deque<VertexSet> queue;
    std::vector<VertexSet> result;
    EnumerationTally local;
    const bool aggressive = mode == BoundedMode::Aggressive && max_size.has_value();

    auto admit = [&](VertexSet&& cand) {
        if (cand.empty()) return;
        if (aggressive && cand.count() > *max_size) return;
        if (!seen.insert(cand).second) return;
        if (!is_minimal_separator_within(g, within, cand)) return;
        ++local.generated;
        if (max_size && cand.count() > *max_size) {
            ++local.filtered;
            // Sound mode keeps expanding through oversized separators.
            queue.push_back(std::move(cand));
            return;
        }
        result.push_back(cand);
        queue.push_back(std::move(cand));
    };

    std::vector<VertexSet> cands;
    for (std::uint32_t v : within) {
        VertexSet closed = g.neighbors(v) & within;
        closed.set(v);
        cands.clear();
        push_candidates(g, within, closed, cands);
        for (VertexSet& c : cands) admit(std::move(c));
    }
    while (!queue.empty()) {
        VertexSet s = std::move(queue.front());
        queue.pop_front();
        for (std::uint32_t x : s) {
            VertexSet removed = s | (g.neighbors(x) & within);
            cands.clear();
            push_candidates(g, within, removed, cands);
            for (VertexSet& c : cands) admit(std::move(c));
        }
    }

    std::sort(result.begin(), result.end(), VertexSet::size_lex_less);
    if (tally) *tally = local;
    return result;
}

SeparatorSet enumerate_minimal_separators(const Graph& g, std::optional<std::uint32_t> max_size,
                                          BoundedMode mode) {
    SeparatorSet out;
    out.bound = max_size;
    for (const VertexSet& comp : connected_components(g)) {
        auto part = enumerate_minimal_separators_within(g, comp, max_size, mode);
        out.separators.insert(out.separators.end(), std::make_move_iterator(part.begin()),
                              std::make_move_iterator(part.end()));
    }
    std::sort(out.separators.begin(), out.separators.end(), VertexSet::size_lex_less);
    return out;
}

SeparatorSet minimal_separators_bruteforce(const Graph& g) {
    std::uint32_t n = g.vertex_count();
    if (n > budgets().bruteforce_separators)
        throw BudgetError("minimal_separators_bruteforce: " + std::to_string(n) +
                          " vertices exceeds the budget of " +
                          std::to_string(budgets().bruteforce_separators));
    SeparatorSet out;
    for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
        VertexSet s(n);
        for (std::uint32_t v = 0; v < n; ++v)
            if ((mask >> v) & 1ULL) s.set(v);
        if (is_minimal_separator(g, s)) out.separators.push_back(std::move(s));
    }
    std::sort(out.separators.begin(), out.separators.end(), VertexSet::size_lex_less);
    return out;
}

} // namespace sepdepth
