#pragma once

#include <cstdint>
#include <vector>

#include "sepdepth/graph.hpp"

namespace sepdepth {

/// Exact treedepth by exhaustive vertex-removal recursion (memoized on vertex
/// subsets): td(empty) = 0, td of a disconnected graph is the max over its
/// components, td(connected G) = 1 + min over v of td(G \ v). Independent of
/// the separator-based solver. Refuses above the oracle budget.
int treedepth_bruteforce(const Graph& g);

/// Exact treewidth as the min over *all* elimination orderings of the largest
/// degree at elimination time. Deliberately the dumbest correct route, kept
/// independent of the subset-DP in treewidth_exact. Refuses above budget.
int treewidth_bruteforce(const Graph& g);

struct CorpusSpec {
    enum class Mode { ExhaustiveConnected, Random };
    Mode mode = Mode::ExhaustiveConnected;
    std::uint32_t max_n = 7;        // exhaustive: all connected graphs with <= max_n vertices
    std::uint32_t min_n = 2;        // random: vertex count sampled in [min_n, max_n]
    std::uint32_t samples = 100;    // random only
    std::uint64_t seed = 1;         // random only
    std::uint64_t p_numer = 1, p_denom = 2; // random edge probability
};

/// Deterministic graph corpus. Exhaustive mode yields one representative per
/// isomorphism class of connected graphs on 1..max_n vertices; random mode
/// yields `samples` seeded connected graphs.
std::vector<Graph> corpus(const CorpusSpec& spec);

/// One seeded Erdos-Renyi-style graph, resampled until connected.
Graph random_connected_graph(std::uint32_t n, std::uint64_t seed, std::uint64_t p_numer = 1,
                             std::uint64_t p_denom = 2);

/// Number of labeled graphs isomorphic to g (n! / |Aut(g)|); n <= 8.
/// Used to cross-check the exhaustive corpus against the classical labeled
/// connected-graph counting recurrence.
std::uint64_t labeled_copies(const Graph& g);

/// Count of connected labeled graphs on n vertices via the standard
/// recurrence over 2^C(n,2); exact for n <= 7.
std::uint64_t connected_labeled_graph_count(std::uint32_t n);

} // namespace sepdepth
