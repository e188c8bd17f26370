#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "sepdepth/errors.hpp"
#include "sepdepth/graph.hpp"
#include "sepdepth/separators.hpp"

namespace sepdepth {

/// Rooted forest over V(G) as a parent mapping (-1 = root) plus its height
/// (vertices on the longest root-to-leaf path; 0 only for the empty graph).
struct TreedepthDecomposition {
    std::vector<std::int32_t> parent;
    std::int32_t height = 0;
};

enum class Pruning { TwoTw, None };
enum class TwMode { ExactWithinBudget, HeuristicOnly };

struct SolveConfig {
    Pruning pruning = Pruning::TwoTw;
    TwMode tw_mode = TwMode::HeuristicOnly;
    std::optional<std::size_t> memo_limit;
    /// Resolve path-shaped subproblems in closed form. Produces the same
    /// treedepth and the same decomposition as the generic recursion (the
    /// minimal separators of a path are exactly its interior singletons).
    bool path_shortcut = true;
};

struct SolveStats {
    std::uint64_t subproblems = 0;
    std::uint64_t separators_enumerated = 0; // discovered by enumeration
    std::uint64_t separators_pruned = 0;     // of those, dropped by the 2*tw bound
    std::uint32_t max_separator_size = 0;    // largest separator offered to the min
};

struct SolveResult {
    int treedepth = 0;
    TreedepthDecomposition decomposition;
    SolveStats stats;
};

/// Memoization cap exceeded; carries the statistics gathered so far.
struct MemoLimitError : BudgetError {
    explicit MemoLimitError(SolveStats s)
        : BudgetError("treedepth solver memo limit exceeded"), partial(s) {}
    SolveStats partial;
};

/// Exact treedepth with an optimal decomposition, by the minimal-separator
/// recurrence: a complete (sub)graph of k vertices costs k; otherwise the
/// minimum over minimal separators S of |S| plus the worst component below.
/// Disconnected graphs take the max over components. With
/// pruning == TwoTw only separators of size at most twice a per-subproblem
/// treewidth upper bound are offered to the minimum, which cannot change the
/// result; both modes return identical values and identical decompositions.
SolveResult treedepth(const Graph& g, const SolveConfig& cfg = {});

/// All minimal separators S with |S| + td(G \ S) = td(G), sorted (size, lex).
/// Exhaustive over the full separator set, so budget-guarded. Complete or
/// disconnected input is a domain error.
SeparatorSet optimal_top_separators(const Graph& g);

/// Top separator of a single-tree decomposition: the whole vertex set when
/// the tree is a path, otherwise everything at depth <= the shallowest vertex
/// with two or more children. Forests with several roots are a domain error.
VertexSet top_separator(const TreedepthDecomposition& t);

/// (valid, height): valid iff the parent mapping is an acyclic forest over
/// exactly V(G) and every edge of G joins an ancestor-descendant pair.
/// Cycles make the answer invalid rather than throwing. The height is
/// recomputed from scratch (0 when invalid or empty).
std::pair<bool, std::int32_t> verify_treedepth_decomposition(const Graph& g,
                                                             const TreedepthDecomposition& t);

} // namespace sepdepth
