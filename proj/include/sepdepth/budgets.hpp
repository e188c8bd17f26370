#pragma once

#include <cstdint>

namespace sepdepth {

/// Size guards for the exponential-time routines. Budget-guarded operations
/// refuse (BudgetError) instead of silently running away. The env var
/// SEPDEPTH_BUDGET=<k>, when set, replaces every per-operation guard below
/// with k (the generator vertex cap is scaled separately and keeps its own
/// default unless the override exceeds it).
struct Budgets {
    std::uint32_t oracle_treedepth = 12;     // treedepth_bruteforce
    std::uint32_t oracle_treewidth = 8;      // treewidth_bruteforce (all orders)
    std::uint32_t bruteforce_separators = 16;// minimal_separators_bruteforce
    std::uint32_t treewidth_exact = 20;      // subset-DP exact treewidth
    std::uint32_t minor_check = 16;          // has_minor / is_outerplanar
    std::uint32_t optimal_top_separators = 16; // exhaustive scan over all of Delta
    std::uint32_t exhaustive_corpus = 7;     // exhaustive connected corpus max n
    std::uint32_t analyze_delta = 20;        // analyze: full Delta / Delta* reporting
    std::uint32_t generator_vertices = 100000; // constructed-graph vertex cap
};

/// Process-wide budgets, initialized once from the environment.
const Budgets& budgets();

/// Replace the process-wide budgets (test hook).
void set_budgets(const Budgets& b);

} // namespace sepdepth
