#include "sepdepth/budgets.hpp"

#include <cstdlib>
#include <string>

namespace sepdepth {
namespace {

Budgets from_environment() {
    Budgets b;
    if (const char* env = std::getenv("SEPDEPTH_BUDGET")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) {
            auto k = static_cast<std::uint32_t>(v);
            b.oracle_treedepth = k;
            b.oracle_treewidth = k;
            b.bruteforce_separators = k;
            b.treewidth_exact = k;
            b.minor_check = k;
            b.optimal_top_separators = k;
            b.analyze_delta = k;
            if (k > b.generator_vertices) b.generator_vertices = k;
        }
    }
    return b;
}

Budgets& slot() {
    static Budgets b = from_environment();
    return b;
}

} // namespace

const Budgets& budgets() { return slot(); }

void set_budgets(const Budgets& b) { slot() = b; }

} // namespace sepdepth
