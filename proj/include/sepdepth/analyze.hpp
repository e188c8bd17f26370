#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "sepdepth/graph.hpp"
#include "sepdepth/td_solver.hpp"

namespace sepdepth {

/// Everything the `analyze` command reports about one graph. Optional fields
/// are absent when a budget ruled the computation out or the quantity is
/// undefined (e.g. the ratio on complete graphs).
struct AnalysisReport {
    std::uint32_t n = 0;
    std::uint64_t m = 0;
    bool connected = false;
    bool complete = false;
    int tw_lower = 0;
    int tw_upper = 0;
    std::optional<int> tw_exact;
    int td = 0;
    SolveStats stats;
    std::optional<std::uint64_t> delta_count;           // |Delta_G|
    std::optional<std::uint32_t> opt_top_count;         // |Delta_G*|
    std::optional<std::uint32_t> opt_top_min, opt_top_max;
    std::optional<double> ratio;                        // min |S*| / tw, exact tw only
    bool chordal = false;
    bool cograph = false;
    std::optional<bool> outerplanar;                    // absent over the minor budget
};

AnalysisReport analyze(const Graph& g);

std::string render_text(const AnalysisReport& r);
/// Stable `key=value` lines; absent values render as `na`.
std::string render_kv(const AnalysisReport& r);

} // namespace sepdepth
