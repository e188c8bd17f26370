#include "sepdepth/analyze.hpp"

#include <sstream>
#include <type_traits>

#include "sepdepth/budgets.hpp"
#include "sepdepth/errors.hpp"
#include "sepdepth/graph_classes.hpp"
#include "sepdepth/separators.hpp"
#include "sepdepth/treewidth.hpp"

namespace sepdepth {

AnalysisReport analyze(const Graph& g) {
    AnalysisReport r;
    r.n = g.vertex_count();
    r.m = g.edge_count();
    r.connected = is_connected(g);
    r.complete = is_complete(g);

    r.tw_lower = treewidth_lower(g);
    r.tw_upper = treewidth_upper(g).first;
    if (r.n <= budgets().treewidth_exact) r.tw_exact = treewidth_exact(g).first;

    SolveResult solved = treedepth(g);
    r.td = solved.treedepth;
    r.stats = solved.stats;

    if (r.n <= budgets().analyze_delta)
        r.delta_count = enumerate_minimal_separators(g).separators.size();

    if (r.connected && !r.complete && r.n <= budgets().optimal_top_separators) {
        SeparatorSet opt = optimal_top_separators(g);
        r.opt_top_count = static_cast<std::uint32_t>(opt.separators.size());
        std::uint32_t lo = g.vertex_count() + 1, hi = 0;
        for (const VertexSet& s : opt.separators) {
            lo = std::min(lo, s.count());
            hi = std::max(hi, s.count());
        }
        r.opt_top_min = lo;
        r.opt_top_max = hi;
        if (r.tw_exact && *r.tw_exact >= 1)
            r.ratio = static_cast<double>(lo) / static_cast<double>(*r.tw_exact);
    }

    r.chordal = is_chordal(g).has_value();
    r.cograph = is_cograph(g);
    if (r.n <= budgets().minor_check) r.outerplanar = is_outerplanar(g);
    return r;
}

namespace {

template <typename T>
std::string opt_str(const std::optional<T>& v) {
    if (!v) return "na";
    if constexpr (std::is_same_v<T, bool>) return *v ? "yes" : "no";
    else {
        std::ostringstream s;
        s << *v;
        return s.str();
    }
}

} // namespace

std::string render_text(const AnalysisReport& r) {
    std::ostringstream out;
    out << "graph: " << r.n << " vertices, " << r.m << " edges"
        << (r.connected ? "" : " (disconnected)") << (r.complete ? " (complete)" : "") << '\n';
    out << "treewidth: ";
    if (r.tw_exact) out << *r.tw_exact << " (exact)";
    else out << "in [" << r.tw_lower << ", " << r.tw_upper << "]";
    out << '\n';
    out << "treedepth: " << r.td << '\n';
    if (r.delta_count) out << "minimal separators: " << *r.delta_count << '\n';
    if (r.opt_top_count)
        out << "optimal top separators: " << *r.opt_top_count << " (sizes " << *r.opt_top_min
            << ".." << *r.opt_top_max << ")\n";
    if (r.ratio) out << "min |S*| / tw: " << *r.ratio << '\n';
    out << "classes:" << (r.chordal ? " chordal" : "") << (r.cograph ? " cograph" : "");
    if (r.outerplanar && *r.outerplanar) out << " outerplanar";
    if (!r.chordal && !r.cograph && !(r.outerplanar && *r.outerplanar)) out << " none detected";
    out << '\n';
    out << "solver: " << r.stats.subproblems << " subproblems, " << r.stats.separators_enumerated
        << " separators enumerated, " << r.stats.separators_pruned << " pruned, max size used "
        << r.stats.max_separator_size << '\n';
    return out.str();
}

std::string render_kv(const AnalysisReport& r) {
    std::ostringstream out;
    out << "n=" << r.n << '\n';
    out << "m=" << r.m << '\n';
    out << "connected=" << (r.connected ? "yes" : "no") << '\n';
    out << "complete=" << (r.complete ? "yes" : "no") << '\n';
    out << "tw_lower=" << r.tw_lower << '\n';
    out << "tw_upper=" << r.tw_upper << '\n';
    out << "tw_exact=" << opt_str(r.tw_exact) << '\n';
    out << "td=" << r.td << '\n';
    out << "delta_count=" << opt_str(r.delta_count) << '\n';
    out << "opt_top_count=" << opt_str(r.opt_top_count) << '\n';
    out << "opt_top_min=" << opt_str(r.opt_top_min) << '\n';
    out << "opt_top_max=" << opt_str(r.opt_top_max) << '\n';
    out << "ratio=" << opt_str(r.ratio) << '\n';
    out << "chordal=" << (r.chordal ? "yes" : "no") << '\n';
    out << "cograph=" << (r.cograph ? "yes" : "no") << '\n';
    out << "outerplanar=" << opt_str(r.outerplanar) << '\n';
    out << "subproblems=" << r.stats.subproblems << '\n';
    out << "separators_enumerated=" << r.stats.separators_enumerated << '\n';
    out << "separators_pruned=" << r.stats.separators_pruned << '\n';
    out << "max_separator_size=" << r.stats.max_separator_size << '\n';
    return out.str();
}

} // namespace sepdepth
