// sepdepth command line: exact treedepth via the minimal-separator recurrence,
// separator listings, graph family generators and instance analysis, all over
// the PACE .gr / tree text formats.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "sepdepth/analyze.hpp"
#include "sepdepth/budgets.hpp"
#include "sepdepth/errors.hpp"
#include "sepdepth/generators.hpp"
#include "sepdepth/graph.hpp"
#include "sepdepth/oracle.hpp"
#include "sepdepth/pace_io.hpp"
#include "sepdepth/prng.hpp"
#include "sepdepth/separators.hpp"
#include "sepdepth/td_solver.hpp"
#include "sepdepth/treewidth.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitBudget = 2;
constexpr int kExitVerify = 3;

std::string slurp(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw sepdepth::InputError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void emit(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw sepdepth::InputError("cannot open '" + path + "' for writing");
    out << text;
}

sepdepth::Graph load_graph(const std::string& path) {
    sepdepth::GrDocument doc = sepdepth::parse_gr(slurp(path));
    if (doc.duplicates_removed > 0)
        std::cerr << "warning: removed " << doc.duplicates_removed << " duplicate edge(s)\n";
    return sepdepth::to_graph(doc);
}

struct SolveOptions {
    std::string input;
    std::string output;
    std::string prune = "two-tw";
    std::string tw_mode = "heuristic";
    bool stats = false;
};

int run_solve(const SolveOptions& opt) {
    sepdepth::Graph g = load_graph(opt.input);
    sepdepth::SolveConfig cfg;
    cfg.pruning = opt.prune == "none" ? sepdepth::Pruning::None : sepdepth::Pruning::TwoTw;
    cfg.tw_mode = opt.tw_mode == "exact" ? sepdepth::TwMode::ExactWithinBudget
                                         : sepdepth::TwMode::HeuristicOnly;
    sepdepth::SolveResult result = sepdepth::treedepth(g, cfg);
    emit(opt.output, sepdepth::write_tree(result.decomposition));
    if (opt.stats) {
        std::cerr << "treedepth=" << result.treedepth << '\n'
                  << "subproblems=" << result.stats.subproblems << '\n'
                  << "separators_enumerated=" << result.stats.separators_enumerated << '\n'
                  << "separators_pruned=" << result.stats.separators_pruned << '\n'
                  << "max_separator_size=" << result.stats.max_separator_size << '\n';
    }
    return kExitOk;
}

int run_seps(const std::string& input, std::int64_t max_size) {
    sepdepth::Graph g = load_graph(input);
    std::optional<std::uint32_t> bound;
    if (max_size >= 0) bound = static_cast<std::uint32_t>(max_size);
    sepdepth::SeparatorSet seps = sepdepth::enumerate_minimal_separators(g, bound);
    std::ostringstream out;
    for (const sepdepth::VertexSet& s : seps.separators) {
        bool first = true;
        for (std::uint32_t v : s) {
            if (!first) out << ' ';
            out << v + 1;
            first = false;
        }
        out << '\n';
    }
    std::cout << out.str();
    return kExitOk;
}

int run_verify(const std::string& graph_path, const std::string& tree_path) {
    sepdepth::Graph g = load_graph(graph_path);
    sepdepth::TreeDocument doc = sepdepth::parse_tree(slurp(tree_path), g.vertex_count());
    auto [valid, height] =
        sepdepth::verify_treedepth_decomposition(g, sepdepth::to_decomposition(doc));
    std::cout << height << '\n';
    if (!valid) {
        std::cerr << "invalid: ancestor-descendant condition or forest shape violated\n";
        return kExitVerify;
    }
    if (height != doc.depth) {
        std::cerr << "invalid: declared depth " << doc.depth << " differs from recomputed height "
                  << height << '\n';
        return kExitVerify;
    }
    return kExitOk;
}

int run_oracle(const std::string& input) {
    sepdepth::Graph g = load_graph(input);
    std::cout << sepdepth::treedepth_bruteforce(g) << '\n';
    return kExitOk;
}

int run_generate(const std::string& family, const std::vector<std::uint64_t>& params,
                 std::uint64_t seed, const std::string& output) {
    using namespace sepdepth::gen;
    auto need = [&](std::size_t k, const char* usage) {
        if (params.size() != k)
            throw sepdepth::InputError(std::string("usage: generate ") + family + " " + usage);
    };
    auto p = [&](std::size_t i) { return static_cast<std::uint32_t>(params[i]); };

    sepdepth::Graph g;
    if (family == "path") {
        need(1, "<n>");
        g = path(p(0));
    } else if (family == "cycle") {
        need(1, "<n>");
        g = cycle(p(0));
    } else if (family == "complete") {
        need(1, "<n>");
        g = complete(p(0));
    } else if (family == "biclique") {
        need(2, "<a> <b>");
        g = complete_bipartite(p(0), p(1));
    } else if (family == "grid") {
        need(2, "<rows> <cols>");
        g = grid(p(0), p(1));
    } else if (family == "broom") {
        need(3, "<rows> <cols> <k>");
        g = broom(p(0), p(1), p(2)).graph;
    } else if (family == "double-broom") {
        need(3, "<rows> <cols> <k>");
        g = double_broom(p(0), p(1), p(2)).graph;
    } else if (family == "corner") {
        need(4, "<rows> <cols> <k> <hubs>");
        g = corner_graph(p(0), p(1), p(2), p(3)).graph;
    } else if (family == "exp-sep") {
        need(1, "<k>");
        g = exp_sep_graph(p(0));
    } else if (family == "ktree") {
        need(2, "<n> <k> [--seed S]");
        g = random_ktree(p(0), p(1), seed);
    } else if (family == "cograph") {
        need(1, "<n> [--seed S]");
        g = random_cograph(p(0), seed);
    } else if (family == "outerplanar") {
        need(1, "<n> [--seed S]");
        g = random_maximal_outerplanar(p(0), seed);
    } else {
        throw sepdepth::InputError("unknown family '" + family + "'");
    }
    emit(output, sepdepth::write_gr(sepdepth::from_graph(g)));
    return kExitOk;
}

int run_analyze(const std::string& input) {
    sepdepth::Graph g = load_graph(input);
    sepdepth::AnalysisReport r = sepdepth::analyze(g);
    std::cout << sepdepth::render_text(r) << '\n' << sepdepth::render_kv(r);
    return kExitOk;
}

int run_search_ratio(std::uint32_t max_n, std::uint32_t samples, std::uint64_t seed) {
    if (max_n < 4) throw sepdepth::InputError("search-ratio needs --max-n >= 4");
    if (max_n > sepdepth::budgets().treewidth_exact ||
        max_n > sepdepth::budgets().optimal_top_separators)
        throw sepdepth::BudgetError("search-ratio needs exact treewidth; lower --max-n");

    double best_ratio = 0.0;
    sepdepth::Graph witness;
    std::uint32_t violations = 0;
    std::uint32_t usable = 0;
    for (std::uint32_t i = 0; i < samples; ++i) {
        std::uint64_t s = sepdepth::mix_seed(seed, i);
        auto n = static_cast<std::uint32_t>(4 + (s % (max_n - 3)));
        sepdepth::Graph g = sepdepth::random_connected_graph(n, sepdepth::mix_seed(s, 1));
        if (sepdepth::is_complete(g)) continue;
        ++usable;
        int tw = sepdepth::treewidth_exact(g).first;
        sepdepth::SeparatorSet opt = sepdepth::optimal_top_separators(g);
        std::uint32_t min_size = g.vertex_count();
        for (const sepdepth::VertexSet& sset : opt.separators)
            min_size = std::min(min_size, sset.count());
        if (static_cast<int>(min_size) > 2 * tw) ++violations;
        double ratio = static_cast<double>(min_size) / static_cast<double>(tw);
        if (ratio > best_ratio) {
            best_ratio = ratio;
            witness = g;
        }
    }
    std::cout << "samples=" << samples << '\n'
              << "usable=" << usable << '\n'
              << "max_ratio=" << best_ratio << '\n'
              << "bound_violations=" << violations << '\n';
    std::cout << "witness:\n" << sepdepth::write_gr(sepdepth::from_graph(witness));
    return violations == 0 ? kExitOk : kExitVerify;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact treedepth solver based on minimal separators"};
    app.require_subcommand(1);

    SolveOptions solve_opt;
    auto* solve = app.add_subcommand("solve", "compute an optimal treedepth decomposition");
    solve->add_option("input", solve_opt.input, ".gr file (default: stdin)");
    solve->add_option("--out", solve_opt.output, "tree output file (default: stdout)");
    solve->add_option("--prune", solve_opt.prune, "separator size pruning")
        ->check(CLI::IsMember({"two-tw", "none"}));
    solve->add_option("--tw-mode", solve_opt.tw_mode, "treewidth bound used for pruning")
        ->check(CLI::IsMember({"exact", "heuristic"}));
    solve->add_flag("--stats", solve_opt.stats, "print solver statistics to stderr");

    std::string seps_input;
    std::int64_t seps_max_size = -1;
    auto* seps = app.add_subcommand("seps", "list all minimal separators");
    seps->add_option("input", seps_input, ".gr file (default: stdin)");
    seps->add_option("--max-size", seps_max_size, "only separators of at most this size");

    std::string verify_graph, verify_tree;
    auto* verify = app.add_subcommand("verify", "check a tree file against a graph");
    verify->add_option("graph", verify_graph, ".gr file")->required();
    verify->add_option("tree", verify_tree, "tree file")->required();

    std::string oracle_input;
    auto* oracle = app.add_subcommand("oracle", "brute-force treedepth (budget-guarded)");
    oracle->add_option("input", oracle_input, ".gr file (default: stdin)");

    std::string gen_family, gen_output;
    std::vector<std::uint64_t> gen_params;
    std::uint64_t gen_seed = 1;
    auto* generate = app.add_subcommand("generate", "write a graph family instance");
    generate->add_option("family", gen_family,
                         "path|cycle|complete|biclique|grid|broom|double-broom|corner|exp-sep|"
                         "ktree|cograph|outerplanar")
        ->required();
    generate->add_option("params", gen_params, "family parameters");
    generate->add_option("--seed", gen_seed, "seed for random families");
    generate->add_option("--out", gen_output, ".gr output file (default: stdout)");

    std::string analyze_input;
    auto* analyze_cmd = app.add_subcommand("analyze", "report bounds, separators and classes");
    analyze_cmd->add_option("input", analyze_input, ".gr file (default: stdin)");

    std::uint32_t sr_max_n = 10, sr_samples = 100;
    std::uint64_t sr_seed = 1;
    auto* search = app.add_subcommand("search-ratio",
                                      "sample graphs and report the largest min|S*|/tw seen");
    search->add_option("--max-n", sr_max_n, "largest sampled vertex count");
    search->add_option("--samples", sr_samples, "number of samples");
    search->add_option("--seed", sr_seed, "sample seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) return run_solve(solve_opt);
        if (seps->parsed()) return run_seps(seps_input, seps_max_size);
        if (verify->parsed()) return run_verify(verify_graph, verify_tree);
        if (oracle->parsed()) return run_oracle(oracle_input);
        if (generate->parsed()) return run_generate(gen_family, gen_params, gen_seed, gen_output);
        if (analyze_cmd->parsed()) return run_analyze(analyze_input);
        if (search->parsed()) return run_search_ratio(sr_max_n, sr_samples, sr_seed);
    } catch (const sepdepth::BudgetError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitInput;
}
