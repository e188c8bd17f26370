// End-to-end checks of the installed command line binary: pipelines, formats,
// exit codes and byte-for-byte determinism.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

namespace {

struct RunResult {
    int exit_code;
    std::string output; // stdout only
};

RunResult run(const std::string& command) {
    std::string wrapped = command + " 2>/dev/null";
    FILE* pipe = popen(wrapped.c_str(), "r");
    if (!pipe) return {-1, {}};
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

const std::string cli = SEPDEPTH_CLI_PATH;

int failures = 0;

void expect(bool ok, const std::string& what) {
    if (!ok) {
        std::cerr << "FAIL: " << what << "\n";
        ++failures;
    }
}

void expect_eq(const std::string& got, const std::string& want, const std::string& what) {
    if (got != want) {
        std::cerr << "FAIL: " << what << "\n  want: " << want << "\n  got:  " << got << "\n";
        ++failures;
    }
}

std::string first_line(const std::string& s) {
    auto nl = s.find('\n');
    return nl == std::string::npos ? s : s.substr(0, nl);
}

} // namespace

int main() {
    // generate | solve pipelines
    auto db = run(cli + " generate double-broom 1 7 8 | " + cli + " solve --prune two-tw");
    expect(db.exit_code == 0, "double-broom solve exits 0");
    expect_eq(first_line(db.output), "10", "double-broom 1 7 8 solves to depth 10");

    auto k4 = run(cli + " generate complete 4 | " + cli + " solve");
    expect_eq(first_line(k4.output), "4", "complete 4 solves to depth 4");

    auto p3 = run(cli + " generate path 3 | " + cli + " solve");
    expect_eq(p3.output, "2\n2\n0\n2\n", "path 3 tree document bytes");

    // pruning modes agree byte for byte; runs are deterministic
    auto none1 = run(cli + " generate exp-sep 6 | " + cli + " solve --prune none");
    auto none2 = run(cli + " generate exp-sep 6 | " + cli + " solve --prune none");
    auto two = run(cli + " generate exp-sep 6 | " + cli + " solve --prune two-tw");
    expect_eq(none1.output, none2.output, "repeated runs are identical");
    expect_eq(none1.output, two.output, "pruning modes emit identical trees");

    // solve -> verify round trip through files
    std::string dir = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp");
    std::string gr = dir + "/sepdepth_cli_test.gr";
    std::string tree = dir + "/sepdepth_cli_test.tree";
    run(cli + " generate grid 3 4 --out " + gr);
    auto solved = run(cli + " solve " + gr + " --out " + tree);
    expect(solved.exit_code == 0, "grid solve exits 0");
    auto verified = run(cli + " verify " + gr + " " + tree);
    expect(verified.exit_code == 0, "verify accepts solver output");

    // corrupting the tree flips verify to exit 3
    {
        std::ifstream in(tree);
        std::string depth_line, rest((std::istreambuf_iterator<char>(in)),
                                     std::istreambuf_iterator<char>());
        std::ofstream out(tree, std::ios::trunc);
        out << "1" << rest.substr(rest.find('\n'));
    }
    auto rejected = run(cli + " verify " + gr + " " + tree);
    expect(rejected.exit_code == 3, "verify rejects a wrong declared depth with exit 3");

    // seps listing on C_4: two antipodal pairs, 1-based, sorted
    auto seps = run(cli + " generate cycle 4 | " + cli + " seps");
    expect_eq(seps.output, "1 3\n2 4\n", "C_4 separator listing");
    auto seps_bounded = run(cli + " generate path 5 | " + cli + " seps --max-size 1");
    expect_eq(seps_bounded.output, "2\n3\n4\n", "bounded P_5 separator listing");

    // oracle subcommand and budget exit code
    auto oracle = run(cli + " generate path 7 | " + cli + " oracle");
    expect_eq(first_line(oracle.output), "3", "oracle treedepth of P_7");
    auto over = run(cli + " generate path 20 | " + cli + " oracle");
    expect(over.exit_code == 2, "oracle over budget exits 2");

    // the env var lifts the guard
    auto lifted = run(cli + " generate path 20 | SEPDEPTH_BUDGET=20 " + cli + " oracle");
    expect(lifted.exit_code == 0, "SEPDEPTH_BUDGET raises the oracle budget");
    expect_eq(first_line(lifted.output), "5", "oracle treedepth of P_20");

    // forced kernel implementations produce identical bytes
    auto scalar_run =
        run(cli + " generate grid 2 5 | SEPDEPTH_KERNEL=scalar " + cli + " solve");
    auto default_run = run(cli + " generate grid 2 5 | " + cli + " solve");
    expect_eq(scalar_run.output, default_run.output,
              "SEPDEPTH_KERNEL=scalar output matches the default kernels");

    // exact tw pruning mode emits the same tree
    auto exact_mode = run(cli + " generate grid 2 5 | " + cli + " solve --tw-mode exact");
    expect_eq(exact_mode.output, default_run.output, "--tw-mode exact emits the same tree");

    // parse errors exit 1
    auto bad = run("printf 'p tdp 2 1\\n1 3\\n' | " + cli + " solve");
    expect(bad.exit_code == 1, "out-of-range edge exits 1");

    // analyze exposes the machine block
    auto analyzed = run(cli + " generate cycle 5 | " + cli + " analyze");
    expect(analyzed.output.find("td=4\n") != std::string::npos, "analyze reports td of C_5");
    expect(analyzed.output.find("tw_exact=2\n") != std::string::npos,
           "analyze reports tw of C_5");
    expect(analyzed.output.find("ratio=1\n") != std::string::npos,
           "analyze reports the C_5 ratio 2/2 = 1");

    // search-ratio stays within the 2*tw bound on a deterministic sample
    auto ratio = run(cli + " search-ratio --max-n 10 --samples 100 --seed 5");
    expect(ratio.exit_code == 0, "search-ratio exits 0");
    expect(ratio.output.find("bound_violations=0\n") != std::string::npos,
           "search-ratio finds no bound violations");
    expect(ratio.output.find("max_ratio=") != std::string::npos, "search-ratio reports a ratio");
    expect(ratio.output.find("witness:\np tdp ") != std::string::npos,
           "search-ratio emits the witness graph");
    auto ratio_again = run(cli + " search-ratio --max-n 10 --samples 100 --seed 5");
    expect_eq(ratio_again.output, ratio.output, "search-ratio is deterministic in the seed");

    // generate writes parseable .gr with the documented counts
    auto gen = run(cli + " generate broom 2 3 2");
    expect_eq(first_line(gen.output), "p tdp 12 13", "broom 2 3 2 header");

    if (failures == 0) {
        std::cout << "cli: all checks passed\n";
        return 0;
    }
    std::cout << "cli: " << failures << " checks failed\n";
    return 1;
}
