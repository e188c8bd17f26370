#include <doctest.h>

#include "sepdepth/budgets.hpp"
#include "sepdepth/errors.hpp"
#include "sepdepth/generators.hpp"
#include "sepdepth/graph_classes.hpp"
#include "sepdepth/oracle.hpp"
#include "sepdepth/separators.hpp"
#include "sepdepth/treewidth.hpp"

using namespace sepdepth;

namespace {

bool is_path_shaped(const Graph& g) {
    if (!is_connected(g)) return false;
    std::uint32_t deg1 = 0;
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) > 2) return false;
        if (g.degree(v) == 1) ++deg1;
    }
    return g.vertex_count() == 1 || deg1 == 2;
}

} // namespace

TEST_SUITE("generators") {

TEST_CASE("basic families") {
    CHECK(gen::path(1).vertex_count() == 1);
    CHECK(gen::path(6).edge_count() == 5);
    CHECK(gen::cycle(3) == gen::complete(3));
    CHECK(gen::complete_bipartite(2, 3).edge_count() == 6);

    Graph g23 = gen::grid(2, 3);
    CHECK(g23.vertex_count() == 6);
    CHECK(g23.edge_count() == 7);

    CHECK_THROWS_AS(gen::path(0), InputError);
    CHECK_THROWS_AS(gen::cycle(2), InputError);
    CHECK_THROWS_AS(gen::grid(0, 3), InputError);
}

TEST_CASE("broom sizes and structure") {
    auto b = gen::broom(2, 3, 2);
    CHECK(b.graph.vertex_count() == 6 + 2 * 3);
    CHECK(b.grid_vertices.count() == 6);
    CHECK(b.path_vertices.count() == 6);

    auto degenerate = gen::broom(1, 1, 1);
    CHECK(degenerate.graph.vertex_count() == 2);
    CHECK(degenerate.graph.edge_count() == 1);

    // broom(2,2,1): each vertex in the second column carries one pendant vertex
    auto small = gen::broom(2, 2, 1);
    CHECK(small.graph.vertex_count() == 6);
    CHECK(small.graph.degree(4) == 1);
    CHECK(small.graph.degree(5) == 1);
    CHECK(small.graph.adjacent(1, 4)); // (1,2) = id 1 gets the first pendant
    CHECK(small.graph.adjacent(3, 5));

    // vertex counts across a parameter sweep
    for (std::uint32_t n = 1; n <= 3; ++n)
        for (std::uint32_t m = 1; m <= 3; ++m)
            for (std::uint32_t k = 1; k <= 3; ++k)
                CHECK(gen::broom(n, m, k).graph.vertex_count() ==
                      n * m + n * ((1u << k) - 1));
}

TEST_CASE("double broom sizes and path shape for one row") {
    auto big = gen::double_broom(1, 7, 8);
    CHECK(big.graph.vertex_count() == 7 + 2 * 255);
    CHECK(is_path_shaped(big.graph));

    auto p4 = gen::double_broom(1, 2, 1);
    CHECK(p4.graph.vertex_count() == 4);
    CHECK(is_path_shaped(p4.graph));

    CHECK(gen::double_broom(2, 3, 1).graph.vertex_count() == 10);
    CHECK_THROWS_AS(gen::double_broom(1, 1, 1), InputError);

    for (std::uint32_t m = 2; m <= 5; ++m)
        for (std::uint32_t k = 1; k <= 4; ++k)
            CHECK(is_path_shaped(gen::double_broom(1, m, k).graph));
}

TEST_CASE("corner graph sizes") {
    CHECK(gen::corner_graph(1, 7, 8, 3).graph.vertex_count() == 7 + 3 + 6 * 255);

    auto bare = gen::corner_graph(1, 2, 1, 0);
    CHECK(bare.graph == gen::grid(1, 2));

    // one hub and length-1 connectors close a 5-cycle
    auto c5 = gen::corner_graph(1, 2, 1, 1);
    CHECK(c5.graph.vertex_count() == 5);
    CHECK(c5.graph.edge_count() == 5);
    for (std::uint32_t v = 0; v < 5; ++v) CHECK(c5.graph.degree(v) == 2);
    CHECK(is_connected(c5.graph));

    for (std::uint32_t n = 1; n <= 2; ++n)
        for (std::uint32_t m = 2; m <= 4; ++m)
            for (std::uint32_t k = 1; k <= 2; ++k)
                for (std::uint32_t l = 0; l <= 2; ++l)
                    CHECK(gen::corner_graph(n, m, k, l).graph.vertex_count() ==
                          n * m + l + 2u * n * l * ((1u << k) - 1));
}

TEST_CASE("corner graph treewidth stays within rows + hubs") {
    for (std::uint32_t n = 1; n <= 2; ++n)
        for (std::uint32_t m = 2; m <= 4; ++m)
            for (std::uint32_t l = 0; l <= 2; ++l) {
                auto cg = gen::corner_graph(n, m, 1, l);
                CHECK(treewidth_upper(cg.graph).first <= static_cast<int>(n + l));
            }
}

TEST_CASE("exp_sep graph counts, separators and treewidth") {
    Graph g3 = gen::exp_sep_graph(3);
    CHECK(g3.vertex_count() == 8);
    CHECK(g3.edge_count() == 9);
    CHECK(treewidth_exact(g3).first == 2);

    // separator census established by brute force (one inner vertex per
    // channel in 2^k ways, the terminal pair, 2k terminal-inner pairs)
    for (std::uint32_t k = 2; k <= 4; ++k) {
        Graph g = gen::exp_sep_graph(k);
        CHECK(minimal_separators_bruteforce(g).separators.size() == (1ULL << k) + 2 * k + 1);
    }
}

TEST_CASE("pendant paths do not change grid treewidth") {
    for (std::uint32_t n = 1; n <= 2; ++n)
        for (std::uint32_t m = 2; m <= 4; ++m)
            for (std::uint32_t k = 1; k <= 2; ++k) {
                auto b = gen::broom(n, m, k);
                if (b.graph.vertex_count() > budgets().treewidth_exact) continue;
                CHECK(treewidth_exact(b.graph).first ==
                      treewidth_exact(gen::grid(n, m)).first);
            }
}

TEST_CASE("random k-trees are chordal with treewidth k") {
    for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
        Graph g = gen::random_ktree(12, 2, seed);
        CHECK(is_chordal(g).has_value());
        CHECK(treewidth_exact(g).first == 2);
    }
    Graph g3 = gen::random_ktree(10, 3, 7);
    CHECK(is_chordal(g3).has_value());
    CHECK(treewidth_exact(g3).first == 3);
    CHECK_THROWS_AS(gen::random_ktree(3, 3, 1), InputError);
}

TEST_CASE("random cographs never contain an induced P_4") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        Graph g = gen::random_cograph(8, seed);
        // independent check: scan all 4-subsets for an induced path
        const std::uint32_t n = g.vertex_count();
        bool found_p4 = false;
        for (std::uint32_t a = 0; a < n; ++a)
            for (std::uint32_t b = a + 1; b < n; ++b)
                for (std::uint32_t c = b + 1; c < n; ++c)
                    for (std::uint32_t d = c + 1; d < n; ++d) {
                        Graph sub =
                            induced_subgraph(g, VertexSet::of(n, {a, b, c, d})).materialize();
                        std::uint32_t deg1 = 0, deg2 = 0;
                        for (std::uint32_t v = 0; v < 4; ++v) {
                            if (sub.degree(v) == 1) ++deg1;
                            if (sub.degree(v) == 2) ++deg2;
                        }
                        if (sub.edge_count() == 3 && deg1 == 2 && deg2 == 2 &&
                            is_connected(sub))
                            found_p4 = true;
                    }
        CHECK(!found_p4);
    }
}

TEST_CASE("random maximal outerplanar graphs have 2n-3 edges") {
    for (std::uint32_t n = 3; n <= 9; ++n)
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            Graph g = gen::random_maximal_outerplanar(n, seed);
            CHECK(g.edge_count() == 2 * n - 3);
            CHECK(is_connected(g));
        }
    CHECK(is_outerplanar(gen::random_maximal_outerplanar(6, 11)));
    CHECK_THROWS_AS(gen::random_maximal_outerplanar(2, 1), InputError);
}

TEST_CASE("generators are deterministic in the seed") {
    CHECK(gen::random_ktree(14, 3, 9) == gen::random_ktree(14, 3, 9));
    CHECK(gen::random_cograph(11, 5) == gen::random_cograph(11, 5));
    CHECK(gen::random_maximal_outerplanar(11, 5) == gen::random_maximal_outerplanar(11, 5));
}

TEST_CASE("oversized constructions are refused") {
    Budgets tight = budgets();
    Budgets original = tight;
    tight.generator_vertices = 100;
    set_budgets(tight);
    CHECK_THROWS_AS(gen::broom(2, 3, 7), BudgetError);   // 6 + 2*127 vertices
    CHECK_THROWS_AS(gen::double_broom(1, 3, 60), BudgetError);
    set_budgets(original);
}

} // TEST_SUITE
