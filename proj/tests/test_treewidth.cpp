#include <doctest.h>

#include "sepdepth/budgets.hpp"
#include "sepdepth/errors.hpp"
#include "sepdepth/generators.hpp"
#include "sepdepth/oracle.hpp"
#include "sepdepth/treewidth.hpp"

using namespace sepdepth;

TEST_SUITE("treewidth") {

TEST_CASE("exact treewidth on named instances") {
    CHECK(treewidth_exact(gen::path(5)).first == 1);
    CHECK(treewidth_exact(gen::complete(4)).first == 3);
    CHECK(treewidth_exact(gen::grid(3, 4)).first == 3); // P_4 x P_3
    CHECK(treewidth_exact(Graph::from_edges(0, {})).first == -1);
    CHECK(treewidth_exact(Graph::from_edges(1, {})).first == 0);

    Budgets tight = budgets();
    Budgets original = tight;
    tight.treewidth_exact = 4;
    set_budgets(tight);
    CHECK_THROWS_AS(treewidth_exact(gen::path(5)), BudgetError);
    set_budgets(original);
}

TEST_CASE("exact witness verifies and has matching width") {
    CorpusSpec spec;
    spec.max_n = 6;
    for (const Graph& g : corpus(spec)) {
        auto [w, td] = treewidth_exact(g);
        CHECK(verify_tree_decomposition(g, td));
        CHECK(td.width() == w);
    }
    // disconnected graphs: width is the max over components, tree stays a tree
    Graph g = Graph::from_edges(7, {{0, 1}, {1, 2}, {0, 2}, {4, 5}, {5, 6}});
    auto [w, td] = treewidth_exact(g);
    CHECK(w == 2);
    CHECK(verify_tree_decomposition(g, td));
}

TEST_CASE("upper bound via min-fill") {
    Graph tree6 = Graph::from_edges(6, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}});
    CHECK(treewidth_upper(tree6).first == 1);
    CHECK(treewidth_upper(gen::cycle(6)).first == 2);
    CHECK(treewidth_upper(gen::complete(5)).first == 4);
    CHECK(treewidth_exact(gen::cycle(6)).first == 2);

    // witness order produces a verifying decomposition of the claimed width
    auto [w, order] = treewidth_upper(gen::cycle(6));
    TreeDecomposition td = tree_decomposition_from_order(gen::cycle(6), order);
    CHECK(verify_tree_decomposition(gen::cycle(6), td));
    CHECK(td.width() == w);
}

TEST_CASE("lower bound via degeneracy") {
    CHECK(treewidth_lower(gen::complete(5)) == 4);
    CHECK(treewidth_lower(gen::cycle(6)) == 2);
    CHECK(treewidth_lower(gen::path(5)) == 1);
}

TEST_CASE("lower <= exact <= upper and exact matches brute force") {
    CorpusSpec spec;
    spec.max_n = 6;
    for (const Graph& g : corpus(spec)) {
        TwBounds bounds = treewidth_bounds(g);
        auto [exact, td] = treewidth_exact(g);
        CHECK(bounds.lower <= exact);
        CHECK(exact <= bounds.upper);
        CHECK(exact == treewidth_bruteforce(g));
        // the min-fill witness order realizes the claimed upper bound
        TreeDecomposition witness = tree_decomposition_from_order(g, bounds.upper_order);
        CHECK(verify_tree_decomposition(g, witness));
        CHECK(witness.width() == bounds.upper);
    }
    CorpusSpec rnd;
    rnd.mode = CorpusSpec::Mode::Random;
    rnd.min_n = 7;
    rnd.max_n = 8;
    rnd.samples = 40;
    rnd.seed = 7;
    for (const Graph& g : corpus(rnd)) CHECK(treewidth_exact(g).first == treewidth_bruteforce(g));
}

TEST_CASE("verification checks all three properties") {
    Graph p3 = gen::path(3);
    TreeDecomposition good;
    good.bags = {VertexSet::of(3, {0, 1}), VertexSet::of(3, {1, 2})};
    good.tree_edges = {{0, 1}};
    CHECK(verify_tree_decomposition(p3, good));

    Graph k3 = gen::complete(3);
    CHECK(!verify_tree_decomposition(k3, good)); // edge (0,2) uncovered

    // bags {0,1},{2}: per-vertex subtrees are fine, but edge (1,2) of P_3 is
    // uncovered, so the decomposition is invalid
    TreeDecomposition split;
    split.bags = {VertexSet::of(3, {0, 1}), VertexSet::of(3, {2})};
    split.tree_edges = {{0, 1}};
    CHECK(!verify_tree_decomposition(p3, split));

    // vertex 1 appears in bags 0, 1 and 3, but bag 3 hangs off bag 2 which
    // lacks vertex 1: its bag subtree is disconnected
    Graph p4 = gen::path(4);
    TreeDecomposition broken;
    broken.bags = {VertexSet::of(4, {0, 1}), VertexSet::of(4, {1, 2}), VertexSet::of(4, {2, 3}),
                   VertexSet::of(4, {1})};
    broken.tree_edges = {{0, 1}, {1, 2}, {2, 3}};
    CHECK(!verify_tree_decomposition(p4, broken));
}

TEST_CASE("verification rejects non-trees and malformed input") {
    Graph p3 = gen::path(3);
    TreeDecomposition td;
    td.bags = {VertexSet::of(3, {0, 1}), VertexSet::of(3, {1, 2})};
    td.tree_edges = {};
    CHECK(!verify_tree_decomposition(p3, td)); // two bags, no edge: not a tree

    td.tree_edges = {{0, 5}};
    CHECK_THROWS_AS(verify_tree_decomposition(p3, td), InputError);
}

TEST_CASE("attaching a pendant path never raises treewidth beyond 1") {
    CorpusSpec spec;
    spec.max_n = 5;
    for (const Graph& g : corpus(spec)) {
        if (treewidth_exact(g).first < 1) continue;
        // attach a 3-vertex path at vertex 0
        std::uint32_t n = g.vertex_count();
        auto edges = g.edges();
        edges.emplace_back(0u, n);
        edges.emplace_back(n, n + 1);
        edges.emplace_back(n + 1, n + 2);
        Graph extended = Graph::from_edges(n + 3, edges);
        CHECK(treewidth_exact(extended).first == treewidth_exact(g).first);
    }
}

} // TEST_SUITE
