#include <doctest.h>

#include "sepdepth/errors.hpp"
#include "sepdepth/generators.hpp"
#include "sepdepth/oracle.hpp"
#include "sepdepth/pace_io.hpp"
#include "sepdepth/prng.hpp"
#include "sepdepth/td_solver.hpp"

using namespace sepdepth;

TEST_SUITE("pace_io") {

TEST_CASE("gr parsing") {
    GrDocument doc = parse_gr("p tdp 2 1\n1 2\n");
    CHECK(doc.n == 2);
    CHECK(doc.edges.size() == 1);
    CHECK(doc.edges[0] == std::pair<std::uint32_t, std::uint32_t>{1, 2});

    // comments and blank lines change nothing
    GrDocument with_comments = parse_gr("c hello\np tdp 2 1\nc mid\n\n1 2\nc end\n");
    CHECK(to_graph(with_comments) == to_graph(doc));
    CHECK(with_comments.comments.size() == 3);

    // CRLF input parses identically
    CHECK(to_graph(parse_gr("p tdp 2 1\r\n1 2\r\n")) == to_graph(doc));

    // duplicates are folded and counted
    GrDocument dup = parse_gr("p tdp 3 3\n1 2\n2 1\n2 3\n");
    CHECK(dup.edges.size() == 2);
    CHECK(dup.duplicates_removed == 1);
}

TEST_CASE("gr parse errors carry line numbers") {
    CHECK_THROWS_AS(parse_gr("p tdp 2 1\n1 3\n"), ParseError);
    try {
        parse_gr("p tdp 2 1\n1 3\n");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
    }
    CHECK_THROWS_AS(parse_gr("1 2\n"), ParseError);            // edge before header
    CHECK_THROWS_AS(parse_gr("p tdp 2 1\n1 2 3\n"), ParseError);
    CHECK_THROWS_AS(parse_gr("p tdp 2 2\n1 2\n"), ParseError); // fewer edges than declared
    CHECK_THROWS_AS(parse_gr("p tdp 2 1\n1 1\n"), ParseError); // self loop
    CHECK_THROWS_AS(parse_gr(""), ParseError);
    CHECK_THROWS_AS(parse_gr("p xyz 2 1\n1 2\n"), ParseError);
}

TEST_CASE("gr round trips") {
    CorpusSpec rnd;
    rnd.mode = CorpusSpec::Mode::Random;
    rnd.min_n = 1;
    rnd.max_n = 12;
    rnd.samples = 50;
    rnd.seed = 9;
    for (const Graph& g : corpus(rnd)) {
        GrDocument doc = from_graph(g);
        std::string text = write_gr(doc);
        CHECK(to_graph(parse_gr(text)) == g);
        CHECK(write_gr(parse_gr(text)) == text); // normalized text is a fixpoint
    }
    Graph empty = Graph::from_edges(0, {});
    CHECK(to_graph(parse_gr(write_gr(from_graph(empty)))) == empty);
}

TEST_CASE("tree documents") {
    // P_3 rooted at the middle vertex
    Graph p3 = gen::path(3);
    auto result = treedepth(p3);
    CHECK(write_tree(result.decomposition) == "2\n2\n0\n2\n");

    auto single = treedepth(gen::path(1));
    CHECK(write_tree(single.decomposition) == "1\n0\n");

    TreeDocument doc = parse_tree("2\n2\n0\n2\n", 3);
    CHECK(doc.depth == 2);
    CHECK(doc.parent == std::vector<std::uint32_t>{2, 0, 2});
    TreedepthDecomposition t = to_decomposition(doc);
    CHECK(t.parent == result.decomposition.parent);

    // write/parse round trip on random instances
    CorpusSpec rnd;
    rnd.mode = CorpusSpec::Mode::Random;
    rnd.min_n = 2;
    rnd.max_n = 10;
    rnd.samples = 25;
    rnd.seed = 77;
    for (const Graph& g : corpus(rnd)) {
        auto r = treedepth(g);
        TreeDocument round = parse_tree(write_tree(r.decomposition), g.vertex_count());
        CHECK(to_decomposition(round).parent == r.decomposition.parent);
        CHECK(round.depth == r.treedepth);
    }
}

TEST_CASE("malformed input only ever raises parse errors") {
    SplitMix64 rng(20240818);
    const std::string alphabet = "0123456789 ptd\ncx-";
    for (int rep = 0; rep < 500; ++rep) {
        std::string text;
        auto len = static_cast<std::size_t>(rng.next_below(60));
        for (std::size_t i = 0; i < len; ++i)
            text += alphabet[static_cast<std::size_t>(rng.next_below(alphabet.size()))];
        try {
            (void)parse_gr(text);
        } catch (const ParseError&) {
        }
        try {
            (void)parse_tree(text, static_cast<std::uint32_t>(rng.next_below(6)));
        } catch (const ParseError&) {
        }
    }
}

TEST_CASE("tree parse errors") {
    CHECK_THROWS_AS(parse_tree("2\n2\n0\n", 3), ParseError);      // missing a parent line
    CHECK_THROWS_AS(parse_tree("2\n2\n0\n2\n1\n", 3), ParseError); // one too many
    CHECK_THROWS_AS(parse_tree("2\n4\n0\n2\n", 3), ParseError);   // parent out of range
    CHECK_THROWS_AS(parse_tree("1\n1\n", 1), ParseError);         // self-parent
    CHECK_THROWS_AS(parse_tree("2\n2\n1\n", 2), ParseError);      // two-cycle
    CHECK_THROWS_AS(parse_tree("", 0), ParseError);               // no depth line
    CHECK_THROWS_AS(parse_tree("x\n", 0), ParseError);
}

} // TEST_SUITE
