#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "longcycle/graph.hpp"
#include "longcycle/graph6.hpp"
#include "longcycle/validate.hpp"
#include "oracle.hpp"

using namespace longcycle;

TEST_CASE("graph basics") {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    CHECK(g.has_edge(1, 0));
    CHECK(g.degree(1) == 2);
    CHECK_THROWS_AS(g.add_edge(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 7), std::invalid_argument);
    g.remove_edge(0, 1);
    CHECK(!g.has_edge(0, 1));
    CHECK(g.edge_count() == 1);
}

TEST_CASE("graph6 decodes K4 from C~") {
    Graph g = parse_graph6("C~");
    CHECK(g.order() == 4);
    CHECK(g.edge_count() == 6);
    CHECK(g == oracle::complete_graph(4));
}

TEST_CASE("graph6 decodes the empty two-vertex graph from A?") {
    Graph g = parse_graph6("A?");
    CHECK(g.order() == 2);
    CHECK(g.edge_count() == 0);
}

TEST_CASE("graph6 encodes a single vertex as @") {
    CHECK(write_graph6(Graph(1)) == "@");
    CHECK(parse_graph6("@").order() == 1);
}

TEST_CASE("graph6 encodes K4 as C~") {
    CHECK(write_graph6(oracle::complete_graph(4)) == "C~");
}

TEST_CASE("graph6 5-cycle line starts with D and round-trips") {
    std::string line = write_graph6(oracle::cycle_graph(5));
    CHECK(line.front() == 'D');
    CHECK(line.size() == 3); // header + ceil(10/6) payload characters
    CHECK(parse_graph6(line) == oracle::cycle_graph(5));
}

TEST_CASE("graph6 accepts the >>graph6<< prefix") {
    CHECK(parse_graph6(">>graph6<<C~") == oracle::complete_graph(4));
}

TEST_CASE("graph6 rejects malformed input with byte offsets") {
    CHECK_THROWS_AS(parse_graph6("C"), Graph6ParseError);     // truncated payload
    CHECK_THROWS_AS(parse_graph6("C~~"), Graph6ParseError);   // trailing characters
    CHECK_THROWS_AS(parse_graph6("C\x1f"), Graph6ParseError); // out-of-range char
    CHECK_THROWS_AS(parse_graph6(""), Graph6ParseError);
    try {
        parse_graph6("D?");
    } catch (const Graph6ParseError& e) {
        CHECK(e.byte() == 2);
    }
}

TEST_CASE("graph6 round-trips random graphs including n > 62") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 200; ++trial) {
        int n = static_cast<int>(rng() % 20);
        Graph g = oracle::random_graph(n, 0.3, rng);
        CHECK(parse_graph6(write_graph6(g)) == g);
    }
    Graph big = oracle::random_graph(70, 0.1, rng);
    std::string line = write_graph6(big);
    CHECK(line[0] == 126);
    CHECK(parse_graph6(line) == big);
}

TEST_CASE("canonical_cycle rotates and reflects") {
    CHECK(canonical_cycle({3, 1, 2}).vertices == std::vector<int>{1, 2, 3});
    CHECK(canonical_cycle({1, 3, 2}).vertices == std::vector<int>{1, 2, 3});
    CHECK_THROWS_AS(canonical_cycle({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(canonical_cycle({1, 2, 1, 3}), std::invalid_argument);
}

TEST_CASE("canonical_cycle is invariant under rotation and reflection") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        int len = 3 + static_cast<int>(rng() % 8);
        std::vector<int> seq(static_cast<std::size_t>(len));
        for (int i = 0; i < len; ++i) seq[static_cast<std::size_t>(i)] = i * 3 + 1;
        std::shuffle(seq.begin(), seq.end(), rng);
        Cycle canon = canonical_cycle(seq);
        CHECK(canonical_cycle(canon.vertices) == canon); // idempotent
        for (int rot = 0; rot < len; ++rot) {
            std::vector<int> rotated;
            for (int i = 0; i < len; ++i)
                rotated.push_back(seq[static_cast<std::size_t>((rot + i) % len)]);
            CHECK(canonical_cycle(rotated) == canon);
            std::vector<int> reflected(rotated.rbegin(), rotated.rend());
            CHECK(canonical_cycle(reflected) == canon);
        }
    }
}

TEST_CASE("validate on the Petersen graph") {
    StructureReport r = validate(oracle::petersen());
    CHECK(r.is_regular(3));
    CHECK(r.girth == 5);
    CHECK(r.two_connected);
}

TEST_CASE("validate on the 5-cycle") {
    StructureReport r = validate(oracle::cycle_graph(5));
    CHECK(r.is_regular(2));
    CHECK(r.girth == 5);
    CHECK(r.two_connected);
}

TEST_CASE("validate on the 3-vertex path") {
    StructureReport r = validate(oracle::path_graph(3));
    CHECK(!r.girth.has_value());
    CHECK(r.connected);
    CHECK(!r.two_connected);
}

TEST_CASE("girth matches the brute-force oracle on random graphs") {
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 3 + static_cast<int>(rng() % 8);
        Graph g = oracle::random_graph(n, 0.35, rng);
        CHECK(girth(g) == oracle::girth(g));
    }
}

TEST_CASE("2-connectivity matches the definition checked by brute force") {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 1 + static_cast<int>(rng() % 10);
        Graph g = oracle::random_graph(n, 0.4, rng);
        CHECK(validate(g).two_connected == oracle::two_connected(g));
    }
}

TEST_CASE("girth_cycle returns a shortest cycle") {
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 3 + static_cast<int>(rng() % 8);
        Graph g = oracle::random_graph(n, 0.35, rng);
        auto want = oracle::girth(g);
        auto got = girth_cycle(g);
        CHECK(want.has_value() == got.has_value());
        if (got) {
            CHECK(static_cast<int>(got->size()) == *want);
            for (std::size_t i = 0; i < got->size(); ++i)
                CHECK(g.has_edge((*got)[i], (*got)[(i + 1) % got->size()]));
        }
    }
}
