#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "longcycle/enumerate.hpp"
#include "longcycle/graph6.hpp"
#include "longcycle/validate.hpp"
#include "oracle.hpp"

using namespace longcycle;

namespace {

void check_against_oracle(const Graph& g) {
    auto expect = oracle::longest_cycles(g);
    EnumResult dfs = enumerate_longest_cycles_dfs(g);
    CHECK(dfs.cycles.cycles == expect);
    CHECK(dfs.circumference == (expect.empty() ? 0 : expect.front().length()));
    EnumResult dp = enumerate_longest_cycles_dp(g);
    CHECK(dp.cycles == dfs.cycles);
    CHECK(dp.circumference == dfs.circumference);
}

} // namespace

TEST_CASE("C6 has exactly one longest cycle of length 6") {
    EnumResult r = enumerate_longest_cycles_dfs(oracle::cycle_graph(6));
    CHECK(r.circumference == 6);
    CHECK(r.cycles.size() == 1);
    CHECK(r.cycles.cycles[0].vertices == std::vector<int>{0, 1, 2, 3, 4, 5});
}

TEST_CASE("K4 has circumference 4 with three hamiltonian cycles") {
    EnumResult r = enumerate_longest_cycles_dp(oracle::complete_graph(4));
    CHECK(r.circumference == 4);
    CHECK(r.cycles.size() == 3);
    CHECK(count_hamiltonian_cycles(oracle::complete_graph(4)) == 3);
}

TEST_CASE("edgeless graph has circumference 0 and no cycles") {
    Graph g(5);
    EnumResult dfs = enumerate_longest_cycles_dfs(g);
    CHECK(dfs.circumference == 0);
    CHECK(dfs.cycles.empty());
    EnumResult dp = enumerate_longest_cycles_dp(g);
    CHECK(dp.circumference == 0);
    CHECK(dp.cycles.empty());
}

TEST_CASE("Petersen graph: circumference 9, cycle set equal to brute force") {
    Graph g = oracle::petersen();
    auto expect = oracle::longest_cycles(g);
    CHECK(expect.front().length() == 9);
    EnumResult dfs = enumerate_longest_cycles_dfs(g);
    CHECK(dfs.circumference == 9);
    CHECK(dfs.cycles.cycles == expect);
    CHECK(dfs.cycles.size() == 20); // frozen from the brute-force oracle
    EnumResult dp = enumerate_longest_cycles_dp(g);
    CHECK(dp.cycles == dfs.cycles);
}

TEST_CASE("both algorithms match the oracle on random graphs") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 120; ++trial) {
        int n = static_cast<int>(rng() % 11);
        check_against_oracle(oracle::random_graph(n, 0.35, rng));
    }
    for (int trial = 0; trial < 30; ++trial) {
        auto g = oracle::random_regular(8 + 2 * static_cast<int>(rng() % 3), 3, rng);
        if (g) check_against_oracle(*g);
    }
}

TEST_CASE("prune flag does not change results") {
    std::mt19937 rng(555);
    EnumOptions no_prune;
    no_prune.prune_by_best = false;
    for (int trial = 0; trial < 60; ++trial) {
        int n = static_cast<int>(rng() % 10);
        Graph g = oracle::random_graph(n, 0.4, rng);
        CHECK(enumerate_longest_cycles_dfs(g).cycles ==
              enumerate_longest_cycles_dfs(g, no_prune).cycles);
    }
}

TEST_CASE("DP rejects graphs above the vertex limit") {
    DpOptions opts;
    opts.vertex_limit = 10;
    CHECK_THROWS_AS(enumerate_longest_cycles_dp(oracle::cycle_graph(12), opts), CapacityError);
    DpOptions tiny;
    tiny.memory_limit_bytes = 16;
    CHECK_THROWS_AS(enumerate_longest_cycles_dp(oracle::cycle_graph(12), tiny), CapacityError);
}

TEST_CASE("hamiltonian cycle counts on K6") {
    Graph k6 = oracle::complete_graph(6);
    CHECK(count_hamiltonian_cycles(k6) == 60);
    for (const Edge& e : k6.edges()) CHECK(count_hamiltonian_cycles(k6, e) == 24);
}

TEST_CASE("C5 has one hamiltonian cycle") {
    CHECK(count_hamiltonian_cycles(oracle::cycle_graph(5)) == 1);
}

TEST_CASE("K4 via any edge gives an even count") {
    Graph k4 = oracle::complete_graph(4);
    for (const Edge& e : k4.edges()) CHECK(count_hamiltonian_cycles(k4, e) == 2);
}

TEST_CASE("ham cycle counts match the oracle, with and without via edges") {
    std::mt19937 rng(909);
    for (int trial = 0; trial < 80; ++trial) {
        int n = 3 + static_cast<int>(rng() % 6);
        Graph g = oracle::random_graph(n, 0.55, rng);
        CHECK(count_hamiltonian_cycles(g) == oracle::count_ham_cycles(g));
        auto edges = g.edges();
        if (!edges.empty()) {
            Edge via = edges[rng() % edges.size()];
            CHECK(count_hamiltonian_cycles(g, via) == oracle::count_ham_cycles(g, via));
        }
    }
    Graph g(3);
    CHECK_THROWS_AS(count_hamiltonian_cycles(g, Edge(0, 1)), std::invalid_argument);
}

TEST_CASE("st path enumeration on a path graph") {
    Graph p3 = oracle::path_graph(3);
    auto r = enumerate_st_ham_paths(p3, 0, 2);
    CHECK(r.count == 1);
    CHECK_THROWS_AS(enumerate_st_ham_paths(p3, 1, 1), std::invalid_argument);
}

TEST_CASE("st path counts and listings match the oracle") {
    std::mt19937 rng(31415);
    for (int trial = 0; trial < 80; ++trial) {
        int n = 2 + static_cast<int>(rng() % 6);
        Graph g = oracle::random_graph(n, 0.55, rng);
        int s = static_cast<int>(rng() % n);
        int t = static_cast<int>(rng() % n);
        if (s == t) continue;
        auto expect = oracle::ham_st_paths(g, s, t);
        auto got = enumerate_st_ham_paths(g, s, t, std::nullopt, true);
        CHECK(got.count == expect.size());
        REQUIRE(got.paths.has_value());
        CHECK(*got.paths == expect);
    }
}

TEST_CASE("K6 minus an edge has 24 hamiltonian paths between the gap") {
    Graph g = oracle::complete_graph(6);
    g.remove_edge(0, 1);
    CHECK(enumerate_st_ham_paths(g, 0, 1).count == 24); // (r-1)! with r = 5
}

TEST_CASE("edge incidence: C7 all ones, K4 all twos, prism all even") {
    auto c7 = edge_cycle_incidence(oracle::cycle_graph(7));
    for (const auto& [e, c] : c7) CHECK(c == 1);
    auto k4 = edge_cycle_incidence(oracle::complete_graph(4));
    for (const auto& [e, c] : k4) CHECK(c == 2);
    auto pr = edge_cycle_incidence(oracle::prism());
    for (const auto& [e, c] : pr) CHECK(c % 2 == 0);
}

TEST_CASE("handshake identity on random graphs") {
    std::mt19937 rng(606);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 4 + static_cast<int>(rng() % 5);
        Graph g = oracle::random_graph(n, 0.5, rng);
        BigCount total = 0;
        for (const auto& [e, c] : edge_cycle_incidence(g)) total += c;
        CHECK(total == BigCount(n) * count_hamiltonian_cycles(g));
    }
}

TEST_CASE("lexicographic hamiltonian search") {
    Graph k4 = oracle::complete_graph(4);
    auto hc = find_hamiltonian_cycle(k4);
    REQUIRE(hc.has_value());
    CHECK(*hc == std::vector<int>{0, 1, 2, 3});
    CHECK(!find_hamiltonian_cycle(oracle::petersen()).has_value());
    auto hp = find_hamiltonian_path(k4, 1, 2);
    REQUIRE(hp.has_value());
    CHECK(*hp == std::vector<int>{1, 0, 3, 2});
    CHECK(is_hamiltonian(oracle::cycle_graph(8)));
}
