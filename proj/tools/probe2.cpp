// Scratch exploration: ring and family constructions.
#include <chrono>
#include <iostream>

#include "longcycle/construct.hpp"
#include "longcycle/enumerate.hpp"
#include "longcycle/graph6.hpp"
#include "longcycle/validate.hpp"

using namespace longcycle;
using Clock = std::chrono::steady_clock;

static double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

static Graph complete(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

static Graph cycle_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

static Graph prism() {
    Graph g(6);
    for (int i = 0; i < 3; ++i) {
        g.add_edge(i, (i + 1) % 3);
        g.add_edge(3 + i, 3 + (i + 1) % 3);
        g.add_edge(i, 3 + i);
    }
    return g;
}

static Graph cubic8_girth3() {
    Graph g(8);
    for (int i = 0; i < 8; ++i) g.add_edge(i, (i + 1) % 8);
    g.add_edge(0, 2);
    g.add_edge(1, 4);
    g.add_edge(3, 6);
    g.add_edge(5, 7);
    return g;
}

int main() {
    {
        MarkedGraph gp = remove_ham_edge(complete(4), 3, 3);
        std::cout << "K4-e marks: u=" << gp.u << " v=" << gp.v
                  << " dist=" << distance(gp.graph, gp.u, gp.v) << "\n";
        auto t0 = Clock::now();
        RingResult ring = build_ring(gp, 3, 3);
        std::cout << "ring r=3: |G1|=" << ring.g1.order() << " |G2|=" << ring.g2.order()
                  << " (" << ms_since(t0) << " ms)\n";
    }
    {
        MarkedGraph gp = remove_ham_edge(complete(5), 4, 3);
        auto t0 = Clock::now();
        RingResult ring = build_ring(gp, 4, 3);
        std::cout << "ring r=4: |G1|=" << ring.g1.order() << " |G2|=" << ring.g2.order()
                  << " (" << ms_since(t0) << " ms)\n";
    }
    {
        MarkedGraph gp = remove_ham_edge(cycle_graph(5), 2, 5);
        std::cout << "C5-e: u=" << gp.u << " v=" << gp.v
                  << " hampath=" << find_hamiltonian_path(gp.graph, gp.u, gp.v).has_value()
                  << "\n";
    }

    // family r=3 g=3 with the bundled-default bases
    FamilyParams p;
    p.r = 3;
    p.g = 3;
    p.base1 = complete(4);
    p.base2 = prism();
    p.base3 = cubic8_girth3();
    std::cout << "base3 g6=" << write_graph6(p.base3) << "\n";
    for (auto [ell, m] : {std::pair{1, 0}, {2, 0}, {1, 1}}) {
        p.ell = ell;
        p.m = m;
        auto t0 = Clock::now();
        FamilyResult fam = build_family(p);
        double ms_build = ms_since(t0);
        t0 = Clock::now();
        EnumResult e = enumerate_longest_cycles_dfs(fam.graph.graph);
        std::cout << "family (" << ell << "," << m << "): order=" << fam.graph.graph.order()
                  << " pred_circ=" << fam.prediction.circumference
                  << " pred_count=" << fam.prediction.count << " h=" << fam.h
                  << " | enum circ=" << e.circumference << " count=" << e.cycles.size()
                  << " build=" << ms_build << "ms enum=" << ms_since(t0) << "ms\n";
    }

    // solver round trip
    p.ell = 1;
    p.m = 0;
    std::cout << "block=" << family_block_size(p) << " n_min=" << family_min_order(p) << "\n";
    for (long long n : {52LL, 54LL, 56LL, 58LL, 60LL}) {
        auto [ell, m] = solve_family_order(n, p);
        p.ell = ell;
        p.m = m;
        FamilyResult fam = build_family(p);
        std::cout << "n=" << n << " -> (l,m)=(" << ell << "," << m
                  << ") built order=" << fam.graph.graph.order() << "\n";
    }
    return 0;
}
