// Scratch exploration binary (not installed): prints the quantities the
// test suite freezes, with timings.
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

int main() {
    for (int r = 5; r <= 7; ++r) {
        auto t0 = Clock::now();
        MarkedGraph h = build_gadget(GadgetSpec{r});
        auto via = h.special_edge;
        BigCount through = enumerate_st_ham_paths(h.graph, h.u, h.v, via).count;
        double ms_through = ms_since(t0);
        t0 = Clock::now();
        BigCount total = enumerate_st_ham_paths(h.graph, h.u, h.v).count;
        double ms_total = ms_since(t0);
        std::cout << "gadget r=" << r << " order=" << h.graph.order()
                  << " through_e'=" << through << " (" << ms_through << " ms)"
                  << " formula=" << gadget_path_count_formula(r) << " total_c2=" << total
                  << " (" << ms_total << " ms)\n";
        auto I = subgraph_I_path_count(r);
        BigCount icount = enumerate_st_ham_paths(I.graph.graph, I.graph.u, I.graph.v).count;
        std::cout << "  subgraph I order=" << I.graph.graph.order()
                  << " formula=" << I.formula << " enumerated=" << icount << "\n";
    }

    // chain on K6 + gadget(5)
    Graph k6(6);
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) k6.add_edge(i, j);
    MarkedGraph g{k6, 0, 1, Edge(0, 1)};
    MarkedGraph h5 = build_gadget(GadgetSpec{5});
    for (int k = 1; k <= 2; ++k) {
        auto t0 = Clock::now();
        ChainResult chain = build_chain(g, h5, k);
        double ms_build = ms_since(t0);
        t0 = Clock::now();
        BigCount enumerated = count_hamiltonian_cycles(chain.graph.graph);
        double ms_count = ms_since(t0);
        std::cout << "chain k=" << k << " order=" << chain.graph.graph.order()
                  << " c1=" << chain.c1 << " c2=" << chain.c2 << " c3=" << chain.c3
                  << " predicted=" << chain.prediction.count << " enumerated=" << enumerated
                  << " build=" << ms_build << "ms count=" << ms_count << "ms\n";
        t0 = Clock::now();
        BigCount via_count =
            count_hamiltonian_cycles(chain.graph.graph, chain.graph.special_edge);
        std::cout << "  through new e' = " << via_count << " (" << ms_since(t0) << " ms)\n";
    }
    return 0;
}
