#include "longcycle/construct.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "longcycle/bounds.hpp"
#include "longcycle/enumerate.hpp"
#include "longcycle/validate.hpp"

namespace longcycle {

namespace {

std::vector<Edge> path_edges(const std::vector<int>& path) {
    std::vector<Edge> out;
    out.reserve(path.size() - 1);
    for (std::size_t i = 0; i + 1 < path.size(); ++i) out.push_back(Edge(path[i], path[i + 1]));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Edge> cycle_edges(const std::vector<int>& cyc) {
    std::vector<Edge> out = path_edges(cyc);
    out.push_back(Edge(cyc.front(), cyc.back()));
    std::sort(out.begin(), out.end());
    return out;
}

Edge shift(const Edge& e, int off) { return Edge(e.a + off, e.b + off); }

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument(msg);
}

void post(bool ok, const std::string& msg) {
    if (!ok) throw std::logic_error("construction postcondition failed: " + msg);
}

} // namespace

GadgetLayout gadget_layout(int r) {
    require(r >= 5, "gadget: need r >= 5");
    GadgetLayout l;
    int next = 8;
    for (int i = 1; i <= r - 2; ++i) l.x.push_back(next++);
    for (int j = 1; j <= r - 4; ++j) l.y.push_back(next++);
    for (int k = 1; k <= r - 1; ++k) l.t.push_back(next++);
    return l;
}

MarkedGraph build_gadget(const GadgetSpec& spec) {
    const int r = spec.r;
    require(r >= 5, "gadget: need r >= 5");
    const GadgetLayout l = gadget_layout(r);
    Graph g(3 * r + 1);

    g.add_edge(l.u, l.u_prime);
    for (int xi : l.x) g.add_edge(l.u, xi);

    g.add_edge(l.v, l.z3);
    g.add_edge(l.v, l.z4);
    for (std::size_t i = 1; i < l.x.size(); ++i) g.add_edge(l.v, l.x[i]); // x_2 .. x_{r-2}

    g.add_edge(l.z1, l.z1_prime);
    g.add_edge(l.z1, l.z2);
    for (int xi : l.x) g.add_edge(l.z1, xi);

    g.add_edge(l.z2, l.z3);
    g.add_edge(l.z2, l.z4);
    for (std::size_t i = 0; i + 1 < l.x.size(); ++i) g.add_edge(l.z2, l.x[i]); // x_1 .. x_{r-3}

    g.add_edge(l.z3, l.z4);
    g.add_edge(l.z3, l.x.front());
    for (int yj : l.y) g.add_edge(l.z3, yj);

    g.add_edge(l.z4, l.x.back());
    for (int yj : l.y) g.add_edge(l.z4, yj);

    for (int tk : l.t) {
        g.add_edge(l.u_prime, tk);
        g.add_edge(l.z1_prime, tk);
    }
    for (std::size_t i = 0; i < l.t.size(); ++i)
        for (std::size_t j = i + 1; j < l.t.size(); ++j) g.add_edge(l.t[i], l.t[j]);

    for (int xi : l.x)
        for (int yj : l.y) g.add_edge(xi, yj);

    post(g.order() == 3 * r + 1, "gadget order");
    post(g.degree(l.u) == r - 1 && g.degree(l.v) == r - 1, "gadget mark degrees");
    for (int w = 0; w < g.order(); ++w)
        if (w != l.u && w != l.v) post(g.degree(w) == r, "gadget interior degree");

    MarkedGraph mg{std::move(g), l.u, l.v, Edge(l.z1, l.z2)};
    mg.check();
    return mg;
}

BigCount gadget_path_count_formula(int r) {
    require(r >= 5, "gadget formula: need r >= 5");
    return BigCount(2 * r - 8) * bigpow(factorial(r - 4), 2) * factorial(r - 1);
}

SubgraphI subgraph_I_path_count(int r) {
    require(r >= 5, "subgraph I: need r >= 5");
    MarkedGraph gadget = build_gadget(GadgetSpec{r});
    const GadgetLayout l = gadget_layout(r);
    std::vector<int> keep{l.z2, l.z3, l.z4, l.v};
    keep.insert(keep.end(), l.x.begin(), l.x.end());
    keep.insert(keep.end(), l.y.begin(), l.y.end());
    SubgraphI out;
    out.graph.graph = gadget.graph.induced(keep);
    out.graph.u = 0; // z2
    out.graph.v = 3; // v
    out.graph.check();
    out.formula = BigCount(2 * r - 8) * bigpow(factorial(r - 4), 2);
    post(out.graph.graph.order() == 2 * r - 2, "subgraph I order");
    return out;
}

MarkedGraph splice_once(const MarkedGraph& g, const MarkedGraph& h) {
    g.check();
    h.check();
    require(g.special_edge.has_value(), "splice: g needs a marked edge");

    // Infer r from h: exactly two vertices (the marks) of degree r-1.
    int r = 0;
    for (int v = 0; v < h.graph.order(); ++v) r = std::max(r, h.graph.degree(v));
    for (int v = 0; v < h.graph.order(); ++v) {
        int expect = (v == h.u || v == h.v) ? r - 1 : r;
        require(h.graph.degree(v) == expect,
                "splice: h must have exactly two degree-(r-1) vertices at its marks");
    }
    StructureReport sg = validate(g.graph);
    require(sg.is_regular(r), "splice: g must be r-regular with the same r as h");

    const Edge e = *g.special_edge;
    const int off = g.graph.order();
    Graph merged = g.graph.disjoint_union(h.graph);
    merged.remove_edge(e.a, e.b);
    merged.add_edge(e.a, off + h.u);
    merged.add_edge(e.b, off + h.v);

    MarkedGraph out;
    out.graph = std::move(merged);
    out.u = off + h.u;
    out.v = off + h.v;
    require(h.special_edge.has_value(), "splice: h needs a marked edge e'");
    out.special_edge = shift(*h.special_edge, off);
    out.check();

    StructureReport so = validate(out.graph);
    post(so.is_regular(r), "splice output regular");
    post(out.graph.order() == g.graph.order() + h.graph.order(), "splice output order");
    return out;
}

ChainResult build_chain(const MarkedGraph& g, const MarkedGraph& h, int k) {
    require(k >= 1, "chain: need k >= 1");
    require(g.special_edge.has_value(), "chain: g needs a marked edge");
    require(h.special_edge.has_value(), "chain: h needs a marked edge");

    ChainResult res;
    res.c1 = count_hamiltonian_cycles(g.graph, g.special_edge);
    res.c2 = enumerate_st_ham_paths(h.graph, h.u, h.v).count;
    res.c3 = enumerate_st_ham_paths(h.graph, h.u, h.v, h.special_edge).count;

    MarkedGraph cur = g;
    for (int i = 0; i < k; ++i) cur = splice_once(cur, h);
    res.graph = std::move(cur);

    res.prediction.order = g.graph.order() + static_cast<long long>(k) * h.graph.order();
    res.prediction.circumference = static_cast<int>(res.prediction.order);
    res.prediction.count = predicted_chain_count(res.c1, res.c2, res.c3, k);
    res.prediction.formula = "c1*c2*c3^(k-1)";
    post(res.graph.graph.order() == res.prediction.order, "chain order");
    return res;
}

MarkedGraph remove_ham_edge(const Graph& g, int r, int gth) {
    StructureReport sr = validate(g);
    require(sr.is_regular(r), "remove_ham_edge: input not r-regular");
    require(sr.girth && *sr.girth == gth, "remove_ham_edge: input girth mismatch");
    require(sr.connected, "remove_ham_edge: input not connected");

    auto ham = find_hamiltonian_cycle(g);
    require(ham.has_value(), "remove_ham_edge: input not hamiltonian");
    auto short_cycle = girth_cycle(g);
    require(short_cycle.has_value(), "remove_ham_edge: no girth cycle");

    const std::vector<Edge> e2 = cycle_edges(*ham);
    const std::vector<Edge> e1 = cycle_edges(*short_cycle);
    std::vector<Edge> candidates;
    std::set_difference(e2.begin(), e2.end(), e1.begin(), e1.end(),
                        std::back_inserter(candidates));
    // For a cycle graph the girth cycle is the hamiltonian cycle; any
    // cycle edge qualifies then.
    const Edge chosen = candidates.empty() ? e2.front() : candidates.front();

    Graph out = g;
    out.remove_edge(chosen.a, chosen.b);
    MarkedGraph mg{std::move(out), chosen.a, chosen.b, std::nullopt};

    post(mg.graph.degree(mg.u) == r - 1 && mg.graph.degree(mg.v) == r - 1,
         "remove_ham_edge mark degrees");
    post(distance(mg.graph, mg.u, mg.v) >= gth - 1, "remove_ham_edge mark distance");
    post(find_hamiltonian_path(mg.graph, mg.u, mg.v).has_value(),
         "remove_ham_edge hamiltonian u-v path");
    auto g2 = girth(mg.graph);
    if (g2)
        post(*g2 == gth, "remove_ham_edge girth");
    else
        post(r == 2, "remove_ham_edge girth lost");
    return mg;
}

RingResult build_ring(const MarkedGraph& g_prime, int r, int gth) {
    require(r >= 3, "ring: need r >= 3");
    g_prime.check();
    const Graph& base = g_prime.graph;
    const int N = base.order();

    auto hpath = find_hamiltonian_path(base, g_prime.u, g_prime.v);
    require(hpath.has_value(), "ring: G' lacks a hamiltonian u-v path");
    const std::vector<Edge> hedges = path_edges(*hpath);

    const Edge a_edge = hedges.front(); // lex smallest path edge
    std::vector<Edge> all = base.edges();
    std::vector<Edge> spare;
    std::set_difference(all.begin(), all.end(), hedges.begin(), hedges.end(),
                        std::back_inserter(spare));
    require(!spare.empty(), "ring: G' has no edge outside the hamiltonian path");
    const Edge b_edge = spare.front();

    const int copies = (r % 2 == 0) ? r : 2 * r;
    Graph g1(copies * N);
    for (int c = 0; c < copies; ++c) {
        const int off = c * N;
        for (const Edge& e : all) g1.add_edge(e.a + off, e.b + off);
    }
    std::vector<Edge> ring_edges;
    for (int c = 0; c < copies; ++c)
        ring_edges.push_back(Edge(c * N + g_prime.v, ((c + 1) % copies) * N + g_prime.u));
    for (const Edge& e : ring_edges) g1.add_edge(e.a, e.b);

    RingResult res;
    res.g1_ham_cycle = ring_edges;
    for (int c = 0; c < copies; ++c)
        for (const Edge& e : hedges) res.g1_ham_cycle.push_back(shift(e, c * N));
    std::sort(res.g1_ham_cycle.begin(), res.g1_ham_cycle.end());

    // Rewired variant.
    Graph g2 = g1;
    std::vector<Edge> removed;
    if (r % 2 == 0) {
        const int w = copies * N;
        Graph grown(copies * N + 1);
        for (const Edge& e : g2.edges()) grown.add_edge(e.a, e.b);
        grown.remove_edge(a_edge.a, a_edge.b);
        grown.add_edge(w, a_edge.a);
        grown.add_edge(w, a_edge.b);
        for (int c = 2; c <= r - 2; c += 2) {
            Edge b = shift(b_edge, c * N);
            grown.remove_edge(b.a, b.b);
            grown.add_edge(w, b.a);
            grown.add_edge(w, b.b);
        }
        g2 = std::move(grown);
        res.g2_ham_cycle = res.g1_ham_cycle;
        res.g2_ham_cycle.erase(
            std::find(res.g2_ham_cycle.begin(), res.g2_ham_cycle.end(), a_edge));
        res.g2_ham_cycle.push_back(Edge(w, a_edge.a));
        res.g2_ham_cycle.push_back(Edge(w, a_edge.b));
    } else {
        const int w = copies * N;
        const int x = copies * N + 1;
        Graph grown(copies * N + 2);
        for (const Edge& e : g2.edges()) grown.add_edge(e.a, e.b);
        const Edge a0 = a_edge;
        const Edge a_far = shift(a_edge, (2 * r - 2) * N);
        grown.remove_edge(a0.a, a0.b);
        grown.remove_edge(a_far.a, a_far.b);
        grown.add_edge(w, a0.a);
        grown.add_edge(w, a0.b);
        grown.add_edge(x, a_far.a);
        grown.add_edge(x, a_far.b);
        for (int c = 2; c <= 2 * r - 4; c += 2) {
            Edge b = shift(b_edge, c * N);
            grown.remove_edge(b.a, b.b);
            // copy 2 splits between w and x; middle copies go to w below
            // r-1 and to x above r.
            if (c == 2) {
                grown.add_edge(w, b.b); // t_2'
                grown.add_edge(x, b.a); // s_2'
            } else if (c <= r - 1) {
                grown.add_edge(w, b.a);
                grown.add_edge(w, b.b);
            } else {
                grown.add_edge(x, b.a);
                grown.add_edge(x, b.b);
            }
        }
        g2 = std::move(grown);
        res.g2_ham_cycle = res.g1_ham_cycle;
        res.g2_ham_cycle.erase(std::find(res.g2_ham_cycle.begin(), res.g2_ham_cycle.end(), a0));
        res.g2_ham_cycle.erase(
            std::find(res.g2_ham_cycle.begin(), res.g2_ham_cycle.end(), a_far));
        res.g2_ham_cycle.push_back(Edge(w, a0.a));
        res.g2_ham_cycle.push_back(Edge(w, a0.b));
        res.g2_ham_cycle.push_back(Edge(x, a_far.a));
        res.g2_ham_cycle.push_back(Edge(x, a_far.b));
    }
    std::sort(res.g2_ham_cycle.begin(), res.g2_ham_cycle.end());
    res.g1 = std::move(g1);
    res.g2 = std::move(g2);

    for (const Graph* g : {&res.g1, &res.g2}) {
        StructureReport sr = validate(*g);
        post(sr.is_regular(r), "ring output regular");
        post(sr.girth && *sr.girth == gth, "ring output girth");
    }
    post(res.g2.order() - res.g1.order() == (r % 2 == 0 ? 1 : 2), "ring order gap");
    post(is_hamiltonian_cycle_edge_set(res.g1, res.g1_ham_cycle), "ring g1 hamiltonian");
    post(is_hamiltonian_cycle_edge_set(res.g2, res.g2_ham_cycle), "ring g2 hamiltonian");
    return res;
}

long long family_block_size(const FamilyParams& p) {
    return static_cast<long long>(p.r - 2) * p.base1.order() + 2;
}

long long family_min_order(const FamilyParams& p) {
    const long long b = family_block_size(p);
    return 2LL * p.base3.order() + b * b;
}

namespace {

struct BlockMarks {
    int w; // chain vertex on the u side
    int x; // chain vertex on the v side
};

// Appends a block (r-2 copies of the marked part, one possibly swapped
// for `swap_in`, plus two hubs) to `g`; returns the hub marks.
BlockMarks append_block(Graph& g, const MarkedGraph& part, const MarkedGraph* swap_in, int r) {
    std::vector<int> u_marks, v_marks;
    for (int c = 0; c < r - 2; ++c) {
        const MarkedGraph& piece = (swap_in && c == r - 3) ? *swap_in : part;
        const int off = g.order();
        g = g.disjoint_union(piece.graph);
        u_marks.push_back(off + piece.u);
        v_marks.push_back(off + piece.v);
    }
    Graph grown(g.order() + 2);
    for (const Edge& e : g.edges()) grown.add_edge(e.a, e.b);
    const int hub_u = g.order();
    const int hub_v = g.order() + 1;
    for (int um : u_marks) grown.add_edge(hub_u, um);
    for (int vm : v_marks) grown.add_edge(hub_v, vm);
    g = std::move(grown);
    return BlockMarks{hub_u, hub_v};
}

} // namespace

FamilyResult build_family(const FamilyParams& p) {
    require(p.r >= 3 && p.g >= 3, "family: need r, g >= 3");
    require(p.ell >= 0 && p.m >= 0 && p.ell + p.m >= 1, "family: need ell, m >= 0, ell+m >= 1");
    const int a = (p.r % 2 == 0) ? 1 : 2;
    require(p.base2.order() - p.base1.order() == a, "family: |V(G2)| must be |V(G1)| + a");
    require(p.base3.order() > p.base2.order(), "family: |V(G3)| must exceed |V(G2)|");
    for (const Graph* base : {&p.base1, &p.base2, &p.base3}) {
        StructureReport sr = validate(*base);
        require(sr.is_regular(p.r), "family: base not r-regular");
        require(sr.girth && *sr.girth == p.g, "family: base girth mismatch");
        require(is_hamiltonian(*base), "family: base not hamiltonian");
    }

    const MarkedGraph g1p = remove_ham_edge(p.base1, p.r, p.g);
    const MarkedGraph g2p = remove_ham_edge(p.base2, p.r, p.g);
    const MarkedGraph g3p = remove_ham_edge(p.base3, p.r, p.g);

    const BigCount h = enumerate_st_ham_paths(g3p.graph, g3p.u, g3p.v).count;

    Graph g(0);
    std::vector<BlockMarks> marks;
    // leading end copy of G3'
    {
        g = g.disjoint_union(g3p.graph);
        marks.push_back(BlockMarks{g3p.u, g3p.v});
    }
    for (int j = 0; j < p.ell; ++j) marks.push_back(append_block(g, g1p, nullptr, p.r));
    for (int k = 0; k < p.m; ++k) marks.push_back(append_block(g, g1p, &g2p, p.r));
    {
        const int off = g.order();
        g = g.disjoint_union(g3p.graph);
        marks.push_back(BlockMarks{off + g3p.u, off + g3p.v});
    }
    for (std::size_t i = 0; i + 1 < marks.size(); ++i) {
        g.add_edge(marks[i].w, marks[i + 1].w);
        g.add_edge(marks[i].x, marks[i + 1].x);
    }

    FamilyResult res;
    res.h = h;
    res.graph.graph = std::move(g);
    res.graph.u = marks.front().w;
    res.graph.v = marks.back().x;
    res.graph.special_edge = std::nullopt;
    res.graph.check();

    res.prediction.order = 2LL * p.base3.order() +
                           static_cast<long long>(p.ell + p.m) * family_block_size(p) +
                           static_cast<long long>(a) * p.m;
    res.prediction.circumference = 2 * (p.ell + p.m + p.base3.order());
    res.prediction.count = h * h;
    res.prediction.formula = "h^2";

    post(res.graph.graph.order() == res.prediction.order, "family order");
    StructureReport sr = validate(res.graph.graph);
    post(sr.is_regular(p.r), "family output regular");
    post(sr.girth && *sr.girth == p.g, "family output girth");
    post(sr.two_connected, "family output 2-connected");
    post(!is_hamiltonian(res.graph.graph), "family output non-hamiltonian");
    return res;
}

std::pair<int, int> solve_family_order(long long n, const FamilyParams& p) {
    const long long block = family_block_size(p);
    const long long n_min = family_min_order(p);
    require(n >= n_min, "solve_family_order: n below n_{r,g} = " + std::to_string(n_min));
    require((n * p.r) % 2 == 0, "solve_family_order: nr must be even");
    const int a = (p.r % 2 == 0) ? 1 : 2;
    const long long rem = n - 2LL * p.base3.order();
    const long long q1 = rem / block;
    const long long r1 = rem % block;
    post(r1 % a == 0, "solve_family_order: a divides r1");
    const long long m = r1 / a;
    const long long ell = q1 - m;
    post(ell >= 0 && ell + m >= 1, "solve_family_order: nonnegative solution");
    return {static_cast<int>(ell), static_cast<int>(m)};
}

Graph build_royle_composite(const Graph& royle18, const Graph& fig5) {
    StructureReport rr = validate(royle18);
    require(royle18.order() == 18, "composite: base must have 18 vertices");
    int deg3 = 0, deg4 = 0;
    for (int d : rr.degrees) {
        if (d == 3) ++deg3;
        if (d == 4) ++deg4;
    }
    require(deg3 == 16 && deg4 == 2, "composite: base degrees must be 3^16 4^2");
    require(rr.triangle_free(), "composite: base must be triangle-free");
    require(count_hamiltonian_cycles(royle18) == 1, "composite: base must be uniquely hamiltonian");
    require(fig5.order() == 24, "composite: core must have 24 vertices");
    require(fig5.has_edge(1, 2) && fig5.has_edge(16, 17), "composite: core splice edges missing");

    auto uhc = find_hamiltonian_cycle(royle18);
    const Edge cut = cycle_edges(*uhc).front();

    Graph g = fig5;
    g = g.disjoint_union(royle18); // copy 1 at offset 24
    g = g.disjoint_union(royle18); // copy 2 at offset 42
    g.remove_edge(1, 2);
    g.remove_edge(16, 17);
    g.remove_edge(24 + cut.a, 24 + cut.b);
    g.remove_edge(42 + cut.a, 42 + cut.b);
    g.add_edge(1, 24 + cut.a);
    g.add_edge(2, 24 + cut.b);
    g.add_edge(16, 42 + cut.a);
    g.add_edge(17, 42 + cut.b);

    StructureReport sr = validate(g);
    post(g.order() == 60, "composite order");
    int d3 = 0, d4 = 0;
    for (int d : sr.degrees) {
        if (d == 3) ++d3;
        if (d == 4) ++d4;
    }
    post(d3 == 56 && d4 == 4, "composite degrees");
    post(sr.triangle_free(), "composite triangle-free");
    post(sr.two_connected, "composite 2-connected");
    return g;
}

} // namespace longcycle
