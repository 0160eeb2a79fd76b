#pragma once

#include <string>
#include <utility>
#include <vector>

#include "longcycle/bigcount.hpp"
#include "longcycle/graph.hpp"

namespace longcycle {

struct GadgetSpec {
    int r = 5;
};

/// Vertex layout of the attachment gadget H on 3r+1 vertices.
struct GadgetLayout {
    int u = 0, v = 1, z1 = 2, z2 = 3, z3 = 4, z4 = 5, u_prime = 6, z1_prime = 7;
    std::vector<int> x; // x_1 .. x_{r-2}
    std::vector<int> y; // y_1 .. y_{r-4}
    std::vector<int> t; // t_1 .. t_{r-1}
};

GadgetLayout gadget_layout(int r);

/// The (3r+1)-vertex gadget: two attachment vertices u, v of degree r-1,
/// everything else of degree r, marked edge e' = z1 z2.
MarkedGraph build_gadget(const GadgetSpec& spec);

/// (2r-8) ((r-4)!)^2 ((r-1)!) - the count of hamiltonian u-v paths of the
/// gadget through e'.
BigCount gadget_path_count_formula(int r);

struct SubgraphI {
    MarkedGraph graph; // marks: u = z2, v = v
    BigCount formula;  // (2r-8) ((r-4)!)^2
};

/// The induced subgraph I on {z2, z3, z4, v, x*, y*} together with its
/// hamiltonian z2-v path count formula.
SubgraphI subgraph_I_path_count(int r);

/// Removes g's marked edge and reconnects its endpoints to h's two
/// attachment vertices. The result is regular again and inherits the
/// image of h's marked edge.
MarkedGraph splice_once(const MarkedGraph& g, const MarkedGraph& h);

struct Prediction {
    long long order = 0;
    int circumference = 0;
    BigCount count;
    std::string formula;
};

struct ChainResult {
    MarkedGraph graph;
    BigCount c1; // hamiltonian cycles of g through its marked edge
    BigCount c2; // hamiltonian u-v paths of h
    BigCount c3; // hamiltonian u-v paths of h through e'
    Prediction prediction;
};

/// k-fold iterated splice; the predicted hamiltonian cycle count
/// c1 c2 c3^(k-1) is derived from counts enumerated on the inputs.
ChainResult build_chain(const MarkedGraph& g, const MarkedGraph& h, int k);

/// Removes one hamiltonian-cycle edge that avoids a girth cycle
/// (lexicographically smallest qualifying edge); the removed endpoints
/// become the marks.
MarkedGraph remove_ham_edge(const Graph& g, int r, int gth);

struct RingResult {
    Graph g1;
    Graph g2;
    std::vector<Edge> g1_ham_cycle; // explicit hamiltonian edge set of g1
    std::vector<Edge> g2_ham_cycle; // explicit hamiltonian edge set of g2
};

/// Ring of copies of G' (r copies for even r, 2r for odd r) plus the
/// rewired variant with one (even) or two (odd) extra vertices. Orders
/// differ by 1 for even r and 2 for odd r.
RingResult build_ring(const MarkedGraph& g_prime, int r, int gth);

struct FamilyParams {
    int r = 3;
    int g = 3;
    int ell = 1;
    int m = 0;
    Graph base1; // hamiltonian r-regular girth-g
    Graph base2; // same, |V| = |V(base1)| + a  (a = 1 even r, 2 odd r)
    Graph base3; // same, |V| > |V(base2)|
};

struct FamilyResult {
    MarkedGraph graph;
    Prediction prediction;
    BigCount h; // hamiltonian path count between the marks of G3'
};

/// The 2-connected non-hamiltonian family G_{l,m}: a chain of l H1
/// blocks and m H2 blocks between two end copies of G3'.
FamilyResult build_family(const FamilyParams& p);

long long family_block_size(const FamilyParams& p);   // (r-2)|V(G1')| + 2
long long family_min_order(const FamilyParams& p);    // 2|V(G3')| + block^2

/// Solves for (l, m) with build_family order exactly n; requires
/// n >= family_min_order and nr even.
std::pair<int, int> solve_family_order(long long n, const FamilyParams& p);

/// Two copies of an 18-vertex uniquely hamiltonian graph spliced onto the
/// 24-vertex four-longest-cycle graph; 60 vertices, fifty-six of degree 3
/// and four of degree 4, with a unique longest cycle.
Graph build_royle_composite(const Graph& royle18, const Graph& fig5);

} // namespace longcycle
