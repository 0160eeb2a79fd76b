#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace longcycle {

/// Undirected edge, stored with a < b.
struct Edge {
    int a;
    int b;

    Edge() : a(0), b(0) {}
    Edge(int u, int v) : a(std::min(u, v)), b(std::max(u, v)) {}

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
/// No self-loops, no multi-edges; adjacency is kept symmetric.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_(check_order(n)) {}

    static Graph from_edges(int n, const std::vector<Edge>& edges) {
        Graph g(n);
        for (const Edge& e : edges) g.add_edge(e.a, e.b);
        return g;
    }

    int order() const { return static_cast<int>(adj_.size()); }

    int edge_count() const {
        std::size_t total = 0;
        for (const auto& nbrs : adj_) total += nbrs.size();
        return static_cast<int>(total / 2);
    }

    const std::vector<int>& neighbors(int v) const { return adj_.at(v); }

    int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }

    bool has_edge(int u, int v) const {
        if (u < 0 || v < 0 || u >= order() || v >= order()) return false;
        const auto& nbrs = adj_[u];
        return std::binary_search(nbrs.begin(), nbrs.end(), v);
    }

    /// Inserts an edge; rejects loops, out-of-range endpoints and duplicates.
    void add_edge(int u, int v) {
        if (u == v) throw std::invalid_argument("graph: self-loop rejected");
        if (u < 0 || v < 0 || u >= order() || v >= order())
            throw std::invalid_argument("graph: endpoint out of range");
        if (has_edge(u, v)) throw std::invalid_argument("graph: duplicate edge rejected");
        insert_sorted(adj_[u], v);
        insert_sorted(adj_[v], u);
    }

    void remove_edge(int u, int v) {
        if (!has_edge(u, v)) throw std::invalid_argument("graph: cannot remove absent edge");
        erase_value(adj_[u], v);
        erase_value(adj_[v], u);
    }

    /// All edges as (a < b) pairs in lexicographic order.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(static_cast<std::size_t>(edge_count()));
        for (int u = 0; u < order(); ++u)
            for (int v : adj_[u])
                if (u < v) out.push_back(Edge(u, v));
        return out;
    }

    /// Subgraph induced by `vertices`; result vertices are re-indexed
    /// 0..k-1 in the order given.
    Graph induced(const std::vector<int>& vertices) const {
        Graph g(static_cast<int>(vertices.size()));
        std::vector<int> index(order(), -1);
        for (std::size_t i = 0; i < vertices.size(); ++i) index.at(vertices[i]) = static_cast<int>(i);
        for (std::size_t i = 0; i < vertices.size(); ++i)
            for (int w : adj_[vertices[i]]) {
                int j = index[w];
                if (j >= 0 && static_cast<int>(i) < j) g.add_edge(static_cast<int>(i), j);
            }
        return g;
    }

    /// Disjoint union; vertices of `other` are shifted by order().
    Graph disjoint_union(const Graph& other) const {
        Graph g(order() + other.order());
        g.adj_ = adj_;
        g.adj_.resize(static_cast<std::size_t>(order() + other.order()));
        int off = order();
        for (int v = 0; v < other.order(); ++v) {
            auto& row = g.adj_[static_cast<std::size_t>(off + v)];
            row = other.adj_[v];
            for (int& w : row) w += off;
        }
        return g;
    }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    static int check_order(int n) {
        if (n < 0) throw std::invalid_argument("graph: negative order");
        return n;
    }
    static void insert_sorted(std::vector<int>& v, int x) {
        v.insert(std::lower_bound(v.begin(), v.end(), x), x);
    }
    static void erase_value(std::vector<int>& v, int x) {
        v.erase(std::lower_bound(v.begin(), v.end(), x));
    }

    std::vector<std::vector<int>> adj_;
};

/// Graph with the distinguished vertices u, v and an optional marked edge
/// carried through the splice constructions.
struct MarkedGraph {
    Graph graph;
    int u = 0;
    int v = 1;
    std::optional<Edge> special_edge;

    void check() const {
        if (u == v) throw std::invalid_argument("marked graph: u and v must differ");
        if (u < 0 || v < 0 || u >= graph.order() || v >= graph.order())
            throw std::invalid_argument("marked graph: mark out of range");
        if (special_edge && !graph.has_edge(special_edge->a, special_edge->b))
            throw std::invalid_argument("marked graph: special edge not present");
    }
};

} // namespace longcycle
