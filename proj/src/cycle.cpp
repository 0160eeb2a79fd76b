#include "longcycle/cycle.hpp"

#include <algorithm>

namespace longcycle {

Cycle canonical_cycle(const std::vector<int>& seq) {
    const std::size_t len = seq.size();
    if (len < 3) throw std::invalid_argument("canonical_cycle: need at least 3 vertices");
    {
        std::vector<int> sorted = seq;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("canonical_cycle: repeated vertex");
    }
    const std::size_t start =
        static_cast<std::size_t>(std::min_element(seq.begin(), seq.end()) - seq.begin());
    std::vector<int> rotated(len);
    for (std::size_t i = 0; i < len; ++i) rotated[i] = seq[(start + i) % len];
    if (rotated[1] > rotated[len - 1])
        std::reverse(rotated.begin() + 1, rotated.end());
    return Cycle{std::move(rotated)};
}

CycleSet make_cycle_set(std::vector<Cycle> cycles) {
    std::sort(cycles.begin(), cycles.end());
    cycles.erase(std::unique(cycles.begin(), cycles.end()), cycles.end());
    CycleSet set;
    if (!cycles.empty()) {
        set.length = cycles.front().length();
        for (const Cycle& c : cycles)
            if (c.length() != set.length)
                throw std::invalid_argument("cycle set: mixed lengths");
    }
    set.cycles = std::move(cycles);
    return set;
}

bool is_hamiltonian_cycle_edge_set(const Graph& g, const std::vector<Edge>& edges) {
    const int n = g.order();
    if (n < 3 || static_cast<int>(edges.size()) != n) return false;
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (const Edge& e : edges) {
        if (!g.has_edge(e.a, e.b)) return false;
        adj[static_cast<std::size_t>(e.a)].push_back(e.b);
        adj[static_cast<std::size_t>(e.b)].push_back(e.a);
    }
    for (const auto& row : adj)
        if (row.size() != 2) return false;
    // Walk from 0; a single closed tour must visit all n vertices.
    int prev = 0;
    int cur = adj[0][0];
    int visited = 1;
    while (cur != 0) {
        int next = (adj[static_cast<std::size_t>(cur)][0] == prev)
                       ? adj[static_cast<std::size_t>(cur)][1]
                       : adj[static_cast<std::size_t>(cur)][0];
        prev = cur;
        cur = next;
        ++visited;
        if (visited > n) return false;
    }
    return visited == n;
}

} // namespace longcycle
