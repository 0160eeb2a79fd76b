#pragma once

// Test-only brute-force oracles, deliberately independent of the library
// search code: plain recursion, no bitmasks, no pruning beyond the
// definition of the objects being counted.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "longcycle/cycle.hpp"
#include "longcycle/graph.hpp"

namespace oracle {

using longcycle::Cycle;
using longcycle::Edge;
using longcycle::Graph;

// Every simple cycle, as canonical forms. A cycle is generated once by
// anchoring at its smallest vertex and fixing the orientation.
inline std::vector<Cycle> all_cycles(const Graph& g) {
    std::vector<Cycle> out;
    const int n = g.order();
    std::vector<int> path;
    std::vector<char> used(static_cast<std::size_t>(n), 0);

    std::function<void()> rec = [&]() {
        int last = path.back();
        for (int w : g.neighbors(last)) {
            if (w == path[0] && path.size() >= 3 && path[1] < path.back()) {
                out.push_back(longcycle::canonical_cycle(path));
            }
            if (w <= path[0] || used[static_cast<std::size_t>(w)]) continue;
            used[static_cast<std::size_t>(w)] = 1;
            path.push_back(w);
            rec();
            path.pop_back();
            used[static_cast<std::size_t>(w)] = 0;
        }
    };
    for (int s = 0; s < n; ++s) {
        path.assign(1, s);
        std::fill(used.begin(), used.end(), 0);
        used[static_cast<std::size_t>(s)] = 1;
        rec();
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<Cycle> longest_cycles(const Graph& g) {
    auto cycles = all_cycles(g);
    int best = 0;
    for (const Cycle& c : cycles) best = std::max(best, c.length());
    std::vector<Cycle> out;
    for (const Cycle& c : cycles)
        if (c.length() == best) out.push_back(c);
    return out;
}

inline std::optional<int> girth(const Graph& g) {
    auto cycles = all_cycles(g);
    if (cycles.empty()) return std::nullopt;
    int best = cycles.front().length();
    for (const Cycle& c : cycles) best = std::min(best, c.length());
    return best;
}

inline std::uint64_t count_ham_cycles(const Graph& g, std::optional<Edge> via = std::nullopt) {
    std::uint64_t count = 0;
    for (const Cycle& c : all_cycles(g)) {
        if (c.length() != g.order()) continue;
        if (via) {
            bool hit = false;
            for (int i = 0; i < c.length(); ++i) {
                Edge e(c.vertices[static_cast<std::size_t>(i)],
                       c.vertices[static_cast<std::size_t>((i + 1) % c.length())]);
                if (e == *via) hit = true;
            }
            if (!hit) continue;
        }
        ++count;
    }
    return count;
}

// Every hamiltonian s-t path, as vertex sequences starting at s.
inline std::vector<std::vector<int>> ham_st_paths(const Graph& g, int s, int t) {
    std::vector<std::vector<int>> out;
    const int n = g.order();
    std::vector<int> path{s};
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    used[static_cast<std::size_t>(s)] = 1;
    std::function<void()> rec = [&]() {
        if (static_cast<int>(path.size()) == n) {
            if (path.back() == t) out.push_back(path);
            return;
        }
        for (int w : g.neighbors(path.back())) {
            if (used[static_cast<std::size_t>(w)]) continue;
            used[static_cast<std::size_t>(w)] = 1;
            path.push_back(w);
            rec();
            path.pop_back();
            used[static_cast<std::size_t>(w)] = 0;
        }
    };
    rec();
    std::sort(out.begin(), out.end());
    return out;
}

// Definition-level 2-connectivity: remove each vertex, check by flood fill.
inline bool two_connected(const Graph& g) {
    const int n = g.order();
    if (n < 3) return false;
    auto connected_without = [&](int skip) {
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        int start = skip == 0 ? 1 : 0;
        std::vector<int> stack{start};
        seen[static_cast<std::size_t>(start)] = 1;
        int count = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(u)) {
                if (w == skip || seen[static_cast<std::size_t>(w)]) continue;
                seen[static_cast<std::size_t>(w)] = 1;
                ++count;
                stack.push_back(w);
            }
        }
        return count == (skip < 0 ? n : n - 1);
    };
    if (!connected_without(-1)) return false;
    for (int v = 0; v < n; ++v)
        if (!connected_without(v)) return false;
    return true;
}

// --- named test graphs -------------------------------------------------

inline Graph cycle_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

inline Graph complete_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

inline Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline Graph petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);          // outer pentagon
        g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        g.add_edge(i, 5 + i);                // spokes
    }
    return g;
}

inline Graph prism() { // K3 x K2
    Graph g(6);
    for (int i = 0; i < 3; ++i) {
        g.add_edge(i, (i + 1) % 3);
        g.add_edge(3 + i, 3 + (i + 1) % 3);
        g.add_edge(i, 3 + i);
    }
    return g;
}

inline Graph random_graph(int n, double p, std::mt19937& rng) {
    Graph g(n);
    std::bernoulli_distribution coin(p);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) g.add_edge(i, j);
    return g;
}

// Random r-regular graph via the pairing model with rejection.
inline std::optional<Graph> random_regular(int n, int r, std::mt19937& rng) {
    if ((n * r) % 2 != 0 || r >= n) return std::nullopt;
    for (int attempt = 0; attempt < 200; ++attempt) {
        std::vector<int> stubs;
        for (int v = 0; v < n; ++v)
            for (int i = 0; i < r; ++i) stubs.push_back(v);
        std::shuffle(stubs.begin(), stubs.end(), rng);
        Graph g(n);
        bool ok = true;
        for (std::size_t i = 0; ok && i < stubs.size(); i += 2) {
            int a = stubs[i], b = stubs[i + 1];
            if (a == b || g.has_edge(a, b))
                ok = false;
            else
                g.add_edge(a, b);
        }
        if (ok) return g;
    }
    return std::nullopt;
}

} // namespace oracle
