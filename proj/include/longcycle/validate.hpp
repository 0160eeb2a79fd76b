#pragma once

#include <optional>
#include <vector>

#include "longcycle/graph.hpp"

namespace longcycle {

/// Structural facts about a graph. `girth` is absent for acyclic graphs.
struct StructureReport {
    std::vector<int> degrees;
    std::optional<int> regular;     // r if the graph is r-regular (n > 0)
    std::optional<int> girth;
    bool connected = false;
    bool two_connected = false;     // connected, n >= 3, no articulation vertex

    bool is_regular(int r) const { return regular && *regular == r; }
    bool triangle_free() const { return !girth || *girth > 3; }
};

StructureReport validate(const Graph& g);

/// Shortest-cycle length via BFS from every vertex; absent if acyclic.
std::optional<int> girth(const Graph& g);

/// One shortest cycle as a vertex sequence (canonical-form minimal among
/// shortest cycles); absent if acyclic.
std::optional<std::vector<int>> girth_cycle(const Graph& g);

bool is_connected(const Graph& g);

/// Articulation vertices (Tarjan lowlink).
std::vector<int> articulation_points(const Graph& g);

/// BFS distance from s to t; -1 if unreachable.
int distance(const Graph& g, int s, int t);

} // namespace longcycle
