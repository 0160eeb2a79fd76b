#include "longcycle/validate.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>

namespace longcycle {

namespace {

// BFS from `root`; returns the best cycle-length bound seen through a
// non-tree edge (standard girth scan).
int bfs_cycle_bound(const Graph& g, int root) {
    std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
    std::vector<int> parent(static_cast<std::size_t>(g.order()), -1);
    std::queue<int> q;
    dist[static_cast<std::size_t>(root)] = 0;
    q.push(root);
    int best = std::numeric_limits<int>::max();
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : g.neighbors(u)) {
            if (dist[static_cast<std::size_t>(w)] < 0) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                parent[static_cast<std::size_t>(w)] = u;
                q.push(w);
            } else if (w != parent[static_cast<std::size_t>(u)]) {
                best = std::min(best, dist[static_cast<std::size_t>(u)] +
                                          dist[static_cast<std::size_t>(w)] + 1);
            }
        }
    }
    return best;
}

} // namespace

std::optional<int> girth(const Graph& g) {
    int best = std::numeric_limits<int>::max();
    for (int v = 0; v < g.order(); ++v) best = std::min(best, bfs_cycle_bound(g, v));
    if (best == std::numeric_limits<int>::max()) return std::nullopt;
    return best;
}

std::optional<std::vector<int>> girth_cycle(const Graph& g) {
    auto len = girth(g);
    if (!len) return std::nullopt;
    const int target = *len;
    // Lexicographically smallest canonical sequence of length `target`:
    // start at the smallest feasible vertex, extend with ascending
    // neighbors restricted to larger vertices.
    std::vector<int> path;
    std::vector<char> used(static_cast<std::size_t>(g.order()), 0);
    std::vector<int> found;
    std::function<bool(int)> extend = [&](int last) -> bool {
        if (static_cast<int>(path.size()) == target) {
            if (g.has_edge(last, path[0]) && path[1] < path.back()) {
                found = path;
                return true;
            }
            return false;
        }
        for (int w : g.neighbors(last)) {
            if (w <= path[0] || used[static_cast<std::size_t>(w)]) continue;
            used[static_cast<std::size_t>(w)] = 1;
            path.push_back(w);
            if (extend(w)) return true;
            path.pop_back();
            used[static_cast<std::size_t>(w)] = 0;
        }
        return false;
    };
    for (int s = 0; s < g.order(); ++s) {
        path.assign(1, s);
        std::fill(used.begin(), used.end(), 0);
        used[static_cast<std::size_t>(s)] = 1;
        if (extend(s)) return found;
    }
    return std::nullopt;
}

bool is_connected(const Graph& g) {
    const int n = g.order();
    if (n <= 1) return true;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::queue<int> q;
    seen[0] = 1;
    q.push(0);
    int count = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : g.neighbors(u))
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++count;
                q.push(w);
            }
    }
    return count == n;
}

std::vector<int> articulation_points(const Graph& g) {
    const int n = g.order();
    std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
    std::vector<char> cut(static_cast<std::size_t>(n), 0);
    int timer = 0;
    std::function<void(int, int)> dfs = [&](int u, int parent) {
        disc[static_cast<std::size_t>(u)] = low[static_cast<std::size_t>(u)] = timer++;
        int children = 0;
        for (int w : g.neighbors(u)) {
            if (disc[static_cast<std::size_t>(w)] < 0) {
                ++children;
                dfs(w, u);
                low[static_cast<std::size_t>(u)] =
                    std::min(low[static_cast<std::size_t>(u)], low[static_cast<std::size_t>(w)]);
                if (parent >= 0 && low[static_cast<std::size_t>(w)] >= disc[static_cast<std::size_t>(u)])
                    cut[static_cast<std::size_t>(u)] = 1;
            } else if (w != parent) {
                low[static_cast<std::size_t>(u)] =
                    std::min(low[static_cast<std::size_t>(u)], disc[static_cast<std::size_t>(w)]);
            }
        }
        if (parent < 0 && children > 1) cut[static_cast<std::size_t>(u)] = 1;
    };
    for (int v = 0; v < n; ++v)
        if (disc[static_cast<std::size_t>(v)] < 0) dfs(v, -1);
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (cut[static_cast<std::size_t>(v)]) out.push_back(v);
    return out;
}

StructureReport validate(const Graph& g) {
    StructureReport r;
    r.degrees.resize(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) r.degrees[static_cast<std::size_t>(v)] = g.degree(v);
    if (g.order() > 0) {
        int d = r.degrees[0];
        if (std::all_of(r.degrees.begin(), r.degrees.end(), [d](int x) { return x == d; }))
            r.regular = d;
    }
    r.girth = girth(g);
    r.connected = is_connected(g);
    r.two_connected = r.connected && g.order() >= 3 && articulation_points(g).empty();
    return r;
}

int distance(const Graph& g, int s, int t) {
    std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
    std::queue<int> q;
    dist[static_cast<std::size_t>(s)] = 0;
    q.push(s);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        if (u == t) return dist[static_cast<std::size_t>(u)];
        for (int w : g.neighbors(u))
            if (dist[static_cast<std::size_t>(w)] < 0) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                q.push(w);
            }
    }
    return -1;
}

} // namespace longcycle
