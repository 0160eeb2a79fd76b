#pragma once

#include <chrono>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "longcycle/bigcount.hpp"
#include "longcycle/cycle.hpp"
#include "longcycle/graph.hpp"

namespace longcycle {

enum class Algorithm { DFS, DP };

/// Result of a longest-cycle enumeration. `circumference` is 0 for
/// acyclic graphs, in which case `cycles` is empty.
struct EnumResult {
    int circumference = 0;
    CycleSet cycles;
    Algorithm algorithm = Algorithm::DFS;
    double millis = 0.0;
};

/// Raised when the subset DP would exceed its vertex or memory budget.
class CapacityError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised by counting calls whose optional deadline expired.
class DeadlineExceeded : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EnumOptions {
    /// Prune branches whose best achievable closure is strictly shorter
    /// than the best cycle found so far. Disabling enumerates every cycle
    /// and filters afterwards; both modes return the same result.
    bool prune_by_best = true;
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct DpOptions {
    int vertex_limit = 28;
    /// Ceiling for the per-anchor subset table. 0 means: use the
    /// LONGCYCLE_DP_MEM_MB environment variable, or 1 GiB.
    std::uint64_t memory_limit_bytes = 0;
};

/// Appendix algorithm 1: for each prefix {0..v} enumerate all cycles
/// through v by growing a three-vertex path at both ends, pruning a
/// branch as soon as the endpoints cannot be reconnected through
/// unvisited vertices.
EnumResult enumerate_longest_cycles_dfs(const Graph& g, const EnumOptions& opts = {});

/// Appendix algorithm 2: Held-Karp style subset DP anchored at the
/// minimum vertex of each cycle, with path reconstruction.
EnumResult enumerate_longest_cycles_dp(const Graph& g, const DpOptions& opts = {});

/// Exact hamiltonian-cycle count; restricted to cycles through `via`
/// when given. Cycles are never materialized.
BigCount count_hamiltonian_cycles(const Graph& g, std::optional<Edge> via = std::nullopt,
                                  const EnumOptions& opts = {});

struct StPathResult {
    BigCount count = 0;
    /// Present only when listing was requested; vertex sequences with s first.
    std::optional<std::vector<std::vector<int>>> paths;
};

/// Exact count (and optional listing) of hamiltonian s-t paths,
/// restricted to paths through `via` when given.
StPathResult enumerate_st_ham_paths(const Graph& g, int s, int t,
                                    std::optional<Edge> via = std::nullopt,
                                    bool list_paths = false, const EnumOptions& opts = {});

/// Per-edge hamiltonian-cycle incidence counts.
std::map<Edge, BigCount> edge_cycle_incidence(const Graph& g, const EnumOptions& opts = {});

/// Lexicographically smallest hamiltonian cycle in canonical form, if any.
std::optional<std::vector<int>> find_hamiltonian_cycle(const Graph& g);

/// Lexicographically smallest hamiltonian s-t path, if any.
std::optional<std::vector<int>> find_hamiltonian_path(const Graph& g, int s, int t);

bool is_hamiltonian(const Graph& g);

} // namespace longcycle
