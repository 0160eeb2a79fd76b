#pragma once

#include <compare>
#include <stdexcept>
#include <vector>

#include "longcycle/graph.hpp"

namespace longcycle {

/// A cycle in canonical form: the minimum vertex first, and the second
/// element smaller than the last (orientation tie-break). Two traversals
/// of the same cycle always canonicalize identically.
struct Cycle {
    std::vector<int> vertices;

    int length() const { return static_cast<int>(vertices.size()); }

    friend bool operator==(const Cycle&, const Cycle&) = default;
    friend auto operator<=>(const Cycle&, const Cycle&) = default;
};

/// Rotates/reflects a closed vertex sequence into canonical form.
/// Rejects sequences with fewer than 3 vertices or repeated vertices.
Cycle canonical_cycle(const std::vector<int>& seq);

/// Deduplicated set of cycles of one common length, kept sorted.
struct CycleSet {
    int length = 0;
    std::vector<Cycle> cycles;

    bool empty() const { return cycles.empty(); }
    std::size_t size() const { return cycles.size(); }

    friend bool operator==(const CycleSet&, const CycleSet&) = default;
};

/// Sorts, dedupes and length-checks a batch of canonical cycles.
CycleSet make_cycle_set(std::vector<Cycle> cycles);

/// True if `edges` is exactly a hamiltonian cycle of g (spanning,
/// connected, all degrees two). Used to walk-check explicit edge sets.
bool is_hamiltonian_cycle_edge_set(const Graph& g, const std::vector<Edge>& edges);

} // namespace longcycle
