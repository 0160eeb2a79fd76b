#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "longcycle/bigcount.hpp"
#include "longcycle/enumerate.hpp"
#include "longcycle/graph.hpp"

namespace longcycle {

struct CensusFilters {
    std::optional<int> regular;
    std::optional<int> girth;        // exact girth
    bool two_connected = false;
    bool triangle_free = false;
    bool non_hamiltonian = false;
};

struct CensusEntry {
    BigCount min_count;        // minimum longest-cycle count at this order
    int circumference = 0;     // circumference of the witness
    std::string witness;       // graph6 of a graph attaining the minimum
};

struct CensusResult {
    std::map<int, CensusEntry> per_order;
    std::uint64_t processed = 0;
    std::uint64_t passed = 0;
    std::uint64_t filtered = 0;
};

/// Runs the longest-cycle census over a stream of graph6 lines. Graphs
/// failing the filters are tallied and skipped. The result does not
/// depend on stream order or on the worker count.
CensusResult census(const std::vector<std::string>& graph6_lines, const CensusFilters& filters,
                    int workers = 1);

} // namespace longcycle
