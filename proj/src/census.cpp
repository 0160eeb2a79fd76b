#include "longcycle/census.hpp"

#include <atomic>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "longcycle/graph6.hpp"
#include "longcycle/validate.hpp"

namespace longcycle {

namespace {

struct PerGraph {
    bool passed = false;
    int n = 0;
    int circumference = 0;
    BigCount count;
    std::string g6;
};

PerGraph inspect(const std::string& line, const CensusFilters& filters) {
    PerGraph out;
    Graph g = parse_graph6(line);
    out.n = g.order();
    out.g6 = write_graph6(g);

    StructureReport sr = validate(g);
    if (filters.regular && !sr.is_regular(*filters.regular)) return out;
    if (filters.girth && (!sr.girth || *sr.girth != *filters.girth)) return out;
    if (filters.two_connected && !sr.two_connected) return out;
    if (filters.triangle_free && !sr.triangle_free()) return out;
    if (filters.non_hamiltonian) {
        // Existence is much cheaper than enumeration; skip hamiltonian
        // graphs before doing the full scan.
        if (is_hamiltonian(g)) return out;
    }
    EnumResult res = enumerate_longest_cycles_dfs(g);
    if (filters.non_hamiltonian && res.circumference == out.n) return out;
    out.passed = true;
    out.circumference = res.circumference;
    out.count = static_cast<std::uint64_t>(res.cycles.size());
    return out;
}

} // namespace

CensusResult census(const std::vector<std::string>& graph6_lines, const CensusFilters& filters,
                    int workers) {
    if (workers < 1) workers = 1;
    CensusResult result;
    result.processed = graph6_lines.size();

    std::vector<PerGraph> rows(graph6_lines.size());
    std::atomic<std::size_t> cursor{0};
    std::mutex error_mutex;
    std::optional<std::pair<std::size_t, std::string>> first_error;

    auto work = [&]() {
        while (true) {
            std::size_t i = cursor.fetch_add(1);
            if (i >= graph6_lines.size()) break;
            try {
                rows[i] = inspect(graph6_lines[i], filters);
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error || i < first_error->first)
                    first_error = {i, e.what()};
            }
        }
    };

    if (workers == 1 || graph6_lines.size() <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    if (first_error)
        throw std::runtime_error("census: record " + std::to_string(first_error->first) + ": " +
                                 first_error->second);

    for (const PerGraph& row : rows) {
        if (!row.passed) {
            ++result.filtered;
            continue;
        }
        ++result.passed;
        auto it = result.per_order.find(row.n);
        if (it == result.per_order.end()) {
            result.per_order[row.n] = CensusEntry{row.count, row.circumference, row.g6};
        } else {
            CensusEntry& e = it->second;
            if (row.count < e.min_count ||
                (row.count == e.min_count && row.g6 < e.witness)) {
                e = CensusEntry{row.count, row.circumference, row.g6};
            }
        }
    }
    return result;
}

} // namespace longcycle
