#include "longcycle/report.hpp"

namespace longcycle {

using nlohmann::json;

json enum_report(const std::string& g6, int n, const EnumResult& result, bool include_cycles) {
    json j;
    j["schema"] = 1;
    j["graph6"] = g6;
    j["n"] = n;
    j["circumference"] = result.circumference;
    j["count"] = result.cycles.size();
    j["algorithm"] = result.algorithm == Algorithm::DFS ? "dfs" : "dp";
    j["millis"] = result.millis;
    if (include_cycles) {
        json cycles = json::array();
        for (const Cycle& c : result.cycles.cycles) cycles.push_back(c.vertices);
        j["cycles"] = std::move(cycles);
    }
    return j;
}

json census_report(const CensusResult& result) {
    json j;
    j["schema"] = 1;
    j["processed"] = result.processed;
    j["passed"] = result.passed;
    j["filtered"] = result.filtered;
    json orders = json::object();
    for (const auto& [n, entry] : result.per_order) {
        json e;
        e["min_count"] = entry.min_count.str();
        e["circumference"] = entry.circumference;
        e["witness"] = entry.witness;
        orders[std::to_string(n)] = std::move(e);
    }
    j["orders"] = std::move(orders);
    return j;
}

json strip_timings(json j) {
    if (j.is_object()) {
        j.erase("millis");
        for (auto& [key, value] : j.items()) value = strip_timings(value);
    } else if (j.is_array()) {
        for (auto& value : j) value = strip_timings(value);
    }
    return j;
}

} // namespace longcycle
