#pragma once

#include <string>

#include <json.hpp>

#include "longcycle/census.hpp"
#include "longcycle/enumerate.hpp"

namespace longcycle {

/// JSON record for one enumeration: schema, graph6, n, circumference,
/// count, algorithm, millis and optionally the cycle list.
nlohmann::json enum_report(const std::string& g6, int n, const EnumResult& result,
                           bool include_cycles);

nlohmann::json census_report(const CensusResult& result);

/// Removes timing fields so reports can be compared byte for byte.
nlohmann::json strip_timings(nlohmann::json j);

} // namespace longcycle
