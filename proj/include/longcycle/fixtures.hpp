#pragma once

#include <string>

#include "longcycle/construct.hpp"
#include "longcycle/graph.hpp"

namespace longcycle {

/// Root of the bundled data directory. Overridable with the
/// LONGCYCLE_DATA_DIR environment variable.
std::string data_dir();

/// First graph6 line of a file.
Graph load_graph6_file(const std::string& path);

/// All graph6 lines of a file.
std::vector<std::string> load_graph6_lines(const std::string& path);

/// Bundled fixtures:
///   "fig5"            - 24-vertex cubic 2-connected triangle-free
///                       non-hamiltonian graph with exactly four longest
///                       cycles (House of Graphs 50421)
///   "royle_base"      - 18-vertex triangle-free uniquely hamiltonian
///                       graph with sixteen 3-valent and two 4-valent
///                       vertices
///   "royle_composite" - the 60-vertex splice of two royle_base copies
///                       onto fig5 (House of Graphs 50422), built on load
Graph load_fixture(const std::string& name);

/// Bundled hamiltonian r-regular girth-g base triples for the family
/// construction (r = 3, g in {3,4,5}).
FamilyParams default_family_params(int r, int g, int ell, int m);

} // namespace longcycle
