#include "longcycle/fixtures.hpp"

#include <cstdlib>
#include <fstream>
#include <stdexcept>

#include "longcycle/graph6.hpp"

namespace longcycle {

std::string data_dir() {
    if (const char* env = std::getenv("LONGCYCLE_DATA_DIR")) return env;
    return LONGCYCLE_DATA_DIR;
}

std::vector<std::string> load_graph6_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph6 file: " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (!line.empty() && line[0] != '#') lines.push_back(line);
    }
    return lines;
}

Graph load_graph6_file(const std::string& path) {
    auto lines = load_graph6_lines(path);
    if (lines.empty()) throw std::runtime_error("no graph6 line in file: " + path);
    return parse_graph6(lines.front());
}

namespace {

Graph load_named(const std::string& file, const std::string& hint) {
    const std::string path = data_dir() + "/fixtures/" + file;
    try {
        return load_graph6_file(path);
    } catch (const std::exception& e) {
        throw std::runtime_error("fixture " + hint + ": " + e.what());
    }
}

} // namespace

Graph load_fixture(const std::string& name) {
    if (name == "fig5") return load_named("fig5.g6", "fig5 (House of Graphs 50421)");
    if (name == "royle_base") return load_named("royle_base.g6", "royle_base");
    if (name == "royle_composite") {
        Graph base = load_named("royle_base.g6", "royle_composite (House of Graphs 50422)");
        Graph fig5 = load_named("fig5.g6", "royle_composite (House of Graphs 50422)");
        return build_royle_composite(base, fig5);
    }
    throw std::invalid_argument("unknown fixture: " + name);
}

FamilyParams default_family_params(int r, int g, int ell, int m) {
    if (r != 3 || g < 3 || g > 5)
        throw std::invalid_argument("default bases are bundled for r=3, g in {3,4,5} only");
    FamilyParams p;
    p.r = r;
    p.g = g;
    p.ell = ell;
    p.m = m;
    const std::string stem = data_dir() + "/bases/r" + std::to_string(r) + "g" +
                             std::to_string(g) + "_";
    p.base1 = load_graph6_file(stem + "1.g6");
    p.base2 = load_graph6_file(stem + "2.g6");
    p.base3 = load_graph6_file(stem + "3.g6");
    return p;
}

} // namespace longcycle
