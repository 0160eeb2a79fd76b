#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "longcycle/graph.hpp"

namespace longcycle {

/// Error while decoding a graph6 line; `byte` is the offset of the first
/// offending byte within the line (after the optional ">>graph6<<" prefix
/// has been stripped).
class Graph6ParseError : public std::runtime_error {
public:
    Graph6ParseError(const std::string& what, std::size_t byte)
        : std::runtime_error(what + " (byte " + std::to_string(byte) + ")"), byte_(byte) {}
    std::size_t byte() const { return byte_; }

private:
    std::size_t byte_;
};

/// Decodes one graph6 line. Accepts and strips an optional ">>graph6<<"
/// prefix and trailing whitespace/newline.
Graph parse_graph6(std::string_view text);

/// Encodes bit-exact standard graph6 (short header for n <= 62, extended
/// headers above).
std::string write_graph6(const Graph& g);

} // namespace longcycle
