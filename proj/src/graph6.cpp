#include "longcycle/graph6.hpp"

#include <cstdint>

namespace longcycle {

namespace {

constexpr std::string_view kPrefix = ">>graph6<<";

// Reads the 6-bit payload of one printable character.
int decode_char(std::string_view s, std::size_t pos) {
    if (pos >= s.size()) throw Graph6ParseError("graph6: truncated data", pos);
    unsigned char c = static_cast<unsigned char>(s[pos]);
    if (c < 63 || c > 126) throw Graph6ParseError("graph6: character out of range", pos);
    return c - 63;
}

} // namespace

Graph parse_graph6(std::string_view text) {
    if (text.substr(0, kPrefix.size()) == kPrefix) text.remove_prefix(kPrefix.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
        text.remove_suffix(1);
    if (text.empty()) throw Graph6ParseError("graph6: empty line", 0);

    std::size_t pos = 0;
    std::uint64_t n = 0;
    int first = decode_char(text, pos);
    if (first < 63) {
        n = static_cast<std::uint64_t>(first);
        pos = 1;
    } else {
        int second = decode_char(text, 1);
        if (second < 63) {
            n = 0;
            for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | static_cast<std::uint64_t>(decode_char(text, i));
            pos = 4;
        } else {
            n = 0;
            for (std::size_t i = 2; i <= 7; ++i) n = (n << 6) | static_cast<std::uint64_t>(decode_char(text, i));
            pos = 8;
        }
    }
    if (n > 100000) throw Graph6ParseError("graph6: order too large for this tool", 0);

    const int order = static_cast<int>(n);
    Graph g(order);
    const std::uint64_t nbits = n * (n - 1) / 2;
    std::uint64_t bit = 0;
    int buffer = 0;
    int buffered = 0;
    for (int j = 1; j < order; ++j) {
        for (int i = 0; i < j; ++i) {
            if (buffered == 0) {
                buffer = decode_char(text, pos);
                ++pos;
                buffered = 6;
            }
            --buffered;
            if ((buffer >> buffered) & 1) g.add_edge(i, j);
            ++bit;
        }
    }
    (void)nbits;
    if (pos < text.size()) throw Graph6ParseError("graph6: trailing characters", pos);
    return g;
}

std::string write_graph6(const Graph& g) {
    std::string out;
    const std::uint64_t n = static_cast<std::uint64_t>(g.order());
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    }
    int buffer = 0;
    int buffered = 0;
    for (int j = 1; j < g.order(); ++j) {
        for (int i = 0; i < j; ++i) {
            buffer = (buffer << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++buffered == 6) {
                out.push_back(static_cast<char>(63 + buffer));
                buffer = 0;
                buffered = 0;
            }
        }
    }
    if (buffered > 0) out.push_back(static_cast<char>(63 + (buffer << (6 - buffered))));
    return out;
}

} // namespace longcycle
