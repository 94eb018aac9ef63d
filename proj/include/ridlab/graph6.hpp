#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ridlab/graph.hpp"

namespace ridlab {

// graph6 (McKay), short form only: N(n) = chr(n + 63) for n <= 62, followed
// by the upper-triangle bits x(i,j) for j = 1..n-1, i = 0..j-1, packed
// big-endian into 6-bit groups, each + 63, zero-padded.

class Graph6ParseError : public std::runtime_error {
public:
    Graph6ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (byte offset " + std::to_string(offset) + ")"),
          offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

inline std::string to_graph6(const Graph& g) {
    if (g.n() > kMaxOrder)
        throw std::invalid_argument("to_graph6: order " + std::to_string(g.n()) +
                                    " exceeds short-form limit 62");
    if (g.n() < 1) throw std::invalid_argument("to_graph6: need n >= 1");
    std::string out;
    out.push_back(static_cast<char>(g.n() + 63));
    int acc = 0;
    int nbits = 0;
    for (int j = 1; j < g.n(); ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

inline Graph from_graph6(std::string_view text) {
    std::size_t base = 0;
    constexpr std::string_view header = ">>graph6<<";
    if (text.substr(0, header.size()) == header) {
        text.remove_prefix(header.size());
        base = header.size();
    }
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);

    if (text.empty()) throw Graph6ParseError("from_graph6: empty input", base);
    unsigned char first = static_cast<unsigned char>(text[0]);
    if (first < 63 || first > 126)
        throw Graph6ParseError("from_graph6: illegal character in length prefix", base);
    if (first == 126)
        throw Graph6ParseError("from_graph6: long-form length prefix not supported", base);
    int n = first - 63;

    std::size_t want = (static_cast<std::size_t>(n) * (n - 1) / 2 + 5) / 6;
    if (text.size() - 1 < want)
        throw Graph6ParseError("from_graph6: truncated edge data, expected " +
                                   std::to_string(want) + " data bytes",
                               base + text.size());
    if (text.size() - 1 > want)
        throw Graph6ParseError("from_graph6: trailing characters after edge data",
                               base + 1 + want);

    Graph g(n);
    int acc = 0;
    int nbits = 0;
    std::size_t pos = 1;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (nbits == 0) {
                unsigned char c = static_cast<unsigned char>(text[pos]);
                if (c < 63 || c > 126)
                    throw Graph6ParseError("from_graph6: illegal character", base + pos);
                acc = c - 63;
                nbits = 6;
                ++pos;
            }
            if (acc & (1 << (nbits - 1))) g.add_edge(i, j);
            --nbits;
        }
    }
    if (nbits > 0 && (acc & ((1 << nbits) - 1)) != 0)
        throw Graph6ParseError("from_graph6: nonzero padding bits", base + pos - 1);
    return g;
}

}  // namespace ridlab
