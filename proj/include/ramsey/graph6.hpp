#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ramsey/graph.hpp"

namespace ramsey {

/// Parse failure with the offset of the offending byte.
class Graph6Error : public std::runtime_error {
public:
    Graph6Error(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (byte offset " + std::to_string(offset) + ")"),
          offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

namespace detail {

inline int graph6_sextet(std::string_view text, std::size_t at) {
    if (at >= text.size())
        throw Graph6Error("graph6: truncated input", text.size());
    unsigned char c = static_cast<unsigned char>(text[at]);
    if (c < 63 || c > 126)
        throw Graph6Error("graph6: byte out of printable range", at);
    return c - 63;
}

}  // namespace detail

/// Decode the graph6 text form: a size header followed by the upper-triangle
/// edge bits in column-major order, six bits per printable byte, each offset
/// by 63 and zero-padded at the end.
inline Graph parse_graph6(std::string_view text) {
    if (text.empty()) throw Graph6Error("graph6: empty input", 0);

    std::size_t pos = 0;
    long n;
    int first = detail::graph6_sextet(text, 0);
    if (first == 63) {
        // '~' introduces an 18-bit count in the next three bytes.
        if (text.size() >= 2 && text[1] == '~')
            throw Graph6Error("graph6: 36-bit size header exceeds supported order", 1);
        long a = detail::graph6_sextet(text, 1);
        long b = detail::graph6_sextet(text, 2);
        long c = detail::graph6_sextet(text, 3);
        n = (a << 12) | (b << 6) | c;
        pos = 4;
    } else {
        n = first;
        pos = 1;
    }
    if (n < 1) throw Graph6Error("graph6: graph order 0 not supported", 0);
    if (n > 64)
        throw Graph6Error("graph6: order " + std::to_string(n) + " exceeds 64", 0);

    Graph g(static_cast<int>(n));
    long bits = n * (n - 1) / 2;
    long bytes = (bits + 5) / 6;
    if (static_cast<long>(text.size()) - static_cast<long>(pos) < bytes)
        throw Graph6Error("graph6: truncated bit section", text.size());
    if (static_cast<long>(text.size()) - static_cast<long>(pos) > bytes)
        throw Graph6Error("graph6: trailing bytes after bit section", pos + bytes);

    long bit = 0;
    for (long i = 0; i < bytes; ++i) {
        int val = detail::graph6_sextet(text, pos + i);
        for (int k = 5; k >= 0; --k, ++bit) {
            int set = (val >> k) & 1;
            if (bit >= bits) {
                if (set) throw Graph6Error("graph6: nonzero padding bits", pos + i);
                continue;
            }
            if (set) {
                // Column-major upper triangle: bit index runs over
                // (0,1),(0,2),(1,2),(0,3),...
                long col = 1;
                long rem = bit;
                while (rem >= col) {
                    rem -= col;
                    ++col;
                }
                g.add_edge(static_cast<int>(rem), static_cast<int>(col));
            }
        }
    }
    return g;
}

inline std::string to_graph6(const Graph& g) {
    std::string out;
    int n = g.n();
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int val = 0, filled = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            val = (val << 1) | (g.has_edge(row, col) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(val + 63));
                val = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((val << (6 - filled)) + 63));
    return out;
}

}  // namespace ramsey
