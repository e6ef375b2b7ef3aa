#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pcon/errors.hpp"
#include "pcon/graph.hpp"

namespace pcon {

// graph6 is the ASCII encoding used by nauty/geng and the usual interchange
// format for exhaustive small-graph corpora.  No ">>graph6<<" header, one
// graph per line.  Bits cover the upper triangle of the adjacency matrix in
// column order x(0,1), x(0,2), x(1,2), x(0,3), ...; each 6-bit group is
// stored as one printable byte value 63..126.

namespace detail6 {

inline int char_value(char c, std::string_view s) {
    unsigned char b = static_cast<unsigned char>(c);
    if (b < 63 || b > 126)
        throw parse_error("graph6: byte out of range in '" + std::string(s) + "'");
    return b - 63;
}

} // namespace detail6

/// Decode one graph6 line.  Edge ids are assigned in row-major upper-triangle
/// order: (0,1), (0,2), ..., (0,n-1), (1,2), ...
inline Graph parse_graph6(std::string_view s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
    if (!s.empty() && s.front() == ':')
        throw parse_error("graph6: sparse6 input not supported");
    if (s.empty()) throw parse_error("graph6: empty input");

    std::size_t pos = 0;
    long long n;
    int first = detail6::char_value(s[pos], s);
    if (first < 63) {
        n = first;
        pos = 1;
    } else {
        if (s.size() >= 2 && s[1] == '~')
            throw parse_error("graph6: graph too large");
        if (s.size() < 4) throw parse_error("graph6: truncated size field");
        n = 0;
        for (int i = 1; i <= 3; ++i) n = (n << 6) | detail6::char_value(s[i], s);
        pos = 4;
    }
    if (n > max_vertices)
        throw parse_error("graph6: " + std::to_string(n) + " vertices exceeds library limit " +
                          std::to_string(max_vertices));

    long long bits = n * (n - 1) / 2;
    std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
    if (s.size() - pos != need)
        throw parse_error("graph6: body length mismatch in '" + std::string(s) + "'");

    // Collect adjacency in column order, then emit edges row-major.
    std::vector<std::uint64_t> row(static_cast<std::size_t>(n), 0);
    long long bit = 0;
    for (int col = 1; col < n; ++col) {
        for (int r = 0; r < col; ++r, ++bit) {
            int group = detail6::char_value(s[pos + static_cast<std::size_t>(bit / 6)], s);
            if (group >> (5 - bit % 6) & 1)
                row[static_cast<std::size_t>(r)] |= std::uint64_t{1} << col;
        }
    }
    // Padding bits must be zero.
    for (long long b = bits; b < static_cast<long long>(need) * 6; ++b) {
        int group = detail6::char_value(s[pos + static_cast<std::size_t>(b / 6)], s);
        if (group >> (5 - b % 6) & 1)
            throw parse_error("graph6: nonzero padding bits in '" + std::string(s) + "'");
    }

    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (std::uint64_t r = row[static_cast<std::size_t>(u)]; r;) {
            int v = std::countr_zero(r);
            r &= r - 1;
            edges.emplace_back(u, v);
        }
    return Graph::from_edges(static_cast<int>(n), std::move(edges));
}

/// Encode to a canonical graph6 line (no trailing newline).
inline std::string encode_graph6(const Graph& g) {
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
    int group = 0, filled = 0;
    for (int col = 1; col < n; ++col)
        for (int r = 0; r < col; ++r) {
            group = group << 1 | (g.has_edge(r, col) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(group + 63));
                group = 0;
                filled = 0;
            }
        }
    if (filled) out.push_back(static_cast<char>((group << (6 - filled)) + 63));
    return out;
}

/// Parse a newline-separated list of graph6 lines (blank lines skipped).
inline std::vector<Graph> parse_graph6_lines(const std::string& text) {
    std::vector<Graph> graphs;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string::npos) end = text.size();
        std::string_view line(text.data() + start, end - start);
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
        if (!line.empty()) graphs.push_back(parse_graph6(line));
        if (end == text.size()) break;
        start = end + 1;
    }
    return graphs;
}

} // namespace pcon
