#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "pcon/errors.hpp"
#include "pcon/graph.hpp"

namespace pcon {

/// Edge coloring: color ids 1..k indexed by edge id.  Adjacent edges may
/// share a color — nothing here is "proper" in the edge-coloring sense
/// unless a construction says so.  k is the declared palette size and may
/// exceed the largest color actually used.
struct EdgeColoring {
    std::vector<int> colors;
    int k = 0;

    int operator[](int edge_id) const { return colors[static_cast<std::size_t>(edge_id)]; }
};

/// Wrap a raw color vector, declaring k = max used color.
inline EdgeColoring make_coloring(const Graph& g, std::vector<int> colors) {
    if (static_cast<int>(colors.size()) != g.m())
        throw precondition_error("coloring has " + std::to_string(colors.size()) +
                                 " entries for " + std::to_string(g.m()) + " edges");
    int k = 0;
    for (int c : colors) {
        if (c < 1) throw precondition_error("color ids start at 1");
        k = std::max(k, c);
    }
    return {std::move(colors), k};
}

/// Check c against g; throws precondition_error on any violation.
inline void check_coloring(const Graph& g, const EdgeColoring& c) {
    if (static_cast<int>(c.colors.size()) != g.m())
        throw precondition_error("coloring size does not match edge count");
    for (int col : c.colors)
        if (col < 1 || col > c.k)
            throw precondition_error("color " + std::to_string(col) + " outside palette 1.." +
                                     std::to_string(c.k));
}

/// Distinct colors in use, ascending.
inline std::vector<int> used_colors(const EdgeColoring& c) {
    std::vector<int> out(c.colors);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline int max_used_color(const EdgeColoring& c) {
    int k = 0;
    for (int col : c.colors) k = std::max(k, col);
    return k;
}

// --- coloring text format ------------------------------------------------
//
// First line "m k", then one color id per edge id per line.  Pairs with the
// edge-list/graph6 edge id order of the graph it belongs to.

inline EdgeColoring parse_coloring(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            std::size_t pos = line.find_first_not_of(" \t\r");
            if (pos == std::string::npos || line[pos] == '#') continue;
            return true;
        }
        return false;
    };
    if (!next_line()) throw parse_error("coloring: empty input");
    std::istringstream head(line);
    long long m = -1, k = -1;
    std::string trailing;
    if (!(head >> m >> k) || m < 0 || k < 0) throw parse_error("coloring: bad header, expected 'm k'");
    if (head >> trailing) throw parse_error("coloring: trailing tokens in header");
    EdgeColoring c;
    c.k = static_cast<int>(k);
    c.colors.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        if (!next_line()) throw parse_error("coloring: expected " + std::to_string(m) + " colors");
        std::istringstream cs(line);
        long long col;
        if (!(cs >> col)) throw parse_error("coloring: bad color line '" + line + "'");
        if (cs >> trailing) throw parse_error("coloring: trailing tokens in color line");
        if (col < 1 || col > k)
            throw parse_error("coloring: color " + std::to_string(col) + " outside 1.." +
                              std::to_string(k));
        c.colors.push_back(static_cast<int>(col));
    }
    if (next_line()) throw parse_error("coloring: unexpected extra lines");
    return c;
}

inline std::string format_coloring(const EdgeColoring& c) {
    std::ostringstream out;
    out << c.colors.size() << ' ' << c.k << '\n';
    for (int col : c.colors) out << col << '\n';
    return out.str();
}

} // namespace pcon
