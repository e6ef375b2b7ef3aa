#pragma once

// Shared helpers for the test suite only.  Oracles that check library results
// live in the individual test files and deliberately avoid the code paths
// they are checking.

#include <cstdint>
#include <utility>
#include <vector>

#include "pcon/coloring.hpp"
#include "pcon/graph.hpp"

namespace testutil {

// Bit k of `mask` is the edge (i, j), i < j, in row-major order.
inline pcon::Graph graph_from_mask(int n, std::uint64_t mask) {
    std::vector<std::pair<int, int>> edges;
    int k = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++k)
            if (mask >> k & 1) edges.emplace_back(i, j);
    return pcon::Graph::from_edges(n, std::move(edges));
}

template <typename F>
void for_each_graph(int n, F&& fn) {
    std::uint64_t count = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t mask = 0; mask < count; ++mask) fn(graph_from_mask(n, mask));
}

template <typename F>
void for_each_connected_graph(int n, F&& fn) {
    for_each_graph(n, [&](const pcon::Graph& g) {
        if (pcon::is_connected(g)) fn(g);
    });
}

inline pcon::Graph petersen() {
    // Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(5 + i, 5 + (i + 2) % 5);
        e.emplace_back(i, i + 5);
    }
    return pcon::Graph::from_edges(10, std::move(e));
}

// --- reference path machinery (used as an oracle) ---------------------------
//
// Enumerates every simple u-v path by plain recursion with no color pruning,
// then filters by a properness check that looks colors up by scanning the
// edge list directly.  Slow and structurally unlike the library's pruned DFS
// — which is the point.

inline void all_simple_paths_rec(const pcon::Graph& g, int v, std::vector<int>& path,
                                 std::vector<bool>& used, std::vector<std::vector<int>>& out) {
    int cur = path.back();
    if (cur == v) {
        out.push_back(path);
        return;
    }
    for (int w = 0; w < g.n(); ++w) {
        if (used[static_cast<std::size_t>(w)] || !g.has_edge(cur, w)) continue;
        used[static_cast<std::size_t>(w)] = true;
        path.push_back(w);
        all_simple_paths_rec(g, v, path, used, out);
        path.pop_back();
        used[static_cast<std::size_t>(w)] = false;
    }
}

inline std::vector<std::vector<int>> all_simple_paths(const pcon::Graph& g, int u, int v) {
    std::vector<std::vector<int>> out;
    std::vector<int> path{u};
    std::vector<bool> used(static_cast<std::size_t>(g.n()), false);
    used[static_cast<std::size_t>(u)] = true;
    all_simple_paths_rec(g, v, path, used, out);
    return out;
}

inline int oracle_edge_color(const pcon::Graph& g, const pcon::EdgeColoring& c, int a, int b) {
    for (std::size_t id = 0; id < g.edges().size(); ++id) {
        auto [x, y] = g.edges()[id];
        if ((x == a && y == b) || (x == b && y == a)) return c.colors[id];
    }
    return -1;
}

inline bool oracle_is_proper(const pcon::Graph& g, const pcon::EdgeColoring& c,
                             const std::vector<int>& path) {
    int prev = 0;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        int col = oracle_edge_color(g, c, path[i], path[i + 1]);
        if (col < 0 || col == prev) return false;
        prev = col;
    }
    return true;
}

inline std::vector<std::vector<int>> oracle_proper_paths(const pcon::Graph& g,
                                                         const pcon::EdgeColoring& c, int u,
                                                         int v) {
    std::vector<std::vector<int>> out;
    for (auto& p : all_simple_paths(g, u, v))
        if (p.size() >= 2 && oracle_is_proper(g, c, p)) out.push_back(p);
    return out;
}

// A cycle given as a vertex sequence: all distinct, consecutive adjacent,
// last adjacent to first.
inline bool is_valid_cycle(const pcon::Graph& g, const std::vector<int>& seq) {
    if (seq.size() < 3) return false;
    std::uint64_t seen = 0;
    for (int v : seq) {
        if (v < 0 || v >= g.n() || (seen >> v & 1)) return false;
        seen |= std::uint64_t{1} << v;
    }
    for (std::size_t i = 0; i + 1 < seq.size(); ++i)
        if (!g.has_edge(seq[i], seq[i + 1])) return false;
    return g.has_edge(seq.back(), seq.front());
}

} // namespace testutil
