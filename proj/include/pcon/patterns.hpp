#pragma once

#include <cstdint>
#include <vector>

#include "pcon/coloring.hpp"
#include "pcon/errors.hpp"
#include "pcon/graph.hpp"

namespace pcon {

/// Two-color a graph around a given cycle w_0, w_1, ..., w_{len-1}.
///
/// Cycle edge (w_j, w_{j+1}) gets color 1 for even j and 2 for odd j, except
/// that the closing edge (w_{len-1}, w_0) is always 2.  Every edge off the
/// cycle is colored 2.  For even cycles this is plain alternation; for odd
/// cycles it leaves exactly one vertex (w_{len-1}) with two incident 2s,
/// which is the shape the chorded-cycle and dense-graph colorings build on.
inline EdgeColoring cycle_based_two_coloring(const Graph& g, const std::vector<int>& cycle) {
    const int len = static_cast<int>(cycle.size());
    if (len < 3) throw precondition_error("cycle_based_two_coloring: cycle has fewer than 3 vertices");
    std::vector<int> colors(static_cast<std::size_t>(g.m()), 2);
    for (int j = 0; j < len; ++j) {
        const int u = cycle[static_cast<std::size_t>(j)];
        const int v = cycle[static_cast<std::size_t>((j + 1) % len)];
        const int id = g.edge_id(u, v);
        if (id < 0) throw precondition_error("cycle_based_two_coloring: sequence is not a cycle in g");
        colors[static_cast<std::size_t>(id)] = (j % 2 == 0 && j != len - 1) ? 1 : 2;
    }
    return EdgeColoring{std::move(colors), 2};
}

/// Proper edge coloring of a graph by greedy assignment along a DFS edge
/// order rooted at vertex 0 (each component rooted at its smallest vertex).
/// Tree edges are colored on discovery with the smallest color free at both
/// endpoints, so a tree gets exactly max-degree colors.  Returns the raw
/// greedy result; callers that need the Δ+1 cap should use
/// greedy_proper_edge_coloring, which repairs the rare overshoot.
inline EdgeColoring dfs_greedy_edge_coloring(const Graph& g) {
    const int n = g.n();
    const int m = g.m();
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(m));
    std::vector<char> edge_seen(static_cast<std::size_t>(m), 0);
    std::vector<char> vertex_seen(static_cast<std::size_t>(n), 0);
    std::vector<int> stack;
    for (int root = 0; root < n; ++root) {
        if (vertex_seen[static_cast<std::size_t>(root)]) continue;
        vertex_seen[static_cast<std::size_t>(root)] = 1;
        stack.push_back(root);
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (const auto& [w, id] : g.adj(v)) {
                if (!edge_seen[static_cast<std::size_t>(id)]) {
                    edge_seen[static_cast<std::size_t>(id)] = 1;
                    order.push_back(id);
                }
                if (!vertex_seen[static_cast<std::size_t>(w)]) {
                    vertex_seen[static_cast<std::size_t>(w)] = 1;
                    stack.push_back(w);
                }
            }
        }
    }

    std::vector<int> colors(static_cast<std::size_t>(m), 0);
    int k = 0;
    for (const int id : order) {
        const auto [u, v] = g.edge(id);
        std::uint64_t used = 0;
        for (const auto& [w, other] : g.adj(u))
            if (colors[static_cast<std::size_t>(other)] > 0)
                used |= 1ULL << colors[static_cast<std::size_t>(other)];
        for (const auto& [w, other] : g.adj(v))
            if (colors[static_cast<std::size_t>(other)] > 0)
                used |= 1ULL << colors[static_cast<std::size_t>(other)];
        int c = 1;
        while (used & (1ULL << c)) ++c;
        colors[static_cast<std::size_t>(id)] = c;
        if (c > k) k = c;
    }
    return EdgeColoring{std::move(colors), k};
}

namespace detail_patterns {

inline bool edge_color_feasible(const Graph& g, const std::vector<int>& colors, int id, int c) {
    const auto [u, v] = g.edge(id);
    for (const auto& [w, other] : g.adj(u))
        if (colors[static_cast<std::size_t>(other)] == c) return false;
    for (const auto& [w, other] : g.adj(v))
        if (colors[static_cast<std::size_t>(other)] == c) return false;
    return true;
}

inline bool edge_color_backtrack(const Graph& g, const std::vector<int>& order, std::size_t at,
                                 std::vector<int>& colors, int palette) {
    if (at == order.size()) return true;
    const int id = order[at];
    for (int c = 1; c <= palette; ++c) {
        if (!edge_color_feasible(g, colors, id, c)) continue;
        colors[static_cast<std::size_t>(id)] = c;
        if (edge_color_backtrack(g, order, at + 1, colors, palette)) return true;
        colors[static_cast<std::size_t>(id)] = 0;
    }
    return false;
}

}  // namespace detail_patterns

/// Proper edge coloring with at most Δ+1 colors.  The DFS greedy pass almost
/// always lands within the cap (and uses exactly Δ on trees); when it
/// overshoots, a backtracking pass finds a Δ+1 coloring, which always exists.
inline EdgeColoring greedy_proper_edge_coloring(const Graph& g) {
    EdgeColoring c = dfs_greedy_edge_coloring(g);
    const int cap = max_degree(g) + 1;
    if (c.k <= cap) return c;
    std::vector<int> order(static_cast<std::size_t>(g.m()));
    for (int i = 0; i < g.m(); ++i) order[static_cast<std::size_t>(i)] = i;
    std::vector<int> colors(static_cast<std::size_t>(g.m()), 0);
    if (!detail_patterns::edge_color_backtrack(g, order, 0, colors, cap))
        throw defect_error("greedy_proper_edge_coloring: no coloring within max degree + 1");
    int k = 0;
    for (const int c2 : colors)
        if (c2 > k) k = c2;
    return EdgeColoring{std::move(colors), k};
}

}  // namespace pcon
