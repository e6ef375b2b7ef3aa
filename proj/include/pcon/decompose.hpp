#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "pcon/errors.hpp"
#include "pcon/graph.hpp"

namespace pcon {

/// Biconnected components ("blocks") and cut vertices.
struct BlockDecomposition {
    /// Each block as a sorted vertex list; blocks ordered by smallest member.
    std::vector<std::vector<int>> blocks;
    std::vector<int> cut_vertices; ///< sorted
};

/// Lowpoint DFS (Hopcroft–Tarjan) with an explicit edge stack.  Requires a
/// connected input; neighbor order makes the result deterministic.
inline BlockDecomposition blocks_and_cuts(const Graph& g) {
    if (!is_connected(g)) throw precondition_error("blocks_and_cuts: graph is disconnected");
    BlockDecomposition out;
    if (g.n() == 1) {
        out.blocks.push_back({0});
        return out;
    }

    std::vector<int> depth(static_cast<std::size_t>(g.n()), -1);
    std::vector<int> low(static_cast<std::size_t>(g.n()), 0);
    std::vector<char> is_cut(static_cast<std::size_t>(g.n()), 0);
    std::vector<std::pair<int, int>> edge_stack;

    auto pop_block = [&](std::pair<int, int> until) {
        std::uint64_t verts = 0;
        while (true) {
            auto e = edge_stack.back();
            edge_stack.pop_back();
            verts |= std::uint64_t{1} << e.first;
            verts |= std::uint64_t{1} << e.second;
            if (e == until) break;
        }
        std::vector<int> vs;
        while (verts) {
            vs.push_back(std::countr_zero(verts));
            verts &= verts - 1;
        }
        out.blocks.push_back(std::move(vs));
    };

    auto dfs = [&](auto&& self, int v, int parent_edge) -> void {
        low[static_cast<std::size_t>(v)] = depth[static_cast<std::size_t>(v)];
        int children = 0;
        for (auto [w, eid] : g.adj(v)) {
            if (eid == parent_edge) continue;
            if (depth[static_cast<std::size_t>(w)] < 0) {
                ++children;
                edge_stack.emplace_back(v, w);
                depth[static_cast<std::size_t>(w)] = depth[static_cast<std::size_t>(v)] + 1;
                self(self, w, eid);
                low[static_cast<std::size_t>(v)] =
                    std::min(low[static_cast<std::size_t>(v)], low[static_cast<std::size_t>(w)]);
                if (low[static_cast<std::size_t>(w)] >= depth[static_cast<std::size_t>(v)]) {
                    // v separates w's subtree: close off one block.
                    if (depth[static_cast<std::size_t>(v)] > 0 || children > 1)
                        is_cut[static_cast<std::size_t>(v)] = 1;
                    pop_block({v, w});
                }
            } else if (depth[static_cast<std::size_t>(w)] < depth[static_cast<std::size_t>(v)]) {
                edge_stack.emplace_back(v, w);
                low[static_cast<std::size_t>(v)] =
                    std::min(low[static_cast<std::size_t>(v)], depth[static_cast<std::size_t>(w)]);
            }
        }
    };

    depth[0] = 0;
    dfs(dfs, 0, -1);

    std::sort(out.blocks.begin(), out.blocks.end());
    for (int v = 0; v < g.n(); ++v)
        if (is_cut[static_cast<std::size_t>(v)]) out.cut_vertices.push_back(v);
    return out;
}

/// Edge ids of all bridges, ascending.  A bridge is exactly a two-vertex block.
inline std::vector<int> bridge_edges(const Graph& g) {
    std::vector<int> bridges;
    for (const auto& blk : blocks_and_cuts(g).blocks)
        if (blk.size() == 2) bridges.push_back(g.edge_id(blk[0], blk[1]));
    std::sort(bridges.begin(), bridges.end());
    return bridges;
}

inline bool is_bridgeless(const Graph& g) { return bridge_edges(g).empty(); }

/// The tree G* whose nodes are the connected components of G minus its
/// bridges and whose edges are the bridges.  Components are either singleton
/// vertices (S-nodes) or 2-edge-connected subgraphs on >= 2 vertices
/// (D-nodes).
struct BridgeBlockTree {
    std::vector<int> bridges;              ///< bridge edge ids in g, ascending
    std::vector<std::vector<int>> components; ///< sorted; ordered by smallest member
    std::vector<int> component_of;         ///< g vertex -> component index
    Graph tree;                            ///< one vertex per component
    std::vector<int> tree_edge_bridge;     ///< tree edge id -> g bridge edge id
};

inline BridgeBlockTree bridge_block_tree(const Graph& g) {
    BridgeBlockTree out;
    out.bridges = bridge_edges(g); // checks connectivity

    std::vector<char> is_bridge(static_cast<std::size_t>(g.m()), 0);
    for (int b : out.bridges) is_bridge[static_cast<std::size_t>(b)] = 1;

    out.component_of.assign(static_cast<std::size_t>(g.n()), -1);
    for (int s = 0; s < g.n(); ++s) {
        if (out.component_of[static_cast<std::size_t>(s)] >= 0) continue;
        int id = static_cast<int>(out.components.size());
        std::vector<int> comp{s};
        out.component_of[static_cast<std::size_t>(s)] = id;
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (auto [w, eid] : g.adj(comp[i]))
                if (!is_bridge[static_cast<std::size_t>(eid)] &&
                    out.component_of[static_cast<std::size_t>(w)] < 0) {
                    out.component_of[static_cast<std::size_t>(w)] = id;
                    comp.push_back(w);
                }
        std::sort(comp.begin(), comp.end());
        out.components.push_back(std::move(comp));
    }

    std::vector<std::pair<int, int>> tree_edges;
    for (int b : out.bridges) {
        auto [u, v] = g.edge(b);
        tree_edges.emplace_back(out.component_of[static_cast<std::size_t>(u)],
                                out.component_of[static_cast<std::size_t>(v)]);
        out.tree_edge_bridge.push_back(b);
    }
    out.tree = Graph::from_edges(static_cast<int>(out.components.size()), std::move(tree_edges));
    return out;
}

/// Max degree of G*; the Theorem-style palette bound max{3, Δ(G*)} keys off it.
inline int bridge_tree_max_degree(const BridgeBlockTree& t) { return max_degree(t.tree); }

/// Bipartition with side X containing vertex 0 (per component: its smallest
/// vertex), or nullopt when some component has an odd cycle.  BFS layering;
/// both sides sorted.
inline std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartition(const Graph& g) {
    std::vector<int> side(static_cast<std::size_t>(g.n()), -1);
    for (int s = 0; s < g.n(); ++s) {
        if (side[static_cast<std::size_t>(s)] >= 0) continue;
        side[static_cast<std::size_t>(s)] = 0;
        std::vector<int> queue{s};
        for (std::size_t i = 0; i < queue.size(); ++i) {
            int v = queue[i];
            for (auto [w, eid] : g.adj(v)) {
                (void)eid;
                if (side[static_cast<std::size_t>(w)] < 0) {
                    side[static_cast<std::size_t>(w)] = 1 - side[static_cast<std::size_t>(v)];
                    queue.push_back(w);
                } else if (side[static_cast<std::size_t>(w)] == side[static_cast<std::size_t>(v)]) {
                    return std::nullopt;
                }
            }
        }
    }
    std::pair<std::vector<int>, std::vector<int>> parts;
    for (int v = 0; v < g.n(); ++v)
        (side[static_cast<std::size_t>(v)] == 0 ? parts.first : parts.second).push_back(v);
    return parts;
}

inline bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

/// Degree-1 vertices and their unique neighbors.
struct PendantSet {
    std::vector<int> vertices;  ///< ascending
    std::vector<int> neighbors; ///< neighbors[i] is adjacent to vertices[i]
};

inline PendantSet pendant_set(const Graph& g) {
    PendantSet p;
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) == 1) {
            p.vertices.push_back(v);
            p.neighbors.push_back(g.adj(v)[0].first);
        }
    return p;
}

/// 2-connected: n >= 3, connected, and no cut vertex.
inline bool is_two_connected(const Graph& g) {
    if (g.n() < 3 || !is_connected(g)) return false;
    return blocks_and_cuts(g).cut_vertices.empty();
}

inline bool is_two_edge_connected(const Graph& g) {
    return g.n() >= 2 && is_connected(g) && is_bridgeless(g);
}

} // namespace pcon
