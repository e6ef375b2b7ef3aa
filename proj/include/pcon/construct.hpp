#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pcon/coloring.hpp"
#include "pcon/cycles.hpp"
#include "pcon/decompose.hpp"
#include "pcon/errors.hpp"
#include "pcon/graph.hpp"
#include "pcon/patterns.hpp"
#include "pcon/proper_path.hpp"
#include "pcon/search.hpp"
#include "pcon/verify.hpp"

namespace pcon {

/// A coloring together with the verified fact that every vertex pair has two
/// proper paths differing in both start and end color.
struct StrongColoring {
    EdgeColoring coloring;
    bool strong = false;
};

namespace detail_construct {

/// Host edge ids whose endpoints both lie in `mask`, ascending.  Induced
/// subgraphs enumerate host edges in this exact order, so position i of the
/// result is the host id of induced edge i.
inline std::vector<int> host_edge_ids(const Graph& g, std::uint64_t mask) {
    std::vector<int> ids;
    for (int e = 0; e < g.m(); ++e) {
        auto [u, v] = g.edge(e);
        if ((mask >> u & 1) && (mask >> v & 1)) ids.push_back(e);
    }
    return ids;
}

inline std::uint64_t vertex_mask(const std::vector<int>& vertices) {
    std::uint64_t mask = 0;
    for (int v : vertices) mask |= std::uint64_t{1} << v;
    return mask;
}

/// Swap two color ids throughout a coloring.  A bijective rename keeps every
/// properness and connectivity property intact.
inline void transpose_colors(EdgeColoring& c, int a, int b) {
    if (a == b) return;
    for (int& col : c.colors) {
        if (col == a)
            col = b;
        else if (col == b)
            col = a;
    }
}

inline int smallest_color_avoiding(int limit, std::initializer_list<int> avoid) {
    for (int c = 1; c <= limit; ++c)
        if (std::find(avoid.begin(), avoid.end(), c) == avoid.end()) return c;
    throw defect_error("no color left after exclusions");
}

/// First proper path between two vertices of a colored graph, in the
/// deterministic depth-first order.  The callers hold colorings that connect
/// every pair, so a miss is a defect, not a user error.
inline ProperPath proper_path_between(const Graph& g, const EdgeColoring& c, int a, int b) {
    auto p = exists_proper_path(g, c, a, b);
    if (!p) throw defect_error("expected proper path is missing from the core coloring");
    return *p;
}

/// Alternation step: the smallest color differing from the previous one.
inline int alternate_color(int prev, int limit) {
    return smallest_color_avoiding(limit, {prev});
}

} // namespace detail_construct

/// Proper-connection coloring of a tree with exactly max-degree colors: a
/// depth-first greedy assignment meets the bound, and no coloring can do
/// better because the unique path through a max-degree vertex needs all its
/// edges pairwise usable.
inline EdgeColoring color_tree(const Graph& g) {
    if (g.n() < 2) throw precondition_error("color_tree: need at least two vertices");
    detail_verify::require_connected(g, "color_tree");
    if (g.m() != g.n() - 1) throw precondition_error("color_tree: graph has a cycle");
    EdgeColoring c = dfs_greedy_edge_coloring(g);
    if (c.k != max_degree(g)) throw defect_error("color_tree: palette missed the degree bound");
    if (!is_proper_connected(g, c).holds)
        throw defect_error("color_tree: coloring failed verification");
    return c;
}

/// Coloring of the canonical cycle graph on n vertices: even cycles alternate
/// two colors; odd cycles alternate and spend a third color on the closing
/// edge.  Every consecutive edge pair differs, so both arcs between any two
/// vertices are proper.
inline EdgeColoring color_cycle(int n) {
    if (n < 3) throw precondition_error("color_cycle: need n >= 3");
    std::vector<int> colors(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) colors[static_cast<std::size_t>(i)] = 1 + i % 2;
    if (n % 2 == 1) colors[static_cast<std::size_t>(n - 1)] = 3;
    EdgeColoring c = make_coloring(cycle_graph(n), colors);
    if (!is_proper_connected(cycle_graph(n), c).holds)
        throw defect_error("color_cycle: coloring failed verification");
    return c;
}

/// The n-cycle v_1..v_n plus the chord v_{n-1}v_1, two-colored so that every
/// vertex pair has two internally disjoint proper paths.  Vertices are
/// 0..n-1 in cycle order; the chord joins 0 and n-2.  Odd n puts color 1 on
/// the edges (v_1v_2, v_3v_4, ...) and color 2 everywhere else, which is
/// what cycle_based_two_coloring emits; even n alternates around the cycle
/// and gives the chord color 1, matching the even subcycle scheme.
inline std::pair<Graph, EdgeColoring> color_cycle_chord(int n) {
    if (n < 4) throw precondition_error("color_cycle_chord: need n >= 4");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    edges.emplace_back(0, n - 2);
    Graph g = Graph::from_edges(n, std::move(edges));

    EdgeColoring c;
    if (n % 2 == 1) {
        std::vector<int> seq(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) seq[static_cast<std::size_t>(i)] = i;
        c = cycle_based_two_coloring(g, seq);
    } else {
        std::vector<int> colors(static_cast<std::size_t>(n) + 1, 1);
        for (int i = 0; i < n; ++i) colors[static_cast<std::size_t>(i)] = 1 + i % 2;
        colors[static_cast<std::size_t>(n)] = 1; // chord
        c = make_coloring(g, std::move(colors));
    }
    if (max_used_color(c) != 2)
        throw defect_error("color_cycle_chord: expected a two-color palette");
    if (!is_k_proper_connected(g, c, 2).holds)
        throw defect_error("color_cycle_chord: pair of disjoint proper paths missing");
    return {std::move(g), std::move(c)};
}

/// Strong coloring of a 2-connected block within the palette the theory
/// grants it: 2 when bipartite, 3 otherwise.  Cheap certified patterns go
/// first — a proper edge coloring within the palette (internally disjoint
/// paths then leave and arrive on distinct colors), or a Hamiltonian cycle
/// colored so consecutive edges always differ (its two arcs witness every
/// pair).  A seeded local search and finally a complete canonical-form
/// enumeration back them up, so the search is exhaustive if the shortcuts
/// miss.  Every candidate is re-verified before being returned.
inline StrongColoring strong_color_block(const Graph& b, int max_colors,
                                         std::uint64_t max_candidates = 4'000'000) {
    if (!is_two_connected(b)) throw precondition_error("strong_color_block: block must be 2-connected");
    const bool bip = is_bipartite(b);
    if (max_colors != (bip ? 2 : 3))
        throw precondition_error("strong_color_block: palette must be 2 for bipartite blocks, else 3");

    auto certify = [&](const EdgeColoring& c) -> std::optional<StrongColoring> {
        if (max_used_color(c) > max_colors) return std::nullopt;
        if (!is_proper_connected(b, c).holds) return std::nullopt;
        if (!has_strong_property(b, c).holds) return std::nullopt;
        return StrongColoring{c, true};
    };

    { // proper edge coloring, when the chromatic index fits the palette
        EdgeColoring greedy = greedy_proper_edge_coloring(b);
        if (greedy.k <= max_colors)
            if (auto ok = certify(greedy)) return *ok;
    }

    std::optional<std::vector<int>> ham;
    bool ham_possible = true;
    if (bip) {
        auto parts = bipartition(b);
        ham_possible = parts && parts->first.size() == parts->second.size();
    }
    if (ham_possible) try {
            ham = hamiltonian_cycle(b, SearchBudget{1'000'000});
        } catch (const budget_error&) {
            ham.reset(); // the cycle is only a shortcut; later stages stay complete
        }
    if (ham) {
        const int len = static_cast<int>(ham->size());
        std::vector<int> colors(static_cast<std::size_t>(b.m()), 2);
        for (int i = 0; i < len; ++i) {
            int eid = b.edge_id((*ham)[static_cast<std::size_t>(i)],
                                (*ham)[static_cast<std::size_t>((i + 1) % len)]);
            colors[static_cast<std::size_t>(eid)] = 1 + i % 2;
        }
        if (len % 2 == 1) {
            int closing = b.edge_id((*ham)[static_cast<std::size_t>(len - 1)], (*ham)[0]);
            colors[static_cast<std::size_t>(closing)] = 3;
        }
        if (len % 2 == 0 || max_colors == 3)
            if (auto ok = certify(make_coloring(b, std::move(colors)))) return *ok;
    }

    if (bip) { // rank-parity checkerboard over the bipartition; certifies on
               // dense bipartite blocks where enumeration is hopeless
        auto parts = bipartition(b);
        if (parts) {
            std::vector<int> rank(static_cast<std::size_t>(b.n()), 0);
            for (std::size_t i = 0; i < parts->first.size(); ++i)
                rank[static_cast<std::size_t>(parts->first[i])] = static_cast<int>(i);
            for (std::size_t i = 0; i < parts->second.size(); ++i)
                rank[static_cast<std::size_t>(parts->second[i])] = static_cast<int>(i);
            std::vector<int> colors(static_cast<std::size_t>(b.m()));
            for (int e = 0; e < b.m(); ++e) {
                auto [x, y] = b.edge(e);
                colors[static_cast<std::size_t>(e)] =
                    1 + (rank[static_cast<std::size_t>(x)] + rank[static_cast<std::size_t>(y)]) % 2;
            }
            if (auto ok = certify(make_coloring(b, std::move(colors)))) return *ok;
        }
    }

    { // seeded hill-climb at the full palette; misses fall through to the
      // complete enumeration below
        auto objective = [](const Graph& g, const EdgeColoring& c) {
            return count_strong_failures(g, c);
        };
        if (auto found = local_search_coloring(b, max_colors, objective,
                                               /*seed=*/0x9e3779b97f4a7c15ULL,
                                               /*restarts=*/24, /*steps=*/4000))
            if (auto ok = certify(*found)) return *ok;
    }

    std::uint64_t examined = 0;
    for (int k = 2; k <= max_colors; ++k) {
        std::optional<EdgeColoring> hit;
        for_each_rgs_coloring(b.m(), k, [&](const std::vector<int>& colors) {
            if (++examined > max_candidates)
                throw budget_error("strong_color_block: candidate budget exhausted");
            EdgeColoring c{colors, k};
            if (count_failing_pairs(b, c) != 0) return true;
            if (!has_strong_property(b, c).holds) return true;
            hit = c;
            return false;
        });
        if (hit) return StrongColoring{*hit, true};
    }
    throw defect_error("strong_color_block: palette exhausted without a strong coloring");
}

/// Strong coloring of a connected bridgeless graph with at most three colors
/// (two when the graph is bipartite).  Each 2-connected block is colored on
/// its own — within a block the palette is decided by that block's
/// bipartiteness — and the pieces are concatenated edge-wise; blocks meet
/// only in cut vertices and the per-block strong property lets any crossing
/// pair pick compatible start and end colors.  The concatenation is
/// re-verified as a whole.
inline StrongColoring color_bridgeless(const Graph& g) {
    detail_verify::require_connected(g, "color_bridgeless");
    if (!is_bridgeless(g)) throw precondition_error("color_bridgeless: graph has a bridge");
    if (g.n() == 1) return {EdgeColoring{{}, 1}, true};

    std::vector<int> colors(static_cast<std::size_t>(g.m()), 0);
    int palette = 0;
    for (const auto& block : blocks_and_cuts(g).blocks) {
        auto sub = induced_subgraph(g, block);
        auto host = detail_construct::host_edge_ids(g, detail_construct::vertex_mask(block));
        StrongColoring piece =
            strong_color_block(sub.graph, is_bipartite(sub.graph) ? 2 : 3);
        for (std::size_t i = 0; i < host.size(); ++i)
            colors[static_cast<std::size_t>(host[i])] = piece.coloring.colors[i];
        palette = std::max(palette, max_used_color(piece.coloring));
    }
    EdgeColoring merged{std::move(colors), palette};
    check_coloring(g, merged);
    if (max_used_color(merged) > (is_bipartite(g) ? 2 : 3))
        throw defect_error("color_bridgeless: palette exceeded its bound");
    if (!is_proper_connected(g, merged).holds || !has_strong_property(g, merged).holds)
        throw defect_error("color_bridgeless: concatenated coloring failed verification");
    return {std::move(merged), true};
}

/// Extend a strong coloring of the core across pendant edges, one color per
/// pendant past the third and a three-color case analysis for the first
/// three: when all three hang off one vertex the colors are simply 1,2,3,
/// and otherwise the colors dodge the start and end colors of proper core
/// paths between the neighbors, so pendant-to-pendant routes stay proper.
/// Two or fewer pendants reuse the core palette outright: a strong core
/// offers every entry color an escape path.
inline EdgeColoring extend_pendants(const Graph& g, const StrongColoring& core_coloring,
                                    const PendantSet& pendants) {
    detail_verify::require_connected(g, "extend_pendants");
    const std::size_t k = pendants.vertices.size();
    std::uint64_t pendant_mask = detail_construct::vertex_mask(pendants.vertices);
    for (std::size_t i = 0; i < k; ++i) {
        int v = pendants.vertices[i];
        if (g.degree(v) != 1 || g.adj(v)[0].first != pendants.neighbors[i])
            throw precondition_error("extend_pendants: listed vertex is not a matching pendant");
        if (pendant_mask >> pendants.neighbors[i] & 1)
            throw precondition_error("extend_pendants: a pendant's neighbor is not in the core");
    }

    std::vector<int> core_vertices;
    for (int v = 0; v < g.n(); ++v)
        if (!(pendant_mask >> v & 1)) core_vertices.push_back(v);
    auto sub = induced_subgraph(g, core_vertices);
    const Graph& core = sub.graph;
    const EdgeColoring& cc = core_coloring.coloring;
    if (static_cast<int>(cc.colors.size()) != core.m())
        throw precondition_error("extend_pendants: core coloring does not fit g minus pendants");
    if (core.n() > 1 && !has_strong_property(core, cc).holds)
        throw precondition_error("extend_pendants: core coloring is not strong");

    std::vector<int> to_core(static_cast<std::size_t>(g.n()), -1);
    for (std::size_t i = 0; i < sub.to_host.size(); ++i)
        to_core[static_cast<std::size_t>(sub.to_host[i])] = static_cast<int>(i);

    auto host = detail_construct::host_edge_ids(g, ~pendant_mask & all_vertices_mask(g));
    std::vector<int> colors(static_cast<std::size_t>(g.m()), 0);
    for (std::size_t i = 0; i < host.size(); ++i)
        colors[static_cast<std::size_t>(host[i])] = cc.colors[i];

    auto pendant_edge = [&](std::size_t i) {
        return g.edge_id(pendants.vertices[i], pendants.neighbors[i]);
    };
    auto core_path = [&](int hu, int hv) {
        return detail_construct::proper_path_between(core, cc,
                                                     to_core[static_cast<std::size_t>(hu)],
                                                     to_core[static_cast<std::size_t>(hv)]);
    };

    if (k == 1) {
        colors[static_cast<std::size_t>(pendant_edge(0))] = 1;
    } else if (k == 2) {
        int u0 = pendants.neighbors[0], u1 = pendants.neighbors[1];
        if (u0 == u1) {
            colors[static_cast<std::size_t>(pendant_edge(0))] = 1;
            colors[static_cast<std::size_t>(pendant_edge(1))] = 2;
        } else {
            ProperPath p = core_path(u0, u1);
            colors[static_cast<std::size_t>(pendant_edge(0))] =
                detail_construct::smallest_color_avoiding(cc.k, {p.start_color});
            colors[static_cast<std::size_t>(pendant_edge(1))] =
                detail_construct::smallest_color_avoiding(cc.k, {p.end_color});
        }
    } else if (k >= 3) {
        for (std::size_t j = 3; j < k; ++j)
            colors[static_cast<std::size_t>(pendant_edge(j))] = static_cast<int>(j) + 1;

        // Order the first three so any coinciding neighbor pair sits first.
        std::size_t a = 0, b = 1, d = 2;
        const auto& nb = pendants.neighbors;
        if (nb[0] == nb[2] && nb[0] != nb[1]) std::swap(b, d);
        if (nb[1] == nb[2] && nb[0] != nb[1]) { a = 1; b = 2; d = 0; }

        if (nb[a] == nb[b] && nb[b] == nb[d]) {
            colors[static_cast<std::size_t>(pendant_edge(a))] = 1;
            colors[static_cast<std::size_t>(pendant_edge(b))] = 2;
            colors[static_cast<std::size_t>(pendant_edge(d))] = 3;
        } else if (nb[a] == nb[b]) {
            ProperPath p = core_path(nb[a], nb[d]);
            int first = detail_construct::smallest_color_avoiding(3, {p.start_color});
            int second = detail_construct::smallest_color_avoiding(3, {p.start_color, first});
            colors[static_cast<std::size_t>(pendant_edge(a))] = first;
            colors[static_cast<std::size_t>(pendant_edge(b))] = second;
            colors[static_cast<std::size_t>(pendant_edge(d))] =
                detail_construct::smallest_color_avoiding(3, {p.end_color});
        } else {
            ProperPath p12 = core_path(nb[a], nb[b]);
            ProperPath p13 = core_path(nb[a], nb[d]);
            ProperPath p23 = core_path(nb[b], nb[d]);
            colors[static_cast<std::size_t>(pendant_edge(a))] =
                detail_construct::smallest_color_avoiding(3, {p12.start_color, p13.start_color});
            colors[static_cast<std::size_t>(pendant_edge(b))] =
                detail_construct::smallest_color_avoiding(3, {p12.end_color, p23.start_color});
            colors[static_cast<std::size_t>(pendant_edge(d))] =
                detail_construct::smallest_color_avoiding(3, {p13.end_color, p23.end_color});
        }
    }

    int palette = std::max(cc.k, max_used_color(EdgeColoring{colors, 1}));
    EdgeColoring out{std::move(colors), palette};
    if (k > 0 && out.k > std::max(3, static_cast<int>(k)) )
        throw defect_error("extend_pendants: palette exceeded max(3, pendant count)");
    check_coloring(g, out);
    if (!is_proper_connected(g, out).holds)
        throw defect_error("extend_pendants: extension failed verification");
    return out;
}

/// Extend a strong core coloring over at most two pendant paths.  Each path
/// is given as its vertex sequence starting at the core anchor; tail
/// vertices are exactly the non-core vertices of g.  Path edges alternate,
/// and the two first edges dodge the start and end color of one proper core
/// path between the anchors, so tail-to-tail routes glue into proper walks.
/// Any g-edge outside the core and the designated paths gets color 2 — more
/// edges only ever add routes.  The result is re-verified on all of g.
inline EdgeColoring extend_two_attachments(const Graph& g, const StrongColoring& core_coloring,
                                           const std::vector<std::vector<int>>& paths) {
    detail_verify::require_connected(g, "extend_two_attachments");
    if (paths.size() > 2)
        throw precondition_error("extend_two_attachments: more than two attachments; "
                                 "use extend_pendants");

    std::uint64_t tail_mask = 0;
    for (const auto& p : paths) {
        if (p.size() < 2) throw precondition_error("extend_two_attachments: path needs an edge");
        for (std::size_t i = 1; i < p.size(); ++i) {
            if (g.edge_id(p[i - 1], p[i]) < 0)
                throw precondition_error("extend_two_attachments: path edge missing from g");
            if (tail_mask >> p[i] & 1)
                throw precondition_error("extend_two_attachments: tails overlap");
            tail_mask |= std::uint64_t{1} << p[i];
        }
    }
    for (const auto& p : paths)
        if (tail_mask >> p[0] & 1)
            throw precondition_error("extend_two_attachments: anchor lies on a tail");

    std::vector<int> core_vertices;
    for (int v = 0; v < g.n(); ++v)
        if (!(tail_mask >> v & 1)) core_vertices.push_back(v);
    auto sub = induced_subgraph(g, core_vertices);
    const Graph& core = sub.graph;
    const EdgeColoring& cc = core_coloring.coloring;
    if (static_cast<int>(cc.colors.size()) != core.m())
        throw precondition_error("extend_two_attachments: core coloring does not fit g minus tails");
    if (core.n() > 1 && !has_strong_property(core, cc).holds)
        throw precondition_error("extend_two_attachments: core coloring is not strong");

    std::vector<int> to_core(static_cast<std::size_t>(g.n()), -1);
    for (std::size_t i = 0; i < sub.to_host.size(); ++i)
        to_core[static_cast<std::size_t>(sub.to_host[i])] = static_cast<int>(i);

    auto host = detail_construct::host_edge_ids(g, ~tail_mask & all_vertices_mask(g));
    std::vector<int> colors(static_cast<std::size_t>(g.m()), 0);
    for (std::size_t i = 0; i < host.size(); ++i)
        colors[static_cast<std::size_t>(host[i])] = cc.colors[i];
    for (int e = 0; e < g.m(); ++e)
        if (colors[static_cast<std::size_t>(e)] == 0) colors[static_cast<std::size_t>(e)] = 2;

    int first0 = 1, first1 = 2;
    if (paths.size() == 2 && paths[0][0] != paths[1][0]) {
        ProperPath p = detail_construct::proper_path_between(
            core, cc, to_core[static_cast<std::size_t>(paths[0][0])],
            to_core[static_cast<std::size_t>(paths[1][0])]);
        first0 = detail_construct::smallest_color_avoiding(cc.k, {p.start_color});
        first1 = detail_construct::smallest_color_avoiding(cc.k, {p.end_color});
    }
    for (std::size_t pi = 0; pi < paths.size(); ++pi) {
        int col = pi == 0 ? first0 : first1;
        const auto& p = paths[pi];
        for (std::size_t i = 1; i < p.size(); ++i) {
            colors[static_cast<std::size_t>(g.edge_id(p[i - 1], p[i]))] = col;
            col = detail_construct::alternate_color(col, std::max(cc.k, 2));
        }
    }

    EdgeColoring out{std::move(colors), std::max(cc.k, 2)};
    check_coloring(g, out);
    if (!is_proper_connected(g, out).holds)
        throw defect_error("extend_two_attachments: extension failed verification");
    return out;
}

/// The two pieces a cut edge defines: each side keeps its own edges plus the
/// cut edge itself, with the far endpoint reduced to a pendant.  Piece `a`
/// contains the smaller endpoint of the cut edge.
struct CutEdgePieces {
    Graph a, b;
    std::vector<int> a_to_g, b_to_g; ///< piece vertex id -> g vertex id
    int bridge_in_a = -1, bridge_in_b = -1; ///< the cut edge's local edge id
};

inline CutEdgePieces cut_edge_pieces(const Graph& g, int edge_id) {
    if (edge_id < 0 || edge_id >= g.m())
        throw precondition_error("cut_edge_pieces: edge id out of range");
    auto bridges = bridge_edges(g);
    if (std::find(bridges.begin(), bridges.end(), edge_id) == bridges.end())
        throw precondition_error("cut_edge_pieces: edge is not a bridge");
    auto [u, v] = g.edge(edge_id);

    std::uint64_t all = all_vertices_mask(g);
    std::uint64_t side_u = reachable_mask(g, u, all & ~(std::uint64_t{1} << v));
    CutEdgePieces out;
    std::vector<int> av, bv;
    for (int w = 0; w < g.n(); ++w)
        (side_u >> w & 1 ? av : bv).push_back(w);
    av.push_back(v);
    bv.push_back(u);
    auto pa = induced_subgraph(g, av);
    auto pb = induced_subgraph(g, bv);
    out.a = std::move(pa.graph);
    out.b = std::move(pb.graph);
    out.a_to_g = std::move(pa.to_host);
    out.b_to_g = std::move(pb.to_host);
    auto local_edge = [&](const Graph& piece, const std::vector<int>& to_g) {
        int lu = -1, lv = -1;
        for (std::size_t i = 0; i < to_g.size(); ++i) {
            if (to_g[i] == u) lu = static_cast<int>(i);
            if (to_g[i] == v) lv = static_cast<int>(i);
        }
        return piece.edge_id(lu, lv);
    };
    out.bridge_in_a = local_edge(out.a, out.a_to_g);
    out.bridge_in_b = local_edge(out.b, out.b_to_g);
    return out;
}

/// Merge proper-connection colorings of the two cut-edge pieces into one on
/// g.  The second coloring is renamed (a color transposition) so the shared
/// cut edge agrees, and must then fit inside the first palette.  Any path
/// across the bridge is the gluing of a piece path ending at the bridge and
/// one starting with it, so properness survives; the merge is re-verified.
inline EdgeColoring compose_cut_edge(const Graph& g, int edge_id, const EdgeColoring& c1,
                                     const EdgeColoring& c2) {
    CutEdgePieces pieces = cut_edge_pieces(g, edge_id);
    check_coloring(pieces.a, c1);
    check_coloring(pieces.b, c2);
    if (!is_proper_connected(pieces.a, c1).holds || !is_proper_connected(pieces.b, c2).holds)
        throw precondition_error("compose_cut_edge: a piece coloring fails its own verification");

    EdgeColoring renamed = c2;
    detail_construct::transpose_colors(renamed, renamed.colors[static_cast<std::size_t>(
                                                    pieces.bridge_in_b)],
                                       c1.colors[static_cast<std::size_t>(pieces.bridge_in_a)]);
    if (max_used_color(renamed) > c1.k)
        throw precondition_error("compose_cut_edge: second palette does not fit inside the first");

    std::vector<int> colors(static_cast<std::size_t>(g.m()), 0);
    auto host_a = detail_construct::host_edge_ids(g, detail_construct::vertex_mask(pieces.a_to_g));
    auto host_b = detail_construct::host_edge_ids(g, detail_construct::vertex_mask(pieces.b_to_g));
    for (std::size_t i = 0; i < host_b.size(); ++i)
        colors[static_cast<std::size_t>(host_b[i])] = renamed.colors[i];
    for (std::size_t i = 0; i < host_a.size(); ++i)
        colors[static_cast<std::size_t>(host_a[i])] = c1.colors[i];

    EdgeColoring out{std::move(colors), std::max(c1.k, renamed.k)};
    check_coloring(g, out);
    if (!is_proper_connected(g, out).holds)
        throw defect_error("compose_cut_edge: merged coloring failed verification");
    return out;
}

/// Proper-connection coloring of any connected graph within max{3, Δ(G*)}
/// colors, where G* is the bridge-block tree.  Each component of G minus its
/// bridges is colored together with its incident bridge stubs — a singleton
/// component becomes a star with one color per stub, a 2-edge-connected
/// component gets a strong block coloring extended over its stubs — and the
/// pieces are merged bridge by bridge, transposing colors blob-wide so the
/// shared edge agrees (iterated cut-edge composition).
inline EdgeColoring color_general(const Graph& g) {
    detail_verify::require_connected(g, "color_general");
    if (g.n() == 1) return EdgeColoring{{}, 1};
    BridgeBlockTree t = bridge_block_tree(g);
    if (t.bridges.empty()) return color_bridgeless(g).coloring;

    const int comps = static_cast<int>(t.components.size());

    // Per-component piece: the component plus one pendant stub per incident
    // bridge.  Piece colorings are written straight into a shared color
    // array; bridges are written by both sides, reconciled during merging.
    std::vector<int> colors(static_cast<std::size_t>(g.m()), 0);
    std::vector<std::vector<int>> piece_edges(static_cast<std::size_t>(comps));
    std::vector<std::vector<int>> piece_colors(static_cast<std::size_t>(comps));
    for (int ci = 0; ci < comps; ++ci) {
        const auto& comp = t.components[ci];
        std::vector<int> vertices = comp;
        std::vector<int> stubs; // bridge ids incident to this component, ascending
        for (int bid : t.bridges) {
            auto [u, v] = g.edge(bid);
            bool mine_u = t.component_of[static_cast<std::size_t>(u)] == ci;
            bool mine_v = t.component_of[static_cast<std::size_t>(v)] == ci;
            if (mine_u != mine_v) {
                stubs.push_back(bid);
                vertices.push_back(mine_u ? v : u);
            }
        }
        std::sort(vertices.begin(), vertices.end());
        auto sub = induced_subgraph(g, vertices);
        auto host = detail_construct::host_edge_ids(g, detail_construct::vertex_mask(vertices));
        EdgeColoring piece;
        if (comp.size() == 1) {
            // Star: one color per stub, in bridge id order.
            std::vector<int> sc(static_cast<std::size_t>(sub.graph.m()), 0);
            for (std::size_t i = 0; i < host.size(); ++i) {
                auto it = std::find(stubs.begin(), stubs.end(), host[i]);
                sc[i] = static_cast<int>(it - stubs.begin()) + 1;
            }
            piece = make_coloring(sub.graph, std::move(sc));
        } else {
            auto comp_sub = induced_subgraph(g, comp);
            StrongColoring block = color_bridgeless(comp_sub.graph);
            piece = extend_pendants(sub.graph, block, pendant_set(sub.graph));
        }
        if (!is_proper_connected(sub.graph, piece).holds)
            throw defect_error("color_general: piece coloring failed verification");
        piece_edges[static_cast<std::size_t>(ci)] = std::move(host);
        piece_colors[static_cast<std::size_t>(ci)] = std::move(piece.colors);
    }

    // Union-find over components; each blob owns the piece colorings of its
    // members and is renamed wholesale when merged.
    std::vector<int> parent(static_cast<std::size_t>(comps));
    for (int i = 0; i < comps; ++i) parent[static_cast<std::size_t>(i)] = i;
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    std::vector<std::vector<int>> blob_members(static_cast<std::size_t>(comps));
    for (int i = 0; i < comps; ++i) blob_members[static_cast<std::size_t>(i)] = {i};

    auto blob_color_of_bridge = [&](int blob, int bid) {
        for (int ci : blob_members[static_cast<std::size_t>(blob)]) {
            const auto& edges = piece_edges[static_cast<std::size_t>(ci)];
            auto it = std::find(edges.begin(), edges.end(), bid);
            if (it != edges.end())
                return piece_colors[static_cast<std::size_t>(ci)][static_cast<std::size_t>(
                    it - edges.begin())];
        }
        throw defect_error("color_general: bridge missing from blob");
    };
    auto blob_transpose = [&](int blob, int x, int y) {
        if (x == y) return;
        for (int ci : blob_members[static_cast<std::size_t>(blob)])
            for (int& col : piece_colors[static_cast<std::size_t>(ci)]) {
                if (col == x)
                    col = y;
                else if (col == y)
                    col = x;
            }
    };
    auto blob_palette = [&](int blob) {
        int k = 0;
        for (int ci : blob_members[static_cast<std::size_t>(blob)])
            for (int col : piece_colors[static_cast<std::size_t>(ci)]) k = std::max(k, col);
        return k;
    };

    for (int bid : t.bridges) {
        auto [u, v] = g.edge(bid);
        int ra = find(t.component_of[static_cast<std::size_t>(u)]);
        int rb = find(t.component_of[static_cast<std::size_t>(v)]);
        if (ra == rb) throw defect_error("color_general: bridge joins a blob to itself");
        if (blob_palette(ra) < blob_palette(rb)) std::swap(ra, rb);
        blob_transpose(rb, blob_color_of_bridge(rb, bid), blob_color_of_bridge(ra, bid));
        parent[static_cast<std::size_t>(rb)] = ra;
        for (int ci : blob_members[static_cast<std::size_t>(rb)])
            blob_members[static_cast<std::size_t>(ra)].push_back(ci);
        blob_members[static_cast<std::size_t>(rb)].clear();
    }

    for (int ci = 0; ci < comps; ++ci) {
        const auto& edges = piece_edges[static_cast<std::size_t>(ci)];
        for (std::size_t i = 0; i < edges.size(); ++i)
            colors[static_cast<std::size_t>(edges[i])] =
                piece_colors[static_cast<std::size_t>(ci)][i];
    }
    EdgeColoring out = make_coloring(g, std::move(colors));
    int bound = std::max(3, bridge_tree_max_degree(t));
    if (out.k > bound) throw defect_error("color_general: palette exceeded max(3, bridge-tree degree)");
    if (!is_proper_connected(g, out).holds)
        throw defect_error("color_general: assembled coloring failed verification");
    return out;
}

} // namespace pcon
