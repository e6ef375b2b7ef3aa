#pragma once

// Colorings forced by near-complete edge counts.  The workhorse is a greedy
// bipartite extraction: grow two vertex sides until they span the graph, take
// every edge running between them as a spanning 2-connected bipartite
// subgraph, give that subgraph a strong two-coloring, and paint the leftover
// edges with the second color.  Sparse appendages (one or two peeled
// vertices, a leaf, a small side behind a cut edge) are clipped off first and
// reattached over the strong core.

#include <bit>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "pcon/construct.hpp"
#include "pcon/exact.hpp"

namespace pcon {

/// Vertex sides of a spanning bipartite subgraph; the subgraph itself is the
/// set of all edges running between `x` and `y`.
struct BipartiteExtraction {
    std::vector<int> x, y;
};

namespace detail_dense {

inline int choose2(int k) { return k * (k - 1) / 2; }

/// One side pair under construction, as vertex bitmasks.
using Split = std::pair<std::uint64_t, std::uint64_t>;

/// Pull unplaced vertices across from two placed neighbours until nothing
/// qualifies: w with two neighbours in x joins y, and vice versa (x is
/// preferred when both counts reach two).  Each placement keeps w
/// 2-connected to the opposite side.  The scan restarts at vertex 0 after
/// every move, so runs are reproducible.
inline void absorb(const Graph& g, std::uint64_t& x, std::uint64_t& y) {
    bool progress = true;
    while (progress) {
        progress = false;
        for (int w = 0; w < g.n() && !progress; ++w) {
            if ((x | y) >> w & 1) continue;
            std::uint64_t nb = g.neighbor_mask(w);
            if (std::popcount(nb & x) >= 2) {
                y |= std::uint64_t{1} << w;
                progress = true;
            } else if (std::popcount(nb & y) >= 2) {
                x |= std::uint64_t{1} << w;
                progress = true;
            }
        }
    }
}

/// All edges with one endpoint on each side, kept on the host vertex ids.
/// `host_ids` receives the host edge id of each crossing edge, in order.
inline Graph crossing_graph(const Graph& g, std::uint64_t x, std::vector<int>* host_ids = nullptr) {
    std::vector<std::pair<int, int>> edges;
    for (int e = 0; e < g.m(); ++e) {
        auto [a, b] = g.edge(e);
        if (((x >> a) & 1) != ((x >> b) & 1)) {
            edges.push_back({a, b});
            if (host_ids) host_ids->push_back(e);
        }
    }
    return Graph::from_edges(g.n(), edges);
}

/// A split is usable when the sides partition the vertices and the crossing
/// edges form a 2-connected (hence spanning and connected) subgraph.
inline bool split_ok(const Graph& g, std::uint64_t x, std::uint64_t y) {
    if (x == 0 || y == 0 || (x & y) != 0) return false;
    if ((x | y) != all_vertices_mask(g)) return false;
    return is_two_connected(crossing_graph(g, x));
}

/// Grow a split from one seed pair: the common neighbourhood of u and v on
/// one side, u and v together on the other.
inline std::optional<Split> seeded_split(const Graph& g, int u, int v) {
    std::uint64_t s = g.neighbor_mask(u) & g.neighbor_mask(v);
    if (std::popcount(s) < 2) return std::nullopt;
    std::uint64_t x = s;
    std::uint64_t y = (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
    absorb(g, x, y);
    if (!split_ok(g, x, y)) return std::nullopt;
    return Split{x, y};
}

/// First workable seed pair in lexicographic order.  Bipartite 2-connected
/// inputs give up their own bipartition before any seeding.
inline std::optional<Split> scan_split(const Graph& g) {
    if (is_two_connected(g) && is_bipartite(g)) {
        auto parts = bipartition(g);
        Split sp{detail_construct::vertex_mask(parts->first),
                 detail_construct::vertex_mask(parts->second)};
        if (split_ok(g, sp.first, sp.second)) return sp;
    }
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (auto sp = seeded_split(g, u, v)) return sp;
    return std::nullopt;
}

/// Seed-free split.  Small orders scan every side assignment outright (vertex
/// 0 pinned to the x side); larger ones shrink by a minimum-degree vertex and
/// reinsert it across from two of its neighbours.  A degree-two vertex makes
/// its neighbour pair the seed of the shrunken instance instead, which keeps
/// both its edges crossing.
inline std::optional<Split> free_split(const Graph& g) { // NOLINT(misc-no-recursion)
    const std::uint64_t all = all_vertices_mask(g);
    if (is_two_connected(g) && is_bipartite(g)) {
        auto parts = bipartition(g);
        Split sp{detail_construct::vertex_mask(parts->first),
                 detail_construct::vertex_mask(parts->second)};
        if (split_ok(g, sp.first, sp.second)) return sp;
    }
    if (g.n() >= 4 && g.m() == choose2(g.n())) {
        Split sp{0b11, all & ~std::uint64_t{0b11}};
        if (split_ok(g, sp.first, sp.second)) return sp;
    }
    if (g.n() <= 12) {
        for (std::uint64_t x = 1; x < all; x += 2)
            if (split_ok(g, x, all & ~x)) return Split{x, all & ~x};
        return std::nullopt;
    }

    int v = 0;
    for (int i = 1; i < g.n(); ++i)
        if (g.degree(i) < g.degree(v)) v = i;
    std::vector<int> rest;
    for (int i = 0; i < g.n(); ++i)
        if (i != v) rest.push_back(i);
    auto sub = induced_subgraph(g, rest);

    std::optional<Split> inner;
    if (g.degree(v) == 2) {
        int a = g.adj(v)[0].first, b = g.adj(v)[1].first;
        inner = seeded_split(sub.graph, a - (a > v ? 1 : 0), b - (b > v ? 1 : 0));
    } else {
        if (!is_two_connected(sub.graph)) return std::nullopt;
        inner = free_split(sub.graph);
    }
    if (!inner) return std::nullopt;

    std::uint64_t x = 0, y = 0;
    for (int i = 0; i < sub.graph.n(); ++i) {
        if (inner->first >> i & 1) x |= std::uint64_t{1} << sub.to_host[static_cast<std::size_t>(i)];
        if (inner->second >> i & 1) y |= std::uint64_t{1} << sub.to_host[static_cast<std::size_t>(i)];
    }
    std::uint64_t nb = g.neighbor_mask(v);
    if (g.degree(v) == 2) {
        x |= std::uint64_t{1} << v; // its two neighbours seeded the y side
    } else if (std::popcount(nb & x) >= 2) {
        y |= std::uint64_t{1} << v;
    } else if (std::popcount(nb & y) >= 2) {
        x |= std::uint64_t{1} << v;
    } else {
        return std::nullopt;
    }
    if (!split_ok(g, x, y)) return std::nullopt;
    return Split{x, y};
}

inline BipartiteExtraction to_extraction(const Split& sp) {
    BipartiteExtraction out;
    for (int i = 0; i < 64; ++i) {
        if (sp.first >> i & 1) out.x.push_back(i);
        if (sp.second >> i & 1) out.y.push_back(i);
    }
    return out;
}

/// Strong two-coloring of the whole graph from a validated split: the
/// crossing subgraph gets a strong scheme, every other edge gets color 2.
/// Strongness survives the extra edges because each witness path is kept.
inline StrongColoring strong_from_split(const Graph& g, const Split& sp) {
    std::vector<int> host;
    Graph b = crossing_graph(g, sp.first, &host);
    StrongColoring sb = strong_color_block(b, 2);
    std::vector<int> colors(static_cast<std::size_t>(g.m()), 2);
    for (std::size_t j = 0; j < host.size(); ++j)
        colors[static_cast<std::size_t>(host[j])] = sb.coloring.colors[j];
    EdgeColoring out = make_coloring(g, std::move(colors));
    if (!is_proper_connected(g, out).holds || !has_strong_property(g, out).holds)
        throw defect_error("strong_from_split: crossing coloring failed to cover the host graph");
    return StrongColoring{std::move(out), true};
}

/// Best-effort strong two-coloring of a dense graph: extraction first, then a
/// hamiltonian alternation on even orders, then a short hill-climb.  Every
/// candidate is certified before it is returned.
inline std::optional<StrongColoring> strong_two(const Graph& g) {
    if (g.n() < 3 || !is_connected(g)) return std::nullopt;
    if (auto sp = scan_split(g)) return strong_from_split(g, *sp);

    auto certify = [&](EdgeColoring c) -> std::optional<StrongColoring> {
        if (max_used_color(c) > 2) return std::nullopt;
        if (!is_proper_connected(g, c).holds) return std::nullopt;
        if (!has_strong_property(g, c).holds) return std::nullopt;
        return StrongColoring{std::move(c), true};
    };
    if (g.n() % 2 == 0) {
        std::optional<std::vector<int>> ham;
        try {
            ham = hamiltonian_cycle(g, SearchBudget{1'000'000});
        } catch (const budget_error&) {
        }
        if (ham)
            if (auto ok = certify(cycle_based_two_coloring(g, *ham))) return ok;
    }
    auto objective = [](const Graph& h, const EdgeColoring& c) { return count_strong_failures(h, c); };
    if (auto found = local_search_coloring(g, 2, objective, /*seed=*/0x5851f42d4c957f2dULL,
                                           /*restarts=*/16, /*steps=*/4000))
        if (auto ok = certify(std::move(*found))) return ok;
    return std::nullopt;
}

/// Two-color a dense piece that sits below the public entry thresholds:
/// strip up to two chained leaves, strong-color the remaining core, and hang
/// the chains back on.  Complete pieces come out monochrome.
inline EdgeColoring relaxed_dense_two(const Graph& g) {
    if (!is_connected(g)) throw precondition_error("relaxed_dense_two: graph must be connected");
    if (g.n() >= 2 && g.m() == choose2(g.n())) {
        EdgeColoring c = make_coloring(g, std::vector<int>(static_cast<std::size_t>(g.m()), 1));
        if (!is_proper_connected(g, c).holds)
            throw defect_error("relaxed_dense_two: complete piece failed verification");
        return c;
    }

    std::uint64_t alive = all_vertices_mask(g);
    std::vector<int> peeled;
    std::vector<int> parent(static_cast<std::size_t>(g.n()), -1);
    while (true) {
        int leaf = -1;
        for (int w = 0; w < g.n() && leaf < 0; ++w)
            if ((alive >> w & 1) && std::popcount(g.neighbor_mask(w) & alive) == 1) leaf = w;
        if (leaf < 0) break;
        if (peeled.size() == 2) throw defect_error("relaxed_dense_two: more than two chained leaves");
        if (std::popcount(alive) <= 3) throw defect_error("relaxed_dense_two: core vanished");
        parent[static_cast<std::size_t>(leaf)] =
            std::countr_zero(g.neighbor_mask(leaf) & alive);
        peeled.push_back(leaf);
        alive &= ~(std::uint64_t{1} << leaf);
    }

    if (peeled.empty()) {
        if (auto sc = strong_two(g)) return sc->coloring;
        throw defect_error("relaxed_dense_two: no strong scheme for the core");
    }

    std::vector<int> core_vertices;
    for (int w = 0; w < g.n(); ++w)
        if (alive >> w & 1) core_vertices.push_back(w);
    auto sub = induced_subgraph(g, core_vertices);
    auto sc = strong_two(sub.graph);
    if (!sc) throw defect_error("relaxed_dense_two: no strong scheme for the core");

    std::vector<std::vector<int>> chains;
    for (auto it = peeled.rbegin(); it != peeled.rend(); ++it) {
        const int w = *it, p = parent[static_cast<std::size_t>(w)];
        if (alive >> p & 1) {
            chains.push_back({p, w});
        } else {
            bool placed = false;
            for (auto& ch : chains)
                if (ch.back() == p) {
                    ch.push_back(w);
                    placed = true;
                    break;
                }
            if (!placed) throw defect_error("relaxed_dense_two: leaf chain branches");
        }
    }
    return extend_two_attachments(g, *sc, chains);
}

} // namespace detail_dense

/// Spanning 2-connected bipartite subgraph grown from a designated seed pair:
/// side x starts as the common neighbourhood of u and v, side y as {u, v},
/// and absorption places everything else.  Wants nearly complete inputs; a
/// stall on a conforming input is a defect, not a precondition miss.
inline BipartiteExtraction extract_bipartite_spanning(const Graph& g, int u, int v) {
    if (u < 0 || v < 0 || u >= g.n() || v >= g.n() || u == v)
        throw precondition_error("extract_bipartite_spanning: seed pair out of range");
    if (g.n() < 6) throw precondition_error("extract_bipartite_spanning: needs at least six vertices");
    if (g.m() < detail_dense::choose2(g.n() - 1) + 3)
        throw precondition_error(
            "extract_bipartite_spanning: edge count below (n-1 choose 2) + 3");
    auto sp = detail_dense::seeded_split(g, u, v);
    if (!sp) throw defect_error("extract_bipartite_spanning: absorption stalled before spanning");
    return detail_dense::to_extraction(*sp);
}

/// Seed-free form for 2-connected graphs a few edges shy of complete.  An
/// input that is already bipartite is its own answer and skips the edge count
/// gate entirely.
inline BipartiteExtraction extract_bipartite_spanning(const Graph& g) {
    if (is_two_connected(g) && is_bipartite(g)) {
        auto parts = bipartition(g);
        return BipartiteExtraction{parts->first, parts->second};
    }
    if (!is_two_connected(g))
        throw precondition_error("extract_bipartite_spanning: graph must be 2-connected");
    if (g.n() < 12)
        throw precondition_error("extract_bipartite_spanning: seed-free form needs 12+ vertices");
    if (g.m() < detail_dense::choose2(g.n() - 1) - 5)
        throw precondition_error(
            "extract_bipartite_spanning: edge count below (n-1 choose 2) - 5");
    auto sp = detail_dense::free_split(g);
    if (!sp) throw defect_error("extract_bipartite_spanning: no spanning 2-connected split found");
    return detail_dense::to_extraction(*sp);
}

/// Exactly two colors for graphs of 14+ vertices whose edge count sits in
/// [(n-3 choose 2) + 4, (n choose 2) - 1].  Highly connected inputs are
/// extracted in place; otherwise one or two minimum-degree vertices (and, if
/// the twice-peeled residue still is not 2-connected, one leaf of it) come
/// off, the rest is extracted, and the clipped vertices are chained back over
/// the strong core.
inline EdgeColoring color_dense_two(const Graph& g) {
    const int n = g.n();
    if (n < 14) throw precondition_error("color_dense_two: needs at least 14 vertices");
    if (!is_connected(g)) throw precondition_error("color_dense_two: graph must be connected");
    if (g.m() < detail_dense::choose2(n - 3) + 4 || g.m() > detail_dense::choose2(n) - 1)
        throw precondition_error(
            "color_dense_two: edge count outside [(n-3 choose 2)+4, (n choose 2)-1]");

    auto finish = [&](EdgeColoring c) {
        if (max_used_color(c) != 2) throw defect_error("color_dense_two: palette is not exactly two");
        if (!is_proper_connected(g, c).holds)
            throw defect_error("color_dense_two: final verification failed");
        return c;
    };

    if (vertex_connectivity_at_least(g, 3))
        if (auto sp = detail_dense::scan_split(g))
            return finish(detail_dense::strong_from_split(g, *sp).coloring);

    // peel a minimum-degree vertex
    int v = 0;
    for (int i = 1; i < n; ++i)
        if (g.degree(i) < g.degree(v)) v = i;
    std::vector<int> hv;
    for (int i = 0; i < n; ++i)
        if (i != v) hv.push_back(i);
    auto H = induced_subgraph(g, hv);
    if (!is_connected(H.graph)) throw defect_error("color_dense_two: peeling disconnected the graph");

    if (vertex_connectivity_at_least(H.graph, 3)) {
        auto sp = detail_dense::scan_split(H.graph);
        if (!sp) throw defect_error("color_dense_two: no split of the peeled graph");
        StrongColoring ch = detail_dense::strong_from_split(H.graph, *sp);
        return finish(extend_two_attachments(g, ch, {{g.adj(v).front().first, v}}));
    }

    // peel a second minimum-degree vertex
    int uj = 0;
    for (int j = 1; j < H.graph.n(); ++j)
        if (H.graph.degree(j) < H.graph.degree(uj)) uj = j;
    const int u = hv[static_cast<std::size_t>(uj)];
    std::vector<int> fv;
    for (int i = 0; i < n; ++i)
        if (i != v && i != u) fv.push_back(i);
    auto F = induced_subgraph(g, fv);
    if (!is_connected(F.graph))
        throw defect_error("color_dense_two: second peel disconnected the graph");

    const std::uint64_t fmask = detail_construct::vertex_mask(fv);
    auto anchor_in = [&](int t, std::uint64_t mask) -> int {
        for (auto [nbr, eid] : g.adj(t))
            if (mask >> nbr & 1) return nbr;
        return -1;
    };

    if (is_two_connected(F.graph)) {
        if (F.graph.m() < detail_dense::choose2(F.graph.n() - 1) - 5)
            throw defect_error("color_dense_two: residue lost too many edges");
        auto sp = detail_dense::free_split(F.graph);
        if (!sp) throw defect_error("color_dense_two: no split of the residue");
        StrongColoring cf = detail_dense::strong_from_split(F.graph, *sp);
        const int au = anchor_in(u, fmask), av = anchor_in(v, fmask);
        if (au < 0) throw defect_error("color_dense_two: second peel lost its anchor");
        std::vector<std::vector<int>> paths;
        if (av >= 0)
            paths = {{au, u}, {av, v}};
        else if (g.has_edge(u, v))
            paths = {{au, u, v}};
        else
            throw defect_error("color_dense_two: first peel is stranded");
        return finish(extend_two_attachments(g, cf, paths));
    }

    // the residue has a leaf: strip it too, then chain all three back on
    int w = -1;
    for (int j = 0; j < F.graph.n() && w < 0; ++j)
        if (F.graph.degree(j) == 1) w = fv[static_cast<std::size_t>(j)];
    if (w < 0) throw defect_error("color_dense_two: residue is neither 2-connected nor pendant");
    std::vector<int> pv;
    for (int i = 0; i < n; ++i)
        if (i != v && i != u && i != w) pv.push_back(i);
    auto P = induced_subgraph(g, pv);
    if (!is_connected(P.graph)) throw defect_error("color_dense_two: third peel disconnected the graph");
    if (P.graph.m() < detail_dense::choose2(P.graph.n() - 1) + 3)
        throw defect_error("color_dense_two: twice-peeled residue lost too many edges");
    auto sp = detail_dense::scan_split(P.graph);
    if (!sp) throw defect_error("color_dense_two: no split of the twice-peeled residue");
    StrongColoring cp = detail_dense::strong_from_split(P.graph, *sp);

    const std::uint64_t pmask = detail_construct::vertex_mask(pv);
    const int trio[3] = {w, u, v};
    std::vector<std::vector<int>> cover;
    // two strands first: a lone vertex plus an edge hanging off the core
    for (int s = 0; s < 3 && cover.empty(); ++s)
        for (int q = 0; q < 3 && cover.empty(); ++q) {
            if (q == s) continue;
            const int r = 3 - s - q;
            const int as = anchor_in(trio[s], pmask), aq = anchor_in(trio[q], pmask);
            if (as >= 0 && aq >= 0 && g.has_edge(trio[q], trio[r]))
                cover = {{as, trio[s]}, {aq, trio[q], trio[r]}};
        }
    // then one strand threading all three
    for (int p = 0; p < 3 && cover.empty(); ++p)
        for (int q = 0; q < 3 && cover.empty(); ++q) {
            if (q == p) continue;
            const int r = 3 - p - q;
            const int ap = anchor_in(trio[p], pmask);
            if (ap >= 0 && g.has_edge(trio[p], trio[q]) && g.has_edge(trio[q], trio[r]))
                cover = {{ap, trio[p], trio[q], trio[r]}};
        }
    if (cover.empty()) throw defect_error("color_dense_two: peeled vertices do not chain back");
    return finish(extend_two_attachments(g, cp, cover));
}

/// At most three colors for graphs of 15+ vertices with at least
/// (n-4 choose 2) + 5 edges.  Without bridges the block scheme already fits;
/// a leaf rides on a two-colored interior with a third color on its edge; any
/// other bridge splits off a side of 3 or 4 vertices, both pieces get two
/// colors, and the pieces are recombined across the bridge.
inline EdgeColoring color_dense_three(const Graph& g) {
    const int n = g.n();
    if (n < 15) throw precondition_error("color_dense_three: needs at least 15 vertices");
    if (!is_connected(g)) throw precondition_error("color_dense_three: graph must be connected");
    if (g.m() < detail_dense::choose2(n - 4) + 5)
        throw precondition_error("color_dense_three: edge count below (n-4 choose 2) + 5");

    auto finish = [&](EdgeColoring c) {
        if (max_used_color(c) > 3)
            throw defect_error("color_dense_three: palette escaped three colors");
        if (!is_proper_connected(g, c).holds)
            throw defect_error("color_dense_three: final verification failed");
        return c;
    };

    if (is_two_edge_connected(g)) return finish(color_bridgeless(g).coloring);

    PendantSet pend = pendant_set(g);
    if (!pend.vertices.empty()) {
        const int v = pend.vertices.front();
        const int pe = g.adj(v).front().second;
        const std::uint64_t core_mask = all_vertices_mask(g) & ~(std::uint64_t{1} << v);
        std::vector<int> cv;
        for (int i = 0; i < n; ++i)
            if (i != v) cv.push_back(i);
        auto H = induced_subgraph(g, cv);
        std::vector<int> colors(static_cast<std::size_t>(g.m()), 1);
        if (H.graph.m() == detail_dense::choose2(H.graph.n())) {
            colors[static_cast<std::size_t>(pe)] = 2; // complete interior: single edges reach everything
        } else {
            EdgeColoring ch = color_dense_two(H.graph);
            auto host = detail_construct::host_edge_ids(g, core_mask);
            for (std::size_t j = 0; j < host.size(); ++j)
                colors[static_cast<std::size_t>(host[j])] = ch.colors[j];
            colors[static_cast<std::size_t>(pe)] = 3; // fresh color: the junction is always proper
        }
        return finish(make_coloring(g, std::move(colors)));
    }

    // a proper cut edge: split, two-color each piece, recombine
    auto bridges = bridge_edges(g);
    if (bridges.empty()) throw defect_error("color_dense_three: no bridge in a bridged graph");
    const int e = bridges.front();
    CutEdgePieces pieces = cut_edge_pieces(g, e);
    const bool a_small = pieces.a.n() <= pieces.b.n();
    const Graph& small = a_small ? pieces.a : pieces.b;
    const Graph& big = a_small ? pieces.b : pieces.a;
    const int small_side = small.n() - 1; // the piece carries the far endpoint too
    if (small_side < 3 || small_side > 4)
        throw defect_error("color_dense_three: cut edge side has unexpected order");

    PcResult pr = pc_exact(small);
    if (pr.value > 2) throw defect_error("color_dense_three: small side needs more than two colors");
    EdgeColoring c_small = pr.witness;
    c_small.k = std::max(c_small.k, 2);

    EdgeColoring c_big = [&] {
        const int nb = big.n(), mb = big.m();
        if (nb >= 14 && mb >= detail_dense::choose2(nb - 3) + 4 && mb <= detail_dense::choose2(nb) - 1)
            return color_dense_two(big);
        return detail_dense::relaxed_dense_two(big);
    }();
    c_big.k = std::max(c_big.k, 2);

    EdgeColoring merged = a_small ? compose_cut_edge(g, e, c_small, c_big)
                                  : compose_cut_edge(g, e, c_big, c_small);
    return finish(merged);
}

} // namespace pcon
