#pragma once

// Named graph families behind the extremal bounds, the density thresholds
// they orbit, and seeded random generators for sweep corpora.  Vertex labels
// are canonical: apexes and pendant leaves come last, so bridges and blocks
// land at predictable ids.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "pcon/decompose.hpp"
#include "pcon/errors.hpp"
#include "pcon/graph.hpp"
#include "pcon/rng.hpp"

namespace pcon {

namespace detail_families {

inline int choose2(int k) { return k * (k - 1) / 2; }

inline bool ore_condition(const Graph& g) {
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (!g.has_edge(u, v) && g.degree(u) + g.degree(v) < g.n()) return false;
    return true;
}

/// Wear a complete graph down with seeded deletions, keeping `keep` true
/// throughout.  The attempt count is fixed by n, so a seed pins the output.
template <typename Keep>
Graph erode_complete(int n, std::uint64_t seed, Keep keep) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
    splitmix64 rng(seed);
    const int attempts = 3 * choose2(n);
    for (int t = 0; t < attempts && !edges.empty(); ++t) {
        std::size_t pick = rng.below(edges.size());
        auto saved = edges[static_cast<std::size_t>(pick)];
        edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(pick));
        if (!keep(Graph::from_edges(n, edges))) edges.push_back(saved);
    }
    return Graph::from_edges(n, edges);
}

} // namespace detail_families

/// Star K_{1,m}: leaves 0..m-1, center last.
inline Graph gen_star(int leaves) {
    if (leaves < 1) throw precondition_error("gen_star: needs at least one leaf");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < leaves; ++i) edges.push_back({i, leaves});
    return Graph::from_edges(leaves + 1, edges);
}

/// Cycle 0..n-1 plus the chord {0, n-2}; ids match color_cycle_chord's graph.
inline Graph gen_cycle_chord(int n) {
    if (n < 4) throw precondition_error("gen_cycle_chord: needs at least four vertices");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
    edges.push_back({0, n - 2});
    return Graph::from_edges(n, edges);
}

/// r disjoint copies of K_t plus an apex joined to one vertex of each copy.
/// Copy i occupies [i*t, i*t + t); the apex is vertex r*t.  Each copy hangs
/// off the apex by one bridge, so the bridge tree is a star of degree r.
inline Graph gen_srt(int r, int t) {
    if (r < 1 || t < 2) throw precondition_error("gen_srt: needs r >= 1 and t >= 2");
    std::vector<std::pair<int, int>> edges;
    const int apex = r * t;
    for (int i = 0; i < r; ++i) {
        const int base = i * t;
        for (int a = 0; a < t; ++a)
            for (int b = a + 1; b < t; ++b) edges.push_back({base + a, base + b});
        edges.push_back({base, apex});
    }
    return Graph::from_edges(r * t + 1, edges);
}

/// K_{n-k-1} with a (k+2)-vertex star's center identified to clique vertex 0:
/// k+1 pendant leaves, labelled last.  Lands one edge below f_lower_bound.
inline Graph gen_gk(int n, int k) {
    if (k < 1 || n - k - 1 < 3) throw precondition_error("gen_gk: needs k >= 1 and n-k-1 >= 3");
    const int c = n - k - 1;
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < c; ++a)
        for (int b = a + 1; b < c; ++b) edges.push_back({a, b});
    for (int leaf = c; leaf < n; ++leaf) edges.push_back({0, leaf});
    return Graph::from_edges(n, edges);
}

/// Apex joined to every vertex of two disjoint K_k's; the apex is vertex 2k.
/// Minimum degree k, one cut vertex — never 2-connected.
inline Graph gen_k1_join_2kk(int k) {
    if (k < 1) throw precondition_error("gen_k1_join_2kk: needs k >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int side = 0; side < 2; ++side) {
        const int base = side * k;
        for (int a = 0; a < k; ++a)
            for (int b = a + 1; b < k; ++b) edges.push_back({base + a, base + b});
    }
    for (int v = 0; v < 2 * k; ++v) edges.push_back({v, 2 * k});
    return Graph::from_edges(2 * k + 1, edges);
}

/// K_n minus the matching {0,1}, {2,3}, ...: the first 2*pairs vertices lose
/// the edge to their partner.
inline Graph gen_complete_minus_matching(int n, int pairs) {
    if (n < 2 || pairs < 0 || 2 * pairs > n)
        throw precondition_error("gen_complete_minus_matching: matching does not fit");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (v == u + 1 && u % 2 == 0 && u / 2 < pairs) continue;
            edges.push_back({u, v});
        }
    return Graph::from_edges(n, edges);
}

/// Least edge count that forces a palette of at most k at order n:
/// (n-k-1 choose 2) + k + 2.  gen_gk(n, k) sits exactly one edge below it.
inline int f_lower_bound(int n, int k) {
    if (k < 1 || k > n - 1 || n - k - 1 < 2) throw precondition_error("f_lower_bound: out of domain");
    return detail_families::choose2(n - k - 1) + k + 2;
}

/// Edge-count thresholds for the dense pipelines; each bound appears only
/// from the order where it applies.
struct DenseThresholds {
    std::optional<int> two_lo, two_hi; ///< exactly-two window, order 14 up
    std::optional<int> three_lo;       ///< at-most-three floor, order 15 up
};

inline DenseThresholds dense_thresholds(int n) {
    DenseThresholds out;
    if (n >= 14) {
        out.two_lo = detail_families::choose2(n - 3) + 4;
        out.two_hi = detail_families::choose2(n) - 1;
    }
    if (n >= 15) out.three_lo = detail_families::choose2(n - 4) + 5;
    return out;
}

/// Connected graph with minimum degree at least d0, eroded from K_n by
/// seeded deletions.  Deterministic per (n, d0, seed); the result is checked
/// against the constraint before it is returned.
inline Graph gen_random_min_degree(int n, int d0, std::uint64_t seed) {
    if (n < 1 || d0 < 0 || d0 > n - 1)
        throw precondition_error("gen_random_min_degree: unsatisfiable constraint");
    Graph g = detail_families::erode_complete(
        n, seed, [&](const Graph& h) { return min_degree(h) >= d0 && is_connected(h); });
    if (min_degree(g) < d0 || !is_connected(g))
        throw defect_error("gen_random_min_degree: erosion broke its own guard");
    return g;
}

/// Connected graph with exactly m0 edges: seeded deletions that never touch
/// a bridge, so connectivity is kept while the count walks down to m0.
inline Graph gen_random_edge_count(int n, int m0, std::uint64_t seed) {
    if (n < 1 || m0 < n - 1 || m0 > detail_families::choose2(n))
        throw precondition_error("gen_random_edge_count: unsatisfiable constraint");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
    splitmix64 rng(seed);
    while (static_cast<int>(edges.size()) > m0) {
        Graph g = Graph::from_edges(n, edges);
        auto bridges = bridge_edges(g);
        std::vector<int> removable;
        for (int e = 0; e < g.m(); ++e)
            if (std::find(bridges.begin(), bridges.end(), e) == bridges.end())
                removable.push_back(e);
        if (removable.empty())
            throw defect_error("gen_random_edge_count: only bridges left above the floor");
        int e = removable[static_cast<std::size_t>(rng.below(removable.size()))];
        edges.erase(edges.begin() + e); // edge ids follow insertion order, so e indexes this vector
    }
    Graph g = Graph::from_edges(n, edges);
    if (g.m() != m0 || !is_connected(g))
        throw defect_error("gen_random_edge_count: erosion broke its own guard");
    return g;
}

/// Graph in which every nonadjacent pair keeps a degree sum of at least n.
/// That forces connectivity by itself, so erosion only guards the sums.
inline Graph gen_random_ore(int n, std::uint64_t seed) {
    if (n < 1) throw precondition_error("gen_random_ore: order must be positive");
    Graph g = detail_families::erode_complete(
        n, seed, [&](const Graph& h) { return detail_families::ore_condition(h); });
    if (!detail_families::ore_condition(g))
        throw defect_error("gen_random_ore: erosion broke its own guard");
    return g;
}

} // namespace pcon
