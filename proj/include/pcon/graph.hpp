#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "pcon/errors.hpp"

namespace pcon {

/// Largest vertex count the library accepts.  Everything here is exact,
/// search-based desk-scale work; 64 keeps vertex sets in single machine words.
inline constexpr int max_vertices = 64;

/// Simple undirected graph.  Vertices are 0..n-1.  Edges are stored as an
/// ordered list of pairs (u, v) with u < v; the edge id is the position in
/// that list, and every routine that reports or consumes edge ids uses it.
/// Instances are immutable after construction: build a new graph instead of
/// mutating one.
class Graph {
public:
    Graph() = default;

    /// Validating constructor: rejects out-of-range endpoints, self-loops and
    /// duplicate edges.  Edge order is preserved (endpoints normalized u < v).
    static Graph from_edges(int n, std::vector<std::pair<int, int>> edges) {
        if (n < 0 || n > max_vertices)
            throw parse_error("vertex count " + std::to_string(n) + " out of range 0.." +
                              std::to_string(max_vertices));
        Graph g;
        g.n_ = n;
        g.adj_.resize(static_cast<std::size_t>(n));
        g.nbr_mask_.assign(static_cast<std::size_t>(n), 0);
        g.edges_.reserve(edges.size());
        for (auto [u, v] : edges) {
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw parse_error("edge endpoint out of range");
            if (u == v) throw parse_error("self-loop rejected");
            if (u > v) std::swap(u, v);
            if (g.nbr_mask_[static_cast<std::size_t>(u)] >> v & 1)
                throw parse_error("duplicate edge rejected");
            int id = static_cast<int>(g.edges_.size());
            g.edges_.emplace_back(u, v);
            g.adj_[static_cast<std::size_t>(u)].emplace_back(v, id);
            g.adj_[static_cast<std::size_t>(v)].emplace_back(u, id);
            g.nbr_mask_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
            g.nbr_mask_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
        }
        for (auto& list : g.adj_) std::sort(list.begin(), list.end());
        return g;
    }

    int n() const { return n_; }
    int m() const { return static_cast<int>(edges_.size()); }

    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    std::pair<int, int> edge(int id) const { return edges_[static_cast<std::size_t>(id)]; }

    /// Neighbors of v as (neighbor, edge id), sorted by neighbor.
    const std::vector<std::pair<int, int>>& adj(int v) const {
        return adj_[static_cast<std::size_t>(v)];
    }

    /// Neighbors of v as a bitmask.
    std::uint64_t neighbor_mask(int v) const { return nbr_mask_[static_cast<std::size_t>(v)]; }

    int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }

    bool has_edge(int u, int v) const {
        return u != v && (nbr_mask_[static_cast<std::size_t>(u)] >> v & 1) != 0;
    }

    /// Edge id of {u, v}, or -1 when the edge is absent.
    int edge_id(int u, int v) const {
        if (!has_edge(u, v)) return -1;
        const auto& list = adj_[static_cast<std::size_t>(u)];
        auto it = std::lower_bound(list.begin(), list.end(), std::pair<int, int>{v, -1});
        return it->second;
    }

    int other_end(int edge_id, int v) const {
        auto [a, b] = edges_[static_cast<std::size_t>(edge_id)];
        return a == v ? b : a;
    }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<std::pair<int, int>>> adj_;
    std::vector<std::uint64_t> nbr_mask_;
};

inline std::uint64_t all_vertices_mask(const Graph& g) {
    return g.n() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.n()) - 1;
}

inline int min_degree(const Graph& g) {
    int d = g.n() == 0 ? 0 : g.m() + 1;
    for (int v = 0; v < g.n(); ++v) d = std::min(d, g.degree(v));
    return g.n() == 0 ? 0 : d;
}

inline int max_degree(const Graph& g) {
    int d = 0;
    for (int v = 0; v < g.n(); ++v) d = std::max(d, g.degree(v));
    return d;
}

/// Vertices reachable from `start` while staying inside `allowed` (a vertex
/// bitmask that must contain `start`).
inline std::uint64_t reachable_mask(const Graph& g, int start, std::uint64_t allowed) {
    std::uint64_t seen = std::uint64_t{1} << start;
    std::uint64_t frontier = seen;
    while (frontier) {
        std::uint64_t next = 0;
        std::uint64_t f = frontier;
        while (f) {
            int v = std::countr_zero(f);
            f &= f - 1;
            next |= g.neighbor_mask(v);
        }
        next &= allowed & ~seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

inline bool is_connected(const Graph& g) {
    if (g.n() <= 1) return true;
    return reachable_mask(g, 0, all_vertices_mask(g)) == all_vertices_mask(g);
}

/// Connected components as sorted vertex lists, ordered by smallest member.
inline std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<std::vector<int>> comps;
    std::uint64_t left = all_vertices_mask(g);
    while (left) {
        int s = std::countr_zero(left);
        std::uint64_t comp = reachable_mask(g, s, left);
        std::vector<int> vs;
        for (std::uint64_t c = comp; c;) {
            int v = std::countr_zero(c);
            c &= c - 1;
            vs.push_back(v);
        }
        comps.push_back(std::move(vs));
        left &= ~comp;
    }
    return comps;
}

/// True when removing the vertices in `removed` leaves the rest connected
/// (vacuously true when fewer than two vertices remain).
inline bool connected_after_removal(const Graph& g, std::uint64_t removed) {
    std::uint64_t allowed = all_vertices_mask(g) & ~removed;
    if (std::popcount(allowed) <= 1) return true;
    int s = std::countr_zero(allowed);
    return reachable_mask(g, s, allowed) == allowed;
}

/// Exact test for vertex connectivity >= k, by removing every (k-1)-subset.
/// Intended for the small k (<= 4) this library needs.
inline bool vertex_connectivity_at_least(const Graph& g, int k) {
    if (k <= 0) return true;
    if (!is_connected(g)) return false;
    if (g.n() <= k) {
        // Complete graphs are the only graphs with connectivity n-1; by
        // convention K_n is (n-1)-connected and no more.
        return g.m() == g.n() * (g.n() - 1) / 2 && g.n() > k;
    }
    // Enumerate removal sets of size k-1.
    std::vector<int> pick(static_cast<std::size_t>(k - 1));
    auto rec = [&](auto&& self, int next, int depth) -> bool {
        if (depth == k - 1) {
            std::uint64_t removed = 0;
            for (int i = 0; i < k - 1; ++i) removed |= std::uint64_t{1} << pick[static_cast<std::size_t>(i)];
            return connected_after_removal(g, removed);
        }
        for (int v = next; v < g.n(); ++v) {
            pick[static_cast<std::size_t>(depth)] = v;
            if (!self(self, v + 1, depth + 1)) return false;
        }
        return true;
    };
    return rec(rec, 0, 0);
}

/// Induced subgraph on `vertices` (need not be sorted; duplicates rejected).
/// Returns the subgraph plus the map from new vertex ids to old ones.
/// Edges keep the host graph's relative order.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_host; ///< new vertex id -> host vertex id
};

inline InducedSubgraph induced_subgraph(const Graph& g, std::vector<int> vertices) {
    std::sort(vertices.begin(), vertices.end());
    if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
        throw precondition_error("induced_subgraph: duplicate vertex");
    std::vector<int> to_sub(static_cast<std::size_t>(g.n()), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        int v = vertices[i];
        if (v < 0 || v >= g.n()) throw precondition_error("induced_subgraph: vertex out of range");
        to_sub[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges()) {
        int a = to_sub[static_cast<std::size_t>(u)], b = to_sub[static_cast<std::size_t>(v)];
        if (a >= 0 && b >= 0) edges.emplace_back(a, b);
    }
    return {Graph::from_edges(static_cast<int>(vertices.size()), std::move(edges)), std::move(vertices)};
}

/// True when `h` has the same vertex set as `g` and E(h) is a subset of E(g).
inline bool is_spanning_subgraph(const Graph& h, const Graph& g) {
    if (h.n() != g.n()) return false;
    for (auto [u, v] : h.edges())
        if (!g.has_edge(u, v)) return false;
    return true;
}

// --- tiny canonical builders -------------------------------------------------

inline Graph path_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edges(n, std::move(e));
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw precondition_error("cycle_graph: need n >= 3");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    e.emplace_back(0, n - 1);
    return Graph::from_edges(n, std::move(e));
}

inline Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph::from_edges(n, std::move(e));
}

// --- edge-list text format ---------------------------------------------------
//
// First line "n m", then m lines "u v" with 0-based endpoints.  Edge ids
// follow file order.  Blank lines and lines starting with '#' are skipped.

inline Graph parse_edge_list(const std::string& text) {
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
    if (!next_line()) throw parse_error("edge list: empty input");
    std::istringstream head(line);
    long long n = -1, m = -1;
    if (!(head >> n >> m) || n < 0 || m < 0) throw parse_error("edge list: bad header, expected 'n m'");
    if (n > max_vertices) throw parse_error("edge list: vertex count exceeds " + std::to_string(max_vertices));
    if (m > n * (n - 1) / 2) throw parse_error("edge list: more edges than a simple graph allows");
    std::string trailing;
    if (head >> trailing) throw parse_error("edge list: trailing tokens in header");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        if (!next_line()) throw parse_error("edge list: expected " + std::to_string(m) + " edges");
        std::istringstream es(line);
        long long u, v;
        if (!(es >> u >> v)) throw parse_error("edge list: bad edge line '" + line + "'");
        if (es >> trailing) throw parse_error("edge list: trailing tokens in edge line");
        if (u < 0 || u >= n || v < 0 || v >= n) throw parse_error("edge list: endpoint out of range");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (next_line()) throw parse_error("edge list: unexpected extra lines");
    return Graph::from_edges(static_cast<int>(n), std::move(edges));
}

inline std::string format_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.n() << ' ' << g.m() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

} // namespace pcon
