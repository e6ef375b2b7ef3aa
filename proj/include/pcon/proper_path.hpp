#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pcon/coloring.hpp"
#include "pcon/errors.hpp"
#include "pcon/graph.hpp"

namespace pcon {

/// A simple path whose consecutive edges all differ in color, with the first
/// and last edge colors kept at hand (they coincide for a single edge).
struct ProperPath {
    std::vector<int> vertices;
    int start_color = 0;
    int end_color = 0;
};

/// True iff seq is a simple path in g (>= 2 vertices) and no two consecutive
/// edges share a color.  Non-paths return false rather than throwing.
inline bool is_proper_path(const Graph& g, const EdgeColoring& c, const std::vector<int>& seq) {
    if (seq.size() < 2) return false;
    std::uint64_t seen = 0;
    for (int v : seq) {
        if (v < 0 || v >= g.n() || (seen >> v & 1)) return false;
        seen |= std::uint64_t{1} << v;
    }
    int prev_color = 0;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
        int eid = g.edge_id(seq[i], seq[i + 1]);
        if (eid < 0) return false;
        int col = c[eid];
        if (col == prev_color) return false;
        prev_color = col;
    }
    return true;
}

namespace detail_paths {

// Depth-first enumeration of all proper u-v paths, ascending neighbor order.
// The visitor sees each path once, as (vertex sequence, start color, end
// color); returning false aborts the whole enumeration.  A branch is cut when
// v is no longer plain-reachable through the unvisited vertices — properness
// only ever removes further options, so the cut is sound.
template <typename Visitor>
bool visit(const Graph& g, const EdgeColoring& c, int target, std::vector<int>& path,
           std::uint64_t visited, int last_color, int start_color, Visitor&& vis) {
    int cur = path.back();
    for (auto [w, eid] : g.adj(cur)) {
        if (visited >> w & 1) continue;
        int col = c[eid];
        if (col == last_color) continue;
        if (w == target) {
            path.push_back(w);
            bool keep = vis(path, path.size() == 2 ? col : start_color, col);
            path.pop_back();
            if (!keep) return false;
            continue;
        }
        std::uint64_t rest = ~visited & ~(std::uint64_t{1} << w);
        if (!(reachable_mask(g, w, rest | (std::uint64_t{1} << w)) >> target & 1)) continue;
        path.push_back(w);
        bool keep = visit(g, c, target, path, visited | (std::uint64_t{1} << w), col,
                          path.size() == 2 ? col : start_color, vis);
        path.pop_back();
        if (!keep) return false;
    }
    return true;
}

template <typename Visitor>
void visit_proper_paths(const Graph& g, const EdgeColoring& c, int u, int v, Visitor&& vis) {
    if (u == v) throw precondition_error("proper path endpoints must differ");
    if (u < 0 || u >= g.n() || v < 0 || v >= g.n())
        throw precondition_error("proper path endpoint out of range");
    std::vector<int> path{u};
    path.reserve(static_cast<std::size_t>(g.n()));
    visit(g, c, v, path, std::uint64_t{1} << u, 0, 0, vis);
}

} // namespace detail_paths

/// Exact existence of a proper u-v path; returns the first one found in
/// depth-first order, so the witness is deterministic.
inline std::optional<ProperPath> exists_proper_path(const Graph& g, const EdgeColoring& c,
                                                    int u, int v) {
    std::optional<ProperPath> found;
    detail_paths::visit_proper_paths(g, c, u, v,
                                     [&](const std::vector<int>& path, int sc, int ec) {
                                         found = ProperPath{path, sc, ec};
                                         return false;
                                     });
    return found;
}

/// All proper u-v paths up to `cap`, plus a truncation flag.
struct ProperPathList {
    std::vector<ProperPath> paths;
    bool truncated = false;
};

inline ProperPathList enumerate_proper_paths(const Graph& g, const EdgeColoring& c, int u, int v,
                                             std::size_t cap) {
    ProperPathList out;
    detail_paths::visit_proper_paths(g, c, u, v,
                                     [&](const std::vector<int>& path, int sc, int ec) {
                                         if (out.paths.size() == cap) {
                                             out.truncated = true;
                                             return false;
                                         }
                                         out.paths.push_back(ProperPath{path, sc, ec});
                                         return true;
                                     });
    return out;
}

} // namespace pcon
