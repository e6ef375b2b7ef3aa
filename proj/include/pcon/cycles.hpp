#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "pcon/errors.hpp"
#include "pcon/graph.hpp"

namespace pcon {

/// Node cap for the backtracking cycle searches.  Exceeding it raises
/// budget_error, which callers must treat as "unknown", never as "absent".
struct SearchBudget {
    std::uint64_t max_nodes = 50'000'000;
};

namespace detail_cycles {

struct Counter {
    std::uint64_t used = 0;
    std::uint64_t cap;
    void tick(const char* what) {
        if (++used > cap) throw budget_error(what);
    }
};

// Every vertex of `targets` must stay reachable from `from` inside `allowed`.
inline bool all_reachable(const Graph& g, int from, std::uint64_t allowed, std::uint64_t targets) {
    return (targets & ~reachable_mask(g, from, allowed | (std::uint64_t{1} << from))) == 0;
}

inline bool ham_extend(const Graph& g, std::vector<int>& path, std::uint64_t visited, Counter& budget) {
    budget.tick("hamiltonian cycle search budget exhausted");
    int cur = path.back();
    if (static_cast<int>(path.size()) == g.n())
        return g.has_edge(cur, 0);

    std::uint64_t unvisited = all_vertices_mask(g) & ~visited;
    // The closing vertex 0 and all unvisited vertices must remain reachable.
    if (!all_reachable(g, cur, unvisited | 1, unvisited | 1)) return false;
    // Each unvisited vertex needs two usable cycle neighbors; 0 needs one more.
    std::uint64_t avail = unvisited | (std::uint64_t{1} << cur) | 1;
    for (std::uint64_t rest = unvisited; rest; rest &= rest - 1) {
        int w = std::countr_zero(rest);
        if (std::popcount(g.neighbor_mask(w) & avail) < 2) return false;
    }
    if ((g.neighbor_mask(0) & unvisited) == 0) return false;

    for (auto [w, eid] : g.adj(cur)) {
        (void)eid;
        if (visited & (std::uint64_t{1} << w)) continue;
        path.push_back(w);
        if (ham_extend(g, path, visited | (std::uint64_t{1} << w), budget)) return true;
        path.pop_back();
    }
    return false;
}

inline bool cycle_extend(const Graph& g, int anchor, int target_len, std::vector<int>& path,
                         std::uint64_t visited, Counter& budget) {
    budget.tick("fixed-length cycle search budget exhausted");
    int cur = path.back();
    if (static_cast<int>(path.size()) == target_len)
        return g.has_edge(cur, anchor);

    std::uint64_t above = all_vertices_mask(g) & ~((std::uint64_t{2} << anchor) - 1);
    std::uint64_t usable = above & ~visited;
    if (!all_reachable(g, cur, usable | (std::uint64_t{1} << anchor), std::uint64_t{1} << anchor))
        return false;
    if (std::popcount(usable) < target_len - static_cast<int>(path.size())) return false;

    for (auto [w, eid] : g.adj(cur)) {
        (void)eid;
        if (w <= anchor || (visited & (std::uint64_t{1} << w))) continue;
        path.push_back(w);
        if (cycle_extend(g, anchor, target_len, path, visited | (std::uint64_t{1} << w), budget))
            return true;
        path.pop_back();
    }
    return false;
}

} // namespace detail_cycles

/// First Hamiltonian cycle in depth-first order from vertex 0 with ascending
/// neighbor choices (so the returned vertex sequence is lexicographically
/// least among those starting at 0).  nullopt when none exists.
inline std::optional<std::vector<int>> hamiltonian_cycle(const Graph& g,
                                                         SearchBudget budget = {}) {
    if (g.n() < 3 || !is_connected(g)) return std::nullopt;
    detail_cycles::Counter counter{0, budget.max_nodes};
    std::vector<int> path{0};
    path.reserve(static_cast<std::size_t>(g.n()));
    if (detail_cycles::ham_extend(g, path, 1, counter)) return path;
    return std::nullopt;
}

/// A cycle on exactly `length` vertices, as a vertex sequence whose first
/// entry is the cycle's smallest vertex.  Deterministic: anchors are tried
/// ascending, extensions in ascending neighbor order.
inline std::optional<std::vector<int>> cycle_of_length(const Graph& g, int length,
                                                       SearchBudget budget = {}) {
    if (length < 3 || length > g.n()) return std::nullopt;
    detail_cycles::Counter counter{0, budget.max_nodes};
    for (int anchor = 0; anchor + length <= g.n(); ++anchor) {
        std::vector<int> path{anchor};
        path.reserve(static_cast<std::size_t>(length));
        if (detail_cycles::cycle_extend(g, anchor, length, path,
                                        std::uint64_t{1} << anchor, counter))
            return path;
    }
    return std::nullopt;
}

/// Longest cycle, found by trying lengths n, n-1, ..., 3.  Throws
/// precondition_error on forests (no cycle to return).
inline std::vector<int> longest_cycle(const Graph& g, SearchBudget budget = {}) {
    detail_cycles::Counter counter{0, budget.max_nodes};
    for (int len = g.n(); len >= 3; --len)
        for (int anchor = 0; anchor + len <= g.n(); ++anchor) {
            std::vector<int> path{anchor};
            path.reserve(static_cast<std::size_t>(len));
            if (detail_cycles::cycle_extend(g, anchor, len, path,
                                            std::uint64_t{1} << anchor, counter))
                return path;
        }
    throw precondition_error("longest_cycle: graph is acyclic");
}

inline int circumference(const Graph& g, SearchBudget budget = {}) {
    return static_cast<int>(longest_cycle(g, budget).size());
}

inline bool is_hamiltonian(const Graph& g, SearchBudget budget = {}) {
    return hamiltonian_cycle(g, budget).has_value();
}

} // namespace pcon
