#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pcon/coloring.hpp"
#include "pcon/errors.hpp"
#include "pcon/graph.hpp"
#include "pcon/proper_path.hpp"
#include "pcon/rng.hpp"
#include "pcon/verify.hpp"

namespace pcon {

/// Enumerate canonical colorings of m edges with exactly `colors` distinct
/// colors, one representative per palette-renaming class: color ids form a
/// restricted growth string, i.e. edge 0 gets color 1 and color c+1 appears
/// only after colors 1..c all have.  fn receives each coloring as a
/// vector<int>&; returning false stops the enumeration.  Returns false iff
/// fn stopped it.
template <typename F>
inline bool for_each_rgs_coloring(int m, int colors, F&& fn) {
    if (m <= 0) {
        if (colors == 0) return fn(std::vector<int>{});
        return true;
    }
    if (colors < 1 || colors > m) return true;
    std::vector<int> c(static_cast<std::size_t>(m), 1);
    // rec(i, hi): positions before i are set, hi = max color used so far.
    // Prune branches that can no longer introduce all `colors` colors.
    auto rec = [&](auto&& self, int i, int hi) -> bool {
        if (i == m) return hi != colors || fn(c);
        if (colors - hi > m - i) return true;
        const int top = hi < colors ? hi + 1 : colors;
        for (int v = 1; v <= top; ++v) {
            c[static_cast<std::size_t>(i)] = v;
            if (!self(self, i + 1, v > hi ? v : hi)) return false;
        }
        return true;
    };
    return rec(rec, 0, 0);
}

/// Number of failing vertex pairs under c: pairs with no proper path at all.
/// This is the local-search objective for plain proper connection.
inline int count_failing_pairs(const Graph& g, const EdgeColoring& c) {
    int bad = 0;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (!exists_proper_path(g, c, u, v)) ++bad;
    return bad;
}

/// Number of pairs missing the strong property: no two proper paths whose
/// start colors differ and whose end colors differ.  Counterpart objective
/// for strong colorings; exact but bounded per pair by `cap` visited paths.
inline int count_strong_failures(const Graph& g, const EdgeColoring& c,
                                 std::uint64_t cap = 200'000) {
    int bad = 0;
    for (int u = 0; u < g.n(); ++u) {
        for (int v = u + 1; v < g.n(); ++v) {
            // distinct (start, end) color pairs seen so far for this pair
            std::vector<std::pair<int, int>> reps;
            bool good = false;
            std::uint64_t seen = 0;
            detail_paths::visit_proper_paths(
                g, c, u, v, [&](const std::vector<int>&, int psc, int pec) {
                    if (++seen > cap) throw budget_error("count_strong_failures: path cap exhausted");
                    for (const auto& [sc, ec] : reps)
                        if (sc != psc && ec != pec) {
                            good = true;
                            return false;
                        }
                    reps.emplace_back(psc, pec);
                    return true;
                });
            if (!good) ++bad;
        }
    }
    return bad;
}

/// Deterministic seeded local search for a coloring with zero defects under
/// `objective` (edge recolor moves, sideways steps allowed, fixed restart
/// count).  Returns the first zero-defect coloring found, unverified beyond
/// the objective itself — callers re-check with the real verifier.
template <typename Objective>
inline std::optional<EdgeColoring> local_search_coloring(const Graph& g, int colors,
                                                         Objective&& objective,
                                                         std::uint64_t seed,
                                                         int restarts = 8,
                                                         int steps = 2000) {
    const int m = g.m();
    if (m == 0 || colors < 1) return std::nullopt;
    splitmix64 rng(seed);
    for (int t = 0; t < restarts; ++t) {
        EdgeColoring c;
        c.k = colors;
        c.colors.resize(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i)
            c.colors[static_cast<std::size_t>(i)] = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(colors)));
        int cur = objective(g, c);
        if (cur == 0) return c;
        for (int s = 0; s < steps; ++s) {
            const int e = static_cast<int>(rng.below(static_cast<std::uint64_t>(m)));
            const int old = c.colors[static_cast<std::size_t>(e)];
            int next = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(colors)));
            if (colors > 1 && next == old) next = 1 + next % colors;
            if (next == old) continue;
            c.colors[static_cast<std::size_t>(e)] = next;
            const int cand = objective(g, c);
            if (cand == 0) return c;
            if (cand <= cur) {
                cur = cand;
            } else {
                c.colors[static_cast<std::size_t>(e)] = old;
            }
        }
    }
    return std::nullopt;
}

}  // namespace pcon
