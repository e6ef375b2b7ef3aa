#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pcon/coloring.hpp"
#include "pcon/cycles.hpp"
#include "pcon/errors.hpp"
#include "pcon/graph.hpp"
#include "pcon/patterns.hpp"
#include "pcon/search.hpp"
#include "pcon/verify.hpp"

namespace pcon {

/// Limits for the exact solvers.  max_colorings counts every coloring whose
/// accept/reject was decided (seeds, local-search probes, enumeration);
/// path_cap bounds the per-pair work inside the disjoint-paths verifier;
/// cycle is the node budget for the Hamiltonian-cycle seed search.
struct SolveBudget {
    std::uint64_t max_colorings = 20'000'000;
    std::uint64_t path_cap = 1'000'000;
    SearchBudget cycle{1'000'000};
};

struct PcResult {
    int value = 0;
    EdgeColoring witness;
    std::uint64_t colorings_examined = 0;
    double seconds = 0.0;
};

namespace detail_exact {

// Minimal-palette search shared by pc and pc_k.  Levels ascend from 1: at
// each level a few structured candidates and a short local search run first,
// then the canonical enumeration of all exactly-k-color classes. A witness at
// level k is final because levels 1..k-1 were exhausted, so seeding never
// breaks minimality.  `accept` must be exact (no false positives).
template <typename Accept>
inline PcResult ascend(const Graph& g, const SolveBudget& budget, Accept&& accept) {
    const auto t0 = std::chrono::steady_clock::now();
    std::uint64_t examined = 0;

    auto decide = [&](const EdgeColoring& c) {
        if (++examined > budget.max_colorings)
            throw budget_error("exact solver: coloring budget exhausted");
        return accept(c);
    };
    auto finish = [&](int value, EdgeColoring witness) {
        witness.k = value;
        const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
        return PcResult{value, std::move(witness), examined, dt.count()};
    };

    const int m = g.m();
    if (m == 0) {
        // no pairs to join resolves to the one-color convention
        EdgeColoring empty{{}, 1};
        if (decide(empty)) return finish(1, std::move(empty));
    }
    const EdgeColoring greedy = greedy_proper_edge_coloring(g);
    std::optional<std::vector<int>> ham;
    if (g.n() >= 3) {
        try {
            ham = hamiltonian_cycle(g, budget.cycle);
        } catch (const budget_error&) {
            // seed is optional; enumeration below stays complete without it
        }
    }

    const int cap = max_degree(g) + 1;
    for (int k = 1; k <= cap; ++k) {
        if (k == 2 && ham) {
            EdgeColoring c = cycle_based_two_coloring(g, *ham);
            if (decide(c)) return finish(2, std::move(c));
        }
        if (k == greedy.k && decide(greedy)) return finish(k, greedy);
        if (k >= 2 && k <= m) {
            auto probes = [&](const Graph& gg, const EdgeColoring& c) {
                if (++examined > budget.max_colorings)
                    throw budget_error("exact solver: coloring budget exhausted");
                return count_failing_pairs(gg, c);
            };
            auto found = local_search_coloring(g, k, probes, 0x5eedULL + static_cast<std::uint64_t>(k));
            if (found && decide(*found)) return finish(k, std::move(*found));
        }
        std::optional<EdgeColoring> witness;
        for_each_rgs_coloring(m, k, [&](const std::vector<int>& colors) {
            EdgeColoring c{colors, k};
            if (decide(c)) {
                witness = std::move(c);
                return false;
            }
            return true;
        });
        if (witness) return finish(k, std::move(*witness));
        // level k exhausted: no k-coloring works, so the true value exceeds k
    }
    throw defect_error("exact solver: no witness within the max degree + 1 cap");
}

}  // namespace detail_exact

/// Minimum palette size under which every vertex pair of g has a proper path.
/// Complete search: the witness is minimal, not just feasible.
inline PcResult pc_exact(const Graph& g, const SolveBudget& budget = {}) {
    if (!is_connected(g)) throw precondition_error("pc_exact: graph is disconnected");
    const auto order = detail_verify::pairs_by_distance_desc(g);
    return detail_exact::ascend(g, budget, [&](const EdgeColoring& c) {
        for (const auto& [u, v] : order)
            if (!exists_proper_path(g, c, u, v)) return false;
        return true;
    });
}

/// Minimum palette size under which every vertex pair of g has k internally
/// disjoint proper paths.  Defined only for k-connected graphs.
inline PcResult pc_k_exact(const Graph& g, int k, const SolveBudget& budget = {}) {
    if (k < 1) throw precondition_error("pc_k_exact: k must be at least 1");
    if (!vertex_connectivity_at_least(g, k))
        throw precondition_error("pc_k_exact: graph is not " + std::to_string(k) + "-connected");
    if (k == 1) return pc_exact(g, budget);
    const auto order = detail_verify::pairs_by_distance_desc(g);
    return detail_exact::ascend(g, budget, [&](const EdgeColoring& c) {
        for (const auto& [u, v] : order)
            if (!exists_proper_path(g, c, u, v)) return false;
        return is_k_proper_connected(g, c, k, budget.path_cap).holds;
    });
}

}  // namespace pcon
