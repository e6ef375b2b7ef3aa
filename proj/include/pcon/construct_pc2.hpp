#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "pcon/coloring.hpp"
#include "pcon/construct.hpp"
#include "pcon/cycles.hpp"
#include "pcon/errors.hpp"
#include "pcon/graph.hpp"
#include "pcon/patterns.hpp"
#include "pcon/verify.hpp"

namespace pcon {

namespace detail_pc2 {

/// Every nonadjacent pair of distinct vertices has degree sum >= n.
inline bool ore_condition(const Graph& g) {
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (!g.has_edge(u, v) && g.degree(u) + g.degree(v) < g.n()) return false;
    return true;
}

/// Two-coloring built around an odd closed sequence whose first and
/// second-to-last vertices are joined by a chord: the sequence edges get the
/// chorded-cycle scheme and everything else gets 2.  `seq` lists the cycle
/// with the skipped corner last.
inline EdgeColoring chorded_odd_cycle_coloring(const Graph& g, const std::vector<int>& seq) {
    if (g.edge_id(seq.front(), seq[seq.size() - 2]) < 0)
        throw defect_error("chorded cycle coloring: closing chord is missing");
    return cycle_based_two_coloring(g, seq);
}

/// Rotate a closed vertex sequence so `start_pos` comes first, preserving
/// the cyclic order.
inline std::vector<int> rotate_cycle(const std::vector<int>& cyc, std::size_t start_pos) {
    std::vector<int> out;
    out.reserve(cyc.size());
    for (std::size_t i = 0; i < cyc.size(); ++i)
        out.push_back(cyc[(start_pos + i) % cyc.size()]);
    return out;
}

} // namespace detail_pc2

/// Two-coloring giving two internally disjoint proper paths per pair, for
/// graphs with minimum degree at least n/2 (n >= 4).  Even orders alternate
/// around a Hamiltonian cycle.  Odd orders drop the last vertex, find a
/// Hamiltonian cycle of the rest, and pick an edge of it whose endpoints
/// both see the dropped vertex (the degree bound forces one); re-entering
/// through the dropped vertex turns that edge into the chord of an odd
/// chorded cycle, which the scheme of color_cycle_chord handles.
inline EdgeColoring color_dirac_pc2(const Graph& g, SearchBudget budget = SearchBudget{4'000'000}) {
    const int n = g.n();
    if (n < 4) throw precondition_error("color_dirac_pc2: need n >= 4");
    if (2 * min_degree(g) < n)
        throw precondition_error("color_dirac_pc2: minimum degree below n/2");

    EdgeColoring c;
    if (n % 2 == 0) {
        auto ham = hamiltonian_cycle(g, budget);
        if (!ham) throw defect_error("color_dirac_pc2: hamiltonian cycle missing");
        c = cycle_based_two_coloring(g, *ham);
    } else {
        const int apex = n - 1;
        std::vector<int> rest;
        for (int v = 0; v < apex; ++v) rest.push_back(v);
        auto sub = induced_subgraph(g, rest);
        auto cyc = hamiltonian_cycle(sub.graph, budget);
        if (!cyc) throw defect_error("color_dirac_pc2: hamiltonian cycle of g minus apex missing");

        const std::size_t len = cyc->size();
        std::size_t hit = len;
        for (std::size_t i = 0; i < len; ++i) {
            int a = sub.to_host[static_cast<std::size_t>((*cyc)[i])];
            int b = sub.to_host[static_cast<std::size_t>((*cyc)[(i + 1) % len])];
            if (g.has_edge(a, apex) && g.has_edge(b, apex)) {
                hit = i;
                break;
            }
        }
        if (hit == len)
            throw defect_error("color_dirac_pc2: no cycle edge with both ends at the apex");

        // Walk the cycle from the far side of the chosen edge and close
        // through the apex: the chosen edge becomes the chord.
        std::vector<int> seq;
        seq.reserve(static_cast<std::size_t>(n));
        for (std::size_t i = 0; i < len; ++i)
            seq.push_back(
                sub.to_host[static_cast<std::size_t>((*cyc)[(hit + 1 + i) % len])]);
        seq.push_back(apex);
        c = detail_pc2::chorded_odd_cycle_coloring(g, seq);
    }
    if (max_used_color(c) != 2) throw defect_error("color_dirac_pc2: palette is not exactly 2");
    if (!is_k_proper_connected(g, c, 2).holds)
        throw defect_error("color_dirac_pc2: disjoint proper path pair missing");
    return c;
}

/// Two-coloring with two internally disjoint proper paths per pair for
/// graphs where every nonadjacent pair has degree sum at least n (n >= 4).
/// Even orders alternate around a Hamiltonian cycle.  Odd orders with a
/// low-degree vertex (or n = 5) find a Hamiltonian cycle plus a chord
/// skipping one vertex and reuse the odd chorded-cycle scheme.  Otherwise a
/// cycle through all but one vertex v is colored alternately and four edges
/// from v to the cycle copy the colors their landing arcs already carry.
inline EdgeColoring color_ore_pc2(const Graph& g, SearchBudget budget = SearchBudget{4'000'000}) {
    const int n = g.n();
    if (n < 4) throw precondition_error("color_ore_pc2: need n >= 4");
    if (!detail_pc2::ore_condition(g))
        throw precondition_error("color_ore_pc2: a nonadjacent pair has degree sum below n");

    EdgeColoring c;
    if (n % 2 == 0) {
        auto ham = hamiltonian_cycle(g, budget);
        if (!ham) throw defect_error("color_ore_pc2: hamiltonian cycle missing");
        c = cycle_based_two_coloring(g, *ham);
    } else if (n == 5 || min_degree(g) <= 3) {
        auto ham = hamiltonian_cycle(g, budget);
        if (!ham) throw defect_error("color_ore_pc2: hamiltonian cycle missing");
        const std::size_t len = ham->size();
        std::size_t hit = len;
        for (std::size_t j = 0; j < len; ++j)
            if (g.has_edge((*ham)[j], (*ham)[(j + 2) % len])) {
                hit = j;
                break;
            }
        if (hit == len)
            throw defect_error("color_ore_pc2: no chord skipping one cycle vertex");
        c = detail_pc2::chorded_odd_cycle_coloring(g,
                                                   detail_pc2::rotate_cycle(*ham, hit + 2));
    } else {
        auto cyc = cycle_of_length(g, n - 1, budget);
        if (!cyc) throw defect_error("color_ore_pc2: cycle through all but one vertex missing");
        std::uint64_t on_cycle = 0;
        for (int u : *cyc) on_cycle |= std::uint64_t{1} << u;
        int v = -1;
        for (int u = 0; u < n; ++u)
            if (!(on_cycle >> u & 1)) v = u;
        if (v < 0) throw defect_error("color_ore_pc2: skipped vertex not found");

        std::vector<std::size_t> nbr_pos;
        int smallest = -1;
        std::size_t smallest_pos = 0;
        for (std::size_t i = 0; i < cyc->size(); ++i)
            if (g.has_edge((*cyc)[i], v) &&
                (smallest < 0 || (*cyc)[i] < smallest)) {
                smallest = (*cyc)[i];
                smallest_pos = i;
            }
        if (smallest < 0) throw defect_error("color_ore_pc2: skipped vertex has no cycle neighbor");
        std::vector<int> u = detail_pc2::rotate_cycle(*cyc, smallest_pos); // u[0] is u_1
        const std::size_t L = u.size();                                   // n - 1, even
        for (std::size_t t = 1; t < L; ++t)
            if (g.has_edge(u[t], v)) nbr_pos.push_back(t);
        if (nbr_pos.size() < 3)
            throw defect_error("color_ore_pc2: fewer than four cycle neighbors");

        std::vector<int> colors(static_cast<std::size_t>(g.m()), 2);
        auto cycle_edge_color = [&](std::size_t t) { // edge u[t-1] -> u[t mod L], 1-indexed t
            return t % 2 == 1 ? 1 : 2;
        };
        for (std::size_t t = 1; t <= L; ++t) {
            int eid = g.edge_id(u[t - 1], u[t % L]);
            colors[static_cast<std::size_t>(eid)] = cycle_edge_color(t);
        }
        const std::size_t pi = nbr_pos[0], pj = nbr_pos[1], pk = nbr_pos[2]; // 0-indexed
        colors[static_cast<std::size_t>(g.edge_id(v, u[0]))] = cycle_edge_color(L);
        colors[static_cast<std::size_t>(g.edge_id(v, u[pi]))] = cycle_edge_color(pi + 1);
        colors[static_cast<std::size_t>(g.edge_id(v, u[pj]))] = cycle_edge_color(pj);
        colors[static_cast<std::size_t>(g.edge_id(v, u[pk]))] = cycle_edge_color(pk + 1);
        c = make_coloring(g, std::move(colors));
    }
    if (max_used_color(c) != 2) throw defect_error("color_ore_pc2: palette is not exactly 2");
    if (!is_k_proper_connected(g, c, 2).holds)
        throw defect_error("color_ore_pc2: disjoint proper path pair missing");
    return c;
}

} // namespace pcon
