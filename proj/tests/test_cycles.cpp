#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <bit>

#include "pcon/cycles.hpp"
#include "test_util.hpp"

using namespace pcon;

namespace {

// Permutation-based Hamiltonicity check: try every vertex order.
bool oracle_hamiltonian(const Graph& g) {
    if (g.n() < 3) return false;
    std::vector<int> perm;
    for (int v = 1; v < g.n(); ++v) perm.push_back(v);
    do {
        bool ok = g.has_edge(0, perm.front()) && g.has_edge(perm.back(), 0);
        for (std::size_t i = 0; ok && i + 1 < perm.size(); ++i)
            ok = g.has_edge(perm[i], perm[i + 1]);
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// Exhaustive check for a cycle on exactly r vertices: every r-subset, every
// order of it (first element pinned to the subset minimum).
bool oracle_cycle_of_length(const Graph& g, int r) {
    if (r < 3 || r > g.n()) return false;
    for (std::uint64_t vs = 0; vs < (std::uint64_t{1} << g.n()); ++vs) {
        if (std::popcount(vs) != r) continue;
        std::vector<int> verts;
        for (std::uint64_t rest = vs; rest;) {
            verts.push_back(std::countr_zero(rest));
            rest &= rest - 1;
        }
        std::vector<int> tail(verts.begin() + 1, verts.end());
        do {
            bool ok = g.has_edge(verts[0], tail.front()) && g.has_edge(tail.back(), verts[0]);
            for (std::size_t i = 0; ok && i + 1 < tail.size(); ++i)
                ok = g.has_edge(tail[i], tail[i + 1]);
            if (ok) return true;
        } while (std::next_permutation(tail.begin(), tail.end()));
    }
    return false;
}

} // namespace

TEST_CASE("hamiltonian_cycle agrees with permutation search on small graphs") {
    for (int n = 1; n <= 6; ++n)
        testutil::for_each_connected_graph(n, [&](const Graph& g) {
            auto cyc = hamiltonian_cycle(g);
            REQUIRE(cyc.has_value() == oracle_hamiltonian(g));
            if (cyc) {
                REQUIRE(static_cast<int>(cyc->size()) == g.n());
                REQUIRE(testutil::is_valid_cycle(g, *cyc));
                REQUIRE(cyc->front() == 0);
            }
        });
}

TEST_CASE("hamiltonian_cycle is deterministic and lexicographically least") {
    REQUIRE(hamiltonian_cycle(cycle_graph(6)) == std::vector<int>{0, 1, 2, 3, 4, 5});
    REQUIRE(hamiltonian_cycle(complete_graph(4)) == std::vector<int>{0, 1, 2, 3});
    // K5 minus the edge (0,1): the first usable branch at 0 starts with 2.
    auto g = Graph::from_edges(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
    REQUIRE(hamiltonian_cycle(g) == std::vector<int>{0, 2, 1, 3, 4});
}

TEST_CASE("hamiltonian_cycle trivia") {
    REQUIRE_FALSE(hamiltonian_cycle(path_graph(1)).has_value());
    REQUIRE_FALSE(hamiltonian_cycle(path_graph(2)).has_value());
    REQUIRE_FALSE(hamiltonian_cycle(path_graph(5)).has_value());
    REQUIRE_FALSE(hamiltonian_cycle(Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}})).has_value());
    REQUIRE(is_hamiltonian(cycle_graph(3)));
    REQUIRE_FALSE(is_hamiltonian(testutil::petersen()));
}

TEST_CASE("cycle_of_length agrees with exhaustive search") {
    for (int n = 3; n <= 5; ++n)
        testutil::for_each_graph(n, [&](const Graph& g) {
            for (int r = 3; r <= n; ++r) {
                auto cyc = cycle_of_length(g, r);
                REQUIRE(cyc.has_value() == oracle_cycle_of_length(g, r));
                if (cyc) {
                    REQUIRE(static_cast<int>(cyc->size()) == r);
                    REQUIRE(testutil::is_valid_cycle(g, *cyc));
                    REQUIRE(cyc->front() == *std::min_element(cyc->begin(), cyc->end()));
                }
            }
        });
    testutil::for_each_connected_graph(6, [&](const Graph& g) {
        for (int r = 3; r <= 6; ++r)
            REQUIRE(cycle_of_length(g, r).has_value() == oracle_cycle_of_length(g, r));
    });
}

TEST_CASE("cycle lengths of the Petersen graph") {
    auto p = testutil::petersen();
    for (int r = 3; r <= 10; ++r) {
        bool expected = r == 5 || r == 6 || r == 8 || r == 9;
        auto cyc = cycle_of_length(p, r);
        REQUIRE(cyc.has_value() == expected);
        if (cyc) REQUIRE(testutil::is_valid_cycle(p, *cyc));
    }
    REQUIRE(circumference(p) == 9);
}

TEST_CASE("cycle_of_length range handling") {
    REQUIRE_FALSE(cycle_of_length(complete_graph(5), 2).has_value());
    REQUIRE_FALSE(cycle_of_length(complete_graph(5), 6).has_value());
}

TEST_CASE("longest cycle and circumference") {
    REQUIRE(circumference(cycle_graph(5)) == 5);
    REQUIRE(circumference(complete_graph(4)) == 4);
    // Two triangles joined by a bridge.
    auto barbell = Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 5}});
    REQUIRE(circumference(barbell) == 3);
    // K_{2,3}: all cycles have length 4.
    auto k23 = Graph::from_edges(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
    REQUIRE(circumference(k23) == 4);
    auto cyc = longest_cycle(barbell);
    REQUIRE(testutil::is_valid_cycle(barbell, cyc));
    REQUIRE(cyc.size() == 3);

    REQUIRE_THROWS_AS(longest_cycle(path_graph(5)), precondition_error);
    REQUIRE_THROWS_AS(circumference(Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}})), precondition_error);
    REQUIRE_THROWS_AS(longest_cycle(path_graph(1)), precondition_error);
}

TEST_CASE("search budgets raise budget_error, not a wrong answer") {
    REQUIRE_THROWS_AS(hamiltonian_cycle(complete_graph(12), SearchBudget{5}), budget_error);
    REQUIRE_THROWS_AS(cycle_of_length(testutil::petersen(), 7, SearchBudget{3}), budget_error);
    REQUIRE_THROWS_AS(longest_cycle(testutil::petersen(), SearchBudget{10}), budget_error);
    // With the default budget the same calls settle.
    REQUIRE(hamiltonian_cycle(complete_graph(12)).has_value());
    REQUIRE_FALSE(cycle_of_length(testutil::petersen(), 7).has_value());
}
