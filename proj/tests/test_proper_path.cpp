#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "pcon/proper_path.hpp"
#include "pcon/rng.hpp"
#include "test_util.hpp"

using namespace pcon;

TEST_CASE("is_proper_path") {
    auto p3 = path_graph(3);
    auto alt = make_coloring(p3, {1, 2});
    auto flat = make_coloring(p3, {1, 1});
    REQUIRE(is_proper_path(p3, alt, {0, 1, 2}));
    REQUIRE(is_proper_path(p3, alt, {2, 1, 0}));
    REQUIRE_FALSE(is_proper_path(p3, flat, {0, 1, 2}));
    REQUIRE(is_proper_path(p3, flat, {0, 1})); // single edge is always proper
    REQUIRE_FALSE(is_proper_path(p3, alt, {0}));
    REQUIRE_FALSE(is_proper_path(p3, alt, {}));
    REQUIRE_FALSE(is_proper_path(p3, alt, {0, 2}));       // not an edge
    REQUIRE_FALSE(is_proper_path(p3, alt, {0, 1, 0}));    // repeated vertex
    REQUIRE_FALSE(is_proper_path(p3, alt, {0, 1, 5}));    // out of range
    auto c4 = cycle_graph(4);
    auto c = make_coloring(c4, {1, 2, 1, 2});
    REQUIRE(is_proper_path(c4, c, {0, 1, 2, 3}));
    REQUIRE(is_proper_path(c4, c, {1, 0, 3, 2}));
}

TEST_CASE("exists_proper_path on hand-built cases") {
    // Two equal-colored edges in a row block the only route.
    auto p3 = path_graph(3);
    REQUIRE_FALSE(exists_proper_path(p3, make_coloring(p3, {1, 1}), 0, 2).has_value());
    REQUIRE(exists_proper_path(p3, make_coloring(p3, {1, 2}), 0, 2).has_value());

    // Adjacent vertices always have the single-edge path.
    auto k3 = complete_graph(3);
    auto flat = make_coloring(k3, {1, 1, 1});
    auto direct = exists_proper_path(k3, flat, 0, 2);
    REQUIRE(direct.has_value());
    REQUIRE(direct->vertices == std::vector<int>{0, 2});
    REQUIRE(direct->start_color == 1);
    REQUIRE(direct->end_color == 1);

    // Opposite corners of an alternating 4-cycle.
    auto c4 = cycle_graph(4);
    auto alt = make_coloring(c4, {1, 2, 1, 2});
    auto across = exists_proper_path(c4, alt, 0, 2);
    REQUIRE(across.has_value());
    REQUIRE(across->vertices == std::vector<int>{0, 1, 2});
    REQUIRE(across->start_color == 1);
    REQUIRE(across->end_color == 2);

    REQUIRE_THROWS_AS(exists_proper_path(c4, alt, 1, 1), precondition_error);
    REQUIRE_THROWS_AS(exists_proper_path(c4, alt, 0, 9), precondition_error);
}

TEST_CASE("enumeration matches the unpruned reference on all small graphs") {
    splitmix64 rng(0x5eed);
    for (int n = 2; n <= 5; ++n)
        testutil::for_each_connected_graph(n, [&](const Graph& g) {
            std::vector<EdgeColoring> colorings;
            colorings.push_back(make_coloring(g, std::vector<int>(static_cast<std::size_t>(g.m()), 1)));
            std::vector<int> rainbow;
            for (int e = 0; e < g.m(); ++e) rainbow.push_back(e + 1);
            if (g.m() > 0) colorings.push_back(make_coloring(g, rainbow));
            for (int k : {2, 3}) {
                std::vector<int> random_colors;
                for (int e = 0; e < g.m(); ++e)
                    random_colors.push_back(1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(k))));
                colorings.push_back(make_coloring(g, random_colors));
            }
            for (const auto& c : colorings)
                for (int u = 0; u < n; ++u)
                    for (int v = u + 1; v < n; ++v) {
                        auto expected = testutil::oracle_proper_paths(g, c, u, v);
                        std::set<std::vector<int>> expected_set(expected.begin(), expected.end());
                        auto got = enumerate_proper_paths(g, c, u, v, 1 << 20);
                        REQUIRE_FALSE(got.truncated);
                        std::set<std::vector<int>> got_set;
                        for (const auto& p : got.paths) {
                            REQUIRE(is_proper_path(g, c, p.vertices));
                            REQUIRE(p.vertices.front() == u);
                            REQUIRE(p.vertices.back() == v);
                            REQUIRE(p.start_color ==
                                    testutil::oracle_edge_color(g, c, p.vertices[0], p.vertices[1]));
                            REQUIRE(p.end_color ==
                                    testutil::oracle_edge_color(g, c, p.vertices[p.vertices.size() - 2],
                                                                p.vertices.back()));
                            got_set.insert(p.vertices);
                        }
                        REQUIRE(got_set.size() == got.paths.size());
                        REQUIRE(got_set == expected_set);
                        REQUIRE(exists_proper_path(g, c, u, v).has_value() == !expected.empty());
                    }
        });
}

TEST_CASE("enumeration examples and truncation") {
    // Triangle, all edges one color: the direct edge is the only proper path.
    auto k3 = complete_graph(3);
    auto flat = make_coloring(k3, {1, 1, 1});
    auto list = enumerate_proper_paths(k3, flat, 0, 1, 100);
    REQUIRE(list.paths.size() == 1);
    REQUIRE(list.paths[0].vertices == std::vector<int>{0, 1});
    REQUIRE_FALSE(list.truncated);

    auto c4 = cycle_graph(4);
    auto alt = make_coloring(c4, {1, 2, 1, 2});
    auto both = enumerate_proper_paths(c4, alt, 0, 2, 10);
    REQUIRE(both.paths.size() == 2);
    REQUIRE_FALSE(both.truncated);
    auto capped = enumerate_proper_paths(c4, alt, 0, 2, 1);
    REQUIRE(capped.paths.size() == 1);
    REQUIRE(capped.truncated);
    auto zero = enumerate_proper_paths(c4, alt, 0, 2, 0);
    REQUIRE(zero.paths.empty());
    REQUIRE(zero.truncated);
}
