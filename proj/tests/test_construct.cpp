#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <vector>

#include "pcon/construct.hpp"
#include "pcon/decompose.hpp"
#include "pcon/exact.hpp"
#include "pcon/graph.hpp"
#include "pcon/verify.hpp"
#include "test_util.hpp"

using namespace pcon;

namespace {

Graph bowtie() {
    return Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
}

// Apex joined to one vertex of each of four triangles.
Graph four_triangle_spider() {
    std::vector<std::pair<int, int>> e;
    for (int t = 0; t < 4; ++t) {
        int b = 3 * t;
        e.push_back({b, b + 1});
        e.push_back({b, b + 2});
        e.push_back({b + 1, b + 2});
        e.push_back({b, 12});
    }
    return Graph::from_edges(13, e);
}

} // namespace

TEST_CASE("color_tree puts exactly max-degree colors on a tree") {
    SECTION("path") {
        EdgeColoring c = color_tree(path_graph(5));
        REQUIRE(c.k == 2);
    }
    SECTION("star") {
        Graph star = Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
        EdgeColoring c = color_tree(star);
        REQUIRE(c.k == 4);
        std::vector<int> sorted = c.colors;
        std::sort(sorted.begin(), sorted.end());
        REQUIRE(sorted == std::vector<int>{1, 2, 3, 4});
    }
    SECTION("every tree up to seven vertices") {
        for (int n = 2; n <= 7; ++n)
            testutil::for_each_connected_graph(n, [&](const Graph& g) {
                if (g.m() != g.n() - 1) return;
                EdgeColoring c = color_tree(g);
                REQUIRE(c.k == max_degree(g));
                REQUIRE(is_proper_connected(g, c).holds);
            });
    }
    SECTION("rejects non-trees") {
        REQUIRE_THROWS_AS(color_tree(cycle_graph(3)), precondition_error);
        REQUIRE_THROWS_AS(color_tree(Graph::from_edges(1, {})), precondition_error);
    }
}

TEST_CASE("color_cycle alternates and spends a third color only on odd cycles") {
    SECTION("hexagon is 121212") {
        EdgeColoring c = color_cycle(6);
        REQUIRE(c.colors == std::vector<int>{1, 2, 1, 2, 1, 2});
        REQUIRE(is_k_proper_connected(cycle_graph(6), c, 2).holds);
    }
    SECTION("pentagon needs three") {
        EdgeColoring c = color_cycle(5);
        REQUIRE(max_used_color(c) == 3);
        REQUIRE(is_proper_connected(cycle_graph(5), c).holds);
    }
    SECTION("square is strong on two") {
        EdgeColoring c = color_cycle(4);
        REQUIRE(max_used_color(c) == 2);
        REQUIRE(has_strong_property(cycle_graph(4), c).holds);
    }
    SECTION("triangle") {
        EdgeColoring c = color_cycle(3);
        REQUIRE(c.colors == std::vector<int>{1, 2, 3});
    }
    REQUIRE_THROWS_AS(color_cycle(2), precondition_error);
}

TEST_CASE("color_cycle_chord two-colors the chorded cycle for disjoint path pairs") {
    SECTION("pentagon plus chord matches the fixed scheme") {
        auto [g, c] = color_cycle_chord(5);
        REQUIRE(g.n() == 5);
        REQUIRE(g.m() == 6);
        REQUIRE(c.colors == std::vector<int>{1, 2, 1, 2, 2, 2});
    }
    SECTION("even case alternates and colors the chord 1") {
        auto [g, c] = color_cycle_chord(6);
        REQUIRE(c.colors == std::vector<int>{1, 2, 1, 2, 1, 2, 1});
        REQUIRE(g.edge(6) == std::make_pair(0, 4));
    }
    SECTION("range sweep") {
        for (int n = 4; n <= 12; ++n) {
            auto [g, c] = color_cycle_chord(n);
            REQUIRE(max_used_color(c) == 2);
            REQUIRE(is_k_proper_connected(g, c, 2).holds);
        }
    }
    REQUIRE_THROWS_AS(color_cycle_chord(3), precondition_error);
}

TEST_CASE("strong_color_block finds strong colorings within the granted palette") {
    SECTION("square on two colors") {
        StrongColoring s = strong_color_block(cycle_graph(4), 2);
        REQUIRE(s.strong);
        REQUIRE(max_used_color(s.coloring) <= 2);
        REQUIRE(has_strong_property(cycle_graph(4), s.coloring).holds);
    }
    SECTION("complete graph on three colors") {
        Graph k4 = complete_graph(4);
        StrongColoring s = strong_color_block(k4, 3);
        REQUIRE(s.strong);
        REQUIRE(max_used_color(s.coloring) <= 3);
        REQUIRE(has_strong_property(k4, s.coloring).holds);
    }
    SECTION("non-hamiltonian bipartite block") {
        Graph k23 = Graph::from_edges(5, {{0, 3}, {0, 4}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
        StrongColoring s = strong_color_block(k23, 2);
        REQUIRE(max_used_color(s.coloring) == 2);
        REQUIRE(has_strong_property(k23, s.coloring).holds);
    }
    SECTION("petersen graph") {
        Graph p = testutil::petersen();
        StrongColoring s = strong_color_block(p, 3);
        REQUIRE(max_used_color(s.coloring) <= 3);
        REQUIRE(has_strong_property(p, s.coloring).holds);
    }
    SECTION("palette must match the block's bipartiteness") {
        REQUIRE_THROWS_AS(strong_color_block(cycle_graph(4), 3), precondition_error);
        REQUIRE_THROWS_AS(strong_color_block(complete_graph(4), 2), precondition_error);
        REQUIRE_THROWS_AS(strong_color_block(path_graph(4), 2), precondition_error);
    }
    SECTION("every 2-connected graph up to six vertices") {
        for (int n = 3; n <= 6; ++n)
            testutil::for_each_connected_graph(n, [&](const Graph& g) {
                if (!is_two_connected(g)) return;
                const int palette = is_bipartite(g) ? 2 : 3;
                StrongColoring s = strong_color_block(g, palette);
                REQUIRE(s.strong);
                REQUIRE(max_used_color(s.coloring) <= palette);
            });
    }
}

TEST_CASE("color_bridgeless assembles strong block colorings") {
    SECTION("two triangles sharing a vertex need three") {
        Graph g = bowtie();
        StrongColoring s = color_bridgeless(g);
        REQUIRE(max_used_color(s.coloring) == 3);
        REQUIRE(has_strong_property(g, s.coloring).holds);
    }
    SECTION("two even cycles sharing a vertex stay on two") {
        Graph g = Graph::from_edges(9, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}, {4, 5},
                                        {5, 6}, {6, 7}, {7, 8}, {0, 8}});
        StrongColoring s = color_bridgeless(g);
        REQUIRE(max_used_color(s.coloring) == 2);
        REQUIRE(has_strong_property(g, s.coloring).holds);
    }
    SECTION("eulerian example stays within three") {
        StrongColoring s = color_bridgeless(complete_graph(5));
        REQUIRE(max_used_color(s.coloring) <= 3);
    }
    SECTION("rejects bridges") {
        REQUIRE_THROWS_AS(color_bridgeless(path_graph(3)), precondition_error);
    }
    SECTION("every bridgeless graph up to six vertices") {
        for (int n = 3; n <= 6; ++n)
            testutil::for_each_connected_graph(n, [&](const Graph& g) {
                if (!is_two_edge_connected(g)) return;
                StrongColoring s = color_bridgeless(g);
                REQUIRE(max_used_color(s.coloring) <= (is_bipartite(g) ? 2 : 3));
                REQUIRE(has_strong_property(g, s.coloring).holds);
            });
    }
}

TEST_CASE("extend_pendants colors pendant edges by the three-path case analysis") {
    Graph k4 = complete_graph(4);
    StrongColoring core = strong_color_block(k4, 3);

    auto k4_plus = [&](const std::vector<int>& anchors) {
        std::vector<std::pair<int, int>> e;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) e.push_back({i, j});
        for (std::size_t i = 0; i < anchors.size(); ++i)
            e.push_back({anchors[i], 4 + static_cast<int>(i)});
        return Graph::from_edges(4 + static_cast<int>(anchors.size()), e);
    };

    SECTION("five pendants cost five colors") {
        Graph g = k4_plus({0, 1, 2, 3, 0});
        EdgeColoring c = extend_pendants(g, core, pendant_set(g));
        REQUIRE(max_used_color(c) == 5);
        REQUIRE(is_proper_connected(g, c).holds);
    }
    SECTION("two pendants reuse the core palette") {
        Graph g = k4_plus({0, 1});
        EdgeColoring c = extend_pendants(g, core, pendant_set(g));
        REQUIRE(max_used_color(c) <= 3);
        REQUIRE(is_proper_connected(g, c).holds);
    }
    SECTION("three pendants on one vertex take colors 1,2,3") {
        Graph g = k4_plus({0, 0, 0});
        EdgeColoring c = extend_pendants(g, core, pendant_set(g));
        std::vector<int> at_pendants;
        for (int v = 4; v < 7; ++v) at_pendants.push_back(c[g.adj(v)[0].second]);
        std::sort(at_pendants.begin(), at_pendants.end());
        REQUIRE(at_pendants == std::vector<int>{1, 2, 3});
        REQUIRE(is_proper_connected(g, c).holds);
    }
    SECTION("no pendants is the identity") {
        EdgeColoring c = extend_pendants(k4, core, PendantSet{});
        REQUIRE(c.colors == core.coloring.colors);
    }
    SECTION("rejects a core coloring without the strong property") {
        Graph g = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}});
        StrongColoring flat{EdgeColoring{{1, 1, 1, 1}, 1}, false};
        REQUIRE_THROWS_AS(extend_pendants(g, flat, pendant_set(g)), precondition_error);
    }
    SECTION("rejects pendants hanging off each other") {
        Graph k2 = Graph::from_edges(2, {{0, 1}});
        PendantSet both;
        both.vertices = {0, 1};
        both.neighbors = {1, 0};
        REQUIRE_THROWS_AS(extend_pendants(k2, StrongColoring{EdgeColoring{{1}, 1}, true}, both),
                          precondition_error);
    }
    SECTION("pendants around small cycles verify within max(3, count)") {
        for (int n = 4; n <= 6; ++n) {
            Graph cyc = cycle_graph(n);
            StrongColoring sc = strong_color_block(cyc, is_bipartite(cyc) ? 2 : 3);
            for (int k = 1; k <= 4; ++k) {
                std::vector<std::pair<int, int>> e;
                for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
                for (int i = 0; i < k; ++i) e.push_back({i % n, n + i});
                Graph g = Graph::from_edges(n + k, e);
                EdgeColoring c = extend_pendants(g, sc, pendant_set(g));
                REQUIRE(max_used_color(c) <= std::max(3, k == 0 ? sc.coloring.k : k));
                REQUIRE(is_proper_connected(g, c).holds);
            }
        }
    }
}

TEST_CASE("extend_two_attachments alternates along attached paths") {
    Graph c4 = cycle_graph(4);
    StrongColoring core = strong_color_block(c4, 2);

    SECTION("one pendant path of length three stays on two colors") {
        Graph g = Graph::from_edges(7, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}, {4, 5}, {5, 6}});
        EdgeColoring c = extend_two_attachments(g, core, {{0, 4, 5, 6}});
        REQUIRE(max_used_color(c) <= 2);
        REQUIRE(is_proper_connected(g, c).holds);
    }
    SECTION("two single-vertex attachments at distinct anchors") {
        Graph g = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}, {2, 5}});
        EdgeColoring c = extend_two_attachments(g, core, {{0, 4}, {2, 5}});
        REQUIRE(max_used_color(c) <= 2);
        REQUIRE(is_proper_connected(g, c).holds);
    }
    SECTION("two attachments sharing an anchor get distinct first colors") {
        Graph g = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}, {0, 5}});
        EdgeColoring c = extend_two_attachments(g, core, {{0, 4}, {0, 5}});
        REQUIRE(c[g.edge_id(0, 4)] != c[g.edge_id(0, 5)]);
        REQUIRE(is_proper_connected(g, c).holds);
    }
    SECTION("zero attachments is the identity") {
        EdgeColoring c = extend_two_attachments(c4, core, {});
        REQUIRE(c.colors == core.coloring.colors);
    }
    SECTION("edges beyond the designated paths are tolerated") {
        Graph g = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}, {2, 5}, {4, 5}});
        EdgeColoring c = extend_two_attachments(g, core, {{0, 4}, {2, 5}});
        REQUIRE(is_proper_connected(g, c).holds);
    }
    SECTION("three attachments are refused") {
        Graph g = Graph::from_edges(7,
                                    {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}, {1, 5}, {2, 6}});
        REQUIRE_THROWS_AS(extend_two_attachments(g, core, {{0, 4}, {1, 5}, {2, 6}}),
                          precondition_error);
    }
}

TEST_CASE("compose_cut_edge merges piece colorings across a bridge") {
    SECTION("two triangles joined by a bridge") {
        Graph g = Graph::from_edges(6, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}});
        CutEdgePieces p = cut_edge_pieces(g, 3);
        REQUIRE(p.a.n() == 4);
        REQUIRE(p.b.n() == 4);
        EdgeColoring c1{{1, 1, 1, 2}, 2};
        EdgeColoring c2{{2, 1, 1, 1}, 2};
        EdgeColoring merged = compose_cut_edge(g, 3, c1, c2);
        REQUIRE(max_used_color(merged) == 2);
        REQUIRE(is_proper_connected(g, merged).holds);
        REQUIRE(pc_exact(g).value == 2);
    }
    SECTION("star bridged to a clique keeps the star palette") {
        Graph g = Graph::from_edges(8, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {4, 5}, {4, 6},
                                        {4, 7}, {5, 6}, {5, 7}, {6, 7}});
        EdgeColoring c1{{1, 2, 3, 4}, 4};
        EdgeColoring c2{{1, 1, 2, 3, 3, 2, 1}, 3};
        EdgeColoring merged = compose_cut_edge(g, 3, c1, c2);
        REQUIRE(max_used_color(merged) == 4);
        REQUIRE(is_proper_connected(g, merged).holds);
    }
    SECTION("rejects a non-bridge edge") {
        Graph g = bowtie();
        REQUIRE_THROWS_AS(cut_edge_pieces(g, 0), precondition_error);
    }
    SECTION("rejects a second palette that cannot fit the first") {
        Graph g = Graph::from_edges(8, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                                        {3, 4}, {4, 5}, {4, 6}, {4, 7}});
        // piece a: clique plus stub; piece b: the star, which needs four colors
        EdgeColoring c1{{1, 2, 3, 3, 2, 1, 1}, 3};
        EdgeColoring c2{{1, 2, 3, 4}, 4};
        REQUIRE_THROWS_AS(compose_cut_edge(g, 6, c1, c2), precondition_error);
    }
}

TEST_CASE("color_general colors any connected graph within its bridge-tree bound") {
    SECTION("four triangles on an apex use exactly four colors") {
        Graph g = four_triangle_spider();
        EdgeColoring c = color_general(g);
        REQUIRE(max_used_color(c) == 4);
        REQUIRE(is_proper_connected(g, c).holds);
    }
    SECTION("three cherries on an apex match the exact value") {
        Graph g = Graph::from_edges(7, {{0, 1}, {2, 3}, {4, 5}, {0, 6}, {2, 6}, {4, 6}});
        EdgeColoring c = color_general(g);
        REQUIRE(max_used_color(c) == 3);
        REQUIRE(pc_exact(g).value == 3);
    }
    SECTION("trees get their max degree") {
        REQUIRE(max_used_color(color_general(path_graph(6))) == 2);
        Graph star = Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
        REQUIRE(max_used_color(color_general(star)) == 4);
    }
    SECTION("bridgeless graphs delegate to the strong assembly") {
        REQUIRE(max_used_color(color_general(cycle_graph(6))) == 2);
        REQUIRE(max_used_color(color_general(complete_graph(5))) <= 3);
    }
    SECTION("single edge") {
        EdgeColoring c = color_general(Graph::from_edges(2, {{0, 1}}));
        REQUIRE(c.colors == std::vector<int>{1});
    }
    SECTION("deterministic output") {
        Graph g = Graph::from_edges(6, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}});
        REQUIRE(color_general(g).colors == color_general(g).colors);
    }
    SECTION("exhaustive agreement with the exact solver up to six vertices") {
        for (int n = 2; n <= 6; ++n)
            testutil::for_each_connected_graph(n, [&](const Graph& g) {
                EdgeColoring c = color_general(g);
                int bound = std::max(3, bridge_tree_max_degree(bridge_block_tree(g)));
                REQUIRE(max_used_color(c) <= bound);
                REQUIRE(max_used_color(c) >= pc_exact(g).value);
            });
    }
}
