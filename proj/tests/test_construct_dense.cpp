#include <catch2/catch_amalgamated.hpp>

#include "pcon/construct_dense.hpp"
#include "pcon/rng.hpp"
#include "test_util.hpp"

#include <algorithm>
#include <vector>

using namespace pcon;

namespace {

Graph complete_minus_matching(int n, int pairs) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (v == u + 1 && u % 2 == 0 && u / 2 < pairs) continue;
            edges.push_back({u, v});
        }
    return Graph::from_edges(n, edges);
}

Graph complete_bipartite(int a, int b) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v) edges.push_back({u, v});
    return Graph::from_edges(a + b, edges);
}

// clique on {lo..hi} plus arbitrary extra edges
Graph clique_plus(int n, int lo, int hi, const std::vector<std::pair<int, int>>& extra) {
    std::vector<std::pair<int, int>> edges(extra);
    for (int u = lo; u <= hi; ++u)
        for (int v = u + 1; v <= hi; ++v) edges.push_back({u, v});
    return Graph::from_edges(n, edges);
}

bool valid_extraction(const Graph& g, const BipartiteExtraction& ext) {
    std::uint64_t x = detail_construct::vertex_mask(ext.x);
    std::uint64_t y = detail_construct::vertex_mask(ext.y);
    if ((x & y) != 0 || (x | y) != all_vertices_mask(g)) return false;
    return is_two_connected(detail_dense::crossing_graph(g, x));
}

} // namespace

TEST_CASE("seeded extraction splits dense graphs around any pair", "[construct_dense]") {
    SECTION("complete graph on six vertices, every seed") {
        Graph g = complete_graph(6);
        for (int u = 0; u < 6; ++u)
            for (int v = u + 1; v < 6; ++v) {
                BipartiteExtraction ext = extract_bipartite_spanning(g, u, v);
                REQUIRE(ext.y == std::vector<int>{u, v});
                REQUIRE(ext.x.size() == 4);
                REQUIRE(valid_extraction(g, ext));
            }
    }
    SECTION("nearly complete graph on fourteen vertices") {
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < 14; ++u)
            for (int v = u + 1; v < 14; ++v)
                if (!(u == 0 && v == 1)) edges.push_back({u, v});
        Graph g = Graph::from_edges(14, edges);
        BipartiteExtraction ext = extract_bipartite_spanning(g, 3, 7);
        REQUIRE(valid_extraction(g, ext));
    }
    SECTION("preconditions") {
        REQUIRE_THROWS_AS(extract_bipartite_spanning(complete_graph(5), 0, 1), precondition_error);
        REQUIRE_THROWS_AS(extract_bipartite_spanning(cycle_graph(8), 0, 2), precondition_error);
        REQUIRE_THROWS_AS(extract_bipartite_spanning(complete_graph(6), 2, 2), precondition_error);
        REQUIRE_THROWS_AS(extract_bipartite_spanning(complete_graph(6), 0, 6), precondition_error);
    }
}

TEST_CASE("seed-free extraction", "[construct_dense]") {
    SECTION("a bipartite input is its own answer") {
        Graph g = complete_bipartite(4, 4);
        BipartiteExtraction ext = extract_bipartite_spanning(g);
        std::vector<int> left = ext.x, right = ext.y;
        if (std::find(left.begin(), left.end(), 0) == left.end()) std::swap(left, right);
        REQUIRE(left == std::vector<int>{0, 1, 2, 3});
        REQUIRE(right == std::vector<int>{4, 5, 6, 7});
        REQUIRE(valid_extraction(g, ext));
    }
    SECTION("complete graph minus a perfect matching") {
        Graph g = complete_minus_matching(14, 7);
        REQUIRE(g.m() == 84); // above the (n-1 choose 2) - 5 = 73 floor
        BipartiteExtraction ext = extract_bipartite_spanning(g);
        REQUIRE(valid_extraction(g, ext));
    }
    SECTION("within the exhaustive window") {
        Graph g = complete_minus_matching(12, 6);
        BipartiteExtraction ext = extract_bipartite_spanning(g);
        REQUIRE(valid_extraction(g, ext));
    }
    SECTION("preconditions") {
        REQUIRE_THROWS_AS(extract_bipartite_spanning(complete_graph(10)), precondition_error);
        REQUIRE_THROWS_AS(extract_bipartite_spanning(path_graph(14)), precondition_error);
        // wheel on twelve vertices: 2-connected but nowhere near complete
        std::vector<std::pair<int, int>> we;
        for (int i = 0; i < 11; ++i) {
            we.push_back({i, (i + 1) % 11});
            we.push_back({i, 11});
        }
        REQUIRE_THROWS_AS(extract_bipartite_spanning(Graph::from_edges(12, we)), precondition_error);
    }
}

TEST_CASE("color_dense_two on highly connected inputs", "[construct_dense]") {
    SECTION("complete minus a perfect matching") {
        Graph g = complete_minus_matching(14, 7);
        EdgeColoring c = color_dense_two(g);
        REQUIRE(max_used_color(c) == 2);
        REQUIRE(is_proper_connected(g, c).holds);
    }
    SECTION("complete minus one edge sits at the top of the window") {
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < 14; ++u)
            for (int v = u + 1; v < 14; ++v)
                if (!(u == 0 && v == 1)) edges.push_back({u, v});
        Graph g = Graph::from_edges(14, edges);
        REQUIRE(g.m() == 90);
        EdgeColoring c = color_dense_two(g);
        REQUIRE(max_used_color(c) == 2);
        REQUIRE(is_proper_connected(g, c).holds);
    }
    SECTION("larger orders") {
        for (int n : {15, 16}) {
            Graph g = complete_minus_matching(n, n / 2);
            EdgeColoring c = color_dense_two(g);
            REQUIRE(max_used_color(c) == 2);
            REQUIRE(is_proper_connected(g, c).holds);
        }
    }
    SECTION("edge count gates") {
        REQUIRE_THROWS_AS(color_dense_two(complete_graph(14)), precondition_error);
        REQUIRE_THROWS_AS(color_dense_two(complete_graph(13)), precondition_error);
        // 58 edges on 14 vertices: one short of the window
        Graph lean = clique_plus(14, 0, 10, {{10, 11}, {11, 12}, {12, 13}});
        REQUIRE(lean.m() == 58);
        REQUIRE_THROWS_AS(color_dense_two(lean), precondition_error);
    }
}

TEST_CASE("color_dense_two peels low-degree vertices", "[construct_dense]") {
    SECTION("one degree-two vertex outside a clique") {
        Graph g = clique_plus(14, 1, 13, {{0, 1}, {0, 2}});
        REQUIRE(g.m() == 80);
        EdgeColoring c = color_dense_two(g);
        REQUIRE(max_used_color(c) == 2);
        REQUIRE(is_proper_connected(g, c).holds);
    }
    SECTION("two degree-two vertices outside a clique") {
        Graph g = clique_plus(14, 2, 13, {{0, 2}, {0, 3}, {1, 4}, {1, 5}});
        REQUIRE(g.m() == 70);
        EdgeColoring c = color_dense_two(g);
        REQUIRE(max_used_color(c) == 2);
        REQUIRE(is_proper_connected(g, c).holds);
    }
    SECTION("twice-peeled residue keeps a leaf that chains back") {
        // clique {2..12}; 0 and 1 hang by two edges each; 13 leans on 1 and 3,
        // so removing 1 turns it into a leaf
        Graph g = clique_plus(14, 2, 12, {{0, 4}, {0, 5}, {1, 8}, {1, 9}, {13, 1}, {13, 3}});
        REQUIRE(g.m() == 61);
        EdgeColoring c = color_dense_two(g);
        REQUIRE(max_used_color(c) == 2);
        REQUIRE(is_proper_connected(g, c).holds);
    }
}

TEST_CASE("color_dense_two sampled sweep", "[construct_dense]") {
    splitmix64 rng(0xde15e2u);
    for (int n = 14; n <= 16; ++n) {
        const int lo = detail_dense::choose2(n - 3) + 4;
        for (int trial = 0; trial < 5; ++trial) {
            // walk down from complete by random deletions, stay inside the window
            std::vector<std::pair<int, int>> edges;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
            int target = lo + static_cast<int>(rng.below(static_cast<std::uint64_t>(
                                  detail_dense::choose2(n) - 1 - lo + 1)));
            while (static_cast<int>(edges.size()) > target) {
                std::size_t pick = rng.below(edges.size());
                auto saved = edges[pick];
                edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(pick));
                Graph probe = Graph::from_edges(n, edges);
                if (!is_connected(probe) || min_degree(probe) < 1) {
                    edges.push_back(saved); // keep the sample usable
                    break;
                }
            }
            Graph g = Graph::from_edges(n, edges);
            if (g.m() < lo || g.m() > detail_dense::choose2(n) - 1) continue;
            EdgeColoring c = color_dense_two(g);
            REQUIRE(max_used_color(c) == 2);
            REQUIRE(is_proper_connected(g, c).holds);
        }
    }
}

TEST_CASE("color_dense_three covers its three shapes", "[construct_dense]") {
    SECTION("bridgeless dense input rides the block scheme") {
        Graph g = complete_minus_matching(15, 7);
        EdgeColoring c = color_dense_three(g);
        REQUIRE(max_used_color(c) <= 3);
        REQUIRE(is_proper_connected(g, c).holds);
    }
    SECTION("pendant vertex over a dense interior") {
        Graph g = clique_plus(15, 0, 13, {{14, 0}});
        // interior complete: two colors suffice outright
        EdgeColoring c = color_dense_three(g);
        REQUIRE(max_used_color(c) <= 3);
        REQUIRE(is_proper_connected(g, c).holds);
    }
    SECTION("pendant vertex over a near-complete interior") {
        Graph base = complete_minus_matching(14, 7);
        std::vector<std::pair<int, int>> edges;
        for (int e = 0; e < base.m(); ++e) edges.push_back(base.edge(e));
        edges.push_back({14, 0});
        Graph g = Graph::from_edges(15, edges);
        EdgeColoring c = color_dense_three(g);
        REQUIRE(max_used_color(c) <= 3);
        REQUIRE(is_proper_connected(g, c).holds);
    }
    SECTION("triangle behind a cut edge") {
        Graph g = clique_plus(15, 3, 14, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
        REQUIRE(g.m() == 70);
        EdgeColoring c = color_dense_three(g);
        REQUIRE(max_used_color(c) <= 3);
        REQUIRE(is_proper_connected(g, c).holds);
    }
    SECTION("four vertices behind a cut edge") {
        Graph g = clique_plus(16, 4, 15,
                              {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}});
        EdgeColoring c = color_dense_three(g);
        REQUIRE(max_used_color(c) <= 3);
        REQUIRE(is_proper_connected(g, c).holds);
    }
    SECTION("preconditions") {
        REQUIRE_THROWS_AS(color_dense_three(complete_minus_matching(14, 7)), precondition_error);
        REQUIRE_THROWS_AS(color_dense_three(cycle_graph(15)), precondition_error);
    }
}

TEST_CASE("strong two-color schemes exist for dense cores", "[construct_dense]") {
    // odd cliques have no hamiltonian alternation, yet the crossing scheme works
    for (int n : {5, 7, 9, 12, 13}) {
        auto sc = detail_dense::strong_two(complete_graph(n));
        REQUIRE(sc.has_value());
        REQUIRE(max_used_color(sc->coloring) == 2);
        REQUIRE(is_proper_connected(complete_graph(n), sc->coloring).holds);
        REQUIRE(has_strong_property(complete_graph(n), sc->coloring).holds);
    }
    // triangles genuinely cannot do it
    REQUIRE_FALSE(detail_dense::strong_two(complete_graph(3)).has_value());
}
