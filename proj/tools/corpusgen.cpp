// Writes the fixed graph6 corpora under tests/data:
//
//   connected_n{2..7}.g6   every connected graph up to isomorphism
//   trees_n{2..9}.g6       every tree up to isomorphism
//   dirac_n8.g6            noncomplete connected, minimum degree 4, order 8
//   bridgeless_upto10.g6   curated + seeded 2-edge-connected graphs, n <= 10
//
// Enumeration is vertex-by-vertex augmentation deduplicated by a canonical
// form: the minimum upper-triangle bitstring over all permutations that sort
// the (degree, sorted neighbor degrees) invariant.  The known class counts
// (853 connected graphs at n=7, 47 trees at n=9, six 3-regular graphs at
// n=8, ...) are hard-asserted so a silent enumeration bug cannot ship a
// short corpus.  Output is sorted and seeded, hence byte-stable.

#include "pcon/decompose.hpp"
#include "pcon/families.hpp"
#include "pcon/graph.hpp"
#include "pcon/graph6.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

using namespace pcon;

namespace {

int failures = 0;

void expect(bool ok, const std::string& what) {
    if (!ok) {
        std::fprintf(stderr, "corpusgen: FAILED: %s\n", what.c_str());
        ++failures;
    }
}

// ---- canonical form ---------------------------------------------------------

// Minimum adjacency bitstring over permutations that sort the vertex
// invariant (degree, sorted neighbor degrees) ascending.  Both graphs of an
// isomorphic pair restrict to the same permutation family, so the minimum
// is a complete isomorphism invariant.  Fits in 64 bits through n = 11.
std::uint64_t canonical_bits(const Graph& g) {
    const int n = g.n();
    if (n < 2) return 0;
    std::vector<std::pair<int, std::vector<int>>> inv(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        inv[static_cast<std::size_t>(v)].first = g.degree(v);
        for (auto [w, e] : g.adj(v)) inv[static_cast<std::size_t>(v)].second.push_back(g.degree(w));
        std::sort(inv[static_cast<std::size_t>(v)].second.begin(),
                  inv[static_cast<std::size_t>(v)].second.end());
    }
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return inv[static_cast<std::size_t>(a)] < inv[static_cast<std::size_t>(b)];
    });
    std::vector<std::vector<int>> classes;
    for (int idx = 0; idx < n; ++idx) {
        if (idx == 0 || inv[static_cast<std::size_t>(order[static_cast<std::size_t>(idx)])] !=
                            inv[static_cast<std::size_t>(order[static_cast<std::size_t>(idx - 1)])])
            classes.emplace_back();
        classes.back().push_back(order[static_cast<std::size_t>(idx)]);
    }
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::uint64_t best = ~std::uint64_t{0};
    for (;;) {
        int pos = 0;
        for (const auto& cls : classes)
            for (int v : cls) perm[static_cast<std::size_t>(pos++)] = v;
        std::uint64_t bits = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                bits = bits << 1 |
                       static_cast<std::uint64_t>(
                           g.has_edge(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]));
        best = std::min(best, bits);
        std::size_t c = 0;
        while (c < classes.size() && !std::next_permutation(classes[c].begin(), classes[c].end())) ++c;
        if (c == classes.size()) break;
    }
    return best;
}

// ---- vertex augmentation ----------------------------------------------------

// All representatives at order n from the complete list at order n-1: every
// graph loses its last vertex to some (n-1)-graph, so attaching a new last
// vertex with every neighborhood mask reaches every class.  `keep` must be
// hereditary under vertex deletion for the chain to stay exhaustive.
template <typename Keep>
std::vector<Graph> augment(const std::vector<Graph>& prev, int n, Keep keep) {
    std::unordered_set<std::uint64_t> seen;
    std::vector<Graph> out;
    for (const Graph& p : prev) {
        for (std::uint64_t nb = 0; nb < (std::uint64_t{1} << (n - 1)); ++nb) {
            std::vector<std::pair<int, int>> edges = p.edges();
            for (int v = 0; v < n - 1; ++v)
                if (nb >> v & 1) edges.push_back({v, n - 1});
            Graph h = Graph::from_edges(n, std::move(edges));
            if (!keep(h)) continue;
            if (seen.insert(canonical_bits(h)).second) out.push_back(std::move(h));
        }
    }
    return out;
}

// ---- trees via Prufer + AHU -------------------------------------------------

Graph prufer_decode(int n, const std::vector<int>& seq) {
    std::vector<int> deg(static_cast<std::size_t>(n), 1);
    for (int x : seq) ++deg[static_cast<std::size_t>(x)];
    std::set<int> leaves;
    for (int v = 0; v < n; ++v)
        if (deg[static_cast<std::size_t>(v)] == 1) leaves.insert(v);
    std::vector<std::pair<int, int>> edges;
    for (int x : seq) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.push_back({leaf, x});
        if (--deg[static_cast<std::size_t>(x)] == 1) leaves.insert(x);
    }
    int a = *leaves.begin(), b = *std::next(leaves.begin());
    edges.push_back({a, b});
    return Graph::from_edges(n, edges);
}

std::string ahu(const Graph& t, int root, int parent) {
    std::vector<std::string> ch;
    for (auto [w, e] : t.adj(root))
        if (w != parent) ch.push_back(ahu(t, w, root));
    std::sort(ch.begin(), ch.end());
    std::string s = "(";
    for (const auto& c : ch) s += c;
    return s + ")";
}

std::vector<int> tree_centers(const Graph& t) {
    const int n = t.n();
    if (n == 1) return {0};
    std::vector<int> deg(static_cast<std::size_t>(n));
    std::queue<int> q;
    for (int v = 0; v < n; ++v) {
        deg[static_cast<std::size_t>(v)] = t.degree(v);
        if (deg[static_cast<std::size_t>(v)] == 1) q.push(v);
    }
    int remaining = n;
    std::vector<int> layer;
    while (remaining > 2) {
        int sz = static_cast<int>(q.size());
        remaining -= sz;
        for (int i = 0; i < sz; ++i) {
            int v = q.front();
            q.pop();
            deg[static_cast<std::size_t>(v)] = 0;
            for (auto [w, e] : t.adj(v))
                if (deg[static_cast<std::size_t>(w)] > 0 && --deg[static_cast<std::size_t>(w)] == 1)
                    q.push(w);
        }
    }
    std::vector<int> centers;
    while (!q.empty()) {
        centers.push_back(q.front());
        q.pop();
    }
    return centers;
}

std::string tree_key(const Graph& t) {
    std::string best;
    for (int c : tree_centers(t)) {
        std::string s = ahu(t, c, -1);
        if (best.empty() || s < best) best = s;
    }
    return best;
}

std::vector<Graph> all_trees(int n) {
    if (n == 2) return {Graph::from_edges(2, {{0, 1}})};
    std::map<std::string, Graph> reps;
    std::vector<int> seq(static_cast<std::size_t>(n - 2), 0);
    for (;;) {
        Graph t = prufer_decode(n, seq);
        reps.try_emplace(tree_key(t), t);
        int i = n - 3;
        while (i >= 0 && seq[static_cast<std::size_t>(i)] == n - 1) seq[static_cast<std::size_t>(i--)] = 0;
        if (i < 0) break;
        ++seq[static_cast<std::size_t>(i)];
    }
    std::vector<Graph> out;
    for (auto& [k, t] : reps) out.push_back(std::move(t));
    return out;
}

// ---- curated 2-edge-connected builders --------------------------------------

Graph petersen() {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 5; ++i) {
        e.push_back({i, (i + 1) % 5});
        e.push_back({i, i + 5});
        e.push_back({i + 5, (i + 2) % 5 + 5});
    }
    return Graph::from_edges(10, e);
}

Graph prism(int k) { // C_k x K_2
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < k; ++i) {
        e.push_back({i, (i + 1) % k});
        e.push_back({k + i, k + (i + 1) % k});
        e.push_back({i, k + i});
    }
    return Graph::from_edges(2 * k, e);
}

Graph mobius_ladder(int k) { // cycle C_{2k} plus the k main diagonals
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 2 * k; ++i) e.push_back({i, (i + 1) % (2 * k)});
    for (int i = 0; i < k; ++i) e.push_back({i, i + k});
    return Graph::from_edges(2 * k, e);
}

Graph wheel(int n) { // hub is the last vertex
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n - 1; ++i) {
        e.push_back({i, (i + 1) % (n - 1)});
        e.push_back({i, n - 1});
    }
    return Graph::from_edges(n, e);
}

Graph theta(int a, int b, int c) { // terminals 0,1; three routes with a,b,c inner vertices
    std::vector<std::pair<int, int>> e;
    int next = 2;
    for (int len : {a, b, c}) {
        if (len == 0) {
            e.push_back({0, 1});
            continue;
        }
        int prev = 0;
        for (int i = 0; i < len; ++i) {
            e.push_back({prev, next});
            prev = next++;
        }
        e.push_back({prev, 1});
    }
    return Graph::from_edges(next, e);
}

Graph circulant(int n, std::vector<int> jumps) {
    std::set<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j : jumps) {
            int u = i, v = (i + j) % n;
            if (u > v) std::swap(u, v);
            e.insert({u, v});
        }
    return Graph::from_edges(n, {e.begin(), e.end()});
}

Graph complete_bipartite(int a, int b) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) e.push_back({i, a + j});
    return Graph::from_edges(a + b, e);
}

// ---- output -----------------------------------------------------------------

void write_corpus(const std::filesystem::path& dir, const std::string& name,
                  std::vector<Graph> graphs) {
    std::vector<std::string> lines;
    for (const Graph& g : graphs) lines.push_back(encode_graph6(g));
    std::sort(lines.begin(), lines.end(), [](const std::string& x, const std::string& y) {
        return x.size() != y.size() ? x.size() < y.size() : x < y;
    });
    std::ofstream out(dir / name);
    for (const auto& l : lines) out << l << '\n';
    std::printf("  %-22s %5zu graphs\n", name.c_str(), lines.size());
}

} // namespace

int main(int argc, char** argv) {
    std::filesystem::path dir = argc > 1 ? argv[1] : "tests/data";
    std::filesystem::create_directories(dir);
    std::printf("writing corpora to %s\n", dir.string().c_str());

    // --- exhaustive connected graphs, n = 2..7 ---
    const int all_counts[] = {0, 1, 2, 4, 11, 34, 156, 1044};
    const int conn_counts[] = {0, 1, 1, 2, 6, 21, 112, 853};
    std::vector<Graph> reps = {Graph::from_edges(1, {})};
    for (int n = 2; n <= 7; ++n) {
        reps = augment(reps, n, [](const Graph&) { return true; });
        expect(static_cast<int>(reps.size()) == all_counts[n],
               "graph count at n=" + std::to_string(n));
        std::vector<Graph> conn;
        for (const Graph& g : reps)
            if (is_connected(g)) conn.push_back(g);
        expect(static_cast<int>(conn.size()) == conn_counts[n],
               "connected count at n=" + std::to_string(n));
        write_corpus(dir, "connected_n" + std::to_string(n) + ".g6", std::move(conn));
    }

    // --- trees, n = 2..9 ---
    const int tree_counts[] = {0, 1, 1, 1, 2, 3, 6, 11, 23, 47};
    for (int n = 2; n <= 9; ++n) {
        std::vector<Graph> trees = all_trees(n);
        expect(static_cast<int>(trees.size()) == tree_counts[n],
               "tree count at n=" + std::to_string(n));
        for (const Graph& t : trees)
            expect(t.m() == n - 1 && is_connected(t), "tree shape at n=" + std::to_string(n));
        write_corpus(dir, "trees_n" + std::to_string(n) + ".g6", std::move(trees));
    }

    // --- order 8, minimum degree 4, connected, noncomplete ---
    // Enumerated through complements: delta >= 4 at n=8 is exactly max degree
    // <= 3 in the complement, and that cap is hereditary, so the augmentation
    // chain stays exhaustive.  Cross-checked against the known 3-regular
    // counts at n=8 (six classes, five of them connected).
    std::vector<Graph> capped = {Graph::from_edges(1, {})};
    for (int n = 2; n <= 8; ++n)
        capped = augment(capped, n, [](const Graph& h) { return max_degree(h) <= 3; });
    int cubic = 0, cubic_conn = 0;
    for (const Graph& g : capped)
        if (min_degree(g) == 3 && max_degree(g) == 3) {
            ++cubic;
            if (is_connected(g)) ++cubic_conn;
        }
    expect(cubic == 6, "3-regular classes at n=8");
    expect(cubic_conn == 5, "connected 3-regular classes at n=8");
    std::vector<Graph> dirac;
    std::unordered_set<std::uint64_t> dirac_keys;
    for (const Graph& g : capped) {
        if (g.m() == 0) continue; // complement would be K_8
        std::vector<std::pair<int, int>> ce;
        for (int u = 0; u < 8; ++u)
            for (int v = u + 1; v < 8; ++v)
                if (!g.has_edge(u, v)) ce.push_back({u, v});
        Graph c = Graph::from_edges(8, ce);
        if (!is_connected(c)) continue;
        expect(min_degree(c) >= 4, "complement degree floor");
        dirac_keys.insert(canonical_bits(c));
        dirac.push_back(std::move(c));
    }
    expect(dirac_keys.size() == dirac.size(), "complementing preserved distinctness");
    expect(dirac_keys.count(canonical_bits(gen_complete_minus_matching(8, 4))) == 1,
           "cocktail-party graph present");
    expect(dirac_keys.count(canonical_bits(complete_bipartite(4, 4))) == 1, "K_{4,4} present");
    expect(dirac_keys.count(canonical_bits(circulant(8, {1, 2}))) == 1, "C_8(1,2) present");
    write_corpus(dir, "dirac_n8.g6", std::move(dirac));

    // --- curated + seeded 2-edge-connected graphs, n <= 10 ---
    std::vector<Graph> named;
    for (int n = 3; n <= 10; ++n) named.push_back(cycle_graph(n));
    for (int n = 4; n <= 10; ++n) named.push_back(wheel(n));
    for (int k = 3; k <= 5; ++k) named.push_back(prism(k));
    for (int k = 3; k <= 5; ++k) named.push_back(mobius_ladder(k));
    for (int a = 0; a <= 8; ++a)
        for (int b = std::max(a, 1); a + b <= 8; ++b)
            for (int c = b; a + b + c <= 8; ++c) named.push_back(theta(a, b, c));
    for (int n = 4; n <= 7; ++n) named.push_back(complete_graph(n));
    for (int a = 2; a <= 5; ++a)
        for (int b = a; b <= 5; ++b) named.push_back(complete_bipartite(a, b));
    named.push_back(petersen());
    for (int n = 5; n <= 10; ++n) named.push_back(circulant(n, {1, 2}));
    for (int n = 7; n <= 10; ++n) named.push_back(circulant(n, {1, 3}));
    named.push_back(circulant(8, {1, 4}));
    named.push_back(circulant(10, {1, 5}));
    for (int n = 4; n <= 10; ++n) named.push_back(gen_cycle_chord(n));
    for (int n = 6; n <= 10; ++n) named.push_back(gen_complete_minus_matching(n, n / 2));

    std::map<std::pair<int, std::uint64_t>, Graph> pool;
    for (Graph& g : named) {
        expect(is_two_edge_connected(g), "curated graph is 2-edge-connected");
        pool.try_emplace({g.n(), canonical_bits(g)}, std::move(g));
    }
    for (std::uint64_t seed = 1; pool.size() < 230 && seed <= 400; ++seed)
        for (int n = 6; n <= 10; ++n) {
            int span = detail_families::choose2(n) - n;
            int m = n + 1 + static_cast<int>(seed * 7 % static_cast<std::uint64_t>(span));
            Graph g = gen_random_edge_count(n, m, seed);
            if (!is_two_edge_connected(g)) continue;
            pool.try_emplace({g.n(), canonical_bits(g)}, std::move(g));
        }
    expect(pool.size() >= 200, "bridgeless corpus reaches 200 graphs");
    expect(pool.count({10, canonical_bits(petersen())}) == 1, "Petersen present");
    std::vector<Graph> bridgeless;
    for (auto& [k, g] : pool) bridgeless.push_back(std::move(g));
    write_corpus(dir, "bridgeless_upto10.g6", std::move(bridgeless));

    if (failures) {
        std::fprintf(stderr, "corpusgen: %d check(s) failed\n", failures);
        return 1;
    }
    std::printf("all corpus checks passed\n");
    return 0;
}
