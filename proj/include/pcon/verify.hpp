#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "pcon/coloring.hpp"
#include "pcon/errors.hpp"
#include "pcon/graph.hpp"
#include "pcon/proper_path.hpp"

namespace pcon {

/// Per-pair evidence from one of the connectivity verifiers.  `witnesses`
/// keeps, for every passing pair, the path(s) that certify it; `failures`
/// lists the pairs with no certificate.  holds <=> failures empty.
struct PairWitness {
    int u = 0, v = 0;
    std::vector<ProperPath> paths;
};

struct VerificationReport {
    bool holds = true;
    std::vector<std::pair<int, int>> failures;
    std::vector<PairWitness> witnesses;

    const PairWitness* witness_for(int u, int v) const {
        if (u > v) std::swap(u, v);
        for (const auto& w : witnesses)
            if (w.u == u && w.v == v) return &w;
        return nullptr;
    }
};

namespace detail_verify {

inline void require_connected(const Graph& g, const char* who) {
    if (!is_connected(g)) throw precondition_error(std::string(who) + ": graph is disconnected");
}

// BFS distances from s, -1 where unreachable.
inline std::vector<int> bfs_distances(const Graph& g, int s) {
    std::vector<int> dist(static_cast<std::size_t>(g.n()), -1);
    dist[static_cast<std::size_t>(s)] = 0;
    std::vector<int> queue{s};
    for (std::size_t i = 0; i < queue.size(); ++i)
        for (auto [w, eid] : g.adj(queue[i])) {
            (void)eid;
            if (dist[static_cast<std::size_t>(w)] < 0) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(queue[i])] + 1;
                queue.push_back(w);
            }
        }
    return dist;
}

// All unordered pairs, farthest apart first; ties by (u, v) ascending.
// Distant pairs are the ones that tend to lack proper paths, so a scan that
// stops at the first failure meets it sooner this way.
inline std::vector<std::pair<int, int>> pairs_by_distance_desc(const Graph& g) {
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> order;
    for (int u = 0; u < g.n(); ++u) {
        auto dist = bfs_distances(g, u);
        for (int v = u + 1; v < g.n(); ++v) {
            pairs.emplace_back(u, v);
            order.push_back(dist[static_cast<std::size_t>(v)]);
        }
    }
    std::vector<std::size_t> idx(pairs.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return order[a] > order[b]; });
    std::vector<std::pair<int, int>> out;
    out.reserve(pairs.size());
    for (std::size_t i : idx) out.push_back(pairs[i]);
    return out;
}

} // namespace detail_verify

/// Every pair of distinct vertices joined by a proper path?  Exact; failures
/// are reported exhaustively (ascending pair order).
inline VerificationReport is_proper_connected(const Graph& g, const EdgeColoring& c) {
    detail_verify::require_connected(g, "is_proper_connected");
    check_coloring(g, c);
    VerificationReport report;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v) {
            auto path = exists_proper_path(g, c, u, v);
            if (path)
                report.witnesses.push_back({u, v, {std::move(*path)}});
            else {
                report.holds = false;
                report.failures.emplace_back(u, v);
            }
        }
    return report;
}

/// Quick scan used inside search loops: first pair with no proper path,
/// checked farthest-first so a bad coloring fails as early as possible.
inline std::optional<std::pair<int, int>> first_failing_pair(const Graph& g,
                                                             const EdgeColoring& c) {
    detail_verify::require_connected(g, "first_failing_pair");
    for (auto [u, v] : detail_verify::pairs_by_distance_desc(g))
        if (!exists_proper_path(g, c, u, v)) return std::pair<int, int>{u, v};
    return std::nullopt;
}

/// Strong property: every pair has two proper paths P1, P2 with
/// start(P1) != start(P2) and end(P1) != end(P2).  The paths need not be
/// distinct in any other way, but a single path never qualifies, so K_2
/// fails under every coloring.  Exact; per pair the enumeration stops as
/// soon as two suitable paths are seen.
inline VerificationReport has_strong_property(const Graph& g, const EdgeColoring& c) {
    detail_verify::require_connected(g, "has_strong_property");
    check_coloring(g, c);
    VerificationReport report;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v) {
            // One representative path per (start, end) color pair seen so far.
            std::vector<ProperPath> reps;
            std::optional<std::pair<ProperPath, ProperPath>> pair_found;
            detail_paths::visit_proper_paths(
                g, c, u, v, [&](const std::vector<int>& path, int sc, int ec) {
                    for (const auto& r : reps)
                        if (r.start_color == sc && r.end_color == ec) return true;
                    for (const auto& r : reps)
                        if (r.start_color != sc && r.end_color != ec) {
                            pair_found = {r, ProperPath{path, sc, ec}};
                            return false;
                        }
                    reps.push_back(ProperPath{path, sc, ec});
                    return true;
                });
            if (pair_found) {
                report.witnesses.push_back(
                    {u, v, {std::move(pair_found->first), std::move(pair_found->second)}});
            } else {
                report.holds = false;
                report.failures.emplace_back(u, v);
            }
        }
    return report;
}

/// k internally vertex-disjoint proper paths between every pair.  Exact up to
/// the per-pair enumeration cap: paths are streamed in DFS order and reduced
/// to an antichain of minimal internal-vertex sets (any disjoint k-tuple of
/// paths yields one among minimal sets, so nothing is lost).  If the cap is
/// hit before a tuple is found and before the path space is exhausted, the
/// pair is undecided and budget_error is thrown — a distinguished outcome,
/// never reported as "fails".
inline VerificationReport is_k_proper_connected(const Graph& g, const EdgeColoring& c, int k,
                                                std::size_t cap = 1'000'000) {
    if (k < 1) throw precondition_error("is_k_proper_connected: k must be >= 1");
    detail_verify::require_connected(g, "is_k_proper_connected");
    if (!vertex_connectivity_at_least(g, k))
        throw precondition_error("is_k_proper_connected: graph is not " + std::to_string(k) +
                                 "-connected");
    if (k == 1) return is_proper_connected(g, c);
    check_coloring(g, c);

    VerificationReport report;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v) {
            struct Entry {
                std::uint64_t mask; // internal vertices, never empty here
                ProperPath path;
            };
            // Antichain of minimal nonempty internal-vertex sets.  The one
            // path with an empty internal set — the u-v edge itself — is kept
            // aside: it is disjoint from everything, and folding it into the
            // subset reduction would wrongly swallow all other paths.
            std::vector<Entry> antichain;
            std::optional<ProperPath> edge_path;
            std::vector<const Entry*> tuple;
            bool found = false, truncated = false;
            bool edge_in_tuple = false;
            std::size_t seen = 0;
            std::uint64_t ends = (std::uint64_t{1} << u) | (std::uint64_t{1} << v);

            // Pick `want` pairwise-disjoint masks from the antichain.  When
            // `newest` is set, that entry must take part (older combinations
            // were already tried when they appeared).
            auto find_tuple = [&](int want, const Entry* newest) -> bool {
                tuple.clear();
                std::uint64_t used = 0;
                if (newest) {
                    tuple.push_back(newest);
                    used = newest->mask;
                }
                if (static_cast<int>(tuple.size()) >= want) return true;
                auto rec = [&](auto&& self, std::size_t from, std::uint64_t taken) -> bool {
                    if (static_cast<int>(tuple.size()) == want) return true;
                    for (std::size_t i = from; i < antichain.size(); ++i) {
                        if (&antichain[i] == newest || (antichain[i].mask & taken)) continue;
                        tuple.push_back(&antichain[i]);
                        if (self(self, i + 1, taken | antichain[i].mask)) return true;
                        tuple.pop_back();
                    }
                    return false;
                };
                return rec(rec, 0, used);
            };
            auto decided = [&](const Entry* newest) -> bool {
                if (find_tuple(k, newest)) {
                    edge_in_tuple = false;
                    return true;
                }
                if (edge_path && find_tuple(k - 1, newest)) {
                    edge_in_tuple = true;
                    return true;
                }
                return false;
            };

            detail_paths::visit_proper_paths(
                g, c, u, v, [&](const std::vector<int>& path, int sc, int ec) {
                    if (seen == cap) {
                        truncated = true;
                        return false;
                    }
                    ++seen;
                    std::uint64_t mask = 0;
                    for (int w : path) mask |= std::uint64_t{1} << w;
                    mask &= ~ends;
                    if (mask == 0) {
                        edge_path = ProperPath{path, sc, ec};
                        if (decided(nullptr)) {
                            found = true;
                            return false;
                        }
                        return true;
                    }
                    for (const auto& e : antichain)
                        if ((e.mask & ~mask) == 0) return true; // a subset exists
                    std::erase_if(antichain,
                                  [&](const Entry& e) { return (mask & ~e.mask) == 0; });
                    antichain.push_back({mask, ProperPath{path, sc, ec}});
                    if (decided(&antichain.back())) {
                        found = true;
                        return false;
                    }
                    return true;
                });

            if (found) {
                PairWitness w{u, v, {}};
                for (const Entry* e : tuple) w.paths.push_back(e->path);
                if (edge_in_tuple) w.paths.push_back(*edge_path);
                report.witnesses.push_back(std::move(w));
            } else if (truncated) {
                throw budget_error("is_k_proper_connected: enumeration cap " +
                                   std::to_string(cap) + " hit on pair (" + std::to_string(u) +
                                   ", " + std::to_string(v) + ") before a decision");
            } else {
                report.holds = false;
                report.failures.emplace_back(u, v);
            }
        }
    return report;
}

} // namespace pcon
