// pcon — command-line front end for the proper-connection library.
//
//   pcon pc      <graph>              exact pc with a witness coloring
//   pcon pck     <graph> --k 2        exact pc_k (answers "undefined" below k-connectivity)
//   pcon verify  <graph> --coloring F check a coloring, report witness paths
//   pcon color   <graph> --theorem T  run one of the constructive colorings
//   pcon gen     --family TAG         emit a named family member as graph6
//   pcon sweep   --suite NAME         run the validation suites
//
// Exit codes: 0 success (for verify: the property holds), 1 verify answered
// "does not hold", 2 bad arguments or unreadable input, 3 precondition not
// met, 4 search budget exceeded, 5 a construction failed its own
// re-verification (a defect, never an answer).
//
// Output is deterministic: no timestamps or timings, fixed key order in
// --json mode, and seeded generators, so identical invocations produce
// byte-identical output.

#include "pcon/graph.hpp"
#include "pcon/graph6.hpp"
#include "pcon/coloring.hpp"
#include "pcon/errors.hpp"
#include "pcon/verify.hpp"
#include "pcon/exact.hpp"
#include "pcon/construct.hpp"
#include "pcon/construct_pc2.hpp"
#include "pcon/construct_dense.hpp"
#include "pcon/families.hpp"
#include "pcon/sweeps.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

using nlohmann::ordered_json;

namespace {

// ---------------------------------------------------------------- inputs --

std::string slurp(std::istream& in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw pcon::parse_error("cannot open " + path);
    return slurp(in);
}

// A graph argument is either a file path ("-" for stdin) or a family spec.
// File contents are sniffed: a first data line with two or more fields is an
// edge list ("n m" header), a single field is a graph6 token.
struct GraphArg {
    std::string file;
    std::string family;
    std::string params;
};

std::vector<std::string> data_lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#') continue;
        out.push_back(line.substr(pos));
    }
    return out;
}

pcon::Graph parse_graph_text(const std::string& text, const std::string& origin) {
    auto lines = data_lines(text);
    if (lines.empty()) throw pcon::parse_error(origin + ": empty input");
    std::istringstream first(lines.front());
    std::string tok1, tok2;
    first >> tok1;
    if (first >> tok2) return pcon::parse_edge_list(text);
    if (lines.size() > 1)
        throw pcon::parse_error(origin + ": several graph6 lines; pass one graph per invocation");
    // strip a trailing CR or stray spaces the line splitter kept
    while (!tok1.empty() && (tok1.back() == '\r' || tok1.back() == ' ')) tok1.pop_back();
    return pcon::parse_graph6(tok1);
}

// "--params k=v,k=v"; values are integers (seeds may exceed 2^31).
std::map<std::string, long long> parse_params(const std::string& spec) {
    std::map<std::string, long long> kv;
    std::string item;
    std::istringstream in(spec);
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw pcon::parse_error("--params entries look like key=value, got '" + item + "'");
        std::string key = item.substr(0, eq);
        try {
            kv[key] = std::stoll(item.substr(eq + 1));
        } catch (const std::exception&) {
            throw pcon::parse_error("--params value for '" + key + "' is not an integer");
        }
    }
    return kv;
}

long long need(const std::map<std::string, long long>& kv, const std::string& key,
               const std::string& family) {
    auto it = kv.find(key);
    if (it == kv.end())
        throw pcon::parse_error("family '" + family + "' needs --params " + key + "=...");
    return it->second;
}

long long maybe(const std::map<std::string, long long>& kv, const std::string& key,
                long long fallback) {
    auto it = kv.find(key);
    return it == kv.end() ? fallback : it->second;
}

pcon::Graph build_family(std::string tag, const std::string& params) {
    for (auto& ch : tag)
        if (ch == '-') ch = '_';
    auto kv = parse_params(params);
    auto geti = [&](const std::string& key) { return static_cast<int>(need(kv, key, tag)); };
    auto seed = [&] { return static_cast<std::uint64_t>(maybe(kv, "seed", 1)); };
    if (tag == "star") return pcon::gen_star(geti("leaves"));
    if (tag == "path") return pcon::path_graph(geti("n"));
    if (tag == "cycle") return pcon::cycle_graph(geti("n"));
    if (tag == "complete") return pcon::complete_graph(geti("n"));
    if (tag == "cycle_chord") return pcon::gen_cycle_chord(geti("n"));
    if (tag == "srt") return pcon::gen_srt(geti("r"), geti("t"));
    if (tag == "gk") return pcon::gen_gk(geti("n"), geti("k"));
    if (tag == "k1_join_2kk") return pcon::gen_k1_join_2kk(geti("k"));
    if (tag == "complete_minus_matching")
        return pcon::gen_complete_minus_matching(geti("n"), geti("pairs"));
    if (tag == "random_min_degree")
        return pcon::gen_random_min_degree(geti("n"), geti("d"), seed());
    if (tag == "random_edge_count")
        return pcon::gen_random_edge_count(geti("n"), geti("m"), seed());
    if (tag == "random_ore") return pcon::gen_random_ore(geti("n"), seed());
    throw pcon::parse_error(
        "unknown family '" + tag +
        "' (star path cycle complete cycle-chord srt gk k1-join-2kk "
        "complete-minus-matching random-min-degree random-edge-count random-ore)");
}

pcon::Graph load_graph(const GraphArg& arg) {
    bool has_file = !arg.file.empty();
    bool has_family = !arg.family.empty();
    if (has_file && has_family)
        throw pcon::parse_error("give either an input file or --family, not both");
    if (has_family) return build_family(arg.family, arg.params);
    if (!has_file) throw pcon::parse_error("no input graph: pass a file, '-' for stdin, or --family");
    if (arg.file == "-") return parse_graph_text(slurp(std::cin), "stdin");
    return parse_graph_text(read_text_file(arg.file), arg.file);
}

// --------------------------------------------------------- coloring files --

// First line "m k", then one color (1..k) per edge line, edge ids in input
// order.  k is the declared palette and may exceed the largest color used.
pcon::EdgeColoring read_coloring_file(const std::string& path, const pcon::Graph& g) {
    std::ifstream in(path);
    if (!in) throw pcon::parse_error("cannot open " + path);
    long long m = -1, k = -1;
    if (!(in >> m >> k)) throw pcon::parse_error(path + ": expected header 'm k'");
    if (m != g.m())
        throw pcon::parse_error(path + ": header says " + std::to_string(m) + " edges, graph has " +
                                std::to_string(g.m()));
    if (k < 1) throw pcon::parse_error(path + ": declared palette must be at least 1");
    std::vector<int> colors(static_cast<std::size_t>(m));
    for (long long e = 0; e < m; ++e) {
        if (!(in >> colors[static_cast<std::size_t>(e)]))
            throw pcon::parse_error(path + ": fewer colors than edges");
        int c = colors[static_cast<std::size_t>(e)];
        if (c < 1 || c > k)
            throw pcon::parse_error(path + ": color " + std::to_string(c) + " outside 1.." +
                                    std::to_string(k));
    }
    auto coloring = pcon::make_coloring(g, colors);
    coloring.k = static_cast<int>(k);
    return coloring;
}

void write_coloring_file(const std::string& path, const pcon::EdgeColoring& c) {
    std::ofstream out(path);
    if (!out) throw pcon::parse_error("cannot write " + path);
    out << c.colors.size() << ' ' << c.k << '\n';
    for (int color : c.colors) out << color << '\n';
}

// ---------------------------------------------------------------- output --

ordered_json coloring_json(const pcon::Graph& g, const pcon::EdgeColoring& c) {
    ordered_json edges = ordered_json::array();
    for (int e = 0; e < g.m(); ++e) {
        auto [u, v] = g.edge(e);
        edges.push_back({{"u", u}, {"v", v}, {"color", c.colors[static_cast<std::size_t>(e)]}});
    }
    return edges;
}

ordered_json path_json(const pcon::ProperPath& p) {
    return ordered_json{{"vertices", p.vertices},
                        {"start_color", p.start_color},
                        {"end_color", p.end_color}};
}

std::string path_line(const pcon::ProperPath& p) {
    std::string s;
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(p.vertices[i]);
    }
    return s;
}

void print_report_text(const pcon::Graph& g, const pcon::VerificationReport& rep,
                       const std::string& mode, bool show_witnesses) {
    std::cout << "mode: " << mode << '\n';
    std::cout << "pairs: " << static_cast<long long>(g.n()) * (g.n() - 1) / 2 << '\n';
    std::cout << "verdict: " << (rep.holds ? "holds" : "does not hold") << '\n';
    for (auto [u, v] : rep.failures) std::cout << "failing pair: " << u << ' ' << v << '\n';
    if (show_witnesses)
        for (const auto& w : rep.witnesses) {
            std::cout << "pair " << w.u << ' ' << w.v << ":\n";
            for (const auto& p : w.paths)
                std::cout << "  path: " << path_line(p) << "  (ends " << p.start_color << ' '
                          << p.end_color << ")\n";
        }
}

ordered_json report_json(const pcon::Graph& g, const pcon::VerificationReport& rep,
                         const std::string& mode) {
    ordered_json failures = ordered_json::array();
    for (auto [u, v] : rep.failures) failures.push_back({{"u", u}, {"v", v}});
    ordered_json witnesses = ordered_json::array();
    for (const auto& w : rep.witnesses) {
        ordered_json paths = ordered_json::array();
        for (const auto& p : w.paths) paths.push_back(path_json(p));
        witnesses.push_back({{"u", w.u}, {"v", w.v}, {"paths", paths}});
    }
    return ordered_json{{"mode", mode},
                        {"pairs", static_cast<long long>(g.n()) * (g.n() - 1) / 2},
                        {"holds", rep.holds},
                        {"failures", failures},
                        {"witnesses", witnesses}};
}

void emit(const ordered_json& doc, bool json_mode) {
    if (json_mode) std::cout << doc.dump(2) << '\n';
}

// ------------------------------------------------------------- commands ---

std::uint64_t default_budget() {
    if (const char* env = std::getenv("PCON_BUDGET")) {
        try {
            return static_cast<std::uint64_t>(std::stoull(env));
        } catch (const std::exception&) {
            throw pcon::parse_error("PCON_BUDGET is not an unsigned integer");
        }
    }
    return 0; // 0 = library default
}

pcon::SolveBudget solve_budget(std::uint64_t flag_value) {
    pcon::SolveBudget b;
    std::uint64_t v = flag_value ? flag_value : default_budget();
    if (v) b.max_colorings = v;
    return b;
}

int run_pc(const GraphArg& in, std::uint64_t budget, const std::string& out, bool json_mode) {
    auto g = load_graph(in);
    auto res = pcon::pc_exact(g, solve_budget(budget));
    write_coloring_file(out, res.witness);
    if (json_mode)
        emit(ordered_json{{"command", "pc"},
                          {"n", g.n()},
                          {"m", g.m()},
                          {"pc", res.value},
                          {"colorings_examined", res.colorings_examined},
                          {"witness_file", out},
                          {"coloring", coloring_json(g, res.witness)}},
             true);
    else {
        std::cout << "pc = " << res.value << '\n';
        std::cout << "witness coloring written to " << out << '\n';
    }
    return 0;
}

int run_pck(const GraphArg& in, int k, std::uint64_t budget, const std::string& out,
            bool json_mode) {
    if (k < 1) throw pcon::parse_error("--k must be at least 1");
    auto g = load_graph(in);
    if (!pcon::vertex_connectivity_at_least(g, k)) {
        // a real answer, not an error: pc_k is only defined on k-connected graphs
        if (json_mode)
            emit(ordered_json{{"command", "pck"},
                              {"k", k},
                              {"n", g.n()},
                              {"m", g.m()},
                              {"pc_k", nullptr},
                              {"reason", "not " + std::to_string(k) + "-connected"}},
                 true);
        else
            std::cout << "undefined: not " << k << "-connected\n";
        return 0;
    }
    auto res = pcon::pc_k_exact(g, k, solve_budget(budget));
    write_coloring_file(out, res.witness);
    if (json_mode)
        emit(ordered_json{{"command", "pck"},
                          {"k", k},
                          {"n", g.n()},
                          {"m", g.m()},
                          {"pc_k", res.value},
                          {"colorings_examined", res.colorings_examined},
                          {"witness_file", out},
                          {"coloring", coloring_json(g, res.witness)}},
             true);
    else {
        std::cout << "pc_" << k << " = " << res.value << '\n';
        std::cout << "witness coloring written to " << out << '\n';
    }
    return 0;
}

int run_verify(const GraphArg& in, const std::string& coloring_file, int k, bool strong,
               bool show_witnesses, bool json_mode) {
    auto g = load_graph(in);
    auto c = read_coloring_file(coloring_file, g);
    pcon::VerificationReport rep;
    std::string mode;
    if (strong) {
        rep = pcon::has_strong_property(g, c);
        mode = "strong";
    } else if (k > 1) {
        rep = pcon::is_k_proper_connected(g, c, k);
        mode = std::to_string(k) + "-proper-connected";
    } else {
        rep = pcon::is_proper_connected(g, c);
        mode = "proper-connected";
    }
    if (json_mode)
        emit(report_json(g, rep, mode), true);
    else
        print_report_text(g, rep, mode, show_witnesses);
    return rep.holds ? 0 : 1;
}

struct Construction {
    pcon::Graph graph;        // the input, or the graph the method built itself
    pcon::EdgeColoring coloring;
    std::string method;       // one-line description of the strategy
    std::string check;        // which property gets re-verified
    int verify_k = 1;         // 1 = plain proper connectivity
    bool verify_strong = false;
};

Construction run_theorem(const std::string& tag, const GraphArg& in, const std::string& params,
                         bool fallback_exact) {
    auto want_graph = [&] { return load_graph(in); };
    try {
        if (tag == "tree") {
            auto g = want_graph();
            return {g, pcon::color_tree(g), "distinct colors around each vertex of a tree",
                    "proper-connected", 1, false};
        }
        if (tag == "cycle-chord") {
            auto kv = parse_params(params.empty() ? in.params : params);
            int n = static_cast<int>(need(kv, "n", "cycle-chord"));
            auto [g, c] = pcon::color_cycle_chord(n);
            return {g, c, "two-color alternation around a chorded cycle",
                    "2-proper-connected", 2, false};
        }
        if (tag == "bridgeless") {
            auto g = want_graph();
            auto sc = pcon::color_bridgeless(g);
            return {g, sc.coloring, "per-block strong colorings stitched at cut vertices",
                    "proper-connected + strong pair property", 1, true};
        }
        if (tag == "general") {
            auto g = want_graph();
            return {g, pcon::color_general(g),
                    "block strong colorings plus distinct colors along bridges",
                    "proper-connected", 1, false};
        }
        if (tag == "dirac-pc2") {
            auto g = want_graph();
            return {g, pcon::color_dirac_pc2(g),
                    "alternating Hamiltonian cycle; odd orders route around one chord",
                    "2-proper-connected", 2, false};
        }
        if (tag == "ore-pc2") {
            auto g = want_graph();
            return {g, pcon::color_ore_pc2(g),
                    "Hamiltonian or near-Hamiltonian cycle with recolored chords",
                    "2-proper-connected", 2, false};
        }
        if (tag == "dense2") {
            auto g = want_graph();
            return {g, pcon::color_dense_two(g),
                    "checkerboard on a spanning 2-connected bipartite subgraph",
                    "proper-connected", 1, false};
        }
        if (tag == "dense3") {
            auto g = want_graph();
            return {g, pcon::color_dense_three(g),
                    "bridgeless / pendant / bridge split over the two-color pipeline",
                    "proper-connected", 1, false};
        }
    } catch (const pcon::precondition_error&) {
        if (!fallback_exact) throw;
        auto g = load_graph(in);
        if (g.n() > 12)
            throw pcon::precondition_error(
                "construction preconditions not met and the graph is too large "
                "for the exact fallback (n > 12)");
        auto res = pcon::pc_exact(g);
        return {g, res.witness, "exact search fallback (construction preconditions not met)",
                "proper-connected", 1, false};
    }
    throw pcon::parse_error("unknown --theorem '" + tag +
                            "' (tree bridgeless general cycle-chord dirac-pc2 "
                            "ore-pc2 dense2 dense3)");
}

int run_color(const std::string& tag, const GraphArg& in, const std::string& params,
              bool fallback_exact, std::string out, const std::string& graph_out,
              bool json_mode) {
    auto built = run_theorem(tag, in, params, fallback_exact);
    bool self_built = (tag == "cycle-chord");

    // Coloring files index colors by edge id, and a graph read back from
    // graph6 numbers its edges in adjacency-matrix scan order — not in the
    // order a construction inserted them.  Whenever this command emits a
    // graph file, renumber the coloring to match what a later parse of that
    // file will produce, so the two artifacts agree.
    if (self_built || !graph_out.empty()) {
        pcon::Graph round = pcon::parse_graph6(pcon::encode_graph6(built.graph));
        std::vector<int> remapped(static_cast<std::size_t>(round.m()));
        for (int e = 0; e < round.m(); ++e) {
            auto [u, v] = round.edge(e);
            remapped[static_cast<std::size_t>(e)] =
                built.coloring.colors[static_cast<std::size_t>(built.graph.edge_id(u, v))];
        }
        int declared = built.coloring.k;
        built.coloring = pcon::make_coloring(round, remapped);
        built.coloring.k = declared;
        built.graph = std::move(round);
    }
    const auto& g = built.graph;
    const auto& c = built.coloring;

    // Every emitted coloring is re-checked before it is reported; a failure
    // here is a defect in the construction, never a user error.
    pcon::VerificationReport rep = built.verify_k >= 2
                                       ? pcon::is_k_proper_connected(g, c, built.verify_k)
                                       : pcon::is_proper_connected(g, c);
    bool strong_ok = true;
    if (built.verify_strong) strong_ok = pcon::has_strong_property(g, c).holds;
    if (!rep.holds || !strong_ok)
        throw pcon::defect_error("construction '" + tag + "' failed re-verification");

    if (out.empty()) {
        out = tag + ".coloring";
        for (auto& ch : out)
            if (ch == '-') ch = '_';
    }
    write_coloring_file(out, c);
    if (!graph_out.empty()) {
        std::ofstream gfile(graph_out);
        if (!gfile) throw pcon::parse_error("cannot write " + graph_out);
        gfile << pcon::encode_graph6(g) << '\n';
    }

    if (json_mode) {
        ordered_json doc{{"command", "color"},
                         {"theorem", tag},
                         {"method", built.method},
                         {"n", g.n()},
                         {"m", g.m()},
                         {"palette", c.k},
                         {"verified", built.check},
                         {"coloring_file", out},
                         {"coloring", coloring_json(g, c)}};
        if (self_built || !graph_out.empty()) doc["graph6"] = pcon::encode_graph6(g);
        emit(doc, true);
    } else {
        std::cout << "method: " << built.method << '\n';
        std::cout << "graph: n=" << g.n() << " m=" << g.m() << '\n';
        std::cout << "palette: " << c.k << '\n';
        std::cout << "verified: " << built.check << '\n';
        if (self_built) std::cout << "graph6: " << pcon::encode_graph6(g) << '\n';
        std::cout << "coloring written to " << out << '\n';
    }
    return 0;
}

int run_gen(const std::string& family, const std::string& params, const std::string& out,
            bool json_mode) {
    auto g = build_family(family, params);
    std::string line = pcon::encode_graph6(g);
    if (!out.empty()) {
        std::ofstream file(out);
        if (!file) throw pcon::parse_error("cannot write " + out);
        file << line << '\n';
    }
    if (json_mode)
        emit(ordered_json{{"command", "gen"},
                          {"family", family},
                          {"n", g.n()},
                          {"m", g.m()},
                          {"graph6", line}},
             true);
    else
        std::cout << line << '\n';
    return 0;
}

int run_sweep(const std::string& suite, const std::string& data_dir, bool list_only,
              bool json_mode) {
    if (list_only) {
        if (json_mode) {
            emit(ordered_json{{"command", "sweep"}, {"suites", pcon::suite_names()}}, true);
        } else {
            for (const auto& name : pcon::suite_names()) std::cout << name << '\n';
        }
        return 0;
    }
    auto results = pcon::run_suites(suite, data_dir);
    bool all_pass = true;
    if (json_mode) {
        ordered_json rows = ordered_json::array();
        for (const auto& r : results) {
            rows.push_back({{"suite", r.name}, {"pass", r.pass}, {"detail", r.detail}});
            all_pass = all_pass && r.pass;
        }
        emit(ordered_json{{"command", "sweep"}, {"results", rows}, {"all_pass", all_pass}}, true);
    } else {
        for (const auto& r : results) {
            std::printf("%-18s %s  %s\n", r.name.c_str(), r.pass ? "PASS" : "FAIL",
                        r.detail.c_str());
            all_pass = all_pass && r.pass;
        }
        std::cout << (all_pass ? "all suites passed" : "SUITE FAILURES PRESENT") << '\n';
    }
    return all_pass ? 0 : 5;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"proper-connection colorings: solve, construct, verify, generate, sweep"};
    app.require_subcommand(1);
    bool json_mode = false;
    app.add_flag("--json", json_mode, "machine-readable output with a fixed key order");

    GraphArg in_pc, in_pck, in_verify, in_color;
    auto add_graph_arg = [](CLI::App* cmd, GraphArg& arg) {
        cmd->add_option("graph", arg.file, "graph file (edge list or graph6), '-' for stdin");
        cmd->add_option("--family", arg.family, "build the input from a family tag instead");
        cmd->add_option("--params", arg.params, "family parameters, key=value comma-separated");
    };

    auto* pc_cmd = app.add_subcommand("pc", "exact proper connection number with witness");
    std::uint64_t pc_budget = 0;
    std::string pc_out = "witness.coloring";
    add_graph_arg(pc_cmd, in_pc);
    pc_cmd->add_option("--budget", pc_budget, "max colorings to examine (default PCON_BUDGET)");
    pc_cmd->add_option("--out", pc_out, "witness coloring file");

    auto* pck_cmd = app.add_subcommand("pck", "exact pc_k for k internally disjoint paths");
    int pck_k = 2;
    std::uint64_t pck_budget = 0;
    std::string pck_out = "witness.coloring";
    add_graph_arg(pck_cmd, in_pck);
    pck_cmd->add_option("--k", pck_k, "number of internally disjoint proper paths (default 2)");
    pck_cmd->add_option("--budget", pck_budget, "max colorings to examine (default PCON_BUDGET)");
    pck_cmd->add_option("--out", pck_out, "witness coloring file");

    auto* verify_cmd = app.add_subcommand("verify", "check a coloring against a graph");
    std::string verify_coloring;
    int verify_k = 1;
    bool verify_strong = false, verify_witnesses = false;
    add_graph_arg(verify_cmd, in_verify);
    verify_cmd->add_option("--coloring", verify_coloring, "coloring file to check")->required();
    auto* vk = verify_cmd->add_option("--k", verify_k, "require k internally disjoint paths per pair");
    auto* vs = verify_cmd->add_flag("--strong", verify_strong,
                                    "require distinct start colors and distinct end colors per pair");
    vk->excludes(vs);
    vs->excludes(vk);
    verify_cmd->add_flag("--witnesses", verify_witnesses, "print a witness path per pair");

    auto* color_cmd = app.add_subcommand("color", "run a constructive coloring");
    std::string color_theorem, color_params, color_out, color_graph_out;
    bool color_fallback = false;
    add_graph_arg(color_cmd, in_color);
    color_cmd->add_option("--theorem", color_theorem, "construction to run")->required();
    color_cmd->add_option("--theorem-params", color_params,
                          "parameters for constructions that build their own graph");
    color_cmd->add_flag("--fallback-exact", color_fallback,
                        "on precondition failure, fall back to exact search (n <= 12)");
    color_cmd->add_option("--out", color_out, "coloring file (default <theorem>.coloring)");
    color_cmd->add_option("--graph-out", color_graph_out, "also write the graph as graph6");

    auto* gen_cmd = app.add_subcommand("gen", "emit a family member as graph6");
    std::string gen_family, gen_params, gen_out;
    gen_cmd->add_option("--family", gen_family, "family tag")->required();
    gen_cmd->add_option("--params", gen_params, "family parameters, key=value comma-separated");
    gen_cmd->add_option("--out", gen_out, "also write the graph6 line to a file");

    auto* sweep_cmd = app.add_subcommand("sweep", "run validation suites");
    std::string sweep_suite = "all", sweep_data = "tests/data";
    bool sweep_list = false;
    sweep_cmd->add_option("--suite", sweep_suite, "suite name or 'all'");
    sweep_cmd->add_option("--data", sweep_data, "corpus directory (default tests/data)");
    sweep_cmd->add_flag("--list", sweep_list, "list suite names and exit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (pc_cmd->parsed()) return run_pc(in_pc, pc_budget, pc_out, json_mode);
        if (pck_cmd->parsed()) return run_pck(in_pck, pck_k, pck_budget, pck_out, json_mode);
        if (verify_cmd->parsed())
            return run_verify(in_verify, verify_coloring, verify_k, verify_strong,
                              verify_witnesses, json_mode);
        if (color_cmd->parsed())
            return run_color(color_theorem, in_color, color_params, color_fallback, color_out,
                             color_graph_out, json_mode);
        if (gen_cmd->parsed()) return run_gen(gen_family, gen_params, gen_out, json_mode);
        if (sweep_cmd->parsed()) return run_sweep(sweep_suite, sweep_data, sweep_list, json_mode);
    } catch (const pcon::parse_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const pcon::precondition_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const pcon::budget_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const pcon::defect_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 5;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
