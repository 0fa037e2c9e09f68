#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "distideal/atlas.hpp"
#include "distideal/atlas_scan.hpp"
#include "distideal/conformance.hpp"
#include "distideal/distance_ideals.hpp"
#include "distideal/graph.hpp"
#include "distideal/int_matrix.hpp"
#include "distideal/parallel.hpp"

using namespace distideal;
using nlohmann::json;

namespace {

struct Globals {
    unsigned jobs = 1;
    std::string json_path;
    std::uint64_t seed = TrivialityOptions{}.seed;
    std::size_t budget = GroebnerOptions{}.budget;
};

std::vector<Graph> read_graphs(const std::string& path) {
    std::ostringstream text;
    if (path == "-") {
        text << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot open " + path);
        text << in.rdbuf();
    }
    auto graphs = parse_graph_file(text.str());
    if (graphs.empty()) throw std::runtime_error("no graphs in " + path);
    return graphs;
}

TrivialityOptions triviality(const Globals& g, bool rational = false) {
    TrivialityOptions t;
    t.seed = g.seed;
    t.groebner.budget = g.budget;
    if (rational) t.domain = CoefficientDomain::Rationals;
    return t;
}

// Computes one JSON record per graph (in parallel), prints them as JSON lines
// in input order (or sorted by graph6) and collects them for --json.
template <class Fn>
json per_graph(const std::vector<Graph>& graphs, const Globals& g, Fn&& fn, bool sort_by_graph = false) {
    std::vector<json> rows(graphs.size());
    parallel_for(graphs.size(), g.jobs, [&](std::size_t k) { rows[k] = fn(graphs[k]); });
    if (sort_by_graph) {
        std::stable_sort(rows.begin(), rows.end(), [](const json& a, const json& b) {
            return a.at("graph").get<std::string>() < b.at("graph").get<std::string>();
        });
    }
    json all = json::array();
    for (auto& r : rows) {
        std::cout << r.dump() << '\n';
        all.push_back(std::move(r));
    }
    return all;
}

void write_json(const Globals& g, const json& j) {
    if (g.json_path.empty()) return;
    std::ofstream out(g.json_path);
    if (!out) throw std::runtime_error("cannot write " + g.json_path);
    out << j.dump(2) << '\n';
}

json integers(const std::vector<Integer>& v) {
    json a = json::array();
    for (const auto& x : v) {
        if (x.fits_slong_p())
            a.push_back(x.get_si());
        else
            a.push_back(x.get_str());
    }
    return a;
}

int cmd_snf(const std::string& file, const Globals& g) {
    auto graphs = read_graphs(file);
    json rows = per_graph(graphs, g, [](const Graph& gr) {
        SnfResult s = snf(distance_matrix(gr));
        int ones = 0;
        for (const auto& f : s.invariant_factors) ones += (f == 1);
        return json{{"graph", emit_graph6(gr)},
                    {"invariant_factors", integers(s.invariant_factors)},
                    {"rank", s.rank()},
                    {"phi_snf", ones}};
    });
    std::cerr << "snf: " << graphs.size() << " graph(s)\n";
    write_json(g, rows);
    return 0;
}

int cmd_phi(const std::string& file, bool rational, const Globals& g) {
    auto graphs = read_graphs(file);
    const TrivialityOptions opts = triviality(g, rational);
    std::size_t open = 0;
    json rows = per_graph(graphs, g, [&](const Graph& gr) {
        PhiResult r = rational ? phi_over_rationals(gr, opts) : phi_trivial_count(gr, opts);
        json j = phi_json(gr, r);
        j["domain"] = rational ? "rationals" : "integers";
        return j;
    });
    for (const auto& r : rows) open += (r.value("status", "complete") != "complete");
    std::cerr << "phi: " << graphs.size() << " graph(s), " << open << " inconclusive\n";
    write_json(g, rows);
    return open ? 2 : 0;
}

int cmd_ideal(const std::string& file, std::size_t i, bool rational, const Globals& g) {
    auto graphs = read_graphs(file);
    const TrivialityOptions opts = triviality(g, rational);
    json rows = per_graph(graphs, g, [&](const Graph& gr) {
        return verdict_json(gr, i, ideal_triviality(gr, i, opts));
    });
    std::size_t open = 0;
    for (const auto& r : rows) open += (r["decision"] == "inconclusive");
    std::cerr << "ideal: " << graphs.size() << " graph(s), i = " << i << ", " << open << " inconclusive\n";
    write_json(g, rows);
    return open ? 2 : 0;
}

int cmd_scan(const std::string& file, const std::string& family, const Globals& g) {
    auto graphs = read_graphs(file);
    const Family f = parse_family(family);
    const TrivialityOptions opts = triviality(g);
    json rows = per_graph(
        graphs, g,
        [&](const Graph& gr) { return scan_json(is_connected(gr) ? full_scan(gr, f, opts) : forbidden_scan(gr, f)); },
        true);
    std::size_t hits = 0, open = 0;
    std::map<std::string, std::size_t> phi_counts;
    for (const auto& r : rows) {
        hits += !r.at("atlas_hits").empty() || !r.at("odd_hole").is_null();
        if (r.value("status", "complete") != "complete") ++open;
        if (r.contains("phi_ideals")) ++phi_counts[std::to_string(r.at("phi_ideals").get<int>())];
    }
    json summary = {{"summary", true},
                    {"graphs", graphs.size()},
                    {"family", family},
                    {"with_hit", hits},
                    {"inconclusive", open},
                    {"phi_counts", phi_counts}};
    std::cout << summary.dump() << '\n';
    write_json(g, json{{"reports", rows}, {"summary", summary}});
    return 0;
}

int cmd_enumerate(int n, bool trees, const Globals& g) {
    const auto graphs = trees ? enumerate_trees(n) : enumerate_connected_graphs(n);
    json all = json::array();
    for (const auto& gr : graphs) {
        const std::string code = emit_graph6(gr);
        std::cout << code << '\n';
        all.push_back(code);
    }
    std::cerr << "enumerate: " << graphs.size() << (trees ? " tree(s)" : " connected graph(s)") << " on " << n
              << " vertices\n";
    write_json(g, json{{"n", n}, {"trees", trees}, {"count", graphs.size()}, {"graphs", all}});
    return 0;
}

int cmd_atlas(bool emit_graph6_only, const Globals& g) {
    json rows = json::array();
    for (const auto& e : atlas_entries()) {
        if (emit_graph6_only) {
            std::cout << emit_graph6(e.graph) << '\n';
            rows.push_back({{"name", e.name}, {"graph", emit_graph6(e.graph)}});
            continue;
        }
        PhiResult r = phi_trivial_count(e.graph, triviality(g));
        json j = {{"name", e.name},
                  {"graph", emit_graph6(e.graph)},
                  {"n", e.graph.order()},
                  {"edges", e.graph.size()},
                  {"diameter", diameter(e.graph)},
                  {"phi", r.phi_ideals},
                  {"phi_snf", r.phi_snf},
                  {"complete", r.complete()}};
        std::cout << j.dump() << '\n';
        rows.push_back(std::move(j));
    }
    write_json(g, rows);
    return 0;
}

void print_report(const LemmaReport& r) {
    std::size_t failed = 0, open = 0;
    for (const auto& c : r.checks) {
        failed += !c.pass && !c.inconclusive;
        open += c.inconclusive;
    }
    std::printf("%-22s %s  %zu checks, %zu failed, %zu inconclusive  %.1f ms\n", r.id.c_str(),
                r.pass ? "PASS" : "FAIL", r.checks.size(), failed, open, r.elapsed_ms);
    for (const auto& c : r.checks) {
        if (c.pass) continue;
        std::printf("    %s [%s] %s\n      expected: %s\n      computed: %s\n", c.inconclusive ? "OPEN" : "FAIL",
                    to_string(c.source).c_str(), c.description.c_str(), c.expected.c_str(), c.computed.c_str());
    }
}

int cmd_verify(const std::string& lemma, int corpus_n, const Globals& g) {
    HarnessOptions opts;
    opts.groebner.budget = g.budget;
    opts.seed = g.seed;
    opts.jobs = g.jobs;
    opts.corpus_n_max = corpus_n;
    if (!lemma.empty()) {
        LemmaReport r = run_lemma(lemma, opts);
        print_report(r);
        write_json(g, report_json(r));
        return r.pass ? 0 : 1;
    }
    ConformanceReport r = run_all(opts);
    std::size_t passed = 0;
    for (const auto& l : r.lemmas) {
        print_report(l);
        passed += l.pass;
    }
    std::printf("%zu/%zu reports pass  %.1f ms\n", passed, r.lemmas.size(), r.elapsed_ms);
    write_json(g, report_json(r));
    return r.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Distance ideals of graphs: Smith normal forms, trivial ideal counts and forbidden subgraphs"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--jobs", g.jobs, "Worker threads")->check(CLI::Range(1u, 256u));
    app.add_option("--json", g.json_path, "Write the full report as JSON to this path");
    app.add_option("--seed", g.seed, "Seed for pseudorandom evaluation points");

    std::string file;
    auto* snf_cmd = app.add_subcommand("snf", "Invariant factors of the distance matrix");
    snf_cmd->add_option("file", file, "graph6 or edge-list file ('-' for stdin)")->required();

    bool rational = false;
    auto* phi_cmd = app.add_subcommand("phi", "Number of trivial distance ideals");
    phi_cmd->add_option("file", file, "graph6 or edge-list file ('-' for stdin)")->required();
    phi_cmd->add_flag("--rational", rational, "Work over the rationals");
    phi_cmd->add_option("--budget", g.budget, "Groebner reduction budget");

    std::size_t index = 1;
    auto* ideal_cmd = app.add_subcommand("ideal", "Decide triviality of one distance ideal");
    ideal_cmd->add_option("file", file, "graph6 or edge-list file ('-' for stdin)")->required();
    ideal_cmd->add_option("--i", index, "Minor size")->required()->check(CLI::PositiveNumber);
    ideal_cmd->add_flag("--rational", rational, "Work over the rationals");
    ideal_cmd->add_option("--budget", g.budget, "Groebner reduction budget");

    std::string family = "F";
    auto* scan_cmd = app.add_subcommand("scan", "Induced forbidden subgraphs, odd holes and Phi");
    scan_cmd->add_option("file", file, "graph6 or edge-list file ('-' for stdin)")->required();
    scan_cmd->add_option("--family", family, "F, lambda1, lambda1R or all")
        ->check(CLI::IsMember({"F", "lambda1", "lambda1R", "all"}));
    scan_cmd->add_option("--budget", g.budget, "Groebner reduction budget");

    int n = 0;
    bool trees = false;
    auto* enum_cmd = app.add_subcommand("enumerate", "Connected graphs on n vertices as graph6");
    enum_cmd->add_option("--n", n, "Number of vertices")->required()->check(CLI::PositiveNumber);
    enum_cmd->add_flag("--trees", trees, "Free trees instead (n <= 16)");

    std::string lemma;
    int corpus_n = HarnessOptions{}.corpus_n_max;
    auto* verify_cmd = app.add_subcommand("verify-paper", "Run the conformance checks");
    verify_cmd->add_option("--lemma", lemma, "Run one report only");
    verify_cmd->add_option("--budget", g.budget, "Groebner reduction budget");
    verify_cmd->add_option("--corpus-n", corpus_n, "Corpus size for the theorem check")->check(CLI::Range(1, 8));

    bool emit = false;
    auto* atlas_cmd = app.add_subcommand("atlas", "Named graphs with their Phi values");
    atlas_cmd->add_flag("--emit-graph6", emit, "Print graph6 codes only");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*snf_cmd) return cmd_snf(file, g);
        if (*phi_cmd) return cmd_phi(file, rational, g);
        if (*ideal_cmd) return cmd_ideal(file, index, rational, g);
        if (*scan_cmd) return cmd_scan(file, family, g);
        if (*enum_cmd) return cmd_enumerate(n, trees, g);
        if (*verify_cmd) return cmd_verify(lemma, corpus_n, g);
        if (*atlas_cmd) return cmd_atlas(emit, g);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
    return 0;
}
