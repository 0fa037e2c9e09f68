#include "distideal/atlas_scan.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "distideal/atlas.hpp"
#include "distideal/parallel.hpp"

namespace distideal {

std::uint64_t adjacency_code(const Graph& g, std::span<const int> perm) {
    const int n = g.order();
    std::uint64_t code = 0;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) code = (code << 1) | (g.adjacent(perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)]) ? 1U : 0U);
    return code;
}

Graph graph_from_code(int n, std::uint64_t code) {
    Graph g(n);
    int bit = n * (n - 1) / 2;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if ((code >> --bit) & 1U) g.add_edge(a, b);
    return g;
}

namespace {

void check_code_order(const Graph& g, int limit) {
    if (g.order() > limit) throw std::out_of_range("graph too large for canonical coding");
}

// Colour refinement: ordered cells, each an isomorphism-invariant class.
std::vector<std::vector<int>> refined_cells(const Graph& g) {
    const int n = g.order();
    std::vector<int> colour(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) colour[static_cast<std::size_t>(v)] = g.degree(v);
    for (int round = 0; round < n; ++round) {
        std::vector<std::pair<std::vector<int>, int>> sig(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            std::vector<int> s{colour[static_cast<std::size_t>(v)]};
            std::vector<int> nb;
            for (int u = 0; u < n; ++u)
                if (g.adjacent(u, v)) nb.push_back(colour[static_cast<std::size_t>(u)]);
            std::sort(nb.begin(), nb.end());
            s.insert(s.end(), nb.begin(), nb.end());
            sig[static_cast<std::size_t>(v)] = {std::move(s), v};
        }
        std::vector<std::vector<int>> distinct;
        for (const auto& s : sig) distinct.push_back(s.first);
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        std::vector<int> next(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v)
            next[static_cast<std::size_t>(v)] = static_cast<int>(
                std::lower_bound(distinct.begin(), distinct.end(), sig[static_cast<std::size_t>(v)].first) -
                distinct.begin());
        bool stable = std::set<int>(next.begin(), next.end()).size() == std::set<int>(colour.begin(), colour.end()).size();
        colour = std::move(next);
        if (stable) break;
    }
    int k = *std::max_element(colour.begin(), colour.end()) + 1;
    std::vector<std::vector<int>> cells(static_cast<std::size_t>(k));
    for (int v = 0; v < n; ++v) cells[static_cast<std::size_t>(colour[static_cast<std::size_t>(v)])].push_back(v);
    return cells;
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
    check_code_order(g, 11);
    const int n = g.order();
    if (n <= 1) return 0;
    auto cells = refined_cells(g);
    std::vector<int> perm;
    std::uint64_t best = 0;
    bool first = true;
    std::function<void(std::size_t)> rec = [&](std::size_t c) {
        if (c == cells.size()) {
            std::uint64_t code = adjacency_code(g, perm);
            if (first || code > best) best = code;
            first = false;
            return;
        }
        auto& cell = cells[c];
        std::sort(cell.begin(), cell.end());
        do {
            perm.insert(perm.end(), cell.begin(), cell.end());
            rec(c + 1);
            perm.resize(perm.size() - cell.size());
        } while (std::next_permutation(cell.begin(), cell.end()));
    };
    rec(0);
    return best;
}

std::uint64_t canonical_code_bruteforce(const Graph& g) {
    check_code_order(g, 8);
    std::vector<int> perm(static_cast<std::size_t>(g.order()));
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = 0;
    do best = std::max(best, adjacency_code(g, perm));
    while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

std::vector<Graph> enumerate_connected_graphs(int n) {
    if (n < 1 || n > kMaxEnumerationOrder) throw std::out_of_range("enumeration supports 1 <= n <= 8");
    std::vector<std::uint64_t> codes{0};
    for (int m = 2; m <= n; ++m) {
        std::unordered_set<std::uint64_t> seen;
        for (std::uint64_t code : codes) {
            Graph base = graph_from_code(m - 1, code);
            for (std::uint64_t nb = 1; nb < (std::uint64_t{1} << (m - 1)); ++nb) {
                Graph g(m);
                for (const auto& [a, b] : base.edges()) g.add_edge(a, b);
                for (int v = 0; v < m - 1; ++v)
                    if ((nb >> v) & 1U) g.add_edge(v, m - 1);
                seen.insert(canonical_code(g));
            }
        }
        codes.assign(seen.begin(), seen.end());
        std::sort(codes.begin(), codes.end());
    }
    std::vector<Graph> out;
    for (auto c : codes) out.push_back(graph_from_code(n, c));
    return out;
}

std::vector<Graph> connected_corpus(int n_max) {
    std::vector<Graph> out;
    for (int n = 1; n <= n_max; ++n) {
        auto level = enumerate_connected_graphs(n);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

std::vector<Graph> enumerate_connected_graphs_bruteforce(int n) {
    if (n < 1 || n > 6) throw std::out_of_range("brute-force enumeration supports 1 <= n <= 6");
    const int pairs = n * (n - 1) / 2;
    std::set<std::uint64_t> classes;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
        Graph g = graph_from_code(n, mask);
        if (is_connected(g)) classes.insert(canonical_code_bruteforce(g));
    }
    std::vector<Graph> out;
    for (auto c : classes) out.push_back(graph_from_code(n, c));
    return out;
}

// ---------------------------------------------------------------------------
// trees

namespace {

std::string rooted_string(const Graph& t, int v, int parent) {
    std::vector<std::string> children;
    for (int u = 0; u < t.order(); ++u)
        if (u != parent && t.adjacent(u, v)) children.push_back(rooted_string(t, u, v));
    std::sort(children.begin(), children.end());
    std::string s = "(";
    for (const auto& c : children) s += c;
    return s + ")";
}

std::vector<int> tree_centres(const Graph& t) {
    const int n = t.order();
    std::vector<int> degree(static_cast<std::size_t>(n));
    std::vector<int> layer;
    for (int v = 0; v < n; ++v) {
        degree[static_cast<std::size_t>(v)] = t.degree(v);
        if (degree[static_cast<std::size_t>(v)] <= 1) layer.push_back(v);
    }
    int remaining = n;
    while (remaining > 2) {
        remaining -= static_cast<int>(layer.size());
        std::vector<int> next;
        for (int v : layer)
            for (int u = 0; u < n; ++u)
                if (t.adjacent(u, v) && --degree[static_cast<std::size_t>(u)] == 1) next.push_back(u);
        layer = std::move(next);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

}  // namespace

std::string tree_canonical_string(const Graph& tree) {
    if (tree.order() == 0) return "";
    if (tree.size() != tree.order() - 1 || !is_connected(tree)) throw GraphError("not a tree");
    std::string best;
    for (int c : tree_centres(tree)) {
        std::string s = rooted_string(tree, c, -1);
        if (best.empty() || s < best) best = s;
    }
    return best;
}

std::vector<Graph> enumerate_trees(int n) {
    if (n < 1 || n > 16) throw std::out_of_range("tree enumeration supports 1 <= n <= 16");
    std::vector<Graph> level{Graph(1)};
    for (int m = 2; m <= n; ++m) {
        std::map<std::string, Graph> seen;
        for (const auto& t : level)
            for (int v = 0; v < m - 1; ++v) {
                Graph g(m);
                for (const auto& [a, b] : t.edges()) g.add_edge(a, b);
                g.add_edge(v, m - 1);
                seen.emplace(tree_canonical_string(g), g);
            }
        level.clear();
        for (auto& [key, g] : seen) level.push_back(std::move(g));
    }
    return level;
}

// ---------------------------------------------------------------------------
// scans

Family parse_family(std::string_view name) {
    if (name == "F") return Family::F;
    if (name == "lambda1") return Family::Lambda1;
    if (name == "lambda1R") return Family::Lambda1Rational;
    if (name == "all") return Family::All;
    throw std::invalid_argument("unknown family '" + std::string(name) + "' (F, lambda1, lambda1R, all)");
}

std::span<const std::string_view> family_names(Family f) {
    static const std::vector<std::string_view> all = [] {
        std::vector<std::string_view> out;
        for (const auto& e : atlas_entries()) out.push_back(e.name);
        return out;
    }();
    switch (f) {
        case Family::F: return forbidden_family_names();
        case Family::Lambda1: return lambda1_names();
        case Family::Lambda1Rational: return lambda1_rational_names();
        case Family::All: return all;
    }
    return {};
}

bool ScanReport::has_forbidden_hit() const {
    auto f = forbidden_family_names();
    for (const auto& h : hits)
        if (std::find(f.begin(), f.end(), h.name) != f.end()) return true;
    return false;
}

ScanReport forbidden_scan(const Graph& g, Family family) {
    ScanReport r;
    r.graph6 = emit_graph6(g);
    for (auto name : family_names(family)) {
        if (auto w = contains_induced(g, atlas(name).graph)) r.hits.push_back({std::string(name), *w});
    }
    r.odd_hole = find_odd_hole(g);
    return r;
}

std::vector<AtlasHit> forbidden_scan_bruteforce(const Graph& g, Family family) {
    std::vector<AtlasHit> out;
    for (auto name : family_names(family)) {
        if (auto w = contains_induced_bruteforce(g, atlas(name).graph)) out.push_back({std::string(name), *w});
    }
    return out;
}

ScanReport full_scan(const Graph& g, Family family, const TrivialityOptions& opts) {
    ScanReport r = forbidden_scan(g, family);
    r.phi = phi_trivial_count(g, opts);
    r.complete = r.phi.complete();
    if (r.complete) {
        r.lambda1 = r.phi.phi_ideals <= 1;
        r.lambda2 = r.phi.phi_ideals <= 2;
    } else {
        // Phi is only known from below.
        if (r.phi.phi_ideals > 1) r.lambda1 = false;
        if (r.phi.phi_ideals > 2) r.lambda2 = false;
    }
    return r;
}

namespace {

nlohmann::json optional_bool(const std::optional<bool>& b) {
    if (!b) return nullptr;
    return *b;
}

}  // namespace

nlohmann::json scan_json(const ScanReport& r) {
    auto hits = nlohmann::json::array();
    for (const auto& h : r.hits) hits.push_back({{"name", h.name}, {"witness", h.witness}});
    nlohmann::json j = {{"graph", r.graph6},
                        {"atlas_hits", hits},
                        {"odd_hole", r.odd_hole ? nlohmann::json(*r.odd_hole) : nlohmann::json(nullptr)},
                        {"phi_ideals", r.phi.phi_ideals},
                        {"phi_snf", r.phi.phi_snf},
                        {"lambda1", optional_bool(r.lambda1)},
                        {"lambda2", optional_bool(r.lambda2)},
                        {"status", r.complete ? "complete" : "inconclusive"}};
    return j;
}

ContrapositiveSummary verify_forbidden_contrapositive(const std::vector<Graph>& corpus, const TrivialityOptions& opts,
                                                      unsigned jobs) {
    const auto start = std::chrono::steady_clock::now();
    struct Row {
        ScanReport scan;
        bool containing = false;
        Decision outcome = Decision::Trivial;
    };
    std::vector<Row> rows(corpus.size());
    parallel_for(corpus.size(), jobs, [&](std::size_t k) {
        const Graph& g = corpus[k];
        Row& row = rows[k];
        row.scan = forbidden_scan(g, Family::F);
        row.containing = !row.scan.hits.empty() || row.scan.odd_hole.has_value();
        if (!row.containing) return;
        PolyMatrix m = generalized_distance_matrix(g);
        TrivialityOptions o = opts;
        o.domain = CoefficientDomain::Integers;
        for (std::size_t i = 1; i <= 3; ++i) {
            TrivialityVerdict v = matrix_ideal_triviality(m, i, o);
            if (v.decision != Decision::Trivial) {
                row.outcome = v.decision;
                break;
            }
        }
    });
    ContrapositiveSummary s;
    s.graphs = corpus.size();
    for (auto name : forbidden_family_names()) s.member_counts[std::string(name)] = 0;
    for (const auto& row : rows) {
        for (const auto& h : row.scan.hits) ++s.member_counts[h.name];
        if (row.scan.odd_hole) ++s.odd_hole_count;
        if (!row.containing) continue;
        ++s.containing;
        if (row.outcome == Decision::NonTrivial) s.violations.push_back(row.scan.graph6);
        if (row.outcome == Decision::Inconclusive) s.inconclusive.push_back(row.scan.graph6);
    }
    std::sort(s.violations.begin(), s.violations.end());
    std::sort(s.inconclusive.begin(), s.inconclusive.end());
    s.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return s;
}

CharacterizationSummary verify_lambda1_characterizations(int n_max, const TrivialityOptions& opts, unsigned jobs) {
    if (n_max < 1 || n_max > 7) throw std::out_of_range("characterization check supports 1 <= n_max <= 7");
    const auto start = std::chrono::steady_clock::now();
    std::vector<Graph> corpus = connected_corpus(n_max);
    struct Row {
        std::string graph6;
        bool free_z = true, free_q = true;
        std::optional<bool> member_z, member_q;
    };
    std::vector<Row> rows(corpus.size());
    parallel_for(corpus.size(), jobs, [&](std::size_t k) {
        const Graph& g = corpus[k];
        Row& row = rows[k];
        row.graph6 = emit_graph6(g);
        for (auto name : lambda1_rational_names()) {
            if (!contains_induced(g, atlas(name).graph)) continue;
            row.free_q = false;
            if (name != "C4") row.free_z = false;
        }
        if (g.order() < 2) {
            row.member_z = row.member_q = true;
            return;
        }
        TrivialityOptions o = opts;
        o.domain = CoefficientDomain::Integers;
        TrivialityVerdict vz = ideal_triviality(g, 2, o);
        if (vz.conclusive()) row.member_z = !vz.trivial();
        o.domain = CoefficientDomain::Rationals;
        TrivialityVerdict vq = ideal_triviality(g, 2, o);
        if (vq.conclusive()) row.member_q = !vq.trivial();
    });
    CharacterizationSummary s;
    s.graphs = corpus.size();
    for (const auto& row : rows) {
        if (!row.member_z || !row.member_q) {
            s.inconclusive.push_back(row.graph6);
        }
        if (row.member_z) {
            s.members_integer += *row.member_z ? 1 : 0;
            if (*row.member_z != row.free_z) s.exceptions_integer.push_back(row.graph6);
        }
        if (row.member_q) {
            s.members_rational += *row.member_q ? 1 : 0;
            if (*row.member_q != row.free_q) s.exceptions_rational.push_back(row.graph6);
        }
    }
    std::sort(s.exceptions_integer.begin(), s.exceptions_integer.end());
    std::sort(s.exceptions_rational.begin(), s.exceptions_rational.end());
    std::sort(s.inconclusive.begin(), s.inconclusive.end());
    s.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return s;
}

nlohmann::json summary_json(const ContrapositiveSummary& s) {
    return {{"graphs", s.graphs},
            {"containing", s.containing},
            {"member_counts", s.member_counts},
            {"odd_hole_count", s.odd_hole_count},
            {"violations", s.violations},
            {"inconclusive", s.inconclusive},
            {"elapsed_ms", s.elapsed_ms},
            {"passed", s.passed()}};
}

nlohmann::json summary_json(const CharacterizationSummary& s) {
    return {{"graphs", s.graphs},
            {"members_integer", s.members_integer},
            {"members_rational", s.members_rational},
            {"exceptions_integer", s.exceptions_integer},
            {"exceptions_rational", s.exceptions_rational},
            {"inconclusive", s.inconclusive},
            {"elapsed_ms", s.elapsed_ms},
            {"passed", s.passed()}};
}

}  // namespace distideal
