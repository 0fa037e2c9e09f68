#include <doctest.h>

#include <random>
#include <set>

#include "distideal/atlas.hpp"
#include "distideal/atlas_scan.hpp"

using namespace distideal;

TEST_CASE("canonical codes identify isomorphic graphs") {
    std::mt19937_64 rng(7);
    for (const auto& g : connected_corpus(6)) {
        std::vector<int> perm(static_cast<std::size_t>(g.order()));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        Graph h = relabel(g, perm);
        CHECK(canonical_code(h) == canonical_code(g));
        CHECK(canonical_code_bruteforce(h) == canonical_code_bruteforce(g));
    }
}

TEST_CASE("connected graph counts") {
    const std::vector<std::size_t> counts{1, 1, 2, 6, 21, 112, 853};
    for (int n = 1; n <= 7; ++n) CHECK(enumerate_connected_graphs(n).size() == counts[static_cast<std::size_t>(n - 1)]);
    CHECK(connected_corpus(6).size() == 143);
    CHECK_THROWS_AS(enumerate_connected_graphs(0), std::out_of_range);
    CHECK_THROWS_AS(enumerate_connected_graphs(9), std::out_of_range);
}

TEST_CASE("enumeration agrees with brute force") {
    for (int n = 1; n <= 6; ++n) {
        std::set<std::uint64_t> fast, slow;
        for (const auto& g : enumerate_connected_graphs(n)) fast.insert(canonical_code_bruteforce(g));
        for (const auto& g : enumerate_connected_graphs_bruteforce(n)) slow.insert(canonical_code_bruteforce(g));
        CHECK(fast == slow);
        CHECK(fast.size() == enumerate_connected_graphs(n).size());
    }
}

TEST_CASE("tree enumeration") {
    const std::vector<std::size_t> counts{1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
    for (int n = 1; n <= 10; ++n) {
        auto trees = enumerate_trees(n);
        CHECK(trees.size() == counts[static_cast<std::size_t>(n - 1)]);
        std::set<std::string> seen;
        for (const auto& t : trees) {
            CHECK(t.size() == n - 1);
            CHECK(is_connected(t));
            seen.insert(tree_canonical_string(t));
        }
        CHECK(seen.size() == trees.size());
    }
}

TEST_CASE("forbidden scan examples") {
    ScanReport gem = forbidden_scan(atlas("gem").graph);
    REQUIRE(gem.hits.size() == 1);
    CHECK(gem.hits[0].name == "gem");
    CHECK(gem.hits[0].witness.size() == 5);
    ScanReport c7 = forbidden_scan(cycle_graph(7));
    CHECK(c7.hits.empty());
    REQUIRE(c7.odd_hole);
    CHECK(c7.odd_hole->size() == 7);
    CHECK(forbidden_scan(complete_graph(4)).hits.empty());
    CHECK(forbidden_scan(complete_graph(4), Family::All).hits.empty());
    CHECK_THROWS(parse_family("G"));
}

TEST_CASE("scanner agrees with brute force") {
    auto corpus = connected_corpus(7);
    std::mt19937_64 rng(19);
    for (int t = 0; t < 100; ++t) {
        const Graph& g = corpus[rng() % corpus.size()];
        std::set<std::string> fast, slow;
        for (const auto& h : forbidden_scan(g, Family::All).hits) fast.insert(h.name);
        for (const auto& h : forbidden_scan_bruteforce(g, Family::All)) slow.insert(h.name);
        CHECK(fast == slow);
    }
}

TEST_CASE("contrapositive on small corpora") {
    std::vector<Graph> bull{atlas("bull").graph};
    auto s = verify_forbidden_contrapositive(bull);
    CHECK(s.passed());
    CHECK(s.containing == 1);
    Graph c7p(8);
    for (int v = 0; v < 7; ++v) c7p.add_edge(v, (v + 1) % 7);
    c7p.add_edge(0, 7);
    std::vector<Graph> one{c7p};
    auto t = verify_forbidden_contrapositive(one);
    CHECK(t.passed());
    CHECK(t.odd_hole_count == 1);
    auto six = verify_forbidden_contrapositive(enumerate_connected_graphs(6));
    CHECK(six.passed());
    CHECK(six.inconclusive.empty());
}

TEST_CASE("Lambda1 characterizations") {
    CHECK(lambda_membership(complete_bipartite(3, 3), 1) == true);
    CHECK(lambda_membership(cycle_graph(4), 1) == true);
    CHECK(phi_over_rationals(cycle_graph(4)).phi_ideals >= 2);
    CHECK(lambda_membership(atlas("paw").graph, 1) == false);
    auto s = verify_lambda1_characterizations(5);
    CHECK(s.passed());
    CHECK(s.graphs == 31);
}

TEST_CASE("scan JSON") {
    auto j = scan_json(full_scan(atlas("bull").graph));
    CHECK(j["graph"] == emit_graph6(atlas("bull").graph));
    CHECK(j["phi_ideals"] == 3);
    CHECK(j["lambda2"] == false);
}
