#include <doctest.h>

#include <set>

#include "distideal/atlas.hpp"
#include "distideal/conformance.hpp"
#include "distideal/poly_matrix.hpp"

using namespace distideal;

TEST_CASE("transcription checksums") {
    const std::vector<std::pair<std::string, std::uint64_t>> sums{
        {"G_{6,7}/I", 0xaa9879f7a92cb0c1ULL},       {"G_{6,7}/J", 0xf9e1e4d491b95f07ULL},
        {"co-twin-house/I", 0xab98d50179283513ULL}, {"co-twin-house/J", 0xb60a9379a099caa4ULL},
        {"co-twin-house/M'(3,3,2)", 0x116cdc5b88e6f506ULL}, {"G_{6,15}/I", 0x65f382b8423242b8ULL},
        {"G_{6,15}/J", 0xd4f4a506dde2fd74ULL},
    };
    for (const auto& [key, sum] : sums) CHECK(fnv1a(transcribed_set(key)) == sum);
    CHECK(transcribed_set_keys().size() == sums.size());
    CHECK(fnv1a("") == 0xcbf29ce484222325ULL);
}

TEST_CASE("reports that reproduce exactly") {
    for (const char* id : {"diameter-two-members", "bull", "G_{6,5}", "5-pan", "G_{6,7}", "co-twin-house", "G_{6,15}",
                           "forbidden-theorem"}) {
        LemmaReport r = run_lemma(id);
        CHECK_MESSAGE(r.pass, id);
        CHECK_FALSE(r.checks.empty());
    }
}

TEST_CASE("quoted minors that differ from the displayed matrices") {
    // Each report keeps the literal check (which fails) next to a companion
    // check on the computed minors (which passes).
    for (const char* id : {"G_{6,9}", "G_{6,12}", "odd-holes"}) {
        LemmaReport r = run_lemma(id);
        std::size_t failed = 0;
        for (const auto& c : r.checks) failed += !c.pass;
        CHECK_MESSAGE(failed == 1, id);
        CHECK_FALSE(r.pass);
    }
}

TEST_CASE("budget one gives inconclusive checks and no false passes") {
    HarnessOptions opts;
    opts.groebner.budget = 1;
    LemmaReport r = run_lemma("G_{6,7}", opts);
    CHECK_FALSE(r.pass);
    bool any_open = false;
    for (const auto& c : r.checks) {
        any_open = any_open || c.inconclusive;
        if (c.inconclusive) CHECK_FALSE(c.pass);
    }
    CHECK(any_open);
}

TEST_CASE("a corrupted bull is detected") {
    Graph bull = atlas("bull").graph;
    bull.remove_edge(2, 3);
    CHECK(phi_trivial_count(bull).phi_ideals != 3);
}

TEST_CASE("report ids and JSON") {
    auto ids = lemma_ids();
    CHECK(std::set<std::string>(ids.begin(), ids.end()).size() == ids.size());
    CHECK_THROWS_AS(run_lemma("no-such-lemma"), std::invalid_argument);
    auto j = report_json(run_lemma("5-pan"));
    CHECK(j["lemma"] == "5-pan");
    CHECK(j["pass"] == true);
    for (const auto& c : j["checks"]) {
        std::string s = c["source"];
        CHECK((s == "stated" || s == "derived" || s == "derived-golden"));
    }
}
