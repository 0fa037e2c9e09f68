#include <doctest.h>

#include <random>

#include "distideal/atlas.hpp"
#include "distideal/atlas_scan.hpp"
#include "distideal/distance_ideals.hpp"
#include "distideal/int_matrix.hpp"
#include "distideal/poly_matrix.hpp"

using namespace distideal;

namespace {

const Graph k2(2, {{0, 1}});

std::vector<std::string> strings(const std::vector<Polynomial>& ps) {
    std::vector<std::string> out;
    for (const auto& p : ps) out.push_back(p.to_string());
    return out;
}

}  // namespace

TEST_CASE("generators") {
    CHECK(strings(distance_ideal_generators(k2, 1)) == std::vector<std::string>{"x0", "1", "1", "x1"});
    CHECK(strings(distance_ideal_generators(k2, 2)) == std::vector<std::string>{"x0*x1 - 1"});
    auto c7 = strings(distance_ideal_generators(cycle_graph(7), 3));
    CHECK(std::count(c7.begin(), c7.end(), "2") > 0);
    CHECK(std::count(c7.begin(), c7.end(), "5") > 0);
}

TEST_CASE("triviality verdicts") {
    TrivialityVerdict c7 = ideal_triviality(cycle_graph(7), 3);
    CHECK(c7.trivial());
    CHECK(c7.kind == CertificateKind::ConstantGcdOne);
    CHECK(c7.constants.size() >= 2);

    TrivialityVerdict k = ideal_triviality(k2, 2);
    CHECK(k.decision == Decision::NonTrivial);

    TrivialityVerdict p3 = ideal_triviality(path_graph(3), 3);
    CHECK(p3.decision == Decision::NonTrivial);
    CHECK(p3.kind == CertificateKind::EvaluationObstruction);
    CHECK(p3.gcd == 4);
    for (const auto& x : p3.assignment) CHECK(x == 0);

    CHECK(ideal_triviality(k2, 1).kind == CertificateKind::UnitMinor);
    CHECK_THROWS(ideal_triviality(k2, 3));
}

TEST_CASE("a Groebner certificate for a proper ideal") {
    // 2*x0*x1 + 1 is odd at every integer point, so only the residue grid
    // mod 3 or the Groebner layer can show it is proper.
    TrivialityOptions opts;
    opts.random_points = 0;
    opts.grid_limit = 0;
    PolyMatrix m(Ring::make({"x0", "x1"}), 1);
    m(0, 0) = parse_polynomial(m.ring(), "2x0*x1 + 1");
    TrivialityVerdict v = matrix_ideal_triviality(m, 1, opts);
    CHECK(v.decision == Decision::NonTrivial);
    CHECK(v.kind == CertificateKind::GroebnerProper);
}

TEST_CASE("obstruction certificates are sound") {
    // The reported gcd divides every generator evaluated at the assignment.
    for (int n = 4; n <= 6; ++n)
        for (const auto& g : enumerate_connected_graphs(n))
            for (std::size_t i = 1; i <= static_cast<std::size_t>(n); ++i) {
                TrivialityVerdict v = ideal_triviality(g, i);
                if (v.kind != CertificateKind::EvaluationObstruction) continue;
                std::map<int, Integer> at;
                for (std::size_t k = 0; k < v.assignment.size(); ++k) at[static_cast<int>(k)] = v.assignment[k];
                CHECK(v.gcd != 1);
                for (const auto& p : distance_ideal_generators(g, i)) {
                    Integer value = p.evaluate(at).constant_value();
                    if (v.gcd == 0)
                        CHECK(value == 0);
                    else
                        CHECK(value % v.gcd == 0);
                }
            }
}

TEST_CASE("Phi examples") {
    CHECK(phi_trivial_count(cycle_graph(4)).phi_ideals == 1);
    CHECK(phi_trivial_count(atlas("bull").graph).phi_ideals == 3);
    CHECK(phi_trivial_count(path_graph(4)).phi_ideals == 2);
    CHECK(phi_trivial_count(path_graph(5)).phi_ideals == 2);
    CHECK(phi_trivial_count(complete_graph(4)).phi_ideals == 1);
}

TEST_CASE("Lambda membership") {
    CHECK(lambda_membership(cycle_graph(4), 1) == true);
    CHECK(lambda_membership(atlas("bull").graph, 2) == false);
    for (int n = 1; n <= 8; ++n)
        for (const auto& t : enumerate_trees(n)) CHECK(lambda_membership(t, 2) == true);
}

TEST_CASE("Phi over the rationals") {
    CHECK(phi_over_rationals(cycle_graph(4)).phi_ideals >= 2);
    CHECK(phi_over_rationals(complete_graph(3)).phi_ideals == 1);
    CHECK(phi_over_rationals(star_graph(3)).phi_ideals == 1);
}

TEST_CASE("Phi is bounded by phi and trivial ideals form a prefix") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& g : enumerate_connected_graphs(n)) {
            PhiResult r = phi_trivial_count(g);
            REQUIRE(r.complete());
            CHECK(r.phi_ideals <= r.phi_snf);
            CHECK(r.phi_snf == phi_unit_count(g));
            std::size_t top = std::min<std::size_t>(static_cast<std::size_t>(r.phi_snf) + 1, static_cast<std::size_t>(n));
            auto ladder = triviality_ladder(g, top);
            bool seen_proper = false;
            for (std::size_t i = 0; i < ladder.size(); ++i) {
                REQUIRE(ladder[i].conclusive());
                if (!ladder[i].trivial()) seen_proper = true;
                CHECK_FALSE((seen_proper && ladder[i].trivial()));
                CHECK(ladder[i].trivial() == (static_cast<int>(i) < r.phi_ideals));
            }
        }
}

TEST_CASE("evaluation identity") {
    std::mt19937_64 rng(53);
    auto corpus = connected_corpus(6);
    for (int t = 0; t < 20; ++t) {
        const Graph& g = corpus[rng() % corpus.size()];
        std::vector<Integer> d;
        for (int v = 0; v < g.order(); ++v) d.emplace_back(static_cast<long>(rng() % 9) - 4);
        std::size_t i = 1 + rng() % static_cast<std::size_t>(g.order());
        std::map<int, Integer> at;
        for (std::size_t k = 0; k < d.size(); ++k) at[static_cast<int>(k)] = d[k];
        IntMatrix m = generalized_distance_matrix(g).evaluate(at).to_int_matrix();
        SnfResult s = snf(m);
        Integer product = 1;
        for (std::size_t j = 0; j < i; ++j) product *= j < s.rank() ? s.invariant_factors[j] : Integer(0);
        CHECK(evaluated_delta(g, i, d) == product);
        CHECK(delta(m, i) == product);
    }
}

TEST_CASE("JSON report schema") {
    auto j = verdict_json(cycle_graph(7), 3, ideal_triviality(cycle_graph(7), 3));
    CHECK(j["graph"] == emit_graph6(cycle_graph(7)));
    CHECK(j["i"] == 3);
    CHECK(j["decision"] == "trivial");
    CHECK(j["certificate_kind"] == "ConstantGcdOne");
    CHECK(j.contains("certificate_data"));
    CHECK(j.contains("elapsed_ms"));
    auto p = phi_json(path_graph(4), phi_trivial_count(path_graph(4)));
    CHECK(p["phi_ideals"] == 2);
}
