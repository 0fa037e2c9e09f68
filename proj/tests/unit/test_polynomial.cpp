#include <doctest.h>

#include <random>

#include "distideal/graph.hpp"
#include "distideal/int_matrix.hpp"
#include "distideal/poly_matrix.hpp"
#include "distideal/polynomial.hpp"

using namespace distideal;

namespace {

RingPtr xy_ring(OrderKind order = OrderKind::GrevLex) { return Ring::make({"x0", "x1", "y0", "y1"}, order); }

Polynomial random_poly(std::mt19937_64& rng, const RingPtr& ring, int terms, int max_exp) {
    std::vector<Term> ts;
    for (int t = 0; t < terms; ++t) {
        Term term;
        term.coeff = static_cast<long>(rng() % 11) - 5;
        std::vector<int> e(static_cast<std::size_t>(ring->nvars()));
        Polynomial m(ring, term.coeff);
        for (int v = 0; v < ring->nvars(); ++v) {
            int k = static_cast<int>(rng() % static_cast<unsigned>(max_exp + 1));
            for (int j = 0; j < k; ++j) m = m * Polynomial::variable(ring, v);
        }
        for (const auto& x : m.terms()) ts.push_back(x);
    }
    return Polynomial::from_terms(ring, ts);
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
    auto r = xy_ring();
    Polynomial x0 = Polynomial::variable(r, "x0");
    Polynomial x1 = Polynomial::variable(r, "x1");
    Polynomial one(r, 1);
    CHECK((x0 + one) * (x0 - one) == parse_polynomial(r, "x0^2 - 1"));
    Polynomial p = parse_polynomial(r, "3x0*y1 - 2y0 + 7");
    CHECK((p + (-p)).is_zero());
    CHECK((x0 * x1 - one) + one == x0 * x1);
    CHECK(parse_polynomial(r, "x0 x1 - 1").to_string() == "x0*x1 - 1");
    CHECK(parse_polynomial(r, "2y_1 x_0") == parse_polynomial(r, "2*x0*y1"));
}

TEST_CASE("polynomial ring axioms on random inputs") {
    std::mt19937_64 rng(9);
    auto r = xy_ring();
    for (int t = 0; t < 100; ++t) {
        Polynomial a = random_poly(rng, r, 4, 2), b = random_poly(rng, r, 3, 2), c = random_poly(rng, r, 3, 1);
        CHECK(a * b == b * a);
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK(parse_polynomial(r, a.to_string()) == a);
        if (!b.is_zero()) CHECK(divide_exact(a * b, b) == a);
    }
}

TEST_CASE("evaluation") {
    auto r = xy_ring();
    Polynomial p = parse_polynomial(r, "y0*y1 - 2y0 - 2y1 + 3");
    CHECK(p.evaluate(std::map<std::string, long>{{"y0", 2}, {"y1", 2}}).constant_value() == -1);
    CHECK(p.evaluate(std::map<std::string, long>{{"y0", 3}, {"y1", 3}}).constant_value() == 0);
    Polynomial q = parse_polynomial(r, "x0*x1 - 1");
    CHECK(q.evaluate(std::map<std::string, long>{{"x0", 0}}).constant_value() == -1);
    Polynomial partial = p.evaluate(std::map<std::string, long>{{"y0", 2}});
    CHECK(partial == parse_polynomial(r, "-1"));
}

TEST_CASE("monomial orders") {
    auto lex = xy_ring(OrderKind::Lex);
    auto grevlex = xy_ring(OrderKind::GrevLex);
    CHECK(parse_polynomial(lex, "x1^3 + x0").leading_monomial() == parse_polynomial(lex, "x0").leading_monomial());
    CHECK(parse_polynomial(grevlex, "x1^3 + x0").leading_monomial() ==
          parse_polynomial(grevlex, "x1^3").leading_monomial());
}

TEST_CASE("polynomial errors") {
    auto r = xy_ring();
    CHECK_THROWS_AS(parse_polynomial(r, "z + 1"), PolyError);
    CHECK_THROWS_AS(parse_polynomial(r, "x0 +"), PolyError);
    Polynomial x = Polynomial::variable(r, "x0");
    Polynomial big = x;
    CHECK_THROWS_AS(
        [&] {
            for (int k = 0; k < 9; ++k) big = big * big;
        }(),
        PolyError);
    auto other = Ring::make({"a"});
    CHECK_THROWS_AS(x + Polynomial::variable(other, "a"), PolyError);
}

TEST_CASE("generalized distance matrix") {
    Graph k2(2, {{0, 1}});
    PolyMatrix m = generalized_distance_matrix(k2);
    CHECK(m(0, 0).to_string() == "x0");
    CHECK(m(0, 1).constant_value() == 1);
    CHECK(determinant(m).to_string() == "x0*x1 - 1");
    PolyMatrix c7 = generalized_distance_matrix(cycle_graph(7));
    CHECK(c7(0, 3).constant_value() == 3);
    CHECK(c7.is_symmetric());
    std::map<int, Integer> zero;
    for (int v = 0; v < 7; ++v) zero[v] = 0;
    IntMatrix d = c7.evaluate(zero).to_int_matrix();
    IntMatrix want = distance_matrix(cycle_graph(7));
    for (std::size_t i = 0; i < 7; ++i)
        for (std::size_t j = 0; j < 7; ++j) CHECK(d(i, j) == want(i, j));
    std::vector<std::size_t> rows{0, 1, 2}, cols{4, 5, 6};
    CHECK(minor(c7, rows, cols).constant_value() == 2);
}

TEST_CASE("minor enumeration") {
    PolyMatrix m = lemma_matrix("G_{6,5}-M");
    CHECK(minors(m, 3).size() == 400);
    std::vector<std::size_t> r1{1, 2, 5}, c1{0, 3, 4};
    CHECK(minor(m, r1, c1) == parse_polynomial(m.ring(), "1 - y2"));
    std::vector<std::size_t> r2{1, 2, 4}, c2{0, 3, 5};
    CHECK(minor(m, r2, c2) == parse_polynomial(m.ring(), "4 - y2"));
    PolyMatrix pan = lemma_matrix("5-pan-M");
    std::vector<std::size_t> r3{2, 3, 4}, c3{1, 2, 5};
    CHECK(minor(pan, r3, c3) == parse_polynomial(pan.ring(), "5 - x2"));
    CHECK_THROWS_AS(minors(m, 7), PolyError);
}

TEST_CASE("lemma matrices") {
    PolyMatrix bull = lemma_matrix("bull-M");
    CHECK(bull(0, 4).constant_value() == 1);
    CHECK(bull(0, 1).constant_value() == 2);
    CHECK(bull(4, 0).constant_value() == 1);
    CHECK(bull(0, 0).to_string() == "u");
    CHECK(bull(1, 1).to_string() == "v");
    CHECK(bull(2, 2).to_string() == "x1");
    PolyMatrix g612 = lemma_matrix("G_{6,12}-M");
    CHECK(g612(0, 4).to_string() == "y0");
    for (std::size_t k = 0; k < 6; ++k) CHECK(g612(k, k).to_string() == "x" + std::to_string(k));
    CHECK(lemma_matrix("co-twin-house-M''").dim() == 8);
    for (const auto& name : lemma_matrix_names()) CHECK(lemma_matrix(name).is_symmetric());
}

TEST_CASE("symbolic determinant algorithms agree") {
    std::mt19937_64 rng(31);
    auto r = Ring::make({"a", "b", "c"});
    for (int t = 0; t < 200; ++t) {
        std::size_t n = 1 + rng() % 4;
        PolyMatrix m(r, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = random_poly(rng, r, 2, 1);
        Polynomial a = determinant_cofactor(m);
        CHECK(determinant_bareiss(m) == a);
        CHECK(determinant_first_row(m) == a);
    }
}
