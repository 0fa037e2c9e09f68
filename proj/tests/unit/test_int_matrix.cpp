#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "distideal/atlas_scan.hpp"
#include "distideal/graph.hpp"
#include "distideal/int_matrix.hpp"

using namespace distideal;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int bound) {
    std::uniform_int_distribution<int> d(-bound, bound);
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
    return m;
}

// Leibniz expansion.
Integer permutation_determinant(const IntMatrix& a) {
    std::vector<std::size_t> p(a.rows());
    std::iota(p.begin(), p.end(), 0);
    Integer total = 0;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < p.size(); ++i)
            for (std::size_t j = i + 1; j < p.size(); ++j) inversions += p[i] > p[j];
        Integer term = inversions % 2 ? -1 : 1;
        for (std::size_t i = 0; i < p.size(); ++i) term *= a(i, p[i]);
        total += term;
    } while (std::next_permutation(p.begin(), p.end()));
    return total;
}

}  // namespace

TEST_CASE("determinants") {
    CHECK(determinant(IntMatrix{{0, 1}, {1, 0}}) == -1);
    CHECK(determinant(IntMatrix{{0, 1, 2}, {1, 0, 1}, {2, 1, 0}}) == 4);
    CHECK(determinant(IntMatrix{{2, 4}, {1, 2}}) == 0);
    for (long n = 4; n <= 10; ++n) CHECK(determinant(IntMatrix{{n - 1, n, n}, {n - 2, n - 1, n}, {n - 3, n - 2, n - 1}}) == -1);
}

TEST_CASE("Bareiss determinant agrees with the Leibniz expansion") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 200; ++t) {
        std::size_t n = 1 + rng() % 6;
        IntMatrix a = random_matrix(rng, n, n, 9);
        CHECK(determinant(a) == permutation_determinant(a));
    }
}

TEST_CASE("Smith normal form examples") {
    auto f = [](const IntMatrix& a) {
        std::vector<long> out;
        for (const auto& x : snf(a).invariant_factors) out.push_back(x.get_si());
        return out;
    };
    CHECK(f(IntMatrix{{0, 1}, {1, 0}}) == std::vector<long>{1, 1});
    CHECK(f(IntMatrix{{0, 1, 2}, {1, 0, 1}, {2, 1, 0}}) == std::vector<long>{1, 1, 4});
    CHECK(f(IntMatrix{{2, 0}, {0, 3}}) == std::vector<long>{1, 6});
    CHECK(f(IntMatrix{{0, 0}, {0, 0}}).empty());
    CHECK(f(IntMatrix{{2, 4}, {4, 8}}) == std::vector<long>{2});
}

TEST_CASE("delta is the gcd of the minors") {
    IntMatrix p3{{0, 1, 2}, {1, 0, 1}, {2, 1, 0}};
    CHECK(delta(p3, 1) == 1);
    CHECK(delta(p3, 2) == 1);
    CHECK(delta(p3, 3) == 4);
}

TEST_CASE("Smith normal form agrees with the gcd-of-minors oracle") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 100; ++t) {
        std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
        IntMatrix a = random_matrix(rng, r, c, 9);
        SnfResult s = snf(a);
        Integer prefix = 1;
        for (std::size_t i = 1; i <= std::min(r, c); ++i) {
            Integer expected = i <= s.rank() ? Integer(prefix * s.invariant_factors[i - 1]) : Integer(0);
            CHECK(delta(a, i) == expected);
            if (i <= s.rank()) prefix *= s.invariant_factors[i - 1];
        }
        for (std::size_t i = 1; i < s.rank(); ++i) CHECK(s.invariant_factors[i] % s.invariant_factors[i - 1] == 0);
    }
}

TEST_CASE("Smith normal form transforms are unimodular") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 50; ++t) {
        std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
        IntMatrix a = random_matrix(rng, r, c, 9);
        SnfResult s = snf(a, true);
        REQUIRE(s.left);
        REQUIRE(s.right);
        CHECK(abs(determinant(*s.left)) == 1);
        CHECK(abs(determinant(*s.right)) == 1);
        IntMatrix d = *s.left * a * *s.right;
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) {
                Integer want = (i == j && i < s.rank()) ? s.invariant_factors[i] : Integer(0);
                CHECK(d(i, j) == want);
            }
    }
}

TEST_CASE("invariant factors equal to one") {
    CHECK(phi_unit_count(path_graph(3)) == 2);
    CHECK(phi_unit_count(Graph(2, {{0, 1}})) == 2);
    for (int n = 4; n <= 10; ++n)
        for (const auto& t : enumerate_trees(n)) {
            CHECK(phi_unit_count(t) == 2);
            CHECK(snf(distance_matrix(t)).invariant_factors[2] == 2);
        }
    CHECK(snf(distance_matrix(path_graph(3))).invariant_factors[2] == 4);
}
