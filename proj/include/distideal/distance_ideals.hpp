#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "distideal/graph.hpp"
#include "distideal/groebner.hpp"
#include "distideal/int_matrix.hpp"
#include "distideal/poly_matrix.hpp"

namespace distideal {

enum class Decision { Trivial, NonTrivial, Inconclusive };

enum class CertificateKind {
    UnitMinor,
    ConstantGcdOne,
    EvaluationObstruction,
    GroebnerContainsOne,
    GroebnerProper,
    BudgetExceeded,
};

std::string to_string(Decision d);
std::string to_string(CertificateKind k);

struct TrivialityVerdict {
    Decision decision = Decision::Inconclusive;
    CertificateKind kind = CertificateKind::BudgetExceeded;

    /// UnitMinor: the minor (0-based, sorted) and its value (+1 or -1; over
    /// the rationals any nonzero constant).
    MinorIndex minor;
    Integer minor_value;
    /// ConstantGcdOne: constant minors whose gcd is 1.
    std::vector<Integer> constants;
    /// EvaluationObstruction: the assignment, one value per ring variable,
    /// and the gcd of all generator values there (0 if they all vanish).
    std::vector<Integer> assignment;
    Integer gcd;
    /// GroebnerProper: basis size and its leading generators.
    std::size_t basis_size = 0;
    std::vector<std::string> basis_head;

    std::size_t generator_count = 0;
    std::size_t reductions = 0;
    double elapsed_ms = 0;

    bool trivial() const { return decision == Decision::Trivial; }
    bool conclusive() const { return decision != Decision::Inconclusive; }
};

struct TrivialityOptions {
    CoefficientDomain domain = CoefficientDomain::Integers;
    GroebnerOptions groebner;
    std::uint64_t seed = 0x5eed'd157'1dea1ULL;
    /// Number of pseudorandom assignments tried after X = 0.
    int random_points = 8;
    /// Upper bound on residue-grid points tried per prime.
    std::size_t grid_limit = 50'000;
};

/// minors(generalized_distance_matrix(g), i).
std::vector<Polynomial> distance_ideal_generators(const Graph& g, std::size_t i);

/// Decides whether the ideal of i x i minors of `m` is the whole ring.
///
/// Layers, cheapest first: constant minors (a unit, or gcd 1), evaluation at
/// integer points (X = 0, pseudorandom points, then residue grids mod 2, 3, 5)
/// where all minors share a nontrivial common factor, and finally streamed
/// strong Groebner basis completion.
TrivialityVerdict matrix_ideal_triviality(const PolyMatrix& m, std::size_t i, const TrivialityOptions& opts = {});

TrivialityVerdict ideal_triviality(const Graph& g, std::size_t i, const TrivialityOptions& opts = {});

enum class PhiStatus { Complete, Inconclusive };

struct PhiResult {
    /// Largest i with I_i trivial. When inconclusive, a lower bound.
    int phi_ideals = 0;
    /// Invariant factors equal to 1 (over the rationals: the rank).
    int phi_snf = 0;
    /// verdicts[k] is for i = k + 1.
    std::vector<TrivialityVerdict> verdicts;
    PhiStatus status = PhiStatus::Complete;

    bool complete() const { return status == PhiStatus::Complete; }
};

/// Ascends i = 1, 2, ... stopping at the first non-trivial ideal; never
/// tests beyond phi_snf + 1.
PhiResult phi_trivial_count(const Graph& g, const TrivialityOptions& opts = {});

/// Verdicts for every i in 1..max_i without early stopping.
std::vector<TrivialityVerdict> triviality_ladder(const Graph& g, std::size_t max_i,
                                                 const TrivialityOptions& opts = {});

/// Phi(g) <= k, or nullopt when undecided within the budget.
std::optional<bool> lambda_membership(const Graph& g, int k, const TrivialityOptions& opts = {});

/// phi_trivial_count with rational coefficients.
PhiResult phi_over_rationals(const Graph& g, const TrivialityOptions& opts = {});

/// Product of the first i invariant factors of D(G, d) (0 if rank < i).
Integer evaluated_delta(const Graph& g, std::size_t i, const std::vector<Integer>& d);

nlohmann::json verdict_json(const Graph& g, std::size_t i, const TrivialityVerdict& v);
nlohmann::json phi_json(const Graph& g, const PhiResult& r);

}  // namespace distideal
