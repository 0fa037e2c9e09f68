#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "distideal/polynomial.hpp"

namespace distideal {

/// Order kind plus variable precedence (highest first). An empty precedence
/// means the declaration order of the generators' ring.
struct MonomialOrder {
    OrderKind kind = OrderKind::GrevLex;
    std::vector<std::string> precedence;

    static MonomialOrder lex() { return {OrderKind::Lex, {}}; }
    static MonomialOrder grevlex() { return {OrderKind::GrevLex, {}}; }
};

enum class CoefficientDomain { Integers, Rationals };

/// Thrown when basis completion exceeds its pair-reduction budget. The
/// ideal is then undecided; callers must not read anything into it.
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(std::size_t budget)
        : std::runtime_error("Groebner completion exceeded budget of " + std::to_string(budget) +
                             " pair reductions"),
          budget(budget) {}
    std::size_t budget;
};

struct GroebnerOptions {
    std::size_t budget = 200'000;
    /// Generators are fed in batches of this size when streaming.
    std::size_t batch = 32;
};

struct GroebnerBasis {
    std::vector<Polynomial> generators;
    RingPtr ring;
    CoefficientDomain domain = CoefficientDomain::Integers;
    bool interreduced = false;
    /// Number of S-/gcd-polynomial reductions performed.
    std::size_t reductions = 0;

    bool contains_one() const;
    std::vector<std::string> to_strings() const;
};

/// Euclidean strong reduction: every term whose monomial is divisible by some
/// leading monomial has its coefficient reduced with remainder in [0, lc).
/// All polynomials must share the ring of `p`; leading terms are taken in
/// that ring's order.
Polynomial strong_reduce(const Polynomial& p, std::span<const Polynomial> basis);

/// Field reduction over the rationals, computed on primitive integer
/// associates. The result is primitive with positive leading coefficient.
Polynomial rational_reduce(const Polynomial& p, std::span<const Polynomial> basis);

/// Incremental basis completion. Generators may be added between completions.
class GroebnerEngine {
public:
    GroebnerEngine(RingPtr ring, CoefficientDomain domain, GroebnerOptions options = {});

    const RingPtr& ring() const { return ring_; }

    /// Adds generators (converted to the engine's ring).
    void add(std::span<const Polynomial> gens);
    /// Processes pending pairs. Throws BudgetExceeded.
    void complete();
    bool has_unit() const { return unit_; }
    std::size_t reductions() const { return reductions_; }

    /// Interreduced basis of everything added so far; call after complete().
    GroebnerBasis basis() const;

private:
    struct Element {
        Polynomial poly;
        int sugar = 0;
        bool active = true;
    };
    struct Pair {
        std::size_t i, j;
        int sugar;
        int degree;
        std::size_t serial;
    };

    Polynomial reduce(const Polynomial& p) const;
    void normalize(Polynomial& p) const;
    void insert(Polynomial p, int sugar);
    void process(const Pair& pair);
    bool leading_divides(const Polynomial& a, const Polynomial& b) const;

    RingPtr ring_;
    CoefficientDomain domain_;
    GroebnerOptions options_;
    std::vector<Element> elements_;
    std::vector<Pair> pairs_;
    std::size_t serial_ = 0;
    std::size_t reductions_ = 0;
    bool unit_ = false;
};

/// Ring for `order` over the variables of `source`.
RingPtr ring_for_order(const RingPtr& source, const MonomialOrder& order);

GroebnerBasis strong_groebner(std::span<const Polynomial> gens, const MonomialOrder& order,
                              const GroebnerOptions& options = {});

GroebnerBasis rational_groebner(std::span<const Polynomial> gens, const MonomialOrder& order,
                                const GroebnerOptions& options = {});

inline bool contains_one(const GroebnerBasis& b) { return b.contains_one(); }

/// True iff `p` reduces to zero modulo the completed basis.
bool ideal_contains(const GroebnerBasis& b, const Polynomial& p);

/// Mutual containment of the ideals generated by `a` and `b`.
bool ideal_equal(std::span<const Polynomial> a, std::span<const Polynomial> b, const MonomialOrder& order,
                 CoefficientDomain domain = CoefficientDomain::Integers, const GroebnerOptions& options = {});

}  // namespace distideal
