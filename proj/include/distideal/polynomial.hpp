#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace distideal {

using Integer = mpz_class;

class PolyError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when an exact division leaves a remainder. Signals a bug, not a
/// recoverable condition.
class InexactDivision : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

enum class OrderKind { Lex, GrevLex };

/// Variable names in descending precedence plus a monomial order kind.
class Ring {
public:
    static constexpr int kMaxVars = 32;

    Ring(std::vector<std::string> names, OrderKind order = OrderKind::GrevLex);

    static std::shared_ptr<const Ring> make(std::vector<std::string> names, OrderKind order = OrderKind::GrevLex);

    int nvars() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(int i) const { return names_[static_cast<std::size_t>(i)]; }
    OrderKind order() const { return order_; }

    /// Index of `name`, or -1. Also accepts "x_3" for "x3".
    int index_of(std::string_view name) const;

    bool same_context(const Ring& other) const { return names_ == other.names_ && order_ == other.order_; }

private:
    std::vector<std::string> names_;
    OrderKind order_;
};

using RingPtr = std::shared_ptr<const Ring>;

/// Dense exponent vector over a ring's declared variables.
struct Monomial {
    std::array<std::uint8_t, Ring::kMaxVars> exp{};
    std::uint16_t degree = 0;

    bool is_one() const { return degree == 0; }
    bool divides(const Monomial& other, int nvars) const;
    bool coprime(const Monomial& other, int nvars) const;
    bool operator==(const Monomial& o) const { return degree == o.degree && exp == o.exp; }
};

Monomial operator*(const Monomial& a, const Monomial& b);
/// a / b; requires b | a.
Monomial quotient(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b, int nvars);

/// Three-way comparison under the ring's order: <0, 0, >0.
int compare(const Monomial& a, const Monomial& b, const Ring& ring);

struct Term {
    Monomial mono;
    Integer coeff;
};

/// Sparse polynomial with integer coefficients. Terms are kept sorted in
/// descending order under the ring's monomial order with no zero coefficients.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
    Polynomial(RingPtr ring, const Integer& constant);
    Polynomial(RingPtr ring, long constant) : Polynomial(std::move(ring), Integer(constant)) {}

    static Polynomial variable(RingPtr ring, int index);
    static Polynomial variable(RingPtr ring, std::string_view name);
    static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
    /// Constant value; requires is_constant().
    Integer constant_value() const;

    const Term& leading_term() const { return terms_.front(); }
    const Integer& leading_coeff() const { return terms_.front().coeff; }
    const Monomial& leading_monomial() const { return terms_.front().mono; }

    int total_degree() const;
    int degree_in(int var) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Integer& c);

    /// *this -= c * m * q, merging in one pass.
    void sub_mul(const Integer& c, const Monomial& m, const Polynomial& q);
    Polynomial mul_term(const Integer& c, const Monomial& m) const;

    /// Drops the leading term.
    void pop_leading();

    /// Divides every coefficient by c exactly.
    void divide_exact(const Integer& c);

    /// gcd of the coefficients (non-negative).
    Integer content() const;

    /// Substitutes integers for some variables; the ring is unchanged.
    Polynomial evaluate(const std::map<int, Integer>& assignment) const;
    Polynomial evaluate(const std::map<std::string, long>& assignment) const;

    /// Re-expresses the polynomial in a ring that declares every variable it uses.
    Polynomial in_ring(const RingPtr& target) const;

    std::string to_string() const;

    bool operator==(const Polynomial& o) const;

private:
    void check_context(const Polynomial& o) const;
    void sort_and_combine();

    RingPtr ring_;
    std::vector<Term> terms_;
};

Polynomial operator+(Polynomial a, const Polynomial& b);
Polynomial operator-(Polynomial a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator*(Polynomial a, const Integer& c);

/// Exact quotient a / b. Throws InexactDivision on a nonzero remainder.
Polynomial divide_exact(const Polynomial& a, const Polynomial& b);

/// Parses "3*x0*y1^2 - 2 y_0 + (x1 - 1)*x2". Implicit multiplication by
/// juxtaposition is accepted. Unknown variable names are an error.
Polynomial parse_polynomial(const RingPtr& ring, std::string_view text);

/// Parses a comma-separated list, optionally wrapped in braces.
std::vector<Polynomial> parse_polynomial_list(const RingPtr& ring, std::string_view text);

}  // namespace distideal
