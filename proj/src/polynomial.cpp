#include "distideal/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace distideal {

// ---------------------------------------------------------------------------
// Ring

Ring::Ring(std::vector<std::string> names, OrderKind order) : names_(std::move(names)), order_(order) {
    if (static_cast<int>(names_.size()) > kMaxVars) {
        throw PolyError("ring has more than " + std::to_string(kMaxVars) + " variables");
    }
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i].empty()) throw PolyError("empty variable name");
        for (std::size_t j = 0; j < i; ++j) {
            if (names_[i] == names_[j]) throw PolyError("duplicate variable name: " + names_[i]);
        }
    }
}

RingPtr Ring::make(std::vector<std::string> names, OrderKind order) {
    return std::make_shared<const Ring>(std::move(names), order);
}

int Ring::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return static_cast<int>(i);
    std::string stripped;
    for (char c : name)
        if (c != '_') stripped.push_back(c);
    if (stripped != name) {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == stripped) return static_cast<int>(i);
    }
    return -1;
}

// ---------------------------------------------------------------------------
// Monomial

bool Monomial::divides(const Monomial& other, int nvars) const {
    if (degree > other.degree) return false;
    for (int i = 0; i < nvars; ++i)
        if (exp[i] > other.exp[i]) return false;
    return true;
}

bool Monomial::coprime(const Monomial& other, int nvars) const {
    for (int i = 0; i < nvars; ++i)
        if (exp[i] != 0 && other.exp[i] != 0) return false;
    return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial out;
    for (std::size_t i = 0; i < a.exp.size(); ++i) {
        unsigned e = unsigned{a.exp[i]} + unsigned{b.exp[i]};
        if (e > 255) throw PolyError("exponent overflow");
        out.exp[i] = static_cast<std::uint8_t>(e);
    }
    out.degree = static_cast<std::uint16_t>(a.degree + b.degree);
    return out;
}

Monomial quotient(const Monomial& a, const Monomial& b) {
    Monomial out;
    for (std::size_t i = 0; i < a.exp.size(); ++i) out.exp[i] = static_cast<std::uint8_t>(a.exp[i] - b.exp[i]);
    out.degree = static_cast<std::uint16_t>(a.degree - b.degree);
    return out;
}

Monomial lcm(const Monomial& a, const Monomial& b, int nvars) {
    Monomial out;
    int deg = 0;
    for (int i = 0; i < nvars; ++i) {
        out.exp[i] = std::max(a.exp[i], b.exp[i]);
        deg += out.exp[i];
    }
    out.degree = static_cast<std::uint16_t>(deg);
    return out;
}

int compare(const Monomial& a, const Monomial& b, const Ring& ring) {
    int n = ring.nvars();
    if (ring.order() == OrderKind::Lex) {
        for (int i = 0; i < n; ++i)
            if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i] ? 1 : -1;
        return 0;
    }
    if (a.degree != b.degree) return a.degree > b.degree ? 1 : -1;
    for (int i = n - 1; i >= 0; --i)
        if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? 1 : -1;
    return 0;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(RingPtr ring, const Integer& constant) : ring_(std::move(ring)) {
    if (constant != 0) terms_.push_back(Term{Monomial{}, constant});
}

Polynomial Polynomial::variable(RingPtr ring, int index) {
    if (index < 0 || index >= ring->nvars()) throw PolyError("variable index out of range");
    Polynomial p(std::move(ring));
    Monomial m;
    m.exp[static_cast<std::size_t>(index)] = 1;
    m.degree = 1;
    p.terms_.push_back(Term{m, 1});
    return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::string_view name) {
    int idx = ring->index_of(name);
    if (idx < 0) throw PolyError("unknown variable: " + std::string(name));
    return variable(std::move(ring), idx);
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
    Polynomial p(std::move(ring));
    p.terms_ = std::move(terms);
    p.sort_and_combine();
    return p;
}

void Polynomial::sort_and_combine() {
    const Ring& r = *ring_;
    std::sort(terms_.begin(), terms_.end(),
              [&](const Term& a, const Term& b) { return compare(a.mono, b.mono, r) > 0; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().mono == t.mono) {
            out.back().coeff += t.coeff;
        } else {
            if (!out.empty() && out.back().coeff == 0) out.pop_back();
            out.push_back(std::move(t));
        }
    }
    if (!out.empty() && out.back().coeff == 0) out.pop_back();
    terms_ = std::move(out);
}

void Polynomial::check_context(const Polynomial& o) const {
    if (ring_ == o.ring_) return;
    if (!ring_ || !o.ring_ || !ring_->same_context(*o.ring_)) {
        throw PolyError("polynomials belong to different variable contexts");
    }
}

Integer Polynomial::constant_value() const {
    if (!is_constant()) throw PolyError("polynomial is not constant: " + to_string());
    return terms_.empty() ? Integer(0) : terms_[0].coeff;
}

int Polynomial::total_degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max<int>(d, t.mono.degree);
    return d;
}

int Polynomial::degree_in(int var) const {
    int d = -1;
    for (const auto& t : terms_) d = std::max<int>(d, t.mono.exp[static_cast<std::size_t>(var)]);
    return d;
}

Polynomial Polynomial::operator-() const {
    Polynomial p = *this;
    for (auto& t : p.terms_) t.coeff = -t.coeff;
    return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    check_context(o);
    if (o.terms_.empty()) return *this;
    if (terms_.empty()) {
        terms_ = o.terms_;
        return *this;
    }
    const Ring& r = *ring_;
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = compare(terms_[i].mono, o.terms_[j].mono, r);
        if (c > 0) {
            out.push_back(std::move(terms_[i++]));
        } else if (c < 0) {
            out.push_back(o.terms_[j++]);
        } else {
            Integer s = terms_[i].coeff + o.terms_[j].coeff;
            if (s != 0) out.push_back(Term{terms_[i].mono, std::move(s)});
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) out.push_back(std::move(terms_[i]));
    for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
    terms_ = std::move(out);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    sub_mul(Integer(1), Monomial{}, o);
    return *this;
}

Polynomial& Polynomial::operator*=(const Integer& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.coeff *= c;
    return *this;
}

void Polynomial::sub_mul(const Integer& c, const Monomial& m, const Polynomial& q) {
    check_context(q);
    if (c == 0 || q.terms_.empty()) return;
    const Ring& r = *ring_;
    std::vector<Term> out;
    out.reserve(terms_.size() + q.terms_.size());
    std::size_t i = 0, j = 0;
    Monomial shifted;
    bool have = false;
    Integer s;
    while (j < q.terms_.size()) {
        if (!have) {
            shifted = q.terms_[j].mono * m;
            have = true;
        }
        if (i < terms_.size()) {
            int cmp = compare(terms_[i].mono, shifted, r);
            if (cmp > 0) {
                out.push_back(std::move(terms_[i++]));
                continue;
            }
            if (cmp == 0) {
                s = terms_[i].coeff;
                mpz_submul(s.get_mpz_t(), c.get_mpz_t(), q.terms_[j].coeff.get_mpz_t());
                if (s != 0) out.push_back(Term{shifted, s});
                ++i;
                ++j;
                have = false;
                continue;
            }
        }
        s = -c * q.terms_[j].coeff;
        out.push_back(Term{shifted, s});
        ++j;
        have = false;
    }
    for (; i < terms_.size(); ++i) out.push_back(std::move(terms_[i]));
    terms_ = std::move(out);
}

Polynomial Polynomial::mul_term(const Integer& c, const Monomial& m) const {
    Polynomial p(ring_);
    if (c == 0) return p;
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back(Term{t.mono * m, t.coeff * c});
    return p;
}

void Polynomial::pop_leading() {
    if (!terms_.empty()) terms_.erase(terms_.begin());
}

void Polynomial::divide_exact(const Integer& c) {
    for (auto& t : terms_) {
        if (!mpz_divisible_p(t.coeff.get_mpz_t(), c.get_mpz_t())) {
            throw InexactDivision("coefficient " + t.coeff.get_str() + " not divisible by " + c.get_str());
        }
        mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), c.get_mpz_t());
    }
}

Integer Polynomial::content() const {
    Integer g = 0;
    for (const auto& t : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

Polynomial Polynomial::evaluate(const std::map<int, Integer>& assignment) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    Integer pw;
    for (const auto& t : terms_) {
        Term nt = t;
        for (const auto& [var, value] : assignment) {
            auto e = nt.mono.exp[static_cast<std::size_t>(var)];
            if (e == 0) continue;
            mpz_pow_ui(pw.get_mpz_t(), value.get_mpz_t(), e);
            nt.coeff *= pw;
            nt.mono.exp[static_cast<std::size_t>(var)] = 0;
            nt.mono.degree = static_cast<std::uint16_t>(nt.mono.degree - e);
        }
        out.push_back(std::move(nt));
    }
    return from_terms(ring_, std::move(out));
}

Polynomial Polynomial::evaluate(const std::map<std::string, long>& assignment) const {
    std::map<int, Integer> idx;
    for (const auto& [name, value] : assignment) {
        int i = ring_->index_of(name);
        if (i < 0) throw PolyError("evaluate: unknown variable " + name);
        idx[i] = value;
    }
    return evaluate(idx);
}

Polynomial Polynomial::in_ring(const RingPtr& target) const {
    if (ring_ == target) return *this;
    std::vector<int> map(static_cast<std::size_t>(ring_->nvars()), -1);
    for (int i = 0; i < ring_->nvars(); ++i) map[static_cast<std::size_t>(i)] = target->index_of(ring_->name(i));
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        Term nt{Monomial{}, t.coeff};
        nt.mono.degree = t.mono.degree;
        for (int i = 0; i < ring_->nvars(); ++i) {
            auto e = t.mono.exp[static_cast<std::size_t>(i)];
            if (e == 0) continue;
            int j = map[static_cast<std::size_t>(i)];
            if (j < 0) throw PolyError("variable " + ring_->name(i) + " missing from target ring");
            nt.mono.exp[static_cast<std::size_t>(j)] = e;
        }
        out.push_back(std::move(nt));
    }
    return from_terms(target, std::move(out));
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        bool neg = t.coeff < 0;
        Integer mag = abs(t.coeff);
        if (first) {
            if (neg) os << '-';
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        bool wrote = false;
        if (mag != 1 || t.mono.is_one()) {
            os << mag.get_str();
            wrote = true;
        }
        for (int i = 0; i < ring_->nvars(); ++i) {
            auto e = t.mono.exp[static_cast<std::size_t>(i)];
            if (e == 0) continue;
            if (wrote) os << '*';
            os << ring_->name(i);
            if (e > 1) os << '^' << int{e};
            wrote = true;
        }
    }
    return os.str();
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    if (terms_.empty()) return true;
    check_context(o);
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (!(terms_[i].mono == o.terms_[i].mono) || terms_[i].coeff != o.terms_[i].coeff) return false;
    }
    return true;
}

Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.ring() != b.ring() && !a.ring()->same_context(*b.ring())) {
        throw PolyError("polynomials belong to different variable contexts");
    }
    std::vector<Term> out;
    out.reserve(a.term_count() * b.term_count());
    for (const auto& s : a.terms())
        for (const auto& t : b.terms()) out.push_back(Term{s.mono * t.mono, s.coeff * t.coeff});
    return Polynomial::from_terms(a.ring(), std::move(out));
}

Polynomial operator*(Polynomial a, const Integer& c) { return a *= c; }

Polynomial divide_exact(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw PolyError("division by zero polynomial");
    const Ring& r = *a.ring();
    Polynomial rem = a;
    std::vector<Term> quot;
    const Term& lb = b.leading_term();
    while (!rem.is_zero()) {
        const Term& lt = rem.leading_term();
        if (!lb.mono.divides(lt.mono, r.nvars()) ||
            !mpz_divisible_p(lt.coeff.get_mpz_t(), lb.coeff.get_mpz_t())) {
            throw InexactDivision("inexact polynomial division: " + a.to_string() + " / " + b.to_string());
        }
        Term q{quotient(lt.mono, lb.mono), Integer()};
        mpz_divexact(q.coeff.get_mpz_t(), lt.coeff.get_mpz_t(), lb.coeff.get_mpz_t());
        rem.sub_mul(q.coeff, q.mono, b);
        quot.push_back(std::move(q));
    }
    return Polynomial::from_terms(a.ring(), std::move(quot));
}

// ---------------------------------------------------------------------------
// parsing

namespace {

class Parser {
public:
    Parser(const RingPtr& ring, std::string_view text) : ring_(ring), text_(text) {}

    Polynomial parse_all() {
        Polynomial p = expr();
        skip();
        if (pos_ != text_.size()) fail("unexpected character");
        return p;
    }

    Polynomial expr() {
        skip();
        Polynomial acc(ring_);
        bool negate = false;
        if (peek() == '-' || peek() == '+') negate = get() == '-';
        Polynomial t = term();
        acc = negate ? -t : t;
        for (;;) {
            skip();
            char c = peek();
            if (c != '+' && c != '-') break;
            get();
            Polynomial rhs = term();
            if (c == '+') acc += rhs;
            else acc -= rhs;
        }
        return acc;
    }

private:
    Polynomial term() {
        Polynomial acc = factor();
        for (;;) {
            skip();
            char c = peek();
            if (c == '*') {
                get();
                acc = acc * factor();
            } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '(' || c == '_') {
                acc = acc * factor();
            } else {
                break;
            }
        }
        return acc;
    }

    Polynomial factor() {
        Polynomial base = atom();
        skip();
        if (peek() == '^') {
            get();
            skip();
            long e = integer_literal().get_si();
            if (e < 0) fail("negative exponent");
            Polynomial r(ring_, 1);
            for (long i = 0; i < e; ++i) r = r * base;
            return r;
        }
        return base;
    }

    Polynomial atom() {
        skip();
        char c = peek();
        if (c == '(') {
            get();
            Polynomial p = expr();
            skip();
            if (get() != ')') fail("expected ')'");
            return p;
        }
        if (c == '-') {
            get();
            return -factor();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return Polynomial(ring_, integer_literal());
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            // Variable names are matched greedily against the ring so that
            // juxtaposed factors such as "x_3y_0" split correctly.
            std::size_t best = 0;
            int best_idx = -1;
            std::size_t end = pos_;
            while (end < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_' ||
                    text_[end] == '\'')) {
                ++end;
            }
            for (std::size_t len = end - pos_; len > 0; --len) {
                int idx = ring_->index_of(text_.substr(pos_, len));
                if (idx >= 0) {
                    best = len;
                    best_idx = idx;
                    break;
                }
            }
            if (best_idx < 0) fail("unknown variable '" + std::string(text_.substr(pos_, end - pos_)) + "'");
            pos_ += best;
            return Polynomial::variable(ring_, best_idx);
        }
        fail("unexpected character");
    }

    Integer integer_literal() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        return Integer(std::string(text_.substr(start, pos_ - start)));
    }

    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    char get() { return pos_ < text_.size() ? text_[pos_++] : '\0'; }

    [[noreturn]] void fail(const std::string& msg) const {
        throw PolyError("parse error at offset " + std::to_string(pos_) + ": " + msg + " in \"" +
                        std::string(text_) + "\"");
    }

    const RingPtr& ring_;
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const RingPtr& ring, std::string_view text) { return Parser(ring, text).parse_all(); }

std::vector<Polynomial> parse_polynomial_list(const RingPtr& ring, std::string_view text) {
    std::string_view body = text;
    auto first = body.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && body[first] == '{') {
        auto last = body.find_last_of('}');
        if (last == std::string_view::npos || last < first) throw PolyError("unbalanced braces in list");
        body = body.substr(first + 1, last - first - 1);
    }
    std::vector<Polynomial> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= body.size(); ++i) {
        char c = i < body.size() ? body[i] : ',';
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            auto piece = body.substr(start, i - start);
            if (piece.find_first_not_of(" \t\r\n") != std::string_view::npos) {
                out.push_back(parse_polynomial(ring, piece));
            }
            start = i + 1;
        }
    }
    return out;
}

}  // namespace distideal
