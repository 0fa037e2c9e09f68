#include "distideal/groebner.hpp"

#include <algorithm>
#include <queue>

namespace distideal {

namespace {

// Reduces the terms of `p` from position `start` on. Terms before `start`
// are left alone (tail reduction uses start = 1).
Polynomial reduce_core(Polynomial p, std::span<const Polynomial* const> reducers, CoefficientDomain domain,
                       std::size_t start = 0) {
    const int nvars = p.ring()->nvars();
    std::size_t idx = start;
    Integer q, g, a;
    while (idx < p.term_count()) {
        const Term& t = p.terms()[idx];
        const Polynomial* best = nullptr;
        for (const Polynomial* r : reducers) {
            const Term& lt = r->leading_term();
            if (!lt.mono.divides(t.mono, nvars)) continue;
            if (domain == CoefficientDomain::Integers) {
                if (best == nullptr || mpz_cmpabs(lt.coeff.get_mpz_t(), best->leading_coeff().get_mpz_t()) < 0) best = r;
                if (lt.coeff == 1) break;
            } else {
                if (best == nullptr || r->term_count() < best->term_count()) best = r;
            }
        }
        if (best == nullptr) {
            ++idx;
            continue;
        }
        const Term& lt = best->leading_term();
        Monomial shift = quotient(t.mono, lt.mono);
        if (domain == CoefficientDomain::Integers) {
            mpz_fdiv_q(q.get_mpz_t(), t.coeff.get_mpz_t(), lt.coeff.get_mpz_t());
            if (q == 0) {
                ++idx;
                continue;
            }
            Monomial before = t.mono;
            p.sub_mul(q, shift, *best);
            if (idx < p.term_count() && p.terms()[idx].mono == before) ++idx;
        } else {
            mpz_gcd(g.get_mpz_t(), t.coeff.get_mpz_t(), lt.coeff.get_mpz_t());
            mpz_divexact(a.get_mpz_t(), lt.coeff.get_mpz_t(), g.get_mpz_t());
            mpz_divexact(q.get_mpz_t(), t.coeff.get_mpz_t(), g.get_mpz_t());
            if (a < 0) {
                a = -a;
                q = -q;
            }
            p *= a;
            p.sub_mul(q, shift, *best);
            Integer c = p.content();
            if (c > 1) p.divide_exact(c);
        }
    }
    return p;
}

std::vector<const Polynomial*> pointers(std::span<const Polynomial> basis) {
    std::vector<const Polynomial*> out;
    for (const auto& b : basis)
        if (!b.is_zero()) out.push_back(&b);
    return out;
}

void make_primitive(Polynomial& p) {
    if (p.is_zero()) return;
    Integer c = p.content();
    if (p.leading_coeff() < 0) c = -c;
    if (c != 1) p.divide_exact(c);
}

}  // namespace

Polynomial strong_reduce(const Polynomial& p, std::span<const Polynomial> basis) {
    auto ptrs = pointers(basis);
    for (const Polynomial* b : ptrs) {
        if (b->ring() != p.ring() && !b->ring()->same_context(*p.ring())) {
            throw PolyError("strong_reduce: basis and polynomial have different contexts");
        }
    }
    return reduce_core(p, ptrs, CoefficientDomain::Integers);
}

Polynomial rational_reduce(const Polynomial& p, std::span<const Polynomial> basis) {
    auto ptrs = pointers(basis);
    Polynomial r = reduce_core(p, ptrs, CoefficientDomain::Rationals);
    make_primitive(r);
    return r;
}

// ---------------------------------------------------------------------------
// GroebnerBasis

bool GroebnerBasis::contains_one() const {
    for (const auto& g : generators) {
        if (!g.is_constant() || g.is_zero()) continue;
        if (domain == CoefficientDomain::Rationals) return true;
        if (abs(g.constant_value()) == 1) return true;
    }
    return false;
}

std::vector<std::string> GroebnerBasis::to_strings() const {
    std::vector<std::string> out;
    for (const auto& g : generators) out.push_back(g.to_string());
    return out;
}

// ---------------------------------------------------------------------------
// engine

GroebnerEngine::GroebnerEngine(RingPtr ring, CoefficientDomain domain, GroebnerOptions options)
    : ring_(std::move(ring)), domain_(domain), options_(options) {}

void GroebnerEngine::normalize(Polynomial& p) const {
    if (p.is_zero()) return;
    if (domain_ == CoefficientDomain::Rationals) {
        make_primitive(p);
    } else if (p.leading_coeff() < 0) {
        p = -p;
    }
}

Polynomial GroebnerEngine::reduce(const Polynomial& p) const {
    std::vector<const Polynomial*> ptrs;
    ptrs.reserve(elements_.size());
    for (const auto& e : elements_)
        if (e.active) ptrs.push_back(&e.poly);
    Polynomial r = reduce_core(p, ptrs, domain_);
    normalize(r);
    return r;
}

bool GroebnerEngine::leading_divides(const Polynomial& a, const Polynomial& b) const {
    if (!a.leading_monomial().divides(b.leading_monomial(), ring_->nvars())) return false;
    if (domain_ == CoefficientDomain::Rationals) return true;
    return mpz_divisible_p(b.leading_coeff().get_mpz_t(), a.leading_coeff().get_mpz_t()) != 0;
}

void GroebnerEngine::insert(Polynomial p, int sugar) {
    std::vector<std::pair<Polynomial, int>> pending{{std::move(p), sugar}};
    while (!pending.empty() && !unit_) {
        auto [poly, s] = std::move(pending.back());
        pending.pop_back();
        poly = reduce(poly);
        if (poly.is_zero()) continue;
        if (poly.is_constant() &&
            (domain_ == CoefficientDomain::Rationals || abs(poly.constant_value()) == 1)) {
            unit_ = true;
            break;
        }
        // Elements whose leading term the newcomer divides are retired and
        // re-reduced against the enlarged basis.
        for (auto& e : elements_) {
            if (e.active && leading_divides(poly, e.poly)) {
                e.active = false;
                pending.emplace_back(e.poly, e.sugar);
            }
        }
        std::size_t idx = elements_.size();
        elements_.push_back(Element{poly, s, true});
        for (std::size_t j = 0; j < idx; ++j) {
            if (!elements_[j].active) continue;
            const auto& a = elements_[j].poly;
            Monomial m = lcm(a.leading_monomial(), poly.leading_monomial(), ring_->nvars());
            int sa = elements_[j].sugar + (m.degree - a.leading_monomial().degree);
            int sb = s + (m.degree - poly.leading_monomial().degree);
            pairs_.push_back(Pair{j, idx, std::max(sa, sb), m.degree, serial_++});
        }
    }
    if (unit_) pairs_.clear();
}

void GroebnerEngine::add(std::span<const Polynomial> gens) {
    for (const auto& g : gens) {
        if (unit_) return;
        Polynomial p = g.in_ring(ring_);
        if (p.is_zero()) continue;
        insert(std::move(p), std::max(0, p.total_degree()));
    }
}

void GroebnerEngine::process(const Pair& pair) {
    const Element& ei = elements_[pair.i];
    const Element& ej = elements_[pair.j];
    if (!ei.active || !ej.active) return;
    const Polynomial fi = ei.poly;
    const Polynomial fj = ej.poly;
    const int nvars = ring_->nvars();
    const Monomial& mi = fi.leading_monomial();
    const Monomial& mj = fj.leading_monomial();
    Monomial m = lcm(mi, mj, nvars);
    Monomial ui = quotient(m, mi), uj = quotient(m, mj);
    const Integer& ci = fi.leading_coeff();
    const Integer& cj = fj.leading_coeff();
    bool coprime_monomials = mi.coprime(mj, nvars);

    auto count = [&] {
        if (++reductions_ > options_.budget) throw BudgetExceeded(options_.budget);
    };

    if (domain_ == CoefficientDomain::Rationals) {
        if (coprime_monomials) return;
        count();
        Polynomial s = fi.mul_term(cj, ui);
        s.sub_mul(ci, uj, fj);
        insert(std::move(s), pair.sugar);
        return;
    }

    Integer g;
    mpz_gcd(g.get_mpz_t(), ci.get_mpz_t(), cj.get_mpz_t());
    bool need_gpoly = g != ci && g != cj;
    if (!(coprime_monomials && g == 1)) {
        count();
        Integer l = ci / g * cj;
        Polynomial s = fi.mul_term(l / ci, ui);
        s.sub_mul(l / cj, uj, fj);
        insert(std::move(s), pair.sugar);
        if (unit_) return;
    }
    if (need_gpoly) {
        count();
        Integer a, b, d;
        mpz_gcdext(d.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t(), ci.get_mpz_t(), cj.get_mpz_t());
        Polynomial gp = fi.mul_term(a, ui);
        gp.sub_mul(-b, uj, fj);
        insert(std::move(gp), pair.sugar);
    }
}

void GroebnerEngine::complete() {
    auto worse = [](const Pair& a, const Pair& b) {
        if (a.sugar != b.sugar) return a.sugar > b.sugar;
        if (a.degree != b.degree) return a.degree > b.degree;
        return a.serial > b.serial;
    };
    while (!pairs_.empty() && !unit_) {
        auto it = std::min_element(pairs_.begin(), pairs_.end(), [&](const Pair& a, const Pair& b) {
            return worse(b, a);
        });
        Pair p = *it;
        *it = pairs_.back();
        pairs_.pop_back();
        process(p);
    }
    if (unit_) pairs_.clear();
}

GroebnerBasis GroebnerEngine::basis() const {
    GroebnerBasis out;
    out.ring = ring_;
    out.domain = domain_;
    out.interreduced = true;
    out.reductions = reductions_;
    if (unit_) {
        out.generators.emplace_back(ring_, 1);
        return out;
    }
    std::vector<Polynomial> active;
    for (const auto& e : elements_)
        if (e.active) active.push_back(e.poly);
    // Minimal basis: drop elements whose leading term another one divides.
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < active.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < active.size() && !redundant; ++j) {
            if (i == j || !leading_divides(active[j], active[i])) continue;
            bool mutual = leading_divides(active[i], active[j]);
            redundant = !mutual || j < i;
        }
        if (!redundant) minimal.push_back(active[i]);
    }
    // Tail reduction against the other members.
    std::vector<Polynomial> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<const Polynomial*> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(&minimal[j]);
        Polynomial r = reduce_core(minimal[i], others, domain_, 1);
        normalize(r);
        reduced.push_back(std::move(r));
    }
    const Ring& ring = *ring_;
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
        int c = compare(a.leading_monomial(), b.leading_monomial(), ring);
        if (c != 0) return c < 0;
        return a.leading_coeff() < b.leading_coeff();
    });
    out.generators = std::move(reduced);
    return out;
}

// ---------------------------------------------------------------------------

RingPtr ring_for_order(const RingPtr& source, const MonomialOrder& order) {
    std::vector<std::string> names;
    for (const auto& p : order.precedence) {
        if (source->index_of(p) < 0) throw PolyError("order mentions unknown variable " + p);
        names.push_back(source->name(source->index_of(p)));
    }
    for (const auto& n : source->names())
        if (std::find(names.begin(), names.end(), n) == names.end()) names.push_back(n);
    return Ring::make(std::move(names), order.kind);
}

namespace {

GroebnerBasis compute(std::span<const Polynomial> gens, const MonomialOrder& order, CoefficientDomain domain,
                      const GroebnerOptions& options) {
    if (gens.empty()) throw PolyError("Groebner basis of an empty generator list");
    GroebnerEngine engine(ring_for_order(gens.front().ring(), order), domain, options);
    engine.add(gens);
    engine.complete();
    return engine.basis();
}

}  // namespace

GroebnerBasis strong_groebner(std::span<const Polynomial> gens, const MonomialOrder& order,
                              const GroebnerOptions& options) {
    return compute(gens, order, CoefficientDomain::Integers, options);
}

GroebnerBasis rational_groebner(std::span<const Polynomial> gens, const MonomialOrder& order,
                                const GroebnerOptions& options) {
    return compute(gens, order, CoefficientDomain::Rationals, options);
}

bool ideal_contains(const GroebnerBasis& b, const Polynomial& p) {
    Polynomial q = p.in_ring(b.ring);
    auto ptrs = pointers(b.generators);
    return reduce_core(q, ptrs, b.domain).is_zero();
}

bool ideal_equal(std::span<const Polynomial> a, std::span<const Polynomial> b, const MonomialOrder& order,
                 CoefficientDomain domain, const GroebnerOptions& options) {
    GroebnerBasis ga = compute(a, order, domain, options);
    GroebnerBasis gb = compute(b, order, domain, options);
    for (const auto& p : b)
        if (!ideal_contains(ga, p)) return false;
    for (const auto& p : a)
        if (!ideal_contains(gb, p)) return false;
    return true;
}

}  // namespace distideal
