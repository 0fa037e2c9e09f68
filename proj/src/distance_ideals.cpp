#include "distideal/distance_ideals.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <numeric>
#include <random>
#include <unordered_set>

namespace distideal {

std::string to_string(Decision d) {
    switch (d) {
        case Decision::Trivial: return "trivial";
        case Decision::NonTrivial: return "non-trivial";
        case Decision::Inconclusive: return "inconclusive";
    }
    return "?";
}

std::string to_string(CertificateKind k) {
    switch (k) {
        case CertificateKind::UnitMinor: return "UnitMinor";
        case CertificateKind::ConstantGcdOne: return "ConstantGcdOne";
        case CertificateKind::EvaluationObstruction: return "EvaluationObstruction";
        case CertificateKind::GroebnerContainsOne: return "GroebnerContainsOne";
        case CertificateKind::GroebnerProper: return "GroebnerProper";
        case CertificateKind::BudgetExceeded: return "BudgetExceeded";
    }
    return "?";
}

std::vector<Polynomial> distance_ideal_generators(const Graph& g, std::size_t i) {
    if (i == 0 || i > static_cast<std::size_t>(g.order())) throw std::invalid_argument("minor size out of range");
    return minors(generalized_distance_matrix(g), i);
}

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t bit(std::size_t k) { return std::uint64_t{1} << k; }

std::vector<std::size_t> subset_of(std::uint64_t mask) {
    std::vector<std::size_t> out;
    for (; mask != 0; mask &= mask - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(mask)));
    return out;
}

bool is_unit(const Integer& c, CoefficientDomain domain) {
    return domain == CoefficientDomain::Rationals ? c != 0 : abs(c) == 1;
}

// Product of the first i invariant factors, or 0 when the rank is below i.
Integer leading_factor_product(const IntMatrix& a, std::size_t i) {
    SnfResult s = snf(a);
    if (s.rank() < i) return 0;
    Integer p = 1;
    for (std::size_t k = 0; k < i; ++k) p *= s.invariant_factors[k];
    return p;
}

IntMatrix evaluate_matrix(const PolyMatrix& m, const std::vector<Integer>& point) {
    std::map<int, Integer> assignment;
    for (std::size_t v = 0; v < point.size(); ++v) assignment[static_cast<int>(v)] = point[v];
    return m.evaluate(assignment).to_int_matrix();
}

// ---------------------------------------------------------------------------
// constant minors of all-constant submatrices

struct ConstantScan {
    bool unit = false;
    MinorIndex unit_minor;
    Integer unit_value;
    Integer gcd = 0;
    std::vector<Integer> witnesses;  // constants at which the running gcd dropped
};

// Small exact determinant; entries are bounded so that 128-bit Bareiss
// cannot overflow for the sizes handled here.
bool small_det(const std::vector<std::vector<std::int64_t>>& rows, std::size_t k, __int128& out) {
    std::vector<std::vector<__int128>> a(k, std::vector<__int128>(k));
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < k; ++c) a[r][c] = rows[r][c];
    int sign = 1;
    __int128 prev = 1;
    for (std::size_t p = 0; p + 1 < k; ++p) {
        if (a[p][p] == 0) {
            std::size_t s = p + 1;
            while (s < k && a[s][p] == 0) ++s;
            if (s == k) {
                out = 0;
                return true;
            }
            std::swap(a[p], a[s]);
            sign = -sign;
        }
        for (std::size_t r = p + 1; r < k; ++r) {
            for (std::size_t c = p + 1; c < k; ++c) a[r][c] = (a[r][c] * a[p][p] - a[r][p] * a[p][c]) / prev;
            a[r][p] = 0;
        }
        prev = a[p][p];
    }
    out = sign * a[k - 1][k - 1];
    return true;
}

ConstantScan scan_constant_submatrices(const PolyMatrix& m, std::size_t i, CoefficientDomain domain) {
    ConstantScan out;
    const std::size_t n = m.dim();
    std::vector<std::uint64_t> const_cols(n, 0);
    std::vector<std::vector<std::int64_t>> value(n, std::vector<std::int64_t>(n, 0));
    bool small = i <= 10;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            const Polynomial& e = m(r, c);
            if (!e.is_constant()) continue;
            Integer v = e.constant_value();
            if (abs(v) > (1 << 20)) {
                small = false;
                continue;
            }
            const_cols[r] |= bit(c);
            value[r][c] = v.get_si();
        }
    if (!small) return out;

    std::vector<std::size_t> rows(i);
    std::iota(rows.begin(), rows.end(), std::size_t{0});
    std::vector<std::vector<std::int64_t>> sub(i, std::vector<std::int64_t>(i));
    do {
        std::uint64_t allowed = ~std::uint64_t{0};
        for (auto r : rows) allowed &= const_cols[r];
        if (std::popcount(allowed) < static_cast<int>(i)) continue;
        auto pool = subset_of(allowed);
        std::vector<std::size_t> pick(i);
        std::iota(pick.begin(), pick.end(), std::size_t{0});
        do {
            for (std::size_t a = 0; a < i; ++a)
                for (std::size_t b = 0; b < i; ++b) sub[a][b] = value[rows[a]][pool[pick[b]]];
            __int128 d = 0;
            small_det(sub, i, d);
            if (d == 0) continue;
            Integer v(static_cast<long>(d));
            if (is_unit(v, domain)) {
                out.unit = true;
                out.unit_minor.rows = rows;
                out.unit_minor.cols.clear();
                for (auto p : pick) out.unit_minor.cols.push_back(pool[p]);
                out.unit_value = v;
                return out;
            }
            Integer g = gcd(out.gcd, v);
            if (g != out.gcd) {
                out.gcd = g;
                out.witnesses.push_back(v);
            }
        } while (next_combination(pick, pool.size()));
    } while (next_combination(rows, n));
    return out;
}

// ---------------------------------------------------------------------------
// residues

class ResidueEvaluator {
public:
    ResidueEvaluator(const PolyMatrix& m, long p) : m_(m), p_(p), n_(m.dim()) {}

    // Rank of m at `point` over Z/p.
    std::size_t rank(const std::vector<long>& point) {
        const int nv = m_.ring()->nvars();
        a_.assign(n_ * n_, 0);
        for (std::size_t r = 0; r < n_; ++r)
            for (std::size_t c = 0; c < n_; ++c) {
                long acc = 0;
                for (const auto& t : m_(r, c).terms()) {
                    long term = mpz_fdiv_ui(t.coeff.get_mpz_t(), static_cast<unsigned long>(p_));
                    for (int v = 0; v < nv && term != 0; ++v)
                        for (int e = 0; e < t.mono.exp[static_cast<std::size_t>(v)]; ++e)
                            term = term * point[static_cast<std::size_t>(v)] % p_;
                    acc = (acc + term) % p_;
                }
                a_[r * n_ + c] = acc;
            }
        std::size_t rk = 0;
        for (std::size_t c = 0; c < n_ && rk < n_; ++c) {
            std::size_t piv = rk;
            while (piv < n_ && a_[piv * n_ + c] == 0) ++piv;
            if (piv == n_) continue;
            for (std::size_t k = 0; k < n_; ++k) std::swap(a_[piv * n_ + k], a_[rk * n_ + k]);
            long inv = inverse(a_[rk * n_ + c]);
            for (std::size_t r = rk + 1; r < n_; ++r) {
                long f = a_[r * n_ + c] * inv % p_;
                if (f == 0) continue;
                for (std::size_t k = c; k < n_; ++k)
                    a_[r * n_ + k] = ((a_[r * n_ + k] - f * a_[rk * n_ + k]) % p_ + p_) % p_;
            }
            ++rk;
        }
        return rk;
    }

private:
    long inverse(long a) const {
        long result = 1, base = a, e = p_ - 2;
        while (e > 0) {
            if (e & 1) result = result * base % p_;
            base = base * base % p_;
            e >>= 1;
        }
        return result;
    }

    const PolyMatrix& m_;
    long p_;
    std::size_t n_;
    std::vector<long> a_;
};

// Searches residue points modulo small primes at which every i-minor
// vanishes. Returns the integer representative of such a point.
std::optional<std::vector<Integer>> residue_obstruction(const PolyMatrix& m, std::size_t i,
                                                        const TrivialityOptions& opts) {
    const auto nv = static_cast<std::size_t>(m.ring()->nvars());
    std::mt19937_64 rng(opts.seed ^ 0x9e3779b97f4a7c15ULL);
    for (long p : {2L, 3L, 5L}) {
        ResidueEvaluator eval(m, p);
        std::vector<long> point(nv, 0);
        double total = std::pow(static_cast<double>(p), static_cast<double>(nv));
        auto hit = [&]() -> std::optional<std::vector<Integer>> {
            if (eval.rank(point) >= i) return std::nullopt;
            std::vector<Integer> out;
            for (long v : point) out.emplace_back(v);
            return out;
        };
        if (total <= static_cast<double>(opts.grid_limit)) {
            while (true) {
                if (auto h = hit()) return h;
                std::size_t k = 0;
                while (k < nv && ++point[k] == p) point[k++] = 0;
                if (k == nv) break;
            }
        } else {
            for (std::size_t s = 0; s < opts.grid_limit; ++s) {
                for (auto& v : point) v = static_cast<long>(rng() % static_cast<std::uint64_t>(p));
                if (auto h = hit()) return h;
            }
        }
    }
    return std::nullopt;
}

// Small integer points where the rank over the rationals drops below i.
std::optional<std::vector<Integer>> rational_obstruction(const PolyMatrix& m, std::size_t i,
                                                         const TrivialityOptions& opts) {
    const auto nv = static_cast<std::size_t>(m.ring()->nvars());
    constexpr long kLarge = 2147483647;
    ResidueEvaluator filter(m, kLarge);
    const std::vector<long> values{0, 1, -1, 2, -2};
    std::vector<std::size_t> digit(nv, 0);
    std::vector<long> point(nv, 0);
    for (std::size_t count = 0; count < opts.grid_limit; ++count) {
        for (std::size_t k = 0; k < nv; ++k) point[k] = (values[digit[k]] + kLarge) % kLarge;
        if (filter.rank(point) < i) {
            std::vector<Integer> candidate;
            for (std::size_t k = 0; k < nv; ++k) candidate.emplace_back(values[digit[k]]);
            if (snf(evaluate_matrix(m, candidate)).rank() < i) return candidate;
        }
        std::size_t k = 0;
        while (k < nv && ++digit[k] == values.size()) digit[k++] = 0;
        if (k == nv) break;
    }
    return std::nullopt;
}

struct GeneratorKey {
    std::size_t degree;
    std::size_t terms;
    std::size_t serial;
};

}  // namespace

TrivialityVerdict matrix_ideal_triviality(const PolyMatrix& m, std::size_t i, const TrivialityOptions& opts) {
    const auto start = Clock::now();
    const std::size_t n = m.dim();
    if (i == 0 || i > n) throw std::invalid_argument("minor size out of range");
    const CoefficientDomain domain = opts.domain;
    TrivialityVerdict v;
    auto finish = [&](Decision d, CertificateKind k) {
        v.decision = d;
        v.kind = k;
        v.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
        return v;
    };

    // Constant minors of all-constant submatrices.
    ConstantScan cs = scan_constant_submatrices(m, i, domain);
    if (cs.unit) {
        v.minor = cs.unit_minor;
        v.minor_value = cs.unit_value;
        return finish(Decision::Trivial, CertificateKind::UnitMinor);
    }
    if (domain == CoefficientDomain::Integers && cs.gcd == 1) {
        v.constants = cs.witnesses;
        return finish(Decision::Trivial, CertificateKind::ConstantGcdOne);
    }

    // Evaluation at X = 0 and at pseudorandom points in {-3..3}.
    const auto nv = static_cast<std::size_t>(m.ring()->nvars());
    std::mt19937_64 rng(opts.seed);
    for (int k = 0; k <= opts.random_points; ++k) {
        std::vector<Integer> point(nv, 0);
        if (k > 0)
            for (auto& x : point) x = static_cast<long>(rng() % 7) - 3;
        Integer g = leading_factor_product(evaluate_matrix(m, point), i);
        bool obstructed = domain == CoefficientDomain::Integers ? g != 1 : g == 0;
        if (obstructed) {
            v.assignment = point;
            v.gcd = g;
            return finish(Decision::NonTrivial, CertificateKind::EvaluationObstruction);
        }
    }

    // Every minor symbolically.
    std::vector<Polynomial> gens;
    std::vector<GeneratorKey> keys;
    std::unordered_set<std::string> seen;
    Integer constant_gcd = 0;
    std::vector<Integer> witnesses;
    bool unit_found = false;
    for_each_minor(m, i, [&](const MinorIndex& idx, const Polynomial& p) {
        if (unit_found || p.is_zero()) return;
        if (p.is_constant()) {
            Integer c = p.constant_value();
            if (is_unit(c, domain)) {
                unit_found = true;
                v.minor = idx;
                v.minor_value = c;
                return;
            }
            Integer g = gcd(constant_gcd, c);
            if (g != constant_gcd) {
                constant_gcd = g;
                witnesses.push_back(c);
            }
            return;
        }
        Polynomial q = p.leading_coeff() < 0 ? -p : p;
        if (!seen.insert(q.to_string()).second) return;
        keys.push_back({static_cast<std::size_t>(q.total_degree()), q.term_count(), gens.size()});
        gens.push_back(std::move(q));
    });
    v.generator_count = gens.size() + (constant_gcd != 0 ? 1 : 0);
    if (unit_found) return finish(Decision::Trivial, CertificateKind::UnitMinor);
    if (domain == CoefficientDomain::Integers && constant_gcd == 1) {
        v.constants = witnesses;
        return finish(Decision::Trivial, CertificateKind::ConstantGcdOne);
    }

    // Residue-grid and small-grid evaluation.
    auto point = domain == CoefficientDomain::Integers ? residue_obstruction(m, i, opts) : rational_obstruction(m, i, opts);
    if (point) {
        v.assignment = *point;
        v.gcd = leading_factor_product(evaluate_matrix(m, *point), i);
        return finish(Decision::NonTrivial, CertificateKind::EvaluationObstruction);
    }

    // Streamed Groebner completion, lowest degree first.
    std::sort(keys.begin(), keys.end(), [](const GeneratorKey& a, const GeneratorKey& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        if (a.terms != b.terms) return a.terms < b.terms;
        return a.serial < b.serial;
    });
    std::vector<Polynomial> ordered;
    if (constant_gcd != 0) ordered.emplace_back(m.ring(), constant_gcd);
    for (const auto& k : keys) ordered.push_back(gens[k.serial]);

    RingPtr ring = ring_for_order(m.ring(), MonomialOrder::grevlex());
    GroebnerEngine engine(ring, domain, opts.groebner);
    const std::size_t batch = std::max<std::size_t>(1, opts.groebner.batch);
    try {
        for (std::size_t s = 0; s < ordered.size(); s += batch) {
            std::size_t e = std::min(ordered.size(), s + batch);
            engine.add(std::span<const Polynomial>(ordered.data() + s, e - s));
            engine.complete();
            if (engine.has_unit()) {
                v.reductions = engine.reductions();
                return finish(Decision::Trivial, CertificateKind::GroebnerContainsOne);
            }
        }
    } catch (const BudgetExceeded&) {
        v.reductions = engine.reductions();
        return finish(Decision::Inconclusive, CertificateKind::BudgetExceeded);
    }
    GroebnerBasis b = engine.basis();
    v.reductions = engine.reductions();
    v.basis_size = b.generators.size();
    for (std::size_t k = 0; k < std::min<std::size_t>(5, b.generators.size()); ++k)
        v.basis_head.push_back(b.generators[k].to_string());
    return finish(b.contains_one() ? Decision::Trivial : Decision::NonTrivial,
                  b.contains_one() ? CertificateKind::GroebnerContainsOne : CertificateKind::GroebnerProper);
}

TrivialityVerdict ideal_triviality(const Graph& g, std::size_t i, const TrivialityOptions& opts) {
    if (i == 0 || i > static_cast<std::size_t>(g.order())) throw std::invalid_argument("minor size out of range");
    return matrix_ideal_triviality(generalized_distance_matrix(g), i, opts);
}

namespace {

PhiResult ascend(const Graph& g, int bound, const TrivialityOptions& opts) {
    PhiResult r;
    r.phi_snf = bound;
    PolyMatrix m = generalized_distance_matrix(g);
    const int n = g.order();
    for (int i = 1; i <= std::min(bound + 1, n); ++i) {
        r.verdicts.push_back(matrix_ideal_triviality(m, static_cast<std::size_t>(i), opts));
        const auto& v = r.verdicts.back();
        if (v.decision == Decision::Trivial) {
            r.phi_ideals = i;
            continue;
        }
        if (v.decision == Decision::Inconclusive) r.status = PhiStatus::Inconclusive;
        break;
    }
    return r;
}

}  // namespace

PhiResult phi_trivial_count(const Graph& g, const TrivialityOptions& opts) {
    TrivialityOptions o = opts;
    o.domain = CoefficientDomain::Integers;
    return ascend(g, phi_unit_count(g), o);
}

PhiResult phi_over_rationals(const Graph& g, const TrivialityOptions& opts) {
    TrivialityOptions o = opts;
    o.domain = CoefficientDomain::Rationals;
    return ascend(g, static_cast<int>(snf(distance_matrix(g)).rank()), o);
}

std::vector<TrivialityVerdict> triviality_ladder(const Graph& g, std::size_t max_i, const TrivialityOptions& opts) {
    max_i = std::min(max_i, static_cast<std::size_t>(g.order()));
    PolyMatrix m = generalized_distance_matrix(g);
    std::vector<TrivialityVerdict> out;
    for (std::size_t i = 1; i <= max_i; ++i) out.push_back(matrix_ideal_triviality(m, i, opts));
    return out;
}

std::optional<bool> lambda_membership(const Graph& g, int k, const TrivialityOptions& opts) {
    if (k < 1) throw std::invalid_argument("lambda_membership: k must be positive");
    if (!is_connected(g)) throw DisconnectedGraph();
    if (phi_unit_count(g) <= k || k >= g.order()) return true;
    TrivialityOptions o = opts;
    o.domain = CoefficientDomain::Integers;
    TrivialityVerdict v = ideal_triviality(g, static_cast<std::size_t>(k + 1), o);
    if (!v.conclusive()) return std::nullopt;
    return !v.trivial();
}

Integer evaluated_delta(const Graph& g, std::size_t i, const std::vector<Integer>& d) {
    if (d.size() != static_cast<std::size_t>(g.order())) throw std::invalid_argument("assignment size mismatch");
    IntMatrix a = distance_matrix(g);
    for (std::size_t k = 0; k < d.size(); ++k) a(k, k) = d[k];
    return leading_factor_product(a, i);
}

// ---------------------------------------------------------------------------

namespace {

nlohmann::json integer_json(const Integer& z) {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

nlohmann::json integers_json(const std::vector<Integer>& zs) {
    auto out = nlohmann::json::array();
    for (const auto& z : zs) out.push_back(integer_json(z));
    return out;
}

}  // namespace

nlohmann::json verdict_json(const Graph& g, std::size_t i, const TrivialityVerdict& v) {
    nlohmann::json data = nlohmann::json::object();
    switch (v.kind) {
        case CertificateKind::UnitMinor:
            data = {{"rows", v.minor.rows}, {"cols", v.minor.cols}, {"value", integer_json(v.minor_value)}};
            break;
        case CertificateKind::ConstantGcdOne: data = {{"constants", integers_json(v.constants)}}; break;
        case CertificateKind::EvaluationObstruction:
            data = {{"assignment", integers_json(v.assignment)}, {"gcd", integer_json(v.gcd)}};
            break;
        case CertificateKind::GroebnerContainsOne: data = {{"reductions", v.reductions}}; break;
        case CertificateKind::GroebnerProper:
            data = {{"basis_size", v.basis_size}, {"basis_head", v.basis_head}, {"reductions", v.reductions}};
            break;
        case CertificateKind::BudgetExceeded: data = {{"reductions", v.reductions}}; break;
    }
    return {{"graph", emit_graph6(g)},
            {"i", i},
            {"decision", to_string(v.decision)},
            {"certificate_kind", to_string(v.kind)},
            {"certificate_data", data},
            {"elapsed_ms", v.elapsed_ms}};
}

nlohmann::json phi_json(const Graph& g, const PhiResult& r) {
    auto verdicts = nlohmann::json::array();
    for (std::size_t k = 0; k < r.verdicts.size(); ++k) verdicts.push_back(verdict_json(g, k + 1, r.verdicts[k]));
    return {{"graph", emit_graph6(g)},
            {"phi_ideals", r.phi_ideals},
            {"phi_snf", r.phi_snf},
            {"status", r.complete() ? "complete" : "inconclusive"},
            {"verdicts", verdicts}};
}

}  // namespace distideal
