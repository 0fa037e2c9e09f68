#include "distideal/int_matrix.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace distideal {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("IntMatrix: ragged initializer");
        for (long v : r) data_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const {
    IntMatrix out(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = (*this)(rows[i], cols[j]);
    return out;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
    if (factor == 0) return;
    for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += factor * (*this)(src, c);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
    if (factor == 0) return;
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += factor * (*this)(r, src);
}

void IntMatrix::negate_row(std::size_t r) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

bool IntMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Integer& v) { return v == 0; });
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t r = 0; r < rows_; ++r) {
        os << (r ? ", [" : "[");
        for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c).get_str();
        os << ']';
    }
    os << ']';
    return os.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("IntMatrix: dimension mismatch in product");
    IntMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
        }
    return out;
}

Integer determinant(const IntMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant: matrix is not square");
    std::size_t n = a.rows();
    if (n == 0) return 1;
    IntMatrix m = a;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0) ++p;
            if (p == n) return 0;
            m.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                m(i, j) = std::move(t);
            }
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

// ---------------------------------------------------------------------------
// Smith normal form

namespace {

struct SnfWork {
    IntMatrix m;
    std::optional<IntMatrix> left, right;

    void swap_rows(std::size_t a, std::size_t b) {
        m.swap_rows(a, b);
        if (left) left->swap_rows(a, b);
    }
    void swap_cols(std::size_t a, std::size_t b) {
        m.swap_cols(a, b);
        if (right) right->swap_cols(a, b);
    }
    void add_row(std::size_t dst, std::size_t src, const Integer& f) {
        m.add_row_multiple(dst, src, f);
        if (left) left->add_row_multiple(dst, src, f);
    }
    void add_col(std::size_t dst, std::size_t src, const Integer& f) {
        m.add_col_multiple(dst, src, f);
        if (right) right->add_col_multiple(dst, src, f);
    }
    void negate_row(std::size_t r) {
        m.negate_row(r);
        if (left) left->negate_row(r);
    }

    // Moves the smallest nonzero |entry| of the trailing block to (t, t).
    bool place_pivot(std::size_t t) {
        std::size_t br = 0, bc = 0;
        bool found = false;
        for (std::size_t r = t; r < m.rows(); ++r)
            for (std::size_t c = t; c < m.cols(); ++c) {
                if (m(r, c) == 0) continue;
                if (!found || mpz_cmpabs(m(r, c).get_mpz_t(), m(br, bc).get_mpz_t()) < 0) {
                    br = r;
                    bc = c;
                    found = true;
                }
            }
        if (!found) return false;
        swap_rows(t, br);
        swap_cols(t, bc);
        return true;
    }

    // Clears row t and column t outside the pivot. Returns false if a nonzero
    // remainder was left behind (the caller re-selects the pivot).
    bool eliminate(std::size_t t) {
        bool clean = true;
        Integer q;
        for (std::size_t r = t + 1; r < m.rows(); ++r) {
            if (m(r, t) == 0) continue;
            mpz_fdiv_q(q.get_mpz_t(), m(r, t).get_mpz_t(), m(t, t).get_mpz_t());
            add_row(r, t, -q);
            if (m(r, t) != 0) clean = false;
        }
        for (std::size_t c = t + 1; c < m.cols(); ++c) {
            if (m(t, c) == 0) continue;
            mpz_fdiv_q(q.get_mpz_t(), m(t, c).get_mpz_t(), m(t, t).get_mpz_t());
            add_col(c, t, -q);
            if (m(t, c) != 0) clean = false;
        }
        return clean;
    }

    // Finds an entry in the trailing block not divisible by the pivot and
    // folds its row into row t.
    bool repair_divisibility(std::size_t t) {
        for (std::size_t r = t + 1; r < m.rows(); ++r)
            for (std::size_t c = t + 1; c < m.cols(); ++c) {
                if (!mpz_divisible_p(m(r, c).get_mpz_t(), m(t, t).get_mpz_t())) {
                    add_row(t, r, 1);
                    return true;
                }
            }
        return false;
    }
};

}  // namespace

SnfResult snf(const IntMatrix& a, bool want_transforms) {
    SnfWork w{a, std::nullopt, std::nullopt};
    if (want_transforms) {
        w.left = IntMatrix::identity(a.rows());
        w.right = IntMatrix::identity(a.cols());
    }
    SnfResult out;
    std::size_t limit = std::min(a.rows(), a.cols());
    for (std::size_t t = 0; t < limit; ++t) {
        if (!w.place_pivot(t)) break;
        for (;;) {
            if (!w.eliminate(t)) {
                w.place_pivot(t);
                continue;
            }
            if (w.repair_divisibility(t)) continue;
            break;
        }
        if (w.m(t, t) < 0) w.negate_row(t);
        out.invariant_factors.push_back(w.m(t, t));
    }
    out.left = std::move(w.left);
    out.right = std::move(w.right);
    return out;
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
    std::size_t k = idx.size();
    if (k == 0) return false;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    return true;
}

Integer delta(const IntMatrix& a, std::size_t i) {
    if (i == 0 || i > std::min(a.rows(), a.cols())) {
        throw std::invalid_argument("delta: minor size out of range");
    }
    Integer g = 0;
    std::vector<std::size_t> rows(i);
    std::iota(rows.begin(), rows.end(), 0);
    do {
        std::vector<std::size_t> cols(i);
        std::iota(cols.begin(), cols.end(), 0);
        do {
            Integer d = determinant(a.submatrix(rows, cols));
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
            if (g == 1) return g;
        } while (next_combination(cols, a.cols()));
    } while (next_combination(rows, a.rows()));
    return g;
}

IntMatrix distance_matrix(const Graph& g) {
    auto d = distances(g);
    auto n = static_cast<std::size_t>(g.order());
    IntMatrix m(n, n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v) m(u, v) = d[u][v];
    return m;
}

int phi_unit_count(const Graph& g) {
    auto result = snf(distance_matrix(g));
    int ones = 0;
    for (const auto& f : result.invariant_factors) ones += (f == 1) ? 1 : 0;
    return ones;
}

}  // namespace distideal
