#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "distideal/graph.hpp"

namespace distideal {

using Integer = mpz_class;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntMatrix submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    /// row[dst] += factor * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
    void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);
    void negate_row(std::size_t r);

    bool is_zero() const;
    bool operator==(const IntMatrix&) const = default;

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

/// Exact determinant by fraction-free (Bareiss) elimination.
Integer determinant(const IntMatrix& a);

struct SnfResult {
    /// f_1 | f_2 | ... | f_r, all positive; r is the rank.
    std::vector<Integer> invariant_factors;
    /// When requested: left * A * right == diag(f_1..f_r, 0..), det(left), det(right) = +-1.
    std::optional<IntMatrix> left;
    std::optional<IntMatrix> right;

    std::size_t rank() const { return invariant_factors.size(); }
};

/// Smith normal form by row and column elimination with smallest-pivot selection.
SnfResult snf(const IntMatrix& a, bool want_transforms = false);

/// gcd of all i x i minors, by explicit minor enumeration (0 if all vanish).
/// Shares no elimination code with snf().
Integer delta(const IntMatrix& a, std::size_t i);

IntMatrix distance_matrix(const Graph& g);

/// Number of invariant factors of the distance matrix equal to 1.
int phi_unit_count(const Graph& g);

/// Advances a sorted k-subset of {0..n-1} to its lexicographic successor.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n);

}  // namespace distideal
