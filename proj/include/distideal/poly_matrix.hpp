#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <unordered_map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "distideal/graph.hpp"
#include "distideal/int_matrix.hpp"
#include "distideal/polynomial.hpp"

namespace distideal {

/// Square matrix of polynomials over one ring.
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(RingPtr ring, std::size_t n);

    const RingPtr& ring() const { return ring_; }
    std::size_t dim() const { return n_; }

    Polynomial& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
    const Polynomial& operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }

    bool is_symmetric() const;

    PolyMatrix evaluate(const std::map<int, Integer>& assignment) const;

    /// Integer matrix; every entry must be constant.
    IntMatrix to_int_matrix() const;

    /// Square selection of rows and columns.
    PolyMatrix submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;

    std::string to_string() const;

private:
    RingPtr ring_;
    std::size_t n_ = 0;
    std::vector<Polynomial> data_;
};

/// Memoized Laplace expansion over column subsets.
Polynomial determinant_cofactor(const PolyMatrix& m);

/// Fraction-free (Bareiss) elimination with exact polynomial division.
Polynomial determinant_bareiss(const PolyMatrix& m);

/// Expansion along row 0, each cofactor by determinant_cofactor().
Polynomial determinant_first_row(const PolyMatrix& m);

inline Polynomial determinant(const PolyMatrix& m) { return determinant_cofactor(m); }

/// Determinant of the submatrix on the given sorted row and column indices.
Polynomial minor(const PolyMatrix& m, std::span<const std::size_t> rows, std::span<const std::size_t> cols);

struct MinorIndex {
    std::vector<std::size_t> rows;
    std::vector<std::size_t> cols;
};

/// All C(n,i)^2 i x i minors, ordered lexicographically by (row subset,
/// column subset), 0-based. Calls `sink(index, polynomial)` for each.
template <typename Sink>
void for_each_minor(const PolyMatrix& m, std::size_t i, Sink&& sink);

std::vector<Polynomial> minors(const PolyMatrix& m, std::size_t i);

/// Ring x0..x{n-1} (graded reverse lex) for a graph on n vertices.
RingPtr diagonal_ring(int n, OrderKind order = OrderKind::GrevLex);

/// diag(x_0..x_{n-1}) + D(G). Throws DisconnectedGraph.
PolyMatrix generalized_distance_matrix(const Graph& g, OrderKind order = OrderKind::GrevLex);

/// Builds a matrix from rows of '&'-separated polynomial entries.
PolyMatrix parse_matrix(const RingPtr& ring, std::string_view text);

/// Named matrices used in the forbidden-graph arguments, transcribed entry by entry.
PolyMatrix lemma_matrix(std::string_view name, OrderKind order = OrderKind::GrevLex);
std::vector<std::string> lemma_matrix_names();

// ---------------------------------------------------------------------------

namespace detail {

class MinorTable {
public:
    explicit MinorTable(const PolyMatrix& m);
    const Polynomial& get(std::uint64_t rows, std::uint64_t cols);

private:
    struct Key {
        std::uint64_t rows, cols;
        bool operator==(const Key&) const = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const noexcept {
            return std::hash<std::uint64_t>()(k.rows * 0x9E3779B97F4A7C15ULL ^ k.cols);
        }
    };
    const PolyMatrix& m_;
    std::unordered_map<Key, Polynomial, KeyHash> memo_;
};

}  // namespace detail

template <typename Sink>
void for_each_minor(const PolyMatrix& m, std::size_t i, Sink&& sink) {
    std::size_t n = m.dim();
    if (i == 0 || i > n) throw PolyError("minor size out of range");
    detail::MinorTable table(m);
    MinorIndex idx;
    idx.rows.resize(i);
    std::iota(idx.rows.begin(), idx.rows.end(), std::size_t{0});
    do {
        std::uint64_t rmask = 0;
        for (auto r : idx.rows) rmask |= std::uint64_t{1} << r;
        idx.cols.resize(i);
        std::iota(idx.cols.begin(), idx.cols.end(), std::size_t{0});
        do {
            std::uint64_t cmask = 0;
            for (auto c : idx.cols) cmask |= std::uint64_t{1} << c;
            sink(static_cast<const MinorIndex&>(idx), table.get(rmask, cmask));
        } while (next_combination(idx.cols, n));
    } while (next_combination(idx.rows, n));
}

}  // namespace distideal
