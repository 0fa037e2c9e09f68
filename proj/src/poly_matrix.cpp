#include "distideal/poly_matrix.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace distideal {

PolyMatrix::PolyMatrix(RingPtr ring, std::size_t n) : ring_(std::move(ring)), n_(n) {
    data_.assign(n * n, Polynomial(ring_));
}

bool PolyMatrix::is_symmetric() const {
    for (std::size_t r = 0; r < n_; ++r)
        for (std::size_t c = r + 1; c < n_; ++c)
            if (!((*this)(r, c) == (*this)(c, r))) return false;
    return true;
}

PolyMatrix PolyMatrix::evaluate(const std::map<int, Integer>& assignment) const {
    PolyMatrix out(ring_, n_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i].evaluate(assignment);
    return out;
}

IntMatrix PolyMatrix::to_int_matrix() const {
    IntMatrix out(n_, n_);
    for (std::size_t r = 0; r < n_; ++r)
        for (std::size_t c = 0; c < n_; ++c) out(r, c) = (*this)(r, c).constant_value();
    return out;
}

PolyMatrix PolyMatrix::submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const {
    if (rows.size() != cols.size()) throw PolyError("submatrix must be square");
    PolyMatrix out(ring_, rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (rows[i] >= n_ || cols[j] >= n_) throw PolyError("submatrix index out of range");
            out(i, j) = (*this)(rows[i], cols[j]);
        }
    return out;
}

std::string PolyMatrix::to_string() const {
    std::ostringstream os;
    for (std::size_t r = 0; r < n_; ++r) {
        for (std::size_t c = 0; c < n_; ++c) os << (c ? " & " : "") << (*this)(r, c).to_string();
        os << '\n';
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// determinants

namespace detail {

MinorTable::MinorTable(const PolyMatrix& m) : m_(m) {
    if (m.dim() > 64) throw PolyError("matrix too large for minor enumeration");
}

const Polynomial& MinorTable::get(std::uint64_t rows, std::uint64_t cols) {
    Key key{rows, cols};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    int k = std::popcount(rows);
    Polynomial result(m_.ring());
    if (k == 0) {
        result = Polynomial(m_.ring(), 1);
    } else if (k == 1) {
        result = m_(static_cast<std::size_t>(std::countr_zero(rows)), static_cast<std::size_t>(std::countr_zero(cols)));
    } else {
        // Laplace expansion along the last selected row.
        auto last = static_cast<std::size_t>(63 - std::countl_zero(rows));
        std::uint64_t rest_rows = rows & ~(std::uint64_t{1} << last);
        int pos = 0;
        for (std::uint64_t cm = cols; cm != 0; cm &= cm - 1, ++pos) {
            auto j = static_cast<std::size_t>(std::countr_zero(cm));
            const Polynomial& entry = m_(last, j);
            if (entry.is_zero()) continue;
            const Polynomial& sub = get(rest_rows, cols & ~(std::uint64_t{1} << j));
            if (sub.is_zero()) continue;
            Polynomial prod = entry * sub;
            if (((k - 1) + pos) % 2 == 0) result += prod;
            else result -= prod;
        }
    }
    return memo_.emplace(key, std::move(result)).first->second;
}

}  // namespace detail

Polynomial determinant_cofactor(const PolyMatrix& m) {
    std::size_t n = m.dim();
    if (n == 0) return Polynomial(m.ring(), 1);
    // Row-by-row dynamic programme over column subsets; row k is expanded
    // against every subset of k columns already consumed.
    std::unordered_map<std::uint64_t, Polynomial> level{{0, Polynomial(m.ring(), 1)}};
    for (std::size_t k = 0; k < n; ++k) {
        std::unordered_map<std::uint64_t, Polynomial> next;
        for (const auto& [mask, val] : level) {
            if (val.is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if ((mask >> j) & 1U) continue;
                const Polynomial& entry = m(k, j);
                if (entry.is_zero()) continue;
                // sign of inserting column j into a subset: number of chosen
                // columns greater than j
                int above = std::popcount(mask >> j);
                Polynomial term = entry * val;
                std::uint64_t nm = mask | (std::uint64_t{1} << j);
                auto it = next.find(nm);
                if (it == next.end()) it = next.emplace(nm, Polynomial(m.ring())).first;
                if (above % 2 == 0) it->second += term;
                else it->second -= term;
            }
        }
        level = std::move(next);
    }
    std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    auto it = level.find(full);
    return it == level.end() ? Polynomial(m.ring()) : it->second;
}

Polynomial determinant_bareiss(const PolyMatrix& m) {
    std::size_t n = m.dim();
    if (n == 0) return Polynomial(m.ring(), 1);
    PolyMatrix a = m;
    Polynomial prev(m.ring(), 1);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k).is_zero()) {
            std::size_t p = k + 1;
            while (p < n && a(p, k).is_zero()) ++p;
            if (p == n) return Polynomial(m.ring());
            for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(p, c));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Polynomial t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                a(i, j) = divide_exact(t, prev);
            }
            a(i, k) = Polynomial(m.ring());
        }
        prev = a(k, k);
    }
    return negate ? -a(n - 1, n - 1) : a(n - 1, n - 1);
}

Polynomial determinant_first_row(const PolyMatrix& m) {
    std::size_t n = m.dim();
    if (n == 0) return Polynomial(m.ring(), 1);
    if (n == 1) return m(0, 0);
    Polynomial out(m.ring());
    std::vector<std::size_t> rows(n - 1);
    std::iota(rows.begin(), rows.end(), std::size_t{1});
    for (std::size_t j = 0; j < n; ++j) {
        if (m(0, j).is_zero()) continue;
        std::vector<std::size_t> cols;
        for (std::size_t c = 0; c < n; ++c)
            if (c != j) cols.push_back(c);
        Polynomial term = m(0, j) * determinant_cofactor(m.submatrix(rows, cols));
        if (j % 2 == 0) out += term;
        else out -= term;
    }
    return out;
}

Polynomial minor(const PolyMatrix& m, std::span<const std::size_t> rows, std::span<const std::size_t> cols) {
    if (!std::ranges::is_sorted(rows) || !std::ranges::is_sorted(cols)) {
        throw PolyError("minor indices must be sorted");
    }
    return determinant_cofactor(m.submatrix(rows, cols));
}

std::vector<Polynomial> minors(const PolyMatrix& m, std::size_t i) {
    std::vector<Polynomial> out;
    for_each_minor(m, i, [&](const MinorIndex&, const Polynomial& p) { out.push_back(p); });
    return out;
}

// ---------------------------------------------------------------------------
// graph matrices

RingPtr diagonal_ring(int n, OrderKind order) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
    return Ring::make(std::move(names), order);
}

PolyMatrix generalized_distance_matrix(const Graph& g, OrderKind order) {
    auto d = distances(g);
    auto n = static_cast<std::size_t>(g.order());
    PolyMatrix m(diagonal_ring(g.order(), order), n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
            m(u, v) = u == v ? Polynomial::variable(m.ring(), static_cast<int>(u)) : Polynomial(m.ring(), d[u][v]);
    return m;
}

PolyMatrix parse_matrix(const RingPtr& ring, std::string_view text) {
    std::vector<std::vector<Polynomial>> rows;
    std::istringstream is{std::string(text)};
    std::string line;
    while (std::getline(is, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::vector<Polynomial> row;
        std::size_t start = 0;
        for (std::size_t i = 0; i <= line.size(); ++i) {
            if (i == line.size() || line[i] == '&') {
                row.push_back(parse_polynomial(ring, std::string_view(line).substr(start, i - start)));
                start = i + 1;
            }
        }
        rows.push_back(std::move(row));
    }
    PolyMatrix m(ring, rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != rows.size()) throw PolyError("matrix text is not square");
        for (std::size_t c = 0; c < rows.size(); ++c) m(r, c) = rows[r][c];
    }
    return m;
}

// ---------------------------------------------------------------------------
// transcribed matrices

namespace {

struct LemmaMatrixData {
    std::string_view name;
    std::vector<std::string> variables;
    std::string_view body;
};

std::vector<std::string> xs(int n, std::initializer_list<const char*> extra = {}) {
    std::vector<std::string> v;
    for (int i = 0; i < n; ++i) v.push_back("x" + std::to_string(i));
    for (const char* e : extra) v.emplace_back(e);
    return v;
}

std::vector<std::string> with_ys(std::vector<std::string> v, int ny) {
    for (int i = 0; i < ny; ++i) v.push_back("y" + std::to_string(i));
    return v;
}

const std::vector<LemmaMatrixData>& lemma_table() {
    static const std::vector<LemmaMatrixData> table = {
        {"bull-M", {"u", "v", "x1", "x2", "x3"}, R"(
            u & 2 & 2 & 2 & 1
            2 & v & 2 & 1 & 2
            2 & 2 & x1 & 1 & 1
            2 & 1 & 1 & x2 & 1
            1 & 2 & 1 & 1 & x3)"},
        {"G_{6,5}-M", with_ys(xs(6), 3), R"(
            x0 & y2 & y1 & y0 & 2 & 1
            y2 & x1 & 2 & 2 & 1 & 2
            y1 & 2 & x2 & 1 & 1 & 2
            y0 & 2 & 1 & x3 & 1 & 2
            2 & 1 & 1 & 1 & x4 & 1
            1 & 2 & 2 & 2 & 1 & x5)"},
        {"5-pan-M", with_ys(xs(6), 2), R"(
            x0 & y1 & y0 & 2 & 2 & 1
            y1 & x1 & 1 & 2 & 1 & 2
            y0 & 1 & x2 & 1 & 2 & 2
            2 & 2 & 1 & x3 & 2 & 1
            2 & 1 & 2 & 2 & x4 & 1
            1 & 2 & 2 & 1 & 1 & x5)"},
        {"G_{6,7}-M", with_ys(xs(6), 5), R"(
            x0 & y4 & y3 & 2 & 1 & y2
            y4 & x1 & 1 & 2 & y1 & 1
            y3 & 1 & x2 & 2 & y0 & 1
            2 & 2 & 2 & x3 & 1 & 1
            1 & y1 & y0 & 1 & x4 & 2
            y2 & 1 & 1 & 1 & 2 & x5)"},
        // Entry (1,1) is the constant 2 as displayed, not x1.
        {"G_{6,7}-M'(2,2,3,2,2)", xs(6, {"xu", "a", "c", "d", "f"}), R"(
            x0 & 2 & 2 & 2 & 1 & 3 & a
            2 & 2 & 1 & 2 & 2 & 1 & 1
            2 & 1 & x2 & 2 & 2 & 1 & c
            2 & 2 & 2 & x3 & 1 & 1 & d
            1 & 2 & 2 & 1 & x4 & 2 & 1
            3 & 1 & 1 & 1 & 2 & x5 & f
            a & 1 & c & d & 1 & f & xu)"},
        {"G_{6,7}-M'(2,2,3,2,2)[x1]", xs(6, {"xu", "a", "c", "d", "f"}), R"(
            x0 & 2 & 2 & 2 & 1 & 3 & a
            2 & x1 & 1 & 2 & 2 & 1 & 1
            2 & 1 & x2 & 2 & 2 & 1 & c
            2 & 2 & 2 & x3 & 1 & 1 & d
            1 & 2 & 2 & 1 & x4 & 2 & 1
            3 & 1 & 1 & 1 & 2 & x5 & f
            a & 1 & c & d & 1 & f & xu)"},
        {"G_{6,7}-M'(3,3,3,3,3)", xs(6, {"xu", "c", "d", "e", "f"}), R"(
            x0 & 3 & 3 & 2 & 1 & 3 & 2
            3 & x1 & 1 & 2 & 3 & 1 & 1
            3 & 1 & x2 & 2 & 3 & 1 & c
            2 & 2 & 2 & x3 & 1 & 1 & d
            1 & 3 & 3 & 1 & x4 & 2 & e
            3 & 1 & 1 & 1 & 2 & x5 & f
            2 & 1 & c & d & e & f & xu)"},
        {"G_{6,9}-M", with_ys(xs(6), 2), R"(
            x0 & 2 & y1 & 2 & 2 & 1
            2 & x1 & y0 & 2 & 2 & 1
            y1 & y0 & x2 & 1 & 1 & 2
            2 & 2 & 1 & x3 & 1 & 1
            2 & 2 & 1 & 1 & x4 & 1
            1 & 1 & 2 & 1 & 1 & x5)"},
        {"co-twin-house-M", with_ys(xs(6), 3), R"(
            x0 & y2 & 2 & 2 & y1 & 1
            y2 & x1 & 2 & 2 & 1 & y0
            2 & 2 & x2 & 1 & 1 & 1
            2 & 2 & 1 & x3 & 1 & 1
            y1 & 1 & 1 & 1 & x4 & 2
            1 & y0 & 1 & 1 & 2 & x5)"},
        {"co-twin-house-M'(3,3,3)", xs(6, {"xv", "c", "d", "e", "f"}), R"(
            x0 & 3 & 2 & 2 & 3 & 1 & 1
            3 & x1 & 2 & 2 & 1 & 3 & 2
            2 & 2 & x2 & 1 & 1 & 1 & c
            2 & 2 & 1 & x3 & 1 & 1 & d
            3 & 1 & 1 & 1 & x4 & 2 & e
            1 & 3 & 1 & 1 & 2 & x5 & f
            1 & 2 & c & d & e & f & xv)"},
        {"co-twin-house-M'(3,3,2)", xs(6, {"xu", "c", "d", "e", "f"}), R"(
            x0 & 2 & 2 & 2 & 3 & 1 & 1
            2 & x1 & 2 & 2 & 1 & 3 & 1
            2 & 2 & x2 & 1 & 1 & 1 & c
            2 & 2 & 1 & x3 & 1 & 1 & d
            3 & 1 & 1 & 1 & x4 & 2 & e
            1 & 3 & 1 & 1 & 2 & x5 & f
            1 & 1 & c & d & e & f & xu)"},
        {"co-twin-house-M''", xs(6, {"xu", "xv", "a", "b", "d", "e", "f"}), R"(
            x0 & 2 & 2 & 2 & 3 & 1 & 1 & a
            2 & x1 & 2 & 2 & 1 & 3 & 1 & b
            2 & 2 & x2 & 1 & 1 & 1 & 2 & 1
            2 & 2 & 1 & x3 & 1 & 1 & 2 & d
            3 & 1 & 1 & 1 & x4 & 2 & 2 & e
            1 & 3 & 1 & 1 & 2 & x5 & 2 & f
            1 & 1 & 2 & 2 & 2 & 2 & xu & 1
            a & b & 1 & d & e & f & 1 & xv)"},
        {"G_{6,12}-M", with_ys(xs(6), 1), R"(
            x0 & 2 & 2 & 2 & y0 & 1
            2 & x1 & 2 & 2 & 1 & 1
            2 & 2 & x2 & 1 & 1 & 1
            2 & 2 & 1 & x3 & 1 & 1
            y0 & 1 & 1 & 1 & x4 & 2
            1 & 1 & 1 & 1 & 2 & x5)"},
        {"G_{6,15}-M", with_ys(xs(7), 4), R"(
            x0 & 1 & y3 & y2 & 2 & 2 & 1
            1 & x1 & y1 & y0 & 2 & 2 & 1
            y3 & y1 & x2 & 2 & 1 & 1 & 2
            y2 & y0 & 2 & x3 & 1 & 1 & 2
            2 & 2 & 1 & 1 & x4 & 2 & 1
            2 & 2 & 1 & 1 & 2 & x5 & 1
            1 & 1 & 2 & 2 & 1 & 1 & x6)"},
        {"C7-M", with_ys(xs(7), 7), R"(
            x0 & y6 & y5 & 2 & 2 & 1 & 1
            y6 & x1 & 1 & 2 & 1 & y4 & 2
            y5 & 1 & x2 & 1 & 2 & 2 & y3
            2 & 2 & 1 & x3 & y2 & 1 & y1
            2 & 1 & 2 & y2 & x4 & y0 & 1
            1 & y4 & 2 & 1 & y0 & x5 & 2
            1 & 2 & y3 & y1 & 1 & 2 & x6)"},
    };
    return table;
}

}  // namespace

PolyMatrix lemma_matrix(std::string_view name, OrderKind order) {
    for (const auto& e : lemma_table()) {
        if (e.name == name) return parse_matrix(Ring::make(e.variables, order), e.body);
    }
    throw PolyError("unknown lemma matrix: " + std::string(name));
}

std::vector<std::string> lemma_matrix_names() {
    std::vector<std::string> out;
    for (const auto& e : lemma_table()) out.emplace_back(e.name);
    return out;
}

}  // namespace distideal
