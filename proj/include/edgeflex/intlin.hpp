#pragma once

// Exact integer and rational linear algebra over GMP-backed big numbers.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

#include "edgeflex/error.hpp"

namespace edgeflex {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

namespace detail {

inline BigInt divide_exact(const BigInt& num, const BigInt& den) {
    BigInt q;
    BigInt r;
    boost::multiprecision::divide_qr(num, den, q, r);
    if (r != 0) {
        throw std::logic_error("fraction-free elimination produced an inexact division");
    }
    return q;
}

// floor(a / b) for b != 0
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q;
    BigInt r;
    boost::multiprecision::divide_qr(a, b, q, r);
    if (r != 0 && ((r < 0) != (b < 0))) {
        --q;
    }
    return q;
}

} // namespace detail

/// Dense row-major matrix with entries of type T.
template <typename T>
class DenseMatrix {
public:
    using value_type = T;

    DenseMatrix() = default;

    DenseMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, T(0)) {}

    DenseMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        entries_.reserve(rows_ * cols_);
        for (const auto& row : rows) {
            if (row.size() != cols_) {
                throw DimensionError("ragged matrix literal");
            }
            for (long long x : row) {
                entries_.emplace_back(x);
            }
        }
    }

    static DenseMatrix identity(std::size_t n) {
        DenseMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            m(i, i) = T(1);
        }
        return m;
    }

    template <typename Row>
    static DenseMatrix from_rows(const std::vector<Row>& rows, std::size_t cols) {
        DenseMatrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) {
                throw DimensionError("row " + std::to_string(i) + " has wrong length");
            }
            for (std::size_t j = 0; j < cols; ++j) {
                m(i, j) = T(rows[i][j]);
            }
        }
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    std::span<const T> row(std::size_t i) const { return {entries_.data() + i * cols_, cols_}; }
    std::span<T> row(std::size_t i) { return {entries_.data() + i * cols_, cols_}; }

    const std::vector<T>& entries() const noexcept { return entries_; }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) {
            std::swap((*this)(a, j), (*this)(b, j));
        }
    }

    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < rows_; ++i) {
            std::swap((*this)(i, a), (*this)(i, b));
        }
    }

    /// Submatrix keeping every column except those listed (sorted, unique).
    DenseMatrix without_columns(std::span<const std::size_t> drop) const {
        DenseMatrix out(rows_, cols_ - drop.size());
        for (std::size_t i = 0; i < rows_; ++i) {
            std::size_t k = 0;
            for (std::size_t j = 0; j < cols_; ++j) {
                if (std::binary_search(drop.begin(), drop.end(), j)) continue;
                out(i, k++) = (*this)(i, j);
            }
        }
        return out;
    }

    friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

    friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
        if (a.cols_ != b.rows_) {
            throw DimensionError("matrix product: inner dimensions differ");
        }
        DenseMatrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    c(i, j) += aik * b(k, j);
                }
            }
        }
        return c;
    }

    friend std::ostream& operator<<(std::ostream& os, const DenseMatrix& m) {
        os << '[';
        for (std::size_t i = 0; i < m.rows_; ++i) {
            os << (i ? ", [" : "[");
            for (std::size_t j = 0; j < m.cols_; ++j) {
                os << (j ? ", " : "") << m(i, j);
            }
            os << ']';
        }
        return os << ']';
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> entries_;
};

using IntegerMatrix = DenseMatrix<BigInt>;
/// Entries are mpq_rational, which GMP keeps canonical (positive denominator, lowest terms).
using RationalMatrix = DenseMatrix<Rational>;

inline RationalMatrix to_rational(const IntegerMatrix& m) {
    RationalMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            r(i, j) = Rational(m(i, j));
        }
    }
    return r;
}

/// Bareiss fraction-free determinant.
inline BigInt determinant(const IntegerMatrix& m) {
    if (!m.is_square()) {
        throw DimensionError("determinant of a non-square matrix");
    }
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntegerMatrix a = m;
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a(i, j) = detail::divide_exact(a(i, j) * a(k, k) - a(i, k) * a(k, j), prev);
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign < 0 ? BigInt(-a(n - 1, n - 1)) : a(n - 1, n - 1);
}

/// Rank over Q, by fraction-free elimination with column skipping.
inline std::size_t rank(const IntegerMatrix& m) {
    IntegerMatrix a = m;
    BigInt prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && a(p, c) == 0) ++p;
        if (p == a.rows()) continue;
        a.swap_rows(r, p);
        for (std::size_t i = r + 1; i < a.rows(); ++i) {
            for (std::size_t j = c + 1; j < a.cols(); ++j) {
                a(i, j) = detail::divide_exact(a(i, j) * a(r, c) - a(i, c) * a(r, j), prev);
            }
            a(i, c) = 0;
        }
        prev = a(r, c);
        ++r;
    }
    return r;
}

/// Exact inverse via fraction-free Gauss-Jordan on [M | I]; the left block ends
/// as D*I and the right block as D*M^{-1}.
inline RationalMatrix inverse(const IntegerMatrix& m) {
    if (!m.is_square()) {
        throw DimensionError("inverse of a non-square matrix");
    }
    const std::size_t n = m.rows();
    IntegerMatrix a(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a(i, j) = m(i, j);
        a(i, n + i) = 1;
    }
    BigInt prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) throw SingularMatrixError("inverse of a singular matrix");
            a.swap_rows(k, p);
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k) continue;
            const BigInt factor = a(i, k);
            for (std::size_t j = 0; j < 2 * n; ++j) {
                if (j == k) continue;
                a(i, j) = detail::divide_exact(a(k, k) * a(i, j) - factor * a(k, j), prev);
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    RationalMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            inv(i, j) = Rational(a(i, n + j), a(i, i));
        }
    }
    return inv;
}

inline bool is_unimodular(const IntegerMatrix& m) {
    return abs(determinant(m)) == 1;
}

/// True iff 2*A^{-1} has only integer entries.
inline bool half_inverse_is_integral(const IntegerMatrix& a) {
    const RationalMatrix inv = inverse(a);
    return std::all_of(inv.entries().begin(), inv.entries().end(), [](const Rational& x) {
        return boost::multiprecision::denominator(Rational(2 * x)) == 1;
    });
}

/// Row-style Hermite normal form: the nonzero rows of an upper echelon basis of
/// the lattice spanned by the rows of `m`, pivots positive, entries above each
/// pivot reduced into [0, pivot).
inline IntegerMatrix hermite_normal_form(const IntegerMatrix& m) {
    IntegerMatrix a = m;
    std::size_t r = 0;
    std::vector<std::size_t> pivot_cols;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        while (true) {
            std::size_t best = a.rows();
            for (std::size_t i = r; i < a.rows(); ++i) {
                if (a(i, c) != 0 && (best == a.rows() || abs(a(i, c)) < abs(a(best, c)))) best = i;
            }
            if (best == a.rows()) break;
            a.swap_rows(r, best);
            bool clean = true;
            for (std::size_t i = r + 1; i < a.rows(); ++i) {
                if (a(i, c) == 0) continue;
                const BigInt q = detail::floor_div(a(i, c), a(r, c));
                for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= q * a(r, j);
                if (a(i, c) != 0) clean = false;
            }
            if (clean) break;
        }
        if (a(r, c) == 0) continue;
        if (a(r, c) < 0) {
            for (std::size_t j = c; j < a.cols(); ++j) a(r, j) = -a(r, j);
        }
        for (std::size_t i = 0; i < r; ++i) {
            const BigInt q = detail::floor_div(a(i, c), a(r, c));
            if (q == 0) continue;
            for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= q * a(r, j);
        }
        pivot_cols.push_back(c);
        ++r;
    }
    IntegerMatrix out(r, a.cols());
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    }
    return out;
}

/// Index [Z^d : L] of the lattice L spanned by the rows of `generators` in
/// Z^d, d = generators.cols(); nullopt when L has rank < d.
inline std::optional<BigInt> lattice_index(const IntegerMatrix& generators) {
    const IntegerMatrix h = hermite_normal_form(generators);
    if (h.rows() < generators.cols()) return std::nullopt;
    BigInt index = 1;
    for (std::size_t i = 0; i < h.rows(); ++i) index *= h(i, i);
    return index;
}

// ---------------------------------------------------------------------------
// Reduction of {0,1,2} matrices whose rows end in 1 and have leading sum <= 2.

enum class OpKind { swap_rows, swap_cols, add_row_multiple, add_col_multiple, negate_row, negate_col };

/// One unimodular elementary operation. For the add-multiple kinds,
/// `dst += factor * src`, with `first` = src and `second` = dst.
/// Swaps use both indices; negations use `first` only. Indices are 0-based.
struct ElementaryOp {
    OpKind kind;
    std::size_t first = 0;
    std::size_t second = 0;
    BigInt factor = 0;

    friend bool operator==(const ElementaryOp&, const ElementaryOp&) = default;
};

inline const char* to_string(OpKind kind) {
    switch (kind) {
    case OpKind::swap_rows: return "swap_rows";
    case OpKind::swap_cols: return "swap_cols";
    case OpKind::add_row_multiple: return "add_row_multiple";
    case OpKind::add_col_multiple: return "add_col_multiple";
    case OpKind::negate_row: return "negate_row";
    case OpKind::negate_col: return "negate_col";
    }
    return "?";
}

inline void apply(IntegerMatrix& m, const ElementaryOp& op) {
    switch (op.kind) {
    case OpKind::swap_rows: m.swap_rows(op.first, op.second); break;
    case OpKind::swap_cols: m.swap_cols(op.first, op.second); break;
    case OpKind::add_row_multiple:
        for (std::size_t j = 0; j < m.cols(); ++j) m(op.second, j) += op.factor * m(op.first, j);
        break;
    case OpKind::add_col_multiple:
        for (std::size_t i = 0; i < m.rows(); ++i) m(i, op.second) += op.factor * m(i, op.first);
        break;
    case OpKind::negate_row:
        for (std::size_t j = 0; j < m.cols(); ++j) m(op.first, j) = -m(op.first, j);
        break;
    case OpKind::negate_col:
        for (std::size_t i = 0; i < m.rows(); ++i) m(i, op.first) = -m(i, op.first);
        break;
    }
}

inline IntegerMatrix replay(IntegerMatrix m, std::span<const ElementaryOp> trace) {
    for (const auto& op : trace) apply(m, op);
    return m;
}

struct ReductionResult {
    std::size_t size = 0;  ///< d
    std::size_t s = 0;     ///< number of diagonal 1 entries
    std::vector<ElementaryOp> trace;

    /// diag(1,...,1,2,...,2) with s ones.
    IntegerMatrix normal_form() const {
        IntegerMatrix m(size, size);
        for (std::size_t i = 0; i < size; ++i) m(i, i) = i < s ? 1 : 2;
        return m;
    }

    /// |det A| = 2^(d-s)
    BigInt abs_determinant() const {
        BigInt r = 1;
        for (std::size_t i = s; i < size; ++i) r *= 2;
        return r;
    }
};

namespace detail {

// Row shapes inside the active trailing block: Type 1 has two leading ones,
// Type 2 one leading one, Type 3 one leading two, Type 4 no leading entry.
enum class RowType { two_ones = 1, one_one = 2, one_two = 3, unit = 4 };

struct RowShape {
    RowType type;
    std::size_t c1 = 0;  // first nonzero leading column
    std::size_t c2 = 0;  // second one, Type 1 only
};

class TypeMatrixReducer {
public:
    explicit TypeMatrixReducer(const IntegerMatrix& a) : m_(a), d_(a.rows()), last_(a.rows() - 1) {}

    ReductionResult run() {
        ReductionResult result;
        result.size = d_;
        for (std::size_t t = 0;; ++t) {
            bool any_type1 = false;
            bool any_type2 = false;
            for (std::size_t i = t; i < d_; ++i) {
                const RowType type = classify(i, t).type;
                any_type1 |= type == RowType::two_ones;
                any_type2 |= type == RowType::one_one;
            }
            if (!any_type1 && !any_type2) {
                finish_diagonal(t);
                result.s = t + 1;
                break;
            }
            if (!any_type1) {
                peel_with_type2(t);
            } else {
                peel_with_type1(t);
            }
            check_peeled(t);
        }
        result.trace = std::move(trace_);
        return result;
    }

private:
    void push(ElementaryOp op) {
        apply(m_, op);
        trace_.push_back(std::move(op));
    }
    void swap_rows(std::size_t a, std::size_t b) {
        if (a != b) push({OpKind::swap_rows, a, b, 0});
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a != b) push({OpKind::swap_cols, a, b, 0});
    }
    void add_row(std::size_t src, std::size_t dst, const BigInt& c) { push({OpKind::add_row_multiple, src, dst, c}); }
    void add_col(std::size_t src, std::size_t dst, const BigInt& c) { push({OpKind::add_col_multiple, src, dst, c}); }
    void negate_row(std::size_t i) { push({OpKind::negate_row, i, 0, 0}); }

    [[noreturn]] static void broken(const std::string& what) {
        throw std::logic_error("type-matrix reduction invariant broken: " + what);
    }

    RowShape classify(std::size_t i, std::size_t t) const {
        if (m_(i, last_) != 1) broken("last entry of active row is not 1");
        RowShape shape{RowType::unit};
        int ones = 0;
        int twos = 0;
        for (std::size_t j = t; j < last_; ++j) {
            const BigInt& x = m_(i, j);
            if (x == 0) continue;
            if (x == 1) {
                (ones == 0 ? shape.c1 : shape.c2) = j;
                ++ones;
            } else if (x == 2) {
                shape.c1 = j;
                ++twos;
            } else {
                broken("active entry outside {0,1,2}");
            }
        }
        if (ones == 2 && twos == 0) {
            shape.type = RowType::two_ones;
        } else if (ones == 1 && twos == 0) {
            shape.type = RowType::one_one;
        } else if (ones == 0 && twos == 1) {
            shape.type = RowType::one_two;
        } else if (ones != 0 || twos != 0) {
            broken("active row has leading sum > 2");
        }
        return shape;
    }

    // Case (1): only Type 3 / Type 4 rows remain; nonsingularity forces one
    // Type-3 row per leading column plus one Type-4 row.
    void finish_diagonal(std::size_t t) {
        for (std::size_t p = t; p < last_; ++p) {
            std::size_t found = d_;
            for (std::size_t i = p; i < d_; ++i) {
                if (m_(i, p) == 2) {
                    found = i;
                    break;
                }
            }
            if (found == d_) broken("case (1) block is singular");
            swap_rows(found, p);
        }
        if (classify(last_, t).type != RowType::unit) broken("case (1) block has no Type-4 row");
        for (std::size_t p = t; p < last_; ++p) add_row(last_, p, -1);
        if (t != last_) {
            swap_rows(t, last_);
            swap_cols(t, last_);
        }
    }

    // Case (2): Type-2 rows present, no Type-1 rows.
    void peel_with_type2(std::size_t t) {
        std::size_t pivot = d_;
        for (std::size_t i = t; i < d_ && pivot == d_; ++i) {
            if (classify(i, t).type == RowType::one_one) pivot = i;
        }
        const std::size_t col = classify(pivot, t).c1;
        swap_rows(pivot, t);
        swap_cols(col, t);
        // Rows sharing column t: no other Type-2 row (rows are distinct), at most one Type-3 row.
        std::optional<std::size_t> two_row;
        for (std::size_t i = t + 1; i < d_; ++i) {
            if (m_(i, t) == 0) continue;
            if (m_(i, t) != 2 || two_row) broken("case (2) column has unexpected entries");
            two_row = i;
        }
        add_col(t, last_, -1);
        if (two_row) {
            add_row(t, *two_row, -2);
            negate_row(*two_row);
        }
    }

    // Case (3): at least one Type-1 row.
    void peel_with_type1(std::size_t t) {
        std::size_t pivot = d_;
        for (std::size_t i = t; i < d_ && pivot == d_; ++i) {
            if (classify(i, t).type == RowType::two_ones) pivot = i;
        }
        const RowShape shape = classify(pivot, t);
        swap_rows(pivot, t);
        swap_cols(shape.c1, t);
        swap_cols(shape.c2, t + 1);

        auto is_b_row = [&](std::size_t i) {
            const RowType type = classify(i, t).type;
            return type == RowType::two_ones || type == RowType::one_one;
        };
        bool b_touches = false;
        bool has_01 = false;
        for (std::size_t i = t + 1; i < d_; ++i) {
            if (!is_b_row(i)) continue;
            if (m_(i, t) != 0 && m_(i, t + 1) != 0) broken("row duplicates the Type-1 pivot row");
            b_touches |= m_(i, t) != 0 || m_(i, t + 1) != 0;
            has_01 |= m_(i, t) == 0 && m_(i, t + 1) == 1;
        }

        if (!b_touches) {
            // Subcase (3-1).
            std::optional<std::size_t> two_row;
            for (std::size_t i = t + 1; i < d_; ++i) {
                if (m_(i, t) == 2) two_row = i;
            }
            if (two_row) add_row(t, *two_row, -2);
            add_col(t, t + 1, -1);
            add_col(t, last_, -1);
            if (two_row) negate_row(*two_row);
            return;
        }

        // Subcase (3-2).
        if (!has_01) swap_cols(t, t + 1);
        std::size_t second = d_;
        for (std::size_t i = t + 1; i < d_ && second == d_; ++i) {
            if (is_b_row(i) && m_(i, t) == 0 && m_(i, t + 1) == 1) second = i;
        }
        swap_rows(second, t + 1);
        const RowShape second_shape = classify(t + 1, t);
        if (second_shape.type == RowType::one_one) {
            add_row(t + 1, t, -1);
        } else {
            const std::size_t other = second_shape.c1 == t + 1 ? second_shape.c2 : second_shape.c1;
            swap_cols(other, t + 2);
            add_row(t + 1, t, -1);
            add_col(t, t + 2, 1);
        }
        for (std::size_t i = t + 1; i < d_; ++i) {
            if (m_(i, t) != 0) add_row(t, i, BigInt(-m_(i, t)));
        }
    }

    void check_peeled(std::size_t t) const {
        for (std::size_t j = 0; j < d_; ++j) {
            if (m_(t, j) != (j == t ? 1 : 0)) broken("peeled row is not a unit row");
            if (m_(j, t) != (j == t ? 1 : 0)) broken("peeled column is not a unit column");
        }
    }

    IntegerMatrix m_;
    std::size_t d_;
    std::size_t last_;
    std::vector<ElementaryOp> trace_;
};

} // namespace detail

/// Checks the row shape required by reduce_type_matrix; throws RowShapeError
/// naming the first offending row (0-based).
inline void check_type_matrix(const IntegerMatrix& a) {
    if (!a.is_square() || a.rows() == 0) {
        throw DimensionError("type matrix must be square and non-empty");
    }
    const std::size_t d = a.rows();
    for (std::size_t i = 0; i < d; ++i) {
        BigInt leading = 0;
        for (std::size_t j = 0; j < d; ++j) {
            const BigInt& x = a(i, j);
            if (x < 0 || x > 2) throw RowShapeError(i, "entry outside {0,1,2}");
            if (j + 1 < d) leading += x;
        }
        if (a(i, d - 1) != 1) throw RowShapeError(i, "last entry is not 1");
        if (abs(leading) > 2) throw RowShapeError(i, "sum of leading entries exceeds 2");
    }
}

/// Reduces A to diag(1^s, 2^(d-s)) by unimodular row and column operations,
/// peeling one unit pivot per step. Ties go to the smallest row/column index.
inline ReductionResult reduce_type_matrix(const IntegerMatrix& a) {
    check_type_matrix(a);
    if (determinant(a) == 0) {
        throw SingularMatrixError("type matrix is singular");
    }
    return detail::TypeMatrixReducer(a).run();
}

} // namespace edgeflex
