#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "arrmono/field.hpp"

namespace arrmono {

/// Dense matrix over Q(w), row major.
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, FieldElement::zero()) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    FieldElement& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const FieldElement& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap(at(a, c), at(b, c));
    }

    /// Append the columns of `other` on the right.
    Matrix augmented(const Matrix& other) const {
        if (other.rows_ != rows_) throw DomainError("row count mismatch in augment");
        Matrix m(rows_, cols_ + other.cols_);
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t c = 0; c < cols_; ++c) m.at(r, c) = at(r, c);
            for (std::size_t c = 0; c < other.cols_; ++c) m.at(r, cols_ + c) = other.at(r, c);
        }
        return m;
    }

private:
    std::size_t rows_, cols_;
    std::vector<FieldElement> data_;
};

namespace detail {

// Z[w] entry for the fraction-free elimination path. Plain integer
// arithmetic here: cpp_rational would re-run gcd normalization on every
// intermediate product.
struct ZW {
    Int re, wc;

    bool is_zero() const { return re == 0 && wc == 0; }
};

// (p + qw)(r + sw) = (pr - qs) + (ps + qr + qs) w, with three big
// multiplications.
inline ZW zw_mul(const ZW& a, const ZW& b) {
    Int t1 = a.re * b.re;
    Int t2 = a.wc * b.wc;
    Int t3 = (a.re + a.wc) * (b.re + b.wc);
    return {t1 - t2, t3 - t1};
}

inline ZW zw_sub(const ZW& a, const ZW& b) { return {a.re - b.re, a.wc - b.wc}; }

// Exact quotient a / d in Z[w]: multiply by conj(d) = (re + wc) - wc*w and
// divide by the integer norm(d). Elimination only ever divides entries
// that are minors of an integral matrix, so the division must be exact.
inline ZW zw_exact_div(const ZW& a, const ZW& d) {
    const Int n = d.re * d.re + d.re * d.wc + d.wc * d.wc;
    const ZW conj{d.re + d.wc, -d.wc};
    const ZW prod = zw_mul(a, conj);
    Int q_re, r_re, q_wc, r_wc;
    divide_qr(prod.re, n, q_re, r_re);
    divide_qr(prod.wc, n, q_wc, r_wc);
    if (r_re != 0 || r_wc != 0)
        throw DomainError("non-exact division in fraction-free elimination");
    return {std::move(q_re), std::move(q_wc)};
}

// Scale one row to Z[w] entries with content 1 (row scaling preserves rank).
inline std::vector<ZW> integerize_row(const Matrix& m, std::size_t r) {
    Int l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        const FieldElement& x = m.at(r, c);
        l = lcm(l, lcm(denominator(x.re_part()), denominator(x.w_part())));
    }
    std::vector<ZW> row(m.cols());
    Int g = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        const FieldElement& x = m.at(r, c);
        row[c] = {numerator(x.re_part()) * (l / denominator(x.re_part())),
                  numerator(x.w_part()) * (l / denominator(x.w_part()))};
        g = gcd(g, gcd(row[c].re, row[c].wc));
    }
    if (g > 1)
        for (auto& e : row) {
            e.re /= g;
            e.wc /= g;
        }
    return row;
}

} // namespace detail

/// Exact rank by deterministic elimination; the pivot is always the first
/// row with a nonzero entry in the current column. Internally runs
/// fraction-free (Bareiss) updates on denominator-cleared integer rows to
/// keep entry growth polynomial.
inline std::size_t rank(const Matrix& input) {
    using detail::ZW;
    std::vector<std::vector<ZW>> m;
    m.reserve(input.rows());
    for (std::size_t r = 0; r < input.rows(); ++r) m.push_back(detail::integerize_row(input, r));
    const std::size_t rows = input.rows(), cols = input.cols();

    // Column content also only rescales (rank-preserving) and shrinks the
    // minors the elimination has to carry.
    for (std::size_t c = 0; c < cols; ++c) {
        Int g = 0;
        for (std::size_t r = 0; r < rows && g != 1; ++r) g = gcd(g, gcd(m[r][c].re, m[r][c].wc));
        if (g > 1)
            for (std::size_t r = 0; r < rows; ++r) {
                m[r][c].re /= g;
                m[r][c].wc /= g;
            }
    }

    std::size_t r = 0;
    ZW prev{1, 0};
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t p = r;
        while (p < rows && m[p][col].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        const ZW pivot = m[r][col];
        for (std::size_t i = r + 1; i < rows; ++i) {
            const ZW factor = m[i][col];
            if (factor.is_zero()) {
                for (std::size_t j = col + 1; j < cols; ++j)
                    m[i][j] = detail::zw_exact_div(detail::zw_mul(m[i][j], pivot), prev);
            } else {
                for (std::size_t j = col + 1; j < cols; ++j)
                    m[i][j] = detail::zw_exact_div(
                        detail::zw_sub(detail::zw_mul(m[i][j], pivot), detail::zw_mul(factor, m[r][j])),
                        prev);
            }
            m[i][col] = {0, 0};
        }
        prev = pivot;
        ++r;
    }
    return r;
}

/// Reduced row echelon form (rational Gauss-Jordan, same pivot rule).
struct Rref {
    Matrix m;
    std::vector<std::size_t> pivot_cols;
};

inline Rref rref(Matrix m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
        std::size_t p = r;
        while (p < m.rows() && m.at(p, col).is_zero()) ++p;
        if (p == m.rows()) continue;
        m.swap_rows(p, r);
        const FieldElement inv = m.at(r, col).inverse();
        for (std::size_t j = col; j < m.cols(); ++j) m.at(r, j) = inv * m.at(r, j);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, col).is_zero()) continue;
            const FieldElement factor = m.at(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                m.at(i, j) = m.at(i, j) - factor * m.at(r, j);
        }
        pivots.push_back(col);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

/// Basis of the right kernel {v : M v = 0}. One vector per free column,
/// in ascending free-column order, produced by back-substitution with the
/// free variable set to 1.
inline std::vector<std::vector<FieldElement>> kernel_basis(const Matrix& m) {
    const Rref red = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : red.pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<FieldElement>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<FieldElement> v(m.cols(), FieldElement::zero());
        v[free] = FieldElement::one();
        for (std::size_t k = 0; k < red.pivot_cols.size(); ++k)
            v[red.pivot_cols[k]] = -red.m.at(k, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Unique solution of A x = b when it exists and A has full column rank;
/// nullopt when the system is inconsistent or underdetermined.
inline std::optional<std::vector<FieldElement>> solve_unique(const Matrix& a,
                                                             const std::vector<FieldElement>& b) {
    if (b.size() != a.rows()) throw DomainError("rhs size mismatch");
    Matrix rhs(a.rows(), 1);
    for (std::size_t r = 0; r < a.rows(); ++r) rhs.at(r, 0) = b[r];
    const Rref red = rref(a.augmented(rhs));
    // Inconsistent iff some pivot lands in the rhs column.
    for (std::size_t c : red.pivot_cols)
        if (c == a.cols()) return std::nullopt;
    if (red.pivot_cols.size() != a.cols()) return std::nullopt;
    std::vector<FieldElement> x(a.cols(), FieldElement::zero());
    for (std::size_t k = 0; k < red.pivot_cols.size(); ++k)
        x[red.pivot_cols[k]] = red.m.at(k, a.cols());
    return x;
}

} // namespace arrmono
