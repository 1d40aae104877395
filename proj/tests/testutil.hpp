#pragma once

// Shared helpers for the test suites: seeded random generators over the
// field and an independent brute-force rank oracle (largest r with a
// nonzero r x r minor, determinants by cofactor expansion) that never
// touches the elimination code under test.

#include <algorithm>
#include <random>
#include <vector>

#include "arrmono/arrmono.hpp"

namespace testutil {

using namespace arrmono;

using Rng = std::mt19937_64;

inline Rational random_rational(Rng& rng, long lo = -20, long hi = 20, long max_den = 10) {
    std::uniform_int_distribution<long> num(lo, hi);
    std::uniform_int_distribution<long> den(1, max_den);
    return make_rational(Int(num(rng)), Int(den(rng)));
}

inline FieldElement random_field_element(Rng& rng) {
    return {random_rational(rng), random_rational(rng)};
}

inline FieldElement random_nonzero_field_element(Rng& rng) {
    for (;;) {
        FieldElement x = random_field_element(rng);
        if (!x.is_zero()) return x;
    }
}

inline ProjectivePoint random_point(Rng& rng) {
    for (;;) {
        std::array<FieldElement, 3> c{random_field_element(rng), random_field_element(rng),
                                      random_field_element(rng)};
        if (!(c[0].is_zero() && c[1].is_zero() && c[2].is_zero())) return ProjectivePoint(c);
    }
}

inline ProjectiveLine random_line(Rng& rng, long coeff_range = 9) {
    std::uniform_int_distribution<long> d(-coeff_range, coeff_range);
    for (;;) {
        std::array<FieldElement, 3> c{FieldElement(d(rng)), FieldElement(d(rng)),
                                      FieldElement(d(rng))};
        if (!(c[0].is_zero() && c[1].is_zero() && c[2].is_zero())) return ProjectiveLine(c);
    }
}

inline HomogeneousPolynomial random_poly(Rng& rng, int degree, int terms = 4) {
    HomogeneousPolynomial f(degree);
    const auto basis = monomial_basis(degree);
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    for (int t = 0; t < terms; ++t) f.set(basis[pick(rng)], random_field_element(rng));
    return f;
}

inline FieldElement cofactor_det(const Matrix& m, std::vector<std::size_t> rows,
                                 std::vector<std::size_t> cols) {
    if (rows.size() == 1) return m.at(rows[0], cols[0]);
    FieldElement acc = FieldElement::zero();
    std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
    for (std::size_t k = 0; k < cols.size(); ++k) {
        const FieldElement& a = m.at(rows[0], cols[k]);
        if (a.is_zero()) continue;
        std::vector<std::size_t> sub_cols;
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (j != k) sub_cols.push_back(cols[j]);
        FieldElement term = a * cofactor_det(m, sub_rows, sub_cols);
        acc = (k % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

inline bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
    const std::size_t k = idx.size();
    for (std::size_t i = k; i-- > 0;) {
        if (idx[i] < n - (k - i)) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

/// Largest r such that some r x r minor has nonzero determinant.
inline std::size_t brute_force_rank(const Matrix& m) {
    for (std::size_t r = std::min(m.rows(), m.cols()); r >= 1; --r) {
        std::vector<std::size_t> rows(r), cols(r);
        for (std::size_t i = 0; i < r; ++i) rows[i] = i;
        do {
            for (std::size_t i = 0; i < r; ++i) cols[i] = i;
            do {
                if (!cofactor_det(m, rows, cols).is_zero()) return r;
            } while (next_combination(cols, m.cols()));
        } while (next_combination(rows, m.rows()));
    }
    return 0;
}

/// Rank through the reduced-echelon path; an algorithmically independent
/// cross-check of the fraction-free rank on matrices too big for minors.
inline std::size_t rref_rank(const Matrix& m) { return rref(m).pivot_cols.size(); }

/// Random d distinct lines, rejected until the lattice has only double
/// and triple points.
inline Arrangement random_triple_only_arrangement(Rng& rng, std::size_t d,
                                                  const std::string& label) {
    for (;;) {
        std::vector<ProjectiveLine> lines;
        while (lines.size() < d) {
            ProjectiveLine l = random_line(rng);
            if (std::find(lines.begin(), lines.end(), l) == lines.end()) lines.push_back(l);
        }
        Arrangement a(std::move(lines), label);
        try {
            certify_triple_only(build_lattice(a));
            return a;
        } catch (const HypothesisViolation&) {
        }
    }
}

/// Random invertible 3x3 change of coordinates with small integer entries.
inline std::array<std::array<long, 3>, 3> random_invertible_transform(Rng& rng, long range = 2) {
    std::uniform_int_distribution<long> d(-range, range);
    for (;;) {
        std::array<std::array<long, 3>, 3> m;
        for (auto& row : m)
            for (auto& e : row) e = d(rng);
        const long det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
        if (det != 0) return m;
    }
}

/// The arrangement with every line's coefficient triple multiplied by the
/// matrix on the right; any invertible matrix realizes a projective
/// change of coordinates.
inline Arrangement transformed(const Arrangement& a, const std::array<std::array<long, 3>, 3>& m,
                               const std::string& label) {
    std::vector<ProjectiveLine> out;
    for (const auto& l : a.lines()) {
        std::array<FieldElement, 3> c;
        for (std::size_t j = 0; j < 3; ++j) {
            FieldElement s = FieldElement::zero();
            for (std::size_t i = 0; i < 3; ++i) s += l.coeffs()[i] * FieldElement(m[i][j]);
            c[j] = s;
        }
        out.push_back(ProjectiveLine(c));
    }
    return Arrangement(std::move(out), label);
}

inline bool same_point_set(std::vector<ProjectivePoint> a, std::vector<ProjectivePoint> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

/// Proportionality of forms: f = s*g for some nonzero field scalar.
inline bool proportional(const HomogeneousPolynomial& f, const HomogeneousPolynomial& g) {
    if (f.degree() != g.degree() || f.is_zero() != g.is_zero()) return false;
    if (f.is_zero()) return true;
    const auto& [m0, c0] = *f.terms().begin();
    const FieldElement g0 = g.coefficient(m0);
    if (g0.is_zero()) return false;
    return (c0 * g0.inverse()) * g == f;
}

} // namespace testutil
