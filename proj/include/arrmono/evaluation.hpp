#pragma once

#include <optional>
#include <span>
#include <vector>

#include "arrmono/matrix.hpp"
#include "arrmono/projective.hpp"

namespace arrmono {

/// Evaluation matrix of the degree-k monomial basis at explicit coordinate
/// representatives: rows follow the input order, columns the fixed graded
/// lex order. k < 0 gives a |points| x 0 matrix (S_k = 0).
inline Matrix evaluation_matrix_at(std::span<const std::array<FieldElement, 3>> reps, int k) {
    const auto basis = monomial_basis(k);
    Matrix m(reps.size(), basis.size());
    for (std::size_t r = 0; r < reps.size(); ++r) {
        // Powers of each coordinate up to k, shared across the row.
        std::array<std::vector<FieldElement>, 3> pw;
        for (std::size_t c = 0; c < 3; ++c) {
            pw[c].assign(static_cast<std::size_t>(std::max(k, 0)) + 1, FieldElement::one());
            for (int e = 1; e <= k; ++e) pw[c][static_cast<std::size_t>(e)] = pw[c][static_cast<std::size_t>(e - 1)] * reps[r][c];
        }
        for (std::size_t c = 0; c < basis.size(); ++c)
            m.at(r, c) = pw[0][static_cast<std::size_t>(basis[c].x)] *
                         pw[1][static_cast<std::size_t>(basis[c].y)] *
                         pw[2][static_cast<std::size_t>(basis[c].z)];
    }
    return m;
}

/// Evaluation matrix at the canonical representatives of the points.
inline Matrix evaluation_matrix(std::span<const ProjectivePoint> points, int k) {
    std::vector<std::array<FieldElement, 3>> reps;
    reps.reserve(points.size());
    for (const auto& p : points) reps.push_back(p.coords());
    return evaluation_matrix_at(reps, k);
}

/// True iff the points impose independent conditions on degree-k forms,
/// i.e. rank(evaluation matrix) = min(|points|, dim S_k).
inline bool imposes_independent_conditions(std::span<const ProjectivePoint> points, int k) {
    const std::size_t bound =
        std::min(points.size(), static_cast<std::size_t>(graded_dimension(k)));
    return rank(evaluation_matrix(points, k)) == bound;
}

/// Smooth-or-not certificate for a plane conic: the determinant of the
/// symmetric matrix of the quadratic form.
class Conic {
public:
    explicit Conic(HomogeneousPolynomial form) : form_(std::move(form)) {
        if (form_.degree() != 2 || form_.is_zero()) throw DomainError("conic needs a nonzero quadratic form");
    }

    const HomogeneousPolynomial& form() const { return form_; }

    bool is_smooth() const {
        const FieldElement half(Rational(1, 2));
        const FieldElement a = form_.coefficient({2, 0, 0});
        const FieldElement b = form_.coefficient({0, 2, 0});
        const FieldElement c = form_.coefficient({0, 0, 2});
        const FieldElement d = half * form_.coefficient({1, 1, 0}); // xy
        const FieldElement e = half * form_.coefficient({1, 0, 1}); // xz
        const FieldElement f = half * form_.coefficient({0, 1, 1}); // yz
        const FieldElement det =
            a * (b * c - f * f) - d * (d * c - f * e) + e * (d * f - b * e);
        return !det.is_zero();
    }

    std::string to_string() const { return form_.to_string(); }

private:
    HomogeneousPolynomial form_;
};

namespace detail {

// Deterministic scale: divide by the leading (graded-lex first) coefficient,
// then clear denominators and divide out the integer content.
inline HomogeneousPolynomial normalize_scale(const HomogeneousPolynomial& f) {
    if (f.is_zero()) return f;
    const FieldElement lead = f.terms().begin()->second;
    HomogeneousPolynomial g = lead.inverse() * f;
    Int l = 1, c = 0;
    for (const auto& [m, coef] : g.terms()) {
        l = lcm(l, lcm(denominator(coef.re_part()), denominator(coef.w_part())));
    }
    for (const auto& [m, coef] : g.terms()) {
        c = gcd(c, gcd(numerator(coef.re_part()) * (l / denominator(coef.re_part())),
                       numerator(coef.w_part()) * (l / denominator(coef.w_part()))));
    }
    if (c == 0) return g;
    return FieldElement(make_rational(l, c)) * g;
}

} // namespace detail

/// A conic through every input point, if one exists: the kernel vector of
/// the S_2 evaluation matrix selected by back-substitution with the
/// lexicographically first free column, brought to a normalized scale.
/// Returns nullopt when the points impose 6 independent conditions.
inline std::optional<Conic> conic_through(std::span<const ProjectivePoint> points) {
    const auto basis = kernel_basis(evaluation_matrix(points, 2));
    if (basis.empty()) return std::nullopt;
    const auto& v = basis.front();
    HomogeneousPolynomial form(2);
    const auto monos = monomial_basis(2);
    for (std::size_t i = 0; i < monos.size(); ++i) form.set(monos[i], v[i]);
    return Conic(detail::normalize_scale(form));
}

inline bool conic_is_smooth(const Conic& c) { return c.is_smooth(); }

} // namespace arrmono
