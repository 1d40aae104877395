#pragma once

#include <array>
#include <string>

#include "arrmono/polynomial.hpp"

namespace arrmono {

namespace detail {

inline std::array<FieldElement, 3> cross(const std::array<FieldElement, 3>& a,
                                         const std::array<FieldElement, 3>& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

} // namespace detail

/// Point of P^2 over Q(w). The stored representative is canonical: the
/// last nonzero coordinate equals 1, matching the usual (a:b:1) displays.
class ProjectivePoint {
public:
    explicit ProjectivePoint(std::array<FieldElement, 3> coords) : c_(std::move(coords)) {
        int last = -1;
        for (int i = 2; i >= 0; --i)
            if (!c_[static_cast<std::size_t>(i)].is_zero()) {
                last = i;
                break;
            }
        if (last < 0) throw DomainError("projective point needs a nonzero coordinate");
        const FieldElement inv = c_[static_cast<std::size_t>(last)].inverse();
        for (auto& x : c_) x = inv * x;
    }

    ProjectivePoint(FieldElement a, FieldElement b, FieldElement c)
        : ProjectivePoint(std::array<FieldElement, 3>{std::move(a), std::move(b), std::move(c)}) {}

    const std::array<FieldElement, 3>& coords() const { return c_; }

    friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;

    /// Deterministic sort key: lexicographic on the canonical coordinates.
    friend std::strong_ordering operator<=>(const ProjectivePoint& a, const ProjectivePoint& b) {
        for (std::size_t i = 0; i < 3; ++i)
            if (auto c = a.c_[i] <=> b.c_[i]; c != std::strong_ordering::equal) return c;
        return std::strong_ordering::equal;
    }

    std::string to_string() const {
        return "(" + c_[0].to_string() + ":" + c_[1].to_string() + ":" + c_[2].to_string() + ")";
    }

private:
    std::array<FieldElement, 3> c_;
};

/// Line a*x + b*y + c*z = 0 of P^2. Canonical representative: the first
/// nonzero coefficient equals 1, which keeps products of canonical lines
/// aligned with the textbook forms x^2 - y^2, x^3 - y^3, ...
class ProjectiveLine {
public:
    explicit ProjectiveLine(std::array<FieldElement, 3> coeffs) : a_(std::move(coeffs)) {
        int first = -1;
        for (int i = 0; i < 3; ++i)
            if (!a_[static_cast<std::size_t>(i)].is_zero()) {
                first = i;
                break;
            }
        if (first < 0) throw DomainError("projective line needs a nonzero coefficient");
        const FieldElement inv = a_[static_cast<std::size_t>(first)].inverse();
        for (auto& x : a_) x = inv * x;
    }

    ProjectiveLine(FieldElement a, FieldElement b, FieldElement c)
        : ProjectiveLine(std::array<FieldElement, 3>{std::move(a), std::move(b), std::move(c)}) {}

    const std::array<FieldElement, 3>& coeffs() const { return a_; }

    bool contains(const ProjectivePoint& p) const {
        return (a_[0] * p.coords()[0] + a_[1] * p.coords()[1] + a_[2] * p.coords()[2]).is_zero();
    }

    HomogeneousPolynomial polynomial() const {
        return HomogeneousPolynomial::linear(a_[0], a_[1], a_[2]);
    }

    friend bool operator==(const ProjectiveLine&, const ProjectiveLine&) = default;

    std::string to_string() const { return polynomial().to_string(); }

private:
    std::array<FieldElement, 3> a_;
};

/// The unique common point of two distinct lines (cross product of the
/// coefficient triples, canonicalized).
inline ProjectivePoint line_meet(const ProjectiveLine& l1, const ProjectiveLine& l2) {
    auto v = detail::cross(l1.coeffs(), l2.coeffs());
    if (v[0].is_zero() && v[1].is_zero() && v[2].is_zero())
        throw DomainError("meet of equal lines is undefined");
    return ProjectivePoint(std::move(v));
}

/// True iff the determinant of the 3x3 coordinate matrix vanishes.
inline bool collinear(const ProjectivePoint& p, const ProjectivePoint& q,
                      const ProjectivePoint& r) {
    const auto& a = p.coords();
    const auto& b = q.coords();
    const auto& c = r.coords();
    FieldElement det = a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
                       a[2] * (b[0] * c[1] - b[1] * c[0]);
    return det.is_zero();
}

/// Point image of the coordinate permutation behind cyclic_tau: if f
/// vanishes at q then cyclic_tau(f) vanishes at tau_point(q).
inline ProjectivePoint tau_point(const ProjectivePoint& p) {
    const auto& c = p.coords();
    return {c[2], c[0], c[1]};
}

/// Evaluate a form at the canonical representative of a point.
inline FieldElement evaluate(const HomogeneousPolynomial& f, const ProjectivePoint& p) {
    return f.evaluate_at(p.coords());
}

} // namespace arrmono
