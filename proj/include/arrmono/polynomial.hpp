#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "arrmono/field.hpp"

namespace arrmono {

/// Power product x^i y^j z^k.
struct Monomial {
    int x = 0, y = 0, z = 0;

    int degree() const { return x + y + z; }

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded lexicographic order with x > y > z; within one degree this is
/// plain lex, so the basis of S_k starts at x^k and ends at z^k. The
/// comparator sorts "earlier in the basis" first.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.degree() != b.degree()) return a.degree() > b.degree();
        if (a.x != b.x) return a.x > b.x;
        return a.y > b.y;
    }
};

/// dim S_k = (k+1)(k+2)/2 for k >= 0; the graded pieces of negative
/// degree are the zero space.
inline int graded_dimension(int k) { return k < 0 ? 0 : (k + 1) * (k + 2) / 2; }

/// Degree-k monomials in the fixed deterministic order (graded lex,
/// x > y > z); empty for k < 0.
inline std::vector<Monomial> monomial_basis(int k) {
    std::vector<Monomial> basis;
    if (k < 0) return basis;
    basis.reserve(static_cast<std::size_t>(graded_dimension(k)));
    for (int i = k; i >= 0; --i)
        for (int j = k - i; j >= 0; --j) basis.push_back({i, j, k - i - j});
    return basis;
}

/// Exact sparse homogeneous form in x, y, z over Q(w). Only nonzero
/// coefficients are stored; the zero polynomial of degree k is the empty
/// term map.
class HomogeneousPolynomial {
public:
    using TermMap = std::map<Monomial, FieldElement, MonomialOrder>;

    /// The zero constant; mainly for default-constructed aggregates.
    HomogeneousPolynomial() = default;

    explicit HomogeneousPolynomial(int degree) : degree_(degree) {
        if (degree < 0) throw DomainError("polynomial of negative degree");
    }

    static HomogeneousPolynomial zero(int degree) { return HomogeneousPolynomial(degree); }

    /// Linear form a*x + b*y + c*z.
    static HomogeneousPolynomial linear(const FieldElement& a, const FieldElement& b,
                                        const FieldElement& c) {
        HomogeneousPolynomial f(1);
        f.set({1, 0, 0}, a);
        f.set({0, 1, 0}, b);
        f.set({0, 0, 1}, c);
        return f;
    }

    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    FieldElement coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? FieldElement::zero() : it->second;
    }

    void set(const Monomial& m, const FieldElement& c) {
        if (m.degree() != degree_) throw DomainError("monomial degree mismatch");
        if (c.is_zero())
            terms_.erase(m);
        else
            terms_[m] = c;
    }

    void add_term(const Monomial& m, const FieldElement& c) { set(m, coefficient(m) + c); }

    friend HomogeneousPolynomial operator+(const HomogeneousPolynomial& f,
                                           const HomogeneousPolynomial& g) {
        if (f.degree_ != g.degree_) throw DomainError("degree mismatch in sum");
        HomogeneousPolynomial h = f;
        for (const auto& [m, c] : g.terms_) h.add_term(m, c);
        return h;
    }

    friend HomogeneousPolynomial operator-(const HomogeneousPolynomial& f,
                                           const HomogeneousPolynomial& g) {
        if (f.degree_ != g.degree_) throw DomainError("degree mismatch in difference");
        HomogeneousPolynomial h = f;
        for (const auto& [m, c] : g.terms_) h.add_term(m, -c);
        return h;
    }

    friend HomogeneousPolynomial operator*(const HomogeneousPolynomial& f,
                                           const HomogeneousPolynomial& g) {
        HomogeneousPolynomial h(f.degree_ + g.degree_);
        for (const auto& [mf, cf] : f.terms_)
            for (const auto& [mg, cg] : g.terms_)
                h.add_term({mf.x + mg.x, mf.y + mg.y, mf.z + mg.z}, cf * cg);
        return h;
    }

    friend HomogeneousPolynomial operator*(const FieldElement& s, const HomogeneousPolynomial& f) {
        HomogeneousPolynomial h(f.degree_);
        if (s.is_zero()) return h;
        for (const auto& [m, c] : f.terms_) h.terms_[m] = s * c;
        return h;
    }

    HomogeneousPolynomial operator-() const { return FieldElement(-1) * *this; }

    friend bool operator==(const HomogeneousPolynomial& f, const HomogeneousPolynomial& g) {
        return f.degree_ == g.degree_ && f.terms_ == g.terms_;
    }

    /// Evaluate at an explicit coordinate representative.
    FieldElement evaluate_at(const std::array<FieldElement, 3>& v) const {
        // Precompute coordinate powers up to the degree.
        std::array<std::vector<FieldElement>, 3> pw;
        for (int c = 0; c < 3; ++c) {
            pw[c].resize(static_cast<std::size_t>(degree_) + 1);
            pw[c][0] = FieldElement::one();
            for (int e = 1; e <= degree_; ++e) pw[c][e] = pw[c][e - 1] * v[static_cast<std::size_t>(c)];
        }
        FieldElement acc = FieldElement::zero();
        for (const auto& [m, c] : terms_) acc += c * pw[0][m.x] * pw[1][m.y] * pw[2][m.z];
        return acc;
    }

    /// Substitution f(x,y,z) -> f(y,z,x) induced by the cyclic coordinate
    /// permutation; a degree-preserving ring morphism with tau^3 = id.
    HomogeneousPolynomial cyclic_tau() const {
        HomogeneousPolynomial h(degree_);
        for (const auto& [m, c] : terms_) h.terms_[{m.z, m.x, m.y}] = c;
        return h;
    }

    /// Coefficients w.r.t. monomial_basis(degree()), in basis order.
    std::vector<FieldElement> coefficient_vector() const {
        std::vector<FieldElement> v;
        v.reserve(static_cast<std::size_t>(graded_dimension(degree_)));
        for (const Monomial& m : monomial_basis(degree_)) v.push_back(coefficient(m));
        return v;
    }

    std::string to_string() const;

private:
    int degree_ = 0;
    TermMap terms_;
};

namespace detail {

inline std::string monomial_string(const Monomial& m) {
    std::string s;
    const auto var = [&](char name, int e) {
        if (e == 0) return;
        if (!s.empty()) s += '*';
        s += name;
        if (e > 1) {
            s += '^';
            s += std::to_string(e);
        }
    };
    var('x', m.x);
    var('y', m.y);
    var('z', m.z);
    return s;
}

// Display sign of a field element: the sign of the first nonzero component.
inline bool display_negative(const FieldElement& c) {
    if (c.re_part() != 0) return c.re_part() < 0;
    return c.w_part() < 0;
}

} // namespace detail

inline std::string HomogeneousPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        const bool compound = c.re_part() != 0 && c.w_part() != 0;
        FieldElement shown = c;
        if (!compound && detail::display_negative(c)) {
            out += out.empty() ? "-" : " - ";
            shown = -c;
        } else if (!out.empty()) {
            out += " + ";
        }
        std::string mono = detail::monomial_string(m);
        if (mono.empty()) {
            out += shown.to_string();
        } else {
            if (compound) {
                out += '(' + shown.to_string() + ")*";
            } else if (!shown.is_one()) {
                out += shown.to_string() + '*';
            }
            out += mono;
        }
    }
    return out;
}

} // namespace arrmono
