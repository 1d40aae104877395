#pragma once

#include <compare>
#include <string>
#include <string_view>

#include "arrmono/rational.hpp"

namespace arrmono {

/// Element of the 6th cyclotomic field K = Q(w), where w is a primitive
/// 6th root of unity with minimal polynomial w^2 = w - 1.
///
/// Stored as re + wc*w with exact rational components; this basis contains
/// the primitive cube roots of unity as omega = w - 1 and omega^2 = -w,
/// and conj(w) = w^5 = 1 - w.
class FieldElement {
public:
    FieldElement() = default;
    FieldElement(Rational re, Rational wc) : re_(std::move(re)), wc_(std::move(wc)) {}
    explicit FieldElement(Rational re) : re_(std::move(re)) {}
    explicit FieldElement(long n) : re_(n) {}

    static FieldElement zero() { return FieldElement(); }
    static FieldElement one() { return FieldElement(Rational(1)); }
    static FieldElement w() { return FieldElement(Rational(0), Rational(1)); }
    /// Primitive cube root of unity, omega = w^2 = w - 1.
    static FieldElement omega() { return FieldElement(Rational(-1), Rational(1)); }

    const Rational& re_part() const { return re_; }
    const Rational& w_part() const { return wc_; }

    bool is_zero() const { return re_ == 0 && wc_ == 0; }
    bool is_one() const { return re_ == 1 && wc_ == 0; }
    bool is_rational() const { return wc_ == 0; }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
        return {a.re_ + b.re_, a.wc_ + b.wc_};
    }
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
        return {a.re_ - b.re_, a.wc_ - b.wc_};
    }
    FieldElement operator-() const { return {-re_, -wc_}; }

    // (p + qw)(r + sw) = (pr - qs) + (ps + qr + qs) w, using w^2 = w - 1.
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
        return {a.re_ * b.re_ - a.wc_ * b.wc_,
                a.re_ * b.wc_ + a.wc_ * b.re_ + a.wc_ * b.wc_};
    }

    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

    /// Complex conjugate: conj(p + qw) = (p + q) - q w, since conj(w) = w^5.
    FieldElement conj() const { return {re_ + wc_, -wc_}; }

    /// norm(x) = x * conj(x) = p^2 + pq + q^2, a nonnegative rational,
    /// zero iff x = 0.
    Rational norm() const { return re_ * re_ + re_ * wc_ + wc_ * wc_; }

    FieldElement inverse() const {
        if (is_zero()) throw DomainError("division by zero in Q(w)");
        const Rational n = norm();
        FieldElement c = conj();
        return {c.re_ / n, c.wc_ / n};
    }

    friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
        return a * b.inverse();
    }

    FieldElement pow(unsigned e) const {
        FieldElement acc = one(), base = *this;
        for (; e; e >>= 1) {
            if (e & 1) acc *= base;
            base *= base;
        }
        return acc;
    }

    friend bool operator==(const FieldElement& a, const FieldElement& b) = default;

    /// Total order used only for deterministic sorting of reports:
    /// lexicographic on (re_part, w_part).
    friend std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b) {
        if (auto c = a.re_.compare(b.re_); c != 0)
            return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
        auto c = a.wc_.compare(b.wc_);
        if (c == 0) return std::strong_ordering::equal;
        return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }

    std::string to_string() const;

private:
    Rational re_{};
    Rational wc_{};
};

/// Canonical textual form, the single source of truth for parsing and
/// printing: reduced fractions, zero parts omitted, coefficient 1 of w
/// printed as plain `w` (so `0`, `-1/2`, `10w`, `-1/2+3w`, `1-w`).
inline std::string FieldElement::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    if (re_ != 0) out += arrmono::to_string(re_);
    if (wc_ != 0) {
        if (wc_ > 0 && re_ != 0) out += '+';
        if (wc_ == -1)
            out += '-';
        else if (wc_ != 1)
            out += arrmono::to_string(wc_);
        out += 'w';
    }
    return out;
}

/// Parse the canonical ELEM grammar: RAT | [RAT] sign [RAT] "w".
inline FieldElement parse_field_element(std::string_view tok) {
    const auto bad = [&] { throw ParseError("bad coefficient token '" + std::string(tok) + "'"); };
    if (tok.empty()) bad();
    if (tok.back() != 'w') return FieldElement(parse_rational(tok));
    std::string_view body = tok.substr(0, tok.size() - 1);
    // Split at the last '+' or '-' that is not the leading sign and does
    // not follow '/'; RAT tokens contain signs only in front.
    std::size_t split = std::string_view::npos;
    for (std::size_t i = body.size(); i-- > 1;) {
        if (body[i] == '+' || body[i] == '-') {
            split = i;
            break;
        }
    }
    Rational re(0), wc;
    if (split == std::string_view::npos) {
        if (body.empty())
            wc = 1;
        else if (body == "-")
            wc = -1;
        else
            wc = parse_rational(body);
    } else {
        re = parse_rational(body.substr(0, split));
        std::string_view mag = body.substr(split + 1);
        wc = mag.empty() ? Rational(1) : parse_rational(mag);
        if (body[split] == '-') wc = -wc;
    }
    return {re, wc};
}

} // namespace arrmono
