#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "arrmono/errors.hpp"

namespace arrmono {

using Int = boost::multiprecision::cpp_int;

// Always stored in canonical form: gcd(|num|, den) = 1, den >= 1.
// cpp_rational maintains this on every operation.
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(const Int& num, const Int& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    return Rational(num) / Rational(den);
}

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

inline std::string to_string(const Rational& q) {
    std::string s = numerator(q).str();
    if (!is_integer(q)) {
        s += '/';
        s += denominator(q).str();
    }
    return s;
}

namespace detail {

inline bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

// digits without a spurious leading zero
inline bool plain_number(std::string_view s) {
    return all_digits(s) && (s.size() == 1 || s[0] != '0');
}

} // namespace detail

/// Strict grammar: RAT := INT | INT "/" POSINT, INT := ["-"] digits.
/// No interior spaces, no leading '+'.
inline Rational parse_rational(std::string_view tok) {
    const auto bad = [&] { throw ParseError("bad rational token '" + std::string(tok) + "'"); };
    if (tok.empty()) bad();
    std::string_view int_part = tok;
    std::string_view den_part;
    if (auto slash = tok.find('/'); slash != std::string_view::npos) {
        int_part = tok.substr(0, slash);
        den_part = tok.substr(slash + 1);
        if (!detail::plain_number(den_part) || den_part == "0") bad();
    }
    std::string_view digits = int_part;
    if (!digits.empty() && digits[0] == '-') digits.remove_prefix(1);
    if (!detail::plain_number(digits)) bad();
    Int num{std::string(int_part)};
    Int den = den_part.empty() ? Int(1) : Int{std::string(den_part)};
    return make_rational(num, den);
}

} // namespace arrmono
