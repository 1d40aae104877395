#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "arrmono/monodromy.hpp"

namespace arrmono {

struct CatalogExpected {
    int s = 0;
    int t_total = 0;
    int t0 = 0;
    std::array<int, 3> sizes{0, 0, 0};
    TheoremBranch branch = TheoremBranch::Small;
    int b1_f = 0;
};

struct CatalogEntry {
    std::string name;
    Arrangement arrangement;
    std::array<std::vector<std::size_t>, 3> documented_partition;
    CatalogExpected expected;
};

struct CatalogParams {
    std::optional<Rational> c;                       // yoshinaga18 only
    std::optional<std::array<Rational, 3>> hyperplane; // d4section only
};

inline std::vector<std::string> catalog_names() {
    return {"concurrent3", "a3", "ceva", "hesse", "d4section", "yoshinaga18"};
}

namespace detail {

inline ProjectiveLine make_line(FieldElement a, FieldElement b, FieldElement c) {
    return ProjectiveLine(std::move(a), std::move(b), std::move(c));
}

inline FieldElement fe(long n) { return FieldElement(n); }

// The three linear factors of u^3 - v^3 in the chosen coordinates:
// u - v, u - omega v, u - omega^2 v.
inline std::vector<ProjectiveLine> cube_difference_lines(std::size_t u, std::size_t v) {
    std::vector<ProjectiveLine> lines;
    const std::array<FieldElement, 3> roots{fe(1), FieldElement::omega(),
                                            FieldElement::omega() * FieldElement::omega()};
    for (const auto& r : roots) {
        std::array<FieldElement, 3> coeffs{fe(0), fe(0), fe(0)};
        coeffs[u] = fe(1);
        coeffs[v] = -r;
        lines.push_back(ProjectiveLine(coeffs));
    }
    return lines;
}

// Factors of x^3 + y^3 + z^3 - 3*lambda*xyz for lambda a cube root of
// unity: substituting y -> lambda*y in the lambda = 1 factorization gives
// (x + lambda y + z)(x + omega lambda y + omega^2 z)(x + omega^2 lambda y + omega z).
inline std::vector<ProjectiveLine> hesse_fiber_lines(const FieldElement& lambda) {
    const FieldElement om = FieldElement::omega();
    const FieldElement om2 = om * om;
    return {make_line(fe(1), lambda, fe(1)), make_line(fe(1), om * lambda, om2),
            make_line(fe(1), om2 * lambda, om)};
}

inline std::array<std::vector<std::size_t>, 3> block_partition(std::size_t m) {
    std::array<std::vector<std::size_t>, 3> parts;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t k = 0; k < m; ++k) parts[i].push_back(i * m + k);
    return parts;
}

// Structural validation shared by the parameterized entries: the lines
// must be pairwise distinct, the lattice must have only double and triple
// points, and the documented partition must reproduce the documented
// base-locus size and subarrangement profile.
inline CatalogEntry validated_entry(std::string name, std::vector<ProjectiveLine> lines,
                                    std::array<std::vector<std::size_t>, 3> parts,
                                    CatalogExpected expected, bool parameterized) {
    const auto reject = [&](const std::string& why) -> CatalogEntry {
        throw ParameterRejection("catalog entry " + name + ": " + why);
    };
    try {
        Arrangement arr(std::move(lines), name);
        if (parameterized) {
            const auto cert = certify_triple_only(build_lattice(arr));
            const PencilStructure p = validate_partition(arr, parts, cert);
            if (static_cast<int>(p.t0.size()) != expected.t0)
                return reject("base locus has " + std::to_string(p.t0.size()) + " points, expected " +
                              std::to_string(expected.t0));
            if (profile(p).sizes != expected.sizes)
                return reject("subarrangement triple-point counts differ from the documented ones");
        }
        return {std::move(name), std::move(arr), std::move(parts), expected};
    } catch (const ParameterRejection&) {
        throw;
    } catch (const Error& e) {
        if (parameterized) return reject(e.what());
        throw;
    }
}

} // namespace detail

/// Build a named catalog arrangement. The parameterized entries
/// (yoshinaga18 with rational c != 0, d4section with a rational hyperplane)
/// validate their parameters structurally and throw ParameterRejection
/// with the violated check when the choice is degenerate.
inline CatalogEntry build_catalog(const std::string& name, const CatalogParams& params = {}) {
    using detail::fe;
    using detail::make_line;
    const FieldElement om = FieldElement::omega();
    const FieldElement om2 = om * om;
    const FieldElement w = FieldElement::w();

    if (params.c && name != "yoshinaga18")
        throw ParameterRejection("parameter c applies only to yoshinaga18");
    if (params.hyperplane && name != "d4section")
        throw ParameterRejection("parameter hyperplane applies only to d4section");

    if (name == "concurrent3") {
        std::vector<ProjectiveLine> lines{make_line(fe(1), fe(-1), fe(0)),
                                          make_line(fe(0), fe(1), fe(-1)),
                                          make_line(fe(1), fe(0), fe(-1))};
        return detail::validated_entry(name, std::move(lines), detail::block_partition(1),
                                       {1, 1, 1, {0, 0, 0}, TheoremBranch::Small, 4}, false);
    }
    if (name == "a3") {
        std::vector<ProjectiveLine> lines{
            make_line(fe(1), fe(-1), fe(0)), make_line(fe(1), fe(1), fe(0)),
            make_line(fe(0), fe(1), fe(-1)), make_line(fe(0), fe(1), fe(1)),
            make_line(fe(1), fe(0), fe(-1)), make_line(fe(1), fe(0), fe(1))};
        return detail::validated_entry(name, std::move(lines), detail::block_partition(2),
                                       {1, 4, 4, {0, 0, 0}, TheoremBranch::Small, 7}, false);
    }
    if (name == "ceva") {
        std::vector<ProjectiveLine> lines;
        for (auto part : {detail::cube_difference_lines(0, 1), detail::cube_difference_lines(1, 2),
                          detail::cube_difference_lines(0, 2)})
            lines.insert(lines.end(), part.begin(), part.end());
        return detail::validated_entry(name, std::move(lines), detail::block_partition(3),
                                       {2, 12, 9, {1, 1, 1}, TheoremBranch::MaxCeva, 12}, false);
    }
    if (name == "hesse") {
        // Three of the four singular fibers of a(x^3+y^3+z^3) + b xyz:
        // the coordinate triangle and the lambda = 1, omega fibers.
        std::vector<ProjectiveLine> lines{make_line(fe(1), fe(0), fe(0)),
                                          make_line(fe(0), fe(1), fe(0)),
                                          make_line(fe(0), fe(0), fe(1))};
        for (const auto& lambda : {fe(1), om})
            for (const auto& l : detail::hesse_fiber_lines(lambda)) lines.push_back(l);
        return detail::validated_entry(name, std::move(lines), detail::block_partition(3),
                                       {1, 9, 9, {0, 0, 0}, TheoremBranch::Small, 10}, false);
    }
    if (name == "d4section") {
        const std::array<Rational, 3> h =
            params.hyperplane.value_or(std::array<Rational, 3>{Rational(2), Rational(3), Rational(5)});
        const FieldElement al{h[0]}, be{h[1]}, ga{h[2]};
        std::string label = "d4section(" + to_string(h[0]) + "," + to_string(h[1]) + "," +
                            to_string(h[2]) + ")";
        // The plane section t = alpha x + beta y + gamma z of the twelve
        // planes x^2-y^2, x^2-z^2, x^2-t^2, y^2-z^2, y^2-t^2, z^2-t^2,
        // grouped by the identity (a-b)(c-d) + (a-c)(d-b) + (a-d)(b-c) = 0.
        std::vector<ProjectiveLine> lines;
        const auto push = [&](FieldElement a, FieldElement b, FieldElement c) {
            if (a.is_zero() && b.is_zero() && c.is_zero())
                throw ParameterRejection("catalog entry " + label +
                                         ": a section factor degenerates to zero");
            lines.push_back(make_line(std::move(a), std::move(b), std::move(c)));
        };
        // part 1: (x^2 - y^2)(z^2 - t^2)
        push(fe(1), fe(-1), fe(0));
        push(fe(1), fe(1), fe(0));
        push(-al, -be, fe(1) - ga);
        push(al, be, fe(1) + ga);
        // part 2: (x^2 - z^2)(t^2 - y^2)
        push(fe(1), fe(0), fe(-1));
        push(fe(1), fe(0), fe(1));
        push(al, be - fe(1), ga);
        push(al, be + fe(1), ga);
        // part 3: (x^2 - t^2)(y^2 - z^2)
        push(fe(1) - al, -be, -ga);
        push(fe(1) + al, be, ga);
        push(fe(0), fe(1), fe(-1));
        push(fe(0), fe(1), fe(1));
        return detail::validated_entry(label, std::move(lines), detail::block_partition(4),
                                       {1, 16, 16, {0, 0, 0}, TheoremBranch::Small, 13}, true);
    }
    if (name == "yoshinaga18") {
        const Rational cr = params.c.value_or(Rational(10));
        if (cr == 0) throw ParameterRejection("catalog entry yoshinaga18: c must be nonzero");
        const FieldElement c{cr};
        std::string label = "yoshinaga18(c=" + to_string(cr) + ")";
        // Subarrangement 1: (x^3 - y^3)(x + y - cz)(wx + (1-w)y + cz)((1-w)x + wy + cz);
        // subarrangements 2 and 3 are its images under the cyclic
        // coordinate permutation.
        std::vector<std::array<FieldElement, 3>> first;
        for (const auto& l : detail::cube_difference_lines(0, 1)) first.push_back(l.coeffs());
        first.push_back({fe(1), fe(1), -c});
        first.push_back({w, fe(1) - w, c});
        first.push_back({fe(1) - w, w, c});
        std::vector<ProjectiveLine> lines;
        for (int rot = 0; rot < 3; ++rot)
            for (const auto& t : first) {
                std::array<FieldElement, 3> v = t;
                for (int r = 0; r < rot; ++r) v = {v[2], v[0], v[1]};
                lines.push_back(ProjectiveLine(v));
            }
        return detail::validated_entry(label, std::move(lines), detail::block_partition(6),
                                       {2, 48, 36, {4, 4, 4}, TheoremBranch::Max48Conics, 21}, true);
    }
    throw ParameterRejection("unknown catalog name '" + name + "'");
}

/// The four singular fibers of the pencil a(x^3+y^3+z^3) + b xyz as line
/// triples: the coordinate triangle and the lambda = 1, omega, omega^2
/// fibers. Any three of them form a Hesse-type arrangement.
inline std::array<std::vector<ProjectiveLine>, 4> hesse_fibers() {
    using detail::fe;
    const FieldElement om = FieldElement::omega();
    std::array<std::vector<ProjectiveLine>, 4> fibers;
    fibers[0] = {detail::make_line(fe(1), fe(0), fe(0)), detail::make_line(fe(0), fe(1), fe(0)),
                 detail::make_line(fe(0), fe(0), fe(1))};
    fibers[1] = detail::hesse_fiber_lines(fe(1));
    fibers[2] = detail::hesse_fiber_lines(om);
    fibers[3] = detail::hesse_fiber_lines(om * om);
    return fibers;
}

} // namespace arrmono
