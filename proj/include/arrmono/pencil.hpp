#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <vector>

#include "arrmono/arrangement.hpp"
#include "arrmono/evaluation.hpp"

namespace arrmono {

/// The decomposition Q = Q1*Q2*Q3 with Q3 = Q1 + Q2 exactly, together
/// with the induced split of the triple-point set: T0 = the m^2 base
/// points (one line from each part through each), T_i = triple points of
/// the i-th subarrangement.
struct PencilStructure {
    int m = 0;
    std::array<std::vector<std::size_t>, 3> parts; // ascending within each part
    std::array<HomogeneousPolynomial, 3> q;        // q[2] == q[0] + q[1]
    std::vector<ProjectivePoint> t0;
    std::array<std::vector<ProjectivePoint>, 3> t; // T1, T2, T3
};

struct SubarrangementProfile {
    std::array<int, 3> sizes; // (|T1|, |T2|, |T3|)
    int sigma;                // min over i != j of |T_i| + |T_j|
};

inline SubarrangementProfile profile(const PencilStructure& p) {
    std::array<int, 3> s{static_cast<int>(p.t[0].size()), static_cast<int>(p.t[1].size()),
                         static_cast<int>(p.t[2].size())};
    const int sigma = std::min({s[0] + s[1], s[1] + s[2], s[0] + s[2]});
    return {s, sigma};
}

namespace detail {

inline HomogeneousPolynomial part_product(const Arrangement& a,
                                          const std::vector<std::size_t>& part) {
    HomogeneousPolynomial q = a.line(part.front()).polynomial();
    for (std::size_t k = 1; k < part.size(); ++k) q = q * a.line(part[k]).polynomial();
    return q;
}

// q3 = alpha*q1 + beta*q2 with alpha, beta nonzero, or nullopt. The
// products of distinct line sets are never proportional, so dependence
// always takes this two-term shape.
inline std::optional<std::pair<FieldElement, FieldElement>> dependence(
    const HomogeneousPolynomial& q1, const HomogeneousPolynomial& q2,
    const HomogeneousPolynomial& q3) {
    const auto basis_dim = static_cast<std::size_t>(graded_dimension(q1.degree()));
    Matrix a(basis_dim, 2);
    const auto v1 = q1.coefficient_vector();
    const auto v2 = q2.coefficient_vector();
    for (std::size_t r = 0; r < basis_dim; ++r) {
        a.at(r, 0) = v1[r];
        a.at(r, 1) = v2[r];
    }
    const auto sol = solve_unique(a, q3.coefficient_vector());
    if (!sol) return std::nullopt;
    if ((*sol)[0].is_zero() || (*sol)[1].is_zero()) return std::nullopt;
    return std::make_pair((*sol)[0], (*sol)[1]);
}

// Cheap exact prefilter: evaluating the three products at a few fixed
// representatives bounds their rank from below; a value matrix of rank 3
// rules the candidate out without expanding any product.
inline bool products_maybe_dependent(const Arrangement& a,
                                     const std::array<std::vector<std::size_t>, 3>& parts) {
    static const std::array<std::array<FieldElement, 3>, 4> probes = [] {
        auto e = [](long v) { return FieldElement(v); };
        return std::array<std::array<FieldElement, 3>, 4>{{{e(1), e(2), e(3)},
                                                           {e(3), e(1), e(2)},
                                                           {e(2), e(5), e(1)},
                                                           {e(1), e(-4), e(9)}}};
    }();
    Matrix values(3, probes.size());
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t k = 0; k < probes.size(); ++k) {
            FieldElement prod = FieldElement::one();
            for (std::size_t li : parts[i]) {
                const auto& c = a.line(li).coeffs();
                prod *= c[0] * probes[k][0] + c[1] * probes[k][1] + c[2] * probes[k][2];
            }
            values.at(i, k) = prod;
        }
    return rank(std::move(values)) <= 2;
}

} // namespace detail

/// Check a partition of the lines into three equal parts against the
/// reduced-pencil contract and compute the full structure. The products
/// q1, q2 are rescaled so that the third slot satisfies q3 = q1 + q2
/// exactly; when the raw products already satisfy q1 + q2 + q3 = 0 the
/// third product's sign is flipped instead, keeping q1 and q2 as written.
inline PencilStructure validate_partition(const Arrangement& a,
                                          std::array<std::vector<std::size_t>, 3> parts,
                                          const TripleOnlyCertificate& cert) {
    const std::size_t d = a.size();
    if (d % 3 != 0) throw NotAPencil("line count " + std::to_string(d) + " is not 3m");
    const std::size_t m = d / 3;
    std::vector<int> owner(d, -1);
    for (int i = 0; i < 3; ++i) {
        if (parts[static_cast<std::size_t>(i)].size() != m)
            throw NotAPencil("each part must contain exactly m = " + std::to_string(m) + " lines");
        for (std::size_t li : parts[static_cast<std::size_t>(i)]) {
            if (li >= d || owner[li] != -1)
                throw NotAPencil("partition is not a split of the line indices");
            owner[li] = i;
        }
        std::sort(parts[static_cast<std::size_t>(i)].begin(), parts[static_cast<std::size_t>(i)].end());
    }

    std::array<HomogeneousPolynomial, 3> q{detail::part_product(a, parts[0]),
                                           detail::part_product(a, parts[1]),
                                           detail::part_product(a, parts[2])};
    const auto ab = detail::dependence(q[0], q[1], q[2]);
    if (!ab)
        throw NotAPencil("the three part products are not a pencil (coefficient rank is 3)");
    const auto& [alpha, beta] = *ab;
    const FieldElement minus_one(-1);
    if (alpha == minus_one && beta == minus_one) {
        q[2] = -q[2];
    } else {
        q[0] = alpha * q[0];
        q[1] = beta * q[1];
    }
    if (!(q[0] + q[1] - q[2]).is_zero())
        throw DomainError("rescaling failed to enforce Q3 = Q1 + Q2");

    PencilStructure p;
    p.m = static_cast<int>(m);
    p.parts = parts;
    p.q = {q[0], q[1], q[2]};

    for (const auto& lp : cert.triple_points) {
        const int pa = owner[lp.incident[0]];
        const int pb = owner[lp.incident[1]];
        const int pc = owner[lp.incident[2]];
        if (pa == pb && pb == pc)
            p.t[static_cast<std::size_t>(pa)].push_back(lp.point);
        else if (pa != pb && pb != pc && pa != pc)
            p.t0.push_back(lp.point);
        else
            throw DegeneratePencil("triple point " + lp.point.to_string() +
                                   " mixes two parts of the pencil");
    }
    if (p.t0.size() != m * m)
        throw DegeneratePencil("base locus has " + std::to_string(p.t0.size()) +
                               " points, expected m^2 = " + std::to_string(m * m));
    // No line of one subarrangement may pass through a triple point of
    // another; with at most triple points this is automatic, so treat a
    // failure as a degenerate pencil.
    for (std::size_t i = 0; i < 3; ++i)
        for (const auto& pt : p.t[i])
            for (std::size_t li = 0; li < d; ++li)
                if (owner[li] != static_cast<int>(i) && a.line(li).contains(pt))
                    throw DegeneratePencil("line " + std::to_string(li) +
                                           " meets a triple point of another subarrangement");
    return p;
}

inline PencilStructure validate_partition(const Arrangement& a,
                                          const std::array<std::vector<std::size_t>, 3>& parts) {
    return validate_partition(a, parts, certify_triple_only(build_lattice(a)));
}

namespace detail {

// Canonical form used to compare partitions: parts sorted internally,
// then the three parts as a lexicographically sorted triple.
inline std::array<std::vector<std::size_t>, 3> canonical_parts(
    std::array<std::vector<std::size_t>, 3> parts) {
    for (auto& part : parts) std::sort(part.begin(), part.end());
    std::sort(parts.begin(), parts.end());
    return parts;
}

struct PencilSearch {
    const Arrangement& a;
    const TripleOnlyCertificate& cert;
    bool use_triple_constraints;
    std::size_t m;
    std::vector<int> color;
    std::array<std::size_t, 3> count{0, 0, 0};
    // triples touching each line, as indices into cert.triple_points
    std::vector<std::vector<std::size_t>> triples_by_line;
    std::optional<PencilStructure> best;

    PencilSearch(const Arrangement& arr, const TripleOnlyCertificate& c, bool constraints)
        : a(arr), cert(c), use_triple_constraints(constraints), m(arr.size() / 3),
          color(arr.size(), -1), triples_by_line(arr.size()) {
        for (std::size_t t = 0; t < cert.triple_points.size(); ++t)
            for (std::size_t li : cert.triple_points[t].incident) triples_by_line[li].push_back(t);
    }

    // All-same-or-all-distinct over the assigned lines of each triple
    // through the line just colored.
    bool consistent(std::size_t line) const {
        for (std::size_t t : triples_by_line[line]) {
            const auto& inc = cert.triple_points[t].incident;
            int c0 = color[inc[0]], c1 = color[inc[1]], c2 = color[inc[2]];
            int assigned = (c0 >= 0) + (c1 >= 0) + (c2 >= 0);
            if (assigned < 2) continue;
            if (assigned == 2) {
                // Two equal colors force the third to match; two distinct
                // colors stay extendable either way.
                continue;
            }
            const bool same = c0 == c1 && c1 == c2;
            const bool distinct = c0 != c1 && c1 != c2 && c0 != c2;
            if (!same && !distinct) return false;
        }
        return true;
    }

    void visit_leaf() {
        std::array<std::vector<std::size_t>, 3> parts;
        for (std::size_t li = 0; li < color.size(); ++li)
            parts[static_cast<std::size_t>(color[li])].push_back(li);
        if (!products_maybe_dependent(a, parts)) return;
        try {
            PencilStructure p = validate_partition(a, parts, cert);
            if (!best || canonical_parts(p.parts) < canonical_parts(best->parts)) best = std::move(p);
        } catch (const NotAPencil&) {
        } catch (const DegeneratePencil&) {
        }
    }

    void dfs(std::size_t line, int colors_used) {
        if (line == color.size()) {
            visit_leaf();
            return;
        }
        // Symmetry breaking: a new color may only be opened by the
        // first line that reaches it, so each set partition appears once.
        const int limit = std::min(colors_used + 1, 3);
        for (int c = 0; c < limit; ++c) {
            if (count[static_cast<std::size_t>(c)] == m) continue;
            color[line] = c;
            ++count[static_cast<std::size_t>(c)];
            if (!use_triple_constraints || consistent(line))
                dfs(line + 1, std::max(colors_used, c + 1));
            --count[static_cast<std::size_t>(c)];
            color[line] = -1;
        }
    }
};

inline std::optional<PencilStructure> search_pencil_impl(const Arrangement& a, bool constraints) {
    if (a.size() % 3 != 0) return std::nullopt;
    const auto cert = certify_triple_only(build_lattice(a));
    // Any pencil has m^2 >= 1 base points, all triple points of the
    // arrangement, so no triple points means no pencil.
    if (cert.triple_points.empty()) return std::nullopt;
    PencilSearch search(a, cert, constraints);
    search.dfs(0, 0);
    return search.best;
}

} // namespace detail

/// The valid pencil partition that is lexicographically minimal in
/// canonical form, or nullopt. Candidate partitions are grown by
/// constraint propagation over the triple points (the three lines of a
/// triple point lie all in one part or in three distinct parts).
inline std::optional<PencilStructure> search_pencil(const Arrangement& a) {
    return detail::search_pencil_impl(a, true);
}

/// Raw enumeration over all set partitions into three equal parts; slow,
/// kept as an independent cross-check of the pruned search.
inline std::optional<PencilStructure> search_pencil_exhaustive(const Arrangement& a) {
    return detail::search_pencil_impl(a, false);
}

} // namespace arrmono
