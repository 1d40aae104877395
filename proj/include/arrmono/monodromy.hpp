#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "arrmono/pencil.hpp"

namespace arrmono {

/// Superabundance s_k(T) = |T| - rank of the evaluation map S_k -> C^T;
/// the dimension of the cokernel of evaluation. For k < 0 the domain is
/// the zero space and the value is |T|.
inline int superabundance(std::span<const ProjectivePoint> points, int k) {
    return static_cast<int>(points.size()) - static_cast<int>(rank(evaluation_matrix(points, k)));
}

/// Eigenspace dimensions of the monodromy on H^1 of the Milnor fiber.
///
/// For d = 3m the eigenvalues are 1 (multiplicity d - 1) and the two
/// primitive cube roots eps, eps^2, whose shared multiplicity s is the
/// superabundance of the triple points against S_{2m-3}; the nonzero
/// Hodge pieces are h^{1,0}_eps and h^{0,1}_{eps^2}. For d not a
/// multiple of 3 the action is the identity.
struct MonodromyReport {
    int d = 0;
    int m = 0; // 0 when d is not a multiple of 3
    int s = 0;
    int h10_eps = 0;
    int h01_eps = 0;
    int h10_epsbar = 0;
    int h01_epsbar = 0;
    int b1_f = 0;
    // characteristic polynomial (t-1)^e1 * (t^2+t+1)^e2
    std::pair<int, int> char_poly{0, 0};
    bool trivial_monodromy = true;
};

namespace detail {

inline MonodromyReport monodromy_from_cert(const Arrangement& a,
                                           const TripleOnlyCertificate& cert) {
    MonodromyReport r;
    r.d = static_cast<int>(a.size());
    if (r.d % 3 != 0) {
        r.b1_f = r.d - 1;
        r.char_poly = {r.d - 1, 0};
        return r;
    }
    r.m = r.d / 3;
    const auto pts = triple_points(cert);
    r.s = superabundance(pts, 2 * r.m - 3);
    r.h10_eps = r.h01_epsbar = r.s;
    r.h10_epsbar = r.h01_eps = 0;
    r.b1_f = (r.d - 1) + 2 * r.s;
    r.char_poly = {r.d - 1, r.s};
    r.trivial_monodromy = r.s == 0;
    return r;
}

} // namespace detail

/// Full monodromy computation; certifies the double/triple hypothesis
/// first and propagates its violation.
inline MonodromyReport analyze(const Arrangement& a) {
    return detail::monodromy_from_cert(a, certify_triple_only(build_lattice(a)));
}

/// dim Coker of the paired evaluation map S_{m-3}^2 -> C^{T1 u T2 u T3}
/// sending (h1, h2) to (h1 on T2, h2 on T1, h1 - h2 on T3). For m <= 2
/// the domain is the zero space and the value is |T1| + |T2| + |T3|.
inline int coker_rho_prime(const PencilStructure& p) {
    const int n = graded_dimension(p.m - 3);
    const std::size_t rows = p.t[0].size() + p.t[1].size() + p.t[2].size();
    if (n == 0) return static_cast<int>(rows);
    const std::size_t nn = static_cast<std::size_t>(n);
    Matrix m(rows, 2 * nn);
    std::size_t row = 0;
    const auto fill = [&](const ProjectivePoint& pt, bool h1, bool h2, bool negate_h2) {
        Matrix e = evaluation_matrix(std::span(&pt, 1), p.m - 3);
        for (std::size_t c = 0; c < nn; ++c) {
            if (h1) m.at(row, c) = e.at(0, c);
            if (h2) m.at(row, nn + c) = negate_h2 ? -e.at(0, c) : e.at(0, c);
        }
        ++row;
    };
    for (const auto& pt : p.t[1]) fill(pt, true, false, false);  // h1(t2) = 0
    for (const auto& pt : p.t[0]) fill(pt, false, true, false);  // h2(t1) = 0
    for (const auto& pt : p.t[2]) fill(pt, true, true, true);    // h1(t3) - h2(t3) = 0
    return static_cast<int>(rows) - static_cast<int>(rank(std::move(m)));
}

/// The vanishing s_{m-3}(T_j) = 0 for j = 1, 2, 3; meaningful for m >= 3.
inline bool check_vanishing_sj(const PencilStructure& p) {
    if (p.m < 3) throw DomainError("vanishing check needs m >= 3");
    for (const auto& tj : p.t)
        if (superabundance(tj, p.m - 3) != 0) return false;
    return true;
}

enum class TheoremBranch {
    NotPencil,    // not composed of a reduced pencil: trivial monodromy
    Small,        // m < 6, or m = 6 with |T| < 48: s = 1
    MaxCeva,      // m = 3 with |T1| = |T2| = |T3| = 1: s = 2
    Max48Conics,  // m = 6, |T| = 48, all three 8-point unions on conics: s = 2
    Max48Generic, // m = 6, |T| = 48, some union not on a conic: s = 1
};

inline std::string to_string(TheoremBranch b) {
    switch (b) {
        case TheoremBranch::NotPencil: return "NOT_PENCIL";
        case TheoremBranch::Small: return "SMALL";
        case TheoremBranch::MaxCeva: return "MAX_CEVA";
        case TheoremBranch::Max48Conics: return "MAX48_CONICS";
        case TheoremBranch::Max48Generic: return "MAX48_GENERIC";
    }
    return "?";
}

/// The conic findings backing a Max48 branch decision.
struct ConicEvidence {
    std::string points_set; // "T1uT2", "T2uT3", "T1uT3"
    std::optional<Conic> conic;
};

struct TheoremPrediction {
    TheoremBranch branch = TheoremBranch::NotPencil;
    int predicted_s = 0;
    std::vector<ConicEvidence> evidence;
    std::optional<PencilStructure> pencil;
};

/// Decide the combinatorial branch and its predicted eigenspace dimension
/// from the lattice, the pencil search, and the conic predicates alone.
inline TheoremPrediction classify(const Arrangement& a) {
    if (a.size() % 3 != 0) throw DomainError("classification requires d = 3m");
    const int m = static_cast<int>(a.size()) / 3;
    if (m > 6) throw DomainError("the branch classification covers at most 18 lines");
    const auto cert = certify_triple_only(build_lattice(a));
    const int t_total = static_cast<int>(cert.triple_points.size());

    TheoremPrediction out;
    out.pencil = search_pencil(a);
    if (!out.pencil) {
        out.branch = TheoremBranch::NotPencil;
        out.predicted_s = 0;
        return out;
    }
    const auto prof = profile(*out.pencil);
    if (m < 6 || t_total < 48) {
        if (m == 3 && prof.sizes == std::array<int, 3>{1, 1, 1}) {
            out.branch = TheoremBranch::MaxCeva;
            out.predicted_s = 2;
        } else {
            out.branch = TheoremBranch::Small;
            out.predicted_s = 1;
        }
        return out;
    }

    // m = 6 with the maximal 48 triple points: the branch depends on
    // whether each 8-point union T_i u T_j lies on a conic.
    const auto& t = out.pencil->t;
    const auto probe = [&](std::size_t i, std::size_t j, std::string name) {
        std::vector<ProjectivePoint> pts = t[i];
        pts.insert(pts.end(), t[j].begin(), t[j].end());
        out.evidence.push_back({std::move(name), conic_through(pts)});
    };
    probe(0, 1, "T1uT2");
    probe(1, 2, "T2uT3");
    probe(0, 2, "T1uT3");
    const bool all_on_conics = std::all_of(out.evidence.begin(), out.evidence.end(),
                                           [](const ConicEvidence& e) { return e.conic.has_value(); });
    out.branch = all_on_conics ? TheoremBranch::Max48Conics : TheoremBranch::Max48Generic;
    out.predicted_s = all_on_conics ? 2 : 1;
    return out;
}

/// One assertion of the consistency harness. Records with required =
/// false are findings to report rather than failures: a mismatch in the
/// Max48Generic branch would be a witness against lattice determinacy,
/// not a bug.
struct CheckRecord {
    std::string name;
    bool pass = false;
    bool required = true;
    std::string note;
};

struct CrossValidation {
    MonodromyReport report;
    TheoremPrediction prediction;
    std::vector<CheckRecord> records;

    bool ok() const {
        for (const auto& r : records)
            if (r.required && !r.pass) return false;
        return true;
    }
};

/// Run the independent computation routes against each other: the direct
/// superabundance against the branch prediction, and (on a pencil, m >= 2)
/// the paired-map route via dim Coker rho = dim Coker rho' + 1.
inline CrossValidation cross_validate(const Arrangement& a) {
    CrossValidation cv;
    cv.report = analyze(a);
    cv.prediction = classify(a);

    CheckRecord match;
    match.name = "classify_matches_analyze";
    match.pass = cv.prediction.predicted_s == cv.report.s;
    if (!match.pass && cv.prediction.branch == TheoremBranch::Max48Generic) {
        match.required = false;
        match.note = "open-branch witness: predicted " + std::to_string(cv.prediction.predicted_s) +
                     ", computed " + std::to_string(cv.report.s);
    }
    cv.records.push_back(std::move(match));

    if (cv.prediction.pencil && cv.report.m >= 2) {
        const int ckr = coker_rho_prime(*cv.prediction.pencil);
        cv.records.push_back({"prop1_coker_identity", cv.report.s == ckr + 1, true,
                              "s = " + std::to_string(cv.report.s) + ", coker rho' = " + std::to_string(ckr)});
        if (cv.report.m >= 3)
            cv.records.push_back(
                {"vanishing_s_m3_subarrangements", check_vanishing_sj(*cv.prediction.pencil), true, ""});
    }
    return cv;
}

} // namespace arrmono
