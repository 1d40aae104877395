#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "arrmono/arrfile.hpp"
#include "arrmono/catalog.hpp"
#include "arrmono/monodromy.hpp"

namespace arrmono {

/// Everything one full pipeline run produces for a report.
struct Analysis {
    std::string label;
    int d = 0;
    int t2 = 0;
    int t3 = 0;
    MonodromyReport monodromy;
    std::optional<TheoremPrediction> theorem; // absent when d != 3m or m > 6
    std::string theorem_note;                 // why `theorem` is absent
    std::vector<CheckRecord> checks;
};

/// Certify, analyze, classify, and optionally run the cross-validation
/// harness. Propagates hypothesis violations; a line count outside the
/// classification range only blanks the theorem block.
inline Analysis run_analysis(const Arrangement& a, bool check_prop1 = false) {
    Analysis out;
    out.label = a.label();
    out.d = static_cast<int>(a.size());
    const auto cert = certify_triple_only(build_lattice(a));
    out.t2 = static_cast<int>(cert.double_points.size());
    out.t3 = static_cast<int>(cert.triple_points.size());
    out.checks.push_back({"triple_only_hypothesis", true, true, ""});

    if (out.d % 3 != 0) {
        out.monodromy = detail::monodromy_from_cert(a, cert);
        out.theorem_note = "monodromy is trivial for d not a multiple of 3";
        return out;
    }
    if (out.d / 3 > 6) {
        out.monodromy = detail::monodromy_from_cert(a, cert);
        out.theorem_note = "branch classification covers at most 18 lines";
        return out;
    }
    if (check_prop1) {
        CrossValidation cv = cross_validate(a);
        out.monodromy = cv.report;
        out.theorem = std::move(cv.prediction);
        for (auto& r : cv.records) out.checks.push_back(std::move(r));
    } else {
        out.monodromy = detail::monodromy_from_cert(a, cert);
        out.theorem = classify(a);
    }
    return out;
}

namespace detail {

inline nlohmann::ordered_json pencil_json(const std::optional<TheoremPrediction>& theorem) {
    nlohmann::ordered_json j;
    const bool found = theorem && theorem->pencil;
    j["found"] = found;
    if (!found) {
        j["partition"] = nullptr;
        j["profile"] = nullptr;
        j["sizes"] = nullptr;
        return j;
    }
    const PencilStructure& p = *theorem->pencil;
    const auto prof = profile(p);
    j["partition"] = format_partition(p.parts);
    j["profile"] = {{"sizes", prof.sizes}, {"sigma", prof.sigma}};
    j["sizes"] = {{"T0", p.t0.size()},
                  {"T1", p.t[0].size()},
                  {"T2", p.t[1].size()},
                  {"T3", p.t[2].size()}};
    return j;
}

} // namespace detail

/// The stable JSON schema; every number is exact (dimensions and counts
/// are integers, forms and points are canonical strings).
inline nlohmann::ordered_json report_json(const Analysis& a) {
    nlohmann::ordered_json j;
    j["label"] = a.label;
    j["d"] = a.d;
    j["m"] = a.monodromy.m;
    j["lattice"] = {{"t2", a.t2}, {"t3", a.t3}};
    j["pencil"] = detail::pencil_json(a.theorem);
    j["monodromy"] = {{"s", a.monodromy.s},
                      {"h10_eps", a.monodromy.h10_eps},
                      {"h01_eps", a.monodromy.h01_eps},
                      {"h10_epsbar", a.monodromy.h10_epsbar},
                      {"h01_epsbar", a.monodromy.h01_epsbar},
                      {"b1_F", a.monodromy.b1_f},
                      {"char_poly", {{"e1", a.monodromy.char_poly.first},
                                     {"e2", a.monodromy.char_poly.second}}}};
    nlohmann::ordered_json th;
    if (a.theorem) {
        th["branch"] = to_string(a.theorem->branch);
        th["predicted_s"] = a.theorem->predicted_s;
        nlohmann::ordered_json conics = nlohmann::ordered_json::array();
        for (const auto& e : a.theorem->evidence) {
            nlohmann::ordered_json c;
            c["points_set"] = e.points_set;
            c["form"] = e.conic ? nlohmann::ordered_json(e.conic->to_string())
                                : nlohmann::ordered_json(nullptr);
            c["smooth"] = e.conic ? nlohmann::ordered_json(e.conic->is_smooth())
                                  : nlohmann::ordered_json(nullptr);
            conics.push_back(std::move(c));
        }
        th["conics"] = std::move(conics);
    } else {
        th["branch"] = a.d % 3 != 0 ? "TRIVIAL" : "OUT_OF_RANGE";
        th["predicted_s"] = a.d % 3 != 0 ? nlohmann::ordered_json(0) : nlohmann::ordered_json(nullptr);
        th["conics"] = nlohmann::ordered_json::array();
    }
    j["theorem"] = std::move(th);
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& r : a.checks) {
        nlohmann::ordered_json c;
        c["name"] = r.name;
        c["pass"] = r.pass;
        checks.push_back(std::move(c));
    }
    j["checks"] = std::move(checks);
    return j;
}

/// Human-readable rendering of the same data.
inline std::string report_text(const Analysis& a) {
    std::string out;
    out += "arrangement " + a.label + ": d = " + std::to_string(a.d);
    if (a.monodromy.m > 0) out += " = 3*" + std::to_string(a.monodromy.m);
    out += "\n";
    out += "lattice: " + std::to_string(a.t2) + " double points, " + std::to_string(a.t3) +
           " triple points\n";
    if (a.theorem && a.theorem->pencil) {
        const PencilStructure& p = *a.theorem->pencil;
        const auto prof = profile(p);
        out += "pencil: partition " + format_partition(p.parts) + "\n";
        for (int i = 0; i < 3; ++i)
            out += "  Q" + std::to_string(i + 1) + " = " + p.q[static_cast<std::size_t>(i)].to_string() + "\n";
        out += "  |T0| = " + std::to_string(p.t0.size()) + ", (|T1|,|T2|,|T3|) = (" +
               std::to_string(prof.sizes[0]) + "," + std::to_string(prof.sizes[1]) + "," +
               std::to_string(prof.sizes[2]) + "), sigma = " + std::to_string(prof.sigma) + "\n";
    } else if (a.theorem) {
        out += "pencil: none (not composed of a reduced pencil)\n";
    }
    const auto& mo = a.monodromy;
    if (mo.trivial_monodromy)
        out += "monodromy: trivial";
    else
        out += "monodromy: s = " + std::to_string(mo.s);
    out += "; b1(F) = " + std::to_string(mo.b1_f) + "; char poly = (t-1)^" +
           std::to_string(mo.char_poly.first);
    if (mo.char_poly.second > 0)
        out += " * (t^2+t+1)^" + std::to_string(mo.char_poly.second);
    out += "\n";
    out += "  eigenspaces: h^{1,0}_eps = " + std::to_string(mo.h10_eps) +
           ", h^{0,1}_eps = " + std::to_string(mo.h01_eps) +
           ", h^{1,0}_eps2 = " + std::to_string(mo.h10_epsbar) +
           ", h^{0,1}_eps2 = " + std::to_string(mo.h01_epsbar) + "\n";
    if (a.theorem) {
        out += "theorem: branch " + to_string(a.theorem->branch) +
               ", predicted s = " + std::to_string(a.theorem->predicted_s) + "\n";
        for (const auto& e : a.theorem->evidence) {
            out += "  " + e.points_set + ": ";
            if (e.conic)
                out += "on the conic " + e.conic->to_string() +
                       (e.conic->is_smooth() ? " (smooth)" : " (singular)");
            else
                out += "not on a conic";
            out += "\n";
        }
    } else {
        out += "theorem: " + a.theorem_note + "\n";
    }
    for (const auto& r : a.checks) {
        out += "check " + r.name + ": " + (r.pass ? "pass" : "FAIL");
        if (!r.note.empty()) out += " (" + r.note + ")";
        out += "\n";
    }
    return out;
}

} // namespace arrmono
