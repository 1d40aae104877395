#pragma once

#include <string>
#include <vector>

#include "arrmono/catalog.hpp"
#include "arrmono/report.hpp"

namespace arrmono {

struct VerifyRow {
    std::string entry;
    std::string check;
    bool pass = false;
    std::string detail;
};

/// Run one catalog entry through the whole pipeline and compare against
/// its documented expectations.
inline std::vector<VerifyRow> verify_entry(const std::string& name) {
    std::vector<VerifyRow> rows;
    const CatalogEntry entry = build_catalog(name);
    const auto row = [&](std::string check, bool pass, std::string detail = "") {
        rows.push_back({entry.name, std::move(check), pass, std::move(detail)});
    };

    const auto cert = certify_triple_only(build_lattice(entry.arrangement));
    row("triple_only", true);
    const int t_total = static_cast<int>(cert.triple_points.size());
    row("triple_point_count", t_total == entry.expected.t_total,
        std::to_string(t_total) + " vs " + std::to_string(entry.expected.t_total));

    const PencilStructure documented =
        validate_partition(entry.arrangement, entry.documented_partition, cert);
    row("documented_partition_valid", true);
    row("base_locus_size", static_cast<int>(documented.t0.size()) == entry.expected.t0);
    row("subarrangement_sizes", profile(documented).sizes == entry.expected.sizes);

    const auto found = search_pencil(entry.arrangement);
    row("search_recovers_partition", found && found->parts == documented.parts,
        found ? format_partition(found->parts) : "no pencil found");

    const CrossValidation cv = cross_validate(entry.arrangement);
    row("eigenspace_dimension", cv.report.s == entry.expected.s,
        "s = " + std::to_string(cv.report.s) + " vs " + std::to_string(entry.expected.s));
    row("betti_number", cv.report.b1_f == entry.expected.b1_f,
        "b1 = " + std::to_string(cv.report.b1_f));
    row("theorem_branch", cv.prediction.branch == entry.expected.branch,
        to_string(cv.prediction.branch));
    for (const auto& r : cv.records) row(r.name, r.pass || !r.required, r.note);
    return rows;
}

inline std::vector<VerifyRow> verify_all() {
    std::vector<VerifyRow> rows;
    for (const auto& name : catalog_names()) {
        auto r = verify_entry(name);
        rows.insert(rows.end(), r.begin(), r.end());
    }
    return rows;
}

inline std::string verify_table(const std::vector<VerifyRow>& rows) {
    std::string out;
    for (const auto& r : rows) {
        out += r.pass ? "PASS " : "FAIL ";
        out += r.entry + ": " + r.check;
        if (!r.detail.empty()) out += " (" + r.detail + ")";
        out += "\n";
    }
    return out;
}

} // namespace arrmono
