#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "arrmono/projective.hpp"

namespace arrmono {

/// Ordered list of distinct lines in P^2.
class Arrangement {
public:
    Arrangement(std::vector<ProjectiveLine> lines, std::string label)
        : lines_(std::move(lines)), label_(std::move(label)) {
        if (lines_.size() < 2)
            throw InvalidArrangement("arrangement '" + label_ + "' needs at least 2 lines");
        for (std::size_t i = 0; i < lines_.size(); ++i)
            for (std::size_t j = i + 1; j < lines_.size(); ++j)
                if (lines_[i] == lines_[j])
                    throw InvalidArrangement("duplicate line at indices " + std::to_string(i) +
                                             " and " + std::to_string(j) + " in '" + label_ + "'");
    }

    const std::vector<ProjectiveLine>& lines() const { return lines_; }
    const ProjectiveLine& line(std::size_t i) const { return lines_[i]; }
    std::size_t size() const { return lines_.size(); }
    const std::string& label() const { return label_; }

private:
    std::vector<ProjectiveLine> lines_;
    std::string label_;
};

/// One multiple point of the arrangement with the sorted indices of the
/// lines through it; multiplicity = |incident| >= 2.
struct LatticePoint {
    ProjectivePoint point;
    std::vector<std::size_t> incident;

    std::size_t multiplicity() const { return incident.size(); }
};

/// All pairwise intersections grouped by point, sorted by the canonical
/// coordinate order. Every unordered pair of lines is accounted for by
/// exactly one point: sum of C(mult, 2) = C(d, 2).
class IntersectionLattice {
public:
    explicit IntersectionLattice(std::vector<LatticePoint> points) : points_(std::move(points)) {}

    const std::vector<LatticePoint>& points() const { return points_; }

private:
    std::vector<LatticePoint> points_;
};

inline IntersectionLattice build_lattice(const Arrangement& a) {
    std::map<ProjectivePoint, std::vector<std::size_t>> incidence;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j) {
            ProjectivePoint p = line_meet(a.line(i), a.line(j));
            auto& lines = incidence[p];
            if (lines.empty()) {
                lines.push_back(i);
                lines.push_back(j);
            } else if (std::find(lines.begin(), lines.end(), j) == lines.end()) {
                // i is already present: every earlier pair through p listed it.
                lines.push_back(j);
            }
        }
    std::vector<LatticePoint> points;
    points.reserve(incidence.size());
    for (auto& [p, lines] : incidence) {
        std::sort(lines.begin(), lines.end());
        points.push_back({p, std::move(lines)});
    }
    return IntersectionLattice(std::move(points));
}

/// Witness that the arrangement has only double and triple points.
struct TripleOnlyCertificate {
    std::vector<LatticePoint> double_points;
    std::vector<LatticePoint> triple_points;
};

inline TripleOnlyCertificate certify_triple_only(const IntersectionLattice& lat) {
    TripleOnlyCertificate cert;
    for (const auto& lp : lat.points()) {
        if (lp.multiplicity() == 2)
            cert.double_points.push_back(lp);
        else if (lp.multiplicity() == 3)
            cert.triple_points.push_back(lp);
        else
            throw HypothesisViolation(
                "point of multiplicity " + std::to_string(lp.multiplicity()) + " at " +
                lp.point.to_string() +
                ": the monodromy formulas require only double and triple points");
    }
    return cert;
}

/// The triple points in the deterministic coordinate order.
inline std::vector<ProjectivePoint> triple_points(const TripleOnlyCertificate& cert) {
    std::vector<ProjectivePoint> pts;
    pts.reserve(cert.triple_points.size());
    for (const auto& lp : cert.triple_points) pts.push_back(lp.point);
    return pts;
}

} // namespace arrmono
