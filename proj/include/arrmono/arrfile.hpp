#pragma once

#include <array>
#include <sstream>
#include <string>
#include <vector>

#include "arrmono/arrangement.hpp"

namespace arrmono {

/// Desk-scale cap on the line count; the lattice and the pencil search
/// are quadratic and worse in d.
inline constexpr std::size_t kMaxLines = 64;

/// Parse the arrangement file format:
///   '#'-prefixed comment lines and blank lines are ignored;
///   a header line `field eisenstein` or `field rational`;
///   then one `line <a> <b> <c>` directive per line.
/// Under `field rational` every coefficient must be a plain rational.
inline Arrangement parse_arrangement(const std::string& text, const std::string& label) {
    std::istringstream in(text);
    std::string raw;
    bool saw_header = false;
    bool rational_only = false;
    std::vector<ProjectiveLine> lines;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::istringstream ls(raw);
        std::string tok;
        if (!(ls >> tok) || tok.front() == '#') continue;
        const auto fail = [&](const std::string& why) {
            throw ParseError(label + ":" + std::to_string(lineno) + ": " + why);
        };
        if (!saw_header) {
            if (tok != "field") fail("expected the `field` header first");
            std::string kind;
            if (!(ls >> kind) || (kind != "eisenstein" && kind != "rational"))
                fail("field must be `eisenstein` or `rational`");
            std::string extra;
            if (ls >> extra) fail("trailing tokens after the header");
            rational_only = kind == "rational";
            saw_header = true;
            continue;
        }
        if (tok != "line") fail("expected a `line` directive");
        std::array<FieldElement, 3> coeffs;
        for (auto& c : coeffs) {
            std::string t;
            if (!(ls >> t)) fail("a line needs three coefficients");
            c = parse_field_element(t);
            if (rational_only && !c.is_rational())
                fail("w-coefficients are not allowed under `field rational`");
        }
        std::string extra;
        if (ls >> extra) fail("trailing tokens after the coefficients");
        if (coeffs[0].is_zero() && coeffs[1].is_zero() && coeffs[2].is_zero())
            fail("a line needs a nonzero coefficient");
        lines.push_back(ProjectiveLine(coeffs));
        if (lines.size() > kMaxLines)
            fail("more than " + std::to_string(kMaxLines) + " lines");
    }
    if (!saw_header) throw ParseError(label + ": missing `field` header");
    return Arrangement(std::move(lines), label);
}

/// Canonical text form: header matching the content (eisenstein iff some
/// coefficient has a w-part), then the canonical coefficients of each
/// line in order. parse followed by export is a projection onto this
/// form and is idempotent.
inline std::string export_arrangement(const Arrangement& a) {
    bool eisenstein = false;
    for (const auto& l : a.lines())
        for (const auto& c : l.coeffs())
            if (!c.is_rational()) eisenstein = true;
    std::string out = eisenstein ? "field eisenstein\n" : "field rational\n";
    for (const auto& l : a.lines()) {
        out += "line";
        for (const auto& c : l.coeffs()) {
            out += ' ';
            out += c.to_string();
        }
        out += '\n';
    }
    return out;
}

/// Partition strings for the CLI: semicolon-separated comma lists of
/// 0-based line indices, e.g. "0,1;2,3;4,5".
inline std::array<std::vector<std::size_t>, 3> parse_partition(const std::string& text,
                                                               std::size_t line_count) {
    std::array<std::vector<std::size_t>, 3> parts;
    std::size_t part = 0;
    std::size_t pos = 0;
    const auto fail = [&](const std::string& why) { throw ParseError("partition: " + why); };
    std::vector<std::string> groups;
    while (true) {
        const auto semi = text.find(';', pos);
        groups.push_back(text.substr(pos, semi == std::string::npos ? semi : semi - pos));
        if (semi == std::string::npos) break;
        pos = semi + 1;
    }
    if (groups.size() != 3) fail("expected exactly three `;`-separated parts");
    for (const auto& group : groups) {
        std::istringstream gs(group);
        std::string tok;
        while (std::getline(gs, tok, ',')) {
            if (!detail::plain_number(tok)) fail("bad index '" + tok + "'");
            const std::size_t idx = std::stoul(tok);
            if (idx >= line_count) fail("index " + tok + " out of range");
            parts[part].push_back(idx);
        }
        if (parts[part].empty()) fail("empty part");
        ++part;
    }
    return parts;
}

inline std::string format_partition(const std::array<std::vector<std::size_t>, 3>& parts) {
    std::string out;
    for (std::size_t i = 0; i < 3; ++i) {
        if (i) out += ';';
        for (std::size_t k = 0; k < parts[i].size(); ++k) {
            if (k) out += ',';
            out += std::to_string(parts[i][k]);
        }
    }
    return out;
}

} // namespace arrmono
