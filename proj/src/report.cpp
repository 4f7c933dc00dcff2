#include "quadswan/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "quadswan/errors.hpp"
#include "quadswan/numutil.hpp"
#include "quadswan/stickelberger.hpp"
#include "quadswan/version.hpp"

namespace quadswan {

AnalysisReport analyze_pair(int64_t d, int64_t p, const ToolCaps& caps) {
    AnalysisReport r;
    r.swan = kernel_group_report(make_field(d), p, caps.structure_cap);
    r.tool_version = kVersion;
    r.caps = caps;
    r.swan_power_exponent = (p - 1) / 2;
    if (p <= caps.lattice_cap) {
        if (swan_power_exponent(p, caps.lattice_cap) != r.swan_power_exponent)
            throw std::logic_error("lattice exponent disagrees with (p-1)/2");
        r.exponent_lattice_verified = true;
    }
    return r;
}

std::vector<SwanReport> scan_rows(int64_t d, int64_t p_min, int64_t p_max, bool only_nontrivial,
                                  const ToolCaps& caps) {
    if (p_min < 3)
        throw Error(Errc::OutOfRange, "scan range must start at p >= 3");
    if (p_min > p_max)
        throw Error(Errc::OutOfRange, "empty scan range: p_min > p_max");
    if (p_max > caps.structure_cap)
        throw Error(Errc::CapExceeded, "scan range exceeds the structure cap " +
                                           std::to_string(caps.structure_cap));
    const FieldSpec field = make_field(d);
    std::vector<SwanReport> rows;
    for (int64_t p = p_min; p <= p_max; ++p) {
        if (p == 2 || !is_prime(p)) continue;
        SwanReport r = kernel_group_report(field, p, caps.structure_cap);
        if (only_nontrivial && !r.nontrivial) continue;
        rows.push_back(std::move(r));
    }
    return rows;
}

ordered_json group_to_json(const AbGroup& g) {
    return ordered_json(g.invariant_factors());
}

std::string group_to_text(const AbGroup& g) {
    if (g.trivial()) return "1";
    std::string s;
    for (std::size_t i = 0; i < g.invariant_factors().size(); ++i) {
        if (i) s += "x";
        s += "C" + std::to_string(g.invariant_factors()[i]);
    }
    return s;
}

namespace {

ordered_json opt_group_to_json(const std::optional<AbGroup>& g) {
    return g ? group_to_json(*g) : ordered_json(nullptr);
}

std::string opt_group_to_text(const std::optional<AbGroup>& g) {
    return g ? group_to_text(*g) : "-";
}

}  // namespace

ordered_json scan_row_to_json(const SwanReport& r) {
    ordered_json j;
    j["d"] = r.field.d;
    j["p"] = r.p;
    j["splitting"] = to_string(r.splitting);
    j["lower_t"] = group_to_json(r.lower_t);
    j["upper_t"] = group_to_json(r.upper_t);
    j["exact_t"] = opt_group_to_json(r.exact_t);
    j["lower_rd"] = group_to_json(r.lower_rd);
    j["upper_rd"] = opt_group_to_json(r.upper_rd);
    j["rd_equality"] = to_string(r.rd_equality);
    j["nontrivial"] = r.nontrivial;
    return j;
}

ordered_json scan_to_json(const std::vector<SwanReport>& rows) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : rows) arr.push_back(scan_row_to_json(r));
    return arr;
}

ordered_json analysis_to_json(const AnalysisReport& r) {
    ordered_json j;
    j["tool_version"] = r.tool_version;
    j["caps"] = {{"structure_cap", r.caps.structure_cap},
                 {"oracle_cap", r.caps.oracle_cap},
                 {"lattice_cap", r.caps.lattice_cap}};
    j["d"] = r.swan.field.d;
    j["disc"] = r.swan.field.disc;
    j["minpoly"] = {r.swan.field.minpoly_c1, r.swan.field.minpoly_c0};
    j["p"] = r.swan.p;
    j["splitting"] = to_string(r.swan.splitting);
    j["unit_group"] = group_to_json(r.swan.unit_group);
    j["v_p"] = group_to_json(r.swan.v_p);
    j["lower_t"] = group_to_json(r.swan.lower_t);
    j["upper_t"] = group_to_json(r.swan.upper_t);
    j["exact_t"] = opt_group_to_json(r.swan.exact_t);
    j["d_equals_t"] = r.swan.d_equals_t;
    j["lower_rd"] = group_to_json(r.swan.lower_rd);
    j["upper_rd"] = opt_group_to_json(r.swan.upper_rd);
    j["rd_equality"] = to_string(r.swan.rd_equality);
    j["nontrivial"] = r.swan.nontrivial;
    j["swan_power_exponent"] = r.swan_power_exponent;
    j["swan_power_exponent_source"] = r.exponent_lattice_verified ? "lattice" : "formula";
    return j;
}

namespace {

std::string csv_group(const AbGroup& g) {
    std::string s = "\"[";
    for (std::size_t i = 0; i < g.invariant_factors().size(); ++i) {
        if (i) s += ",";
        s += std::to_string(g.invariant_factors()[i]);
    }
    return s + "]\"";
}

std::string csv_opt_group(const std::optional<AbGroup>& g) { return g ? csv_group(*g) : ""; }

void pad(std::string& s, std::size_t w) {
    while (s.size() < w) s += ' ';
}

std::string aligned_table(const std::vector<std::vector<std::string>>& cells) {
    if (cells.empty()) return "";
    std::vector<std::size_t> width(cells[0].size(), 0);
    for (const auto& row : cells)
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    std::ostringstream out;
    for (std::size_t r = 0; r < cells.size(); ++r) {
        std::string line;
        for (std::size_t c = 0; c < cells[r].size(); ++c) {
            std::string cell = cells[r][c];
            pad(cell, width[c]);
            line += cell;
            if (c + 1 < cells[r].size()) line += "  ";
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out << line << '\n';
        if (r == 0) {
            std::string sep;
            for (std::size_t c = 0; c < width.size(); ++c) {
                sep += std::string(width[c], '-');
                if (c + 1 < width.size()) sep += "  ";
            }
            out << sep << '\n';
        }
    }
    return out.str();
}

}  // namespace

std::string scan_csv(const std::vector<SwanReport>& rows) {
    std::ostringstream out;
    out << "d,p,splitting,lower_t,upper_t,exact_t,lower_rd,upper_rd,rd_equality,nontrivial\r\n";
    for (const auto& r : rows) {
        out << r.field.d << ',' << r.p << ',' << to_string(r.splitting) << ',' << csv_group(r.lower_t)
            << ',' << csv_group(r.upper_t) << ',' << csv_opt_group(r.exact_t) << ','
            << csv_group(r.lower_rd) << ',' << csv_opt_group(r.upper_rd) << ','
            << to_string(r.rd_equality) << ',' << (r.nontrivial ? "true" : "false") << "\r\n";
    }
    return out.str();
}

std::string scan_table(const std::vector<SwanReport>& rows) {
    std::vector<std::vector<std::string>> cells;
    cells.push_back({"d", "p", "splitting", "T_lower", "T_upper", "T_exact", "D=T?", "RD_lower",
                     "RD_upper", "RD=T?", "nontrivial"});
    for (const auto& r : rows)
        cells.push_back({std::to_string(r.field.d), std::to_string(r.p), to_string(r.splitting),
                         group_to_text(r.lower_t), group_to_text(r.upper_t), opt_group_to_text(r.exact_t),
                         r.d_equals_t ? "yes" : "open", group_to_text(r.lower_rd),
                         opt_group_to_text(r.upper_rd), to_string(r.rd_equality),
                         r.nontrivial ? "yes" : "no"});
    return aligned_table(cells);
}

std::string analysis_table(const AnalysisReport& r) {
    std::ostringstream out;
    const SwanReport& s = r.swan;
    out << "field       Q(sqrt(-" << s.field.d << "))   disc " << s.field.disc << '\n';
    out << "p           " << s.p << "  (" << to_string(s.splitting) << ")\n";
    out << "units       " << group_to_text(s.unit_group) << '\n';
    out << "V_p         " << group_to_text(s.v_p) << '\n';
    out << "T_lower     " << group_to_text(s.lower_t) << '\n';
    out << "T_upper     " << group_to_text(s.upper_t) << '\n';
    out << "T_exact     " << opt_group_to_text(s.exact_t) << '\n';
    out << "D=T?        " << (s.d_equals_t ? "yes" : "open") << '\n';
    out << "RD_lower    " << group_to_text(s.lower_rd) << '\n';
    out << "RD_upper    " << opt_group_to_text(s.upper_rd) << '\n';
    out << "RD=T?       " << to_string(s.rd_equality) << '\n';
    out << "nontrivial  " << (s.nontrivial ? "yes" : "no") << '\n';
    out << "exponent    " << r.swan_power_exponent << "  ("
        << (r.exponent_lattice_verified ? "lattice" : "formula") << ")\n";
    return out.str();
}

std::string analysis_csv(const AnalysisReport& r) {
    std::vector<SwanReport> one{r.swan};
    return scan_csv(one);
}

std::string render_analysis(const AnalysisReport& r, const std::string& format) {
    if (format == "json") return analysis_to_json(r).dump(2) + "\n";
    if (format == "csv") return analysis_csv(r);
    return analysis_table(r);
}

std::string render_scan(const std::vector<SwanReport>& rows, const std::string& format) {
    if (format == "json") return scan_to_json(rows).dump(2) + "\n";
    if (format == "csv") return scan_csv(rows);
    return scan_table(rows);
}

}  // namespace quadswan
