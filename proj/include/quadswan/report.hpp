#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "quadswan/swan.hpp"

namespace quadswan {

using ordered_json = nlohmann::ordered_json;

struct ToolCaps {
    int64_t structure_cap = 4096;  // constructive unit-group / discrete-log path
    int64_t oracle_cap = 997;      // brute-force unit-group enumeration
    int64_t lattice_cap = 101;     // Stickelberger lattice computation
};

// SwanReport plus the provenance a consumer needs to reproduce it.
struct AnalysisReport {
    SwanReport swan;
    std::string tool_version;
    ToolCaps caps;
    int64_t swan_power_exponent = 0;        // (p-1)/2
    bool exponent_lattice_verified = false; // false = formula only, p above the cap
};

AnalysisReport analyze_pair(int64_t d, int64_t p, const ToolCaps& caps = {});

// One report per odd prime in [p_min, p_max], ascending; optionally only the
// rows whose realizable lower bound is nontrivial.
std::vector<SwanReport> scan_rows(int64_t d, int64_t p_min, int64_t p_max, bool only_nontrivial,
                                  const ToolCaps& caps = {});

ordered_json group_to_json(const AbGroup& g);
std::string group_to_text(const AbGroup& g);  // "1", "C4", "C2xC12", ...

ordered_json analysis_to_json(const AnalysisReport& r);
ordered_json scan_row_to_json(const SwanReport& r);
ordered_json scan_to_json(const std::vector<SwanReport>& rows);

std::string render_analysis(const AnalysisReport& r, const std::string& format);
std::string render_scan(const std::vector<SwanReport>& rows, const std::string& format);

std::string scan_csv(const std::vector<SwanReport>& rows);
std::string scan_table(const std::vector<SwanReport>& rows);
std::string analysis_table(const AnalysisReport& r);
std::string analysis_csv(const AnalysisReport& r);

}  // namespace quadswan
