#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "quadswan/errors.hpp"
#include "quadswan/report.hpp"
#include "test_util.hpp"

using namespace quadswan;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) out.push_back(line);
    }
    return out;
}

std::vector<int64_t> group_from_csv_cell(const std::string& cell) {
    // cell text like "[2,12]" (quotes already stripped by the row splitter)
    return ordered_json::parse(cell).get<std::vector<int64_t>>();
}

}  // namespace

TEST_CASE("analysis json round-trips every field") {
    const AnalysisReport r = analyze_pair(5, 5);
    const ordered_json j = ordered_json::parse(analysis_to_json(r).dump(2));

    CHECK(j["tool_version"] == r.tool_version);
    CHECK(j["caps"]["structure_cap"] == r.caps.structure_cap);
    CHECK(j["caps"]["oracle_cap"] == r.caps.oracle_cap);
    CHECK(j["caps"]["lattice_cap"] == r.caps.lattice_cap);
    CHECK(j["d"] == r.swan.field.d);
    CHECK(j["disc"] == r.swan.field.disc);
    CHECK(j["minpoly"][0] == r.swan.field.minpoly_c1);
    CHECK(j["minpoly"][1] == r.swan.field.minpoly_c0);
    CHECK(j["p"] == r.swan.p);
    CHECK(j["splitting"] == "ramified");
    CHECK(j["unit_group"].get<std::vector<int64_t>>() == r.swan.unit_group.invariant_factors());
    CHECK(j["v_p"].get<std::vector<int64_t>>() == r.swan.v_p.invariant_factors());
    CHECK(j["lower_t"].get<std::vector<int64_t>>() == r.swan.lower_t.invariant_factors());
    CHECK(j["upper_t"].get<std::vector<int64_t>>() == r.swan.upper_t.invariant_factors());
    CHECK(j["exact_t"].get<std::vector<int64_t>>() == r.swan.exact_t->invariant_factors());
    CHECK(j["d_equals_t"] == r.swan.d_equals_t);
    CHECK(j["lower_rd"].get<std::vector<int64_t>>() == r.swan.lower_rd.invariant_factors());
    CHECK(j["upper_rd"].is_null());
    CHECK(j["rd_equality"] == "unknown");
    CHECK(j["nontrivial"] == r.swan.nontrivial);
    CHECK(j["swan_power_exponent"] == 2);
    CHECK(j["swan_power_exponent_source"] == "lattice");
}

TEST_CASE("trivial groups serialize as empty lists, absent bounds as null") {
    const AnalysisReport r = analyze_pair(5, 3);
    const ordered_json j = analysis_to_json(r);
    CHECK(j["lower_t"] == ordered_json::array());
    CHECK(j["exact_t"].is_null());
    CHECK(j["rd_equality"] == "guaranteed");
}

TEST_CASE("formula-only exponent above the lattice cap") {
    const AnalysisReport r = analyze_pair(2, 103);
    CHECK(r.swan_power_exponent == 51);
    CHECK_FALSE(r.exponent_lattice_verified);
    CHECK(analysis_to_json(r)["swan_power_exponent_source"] == "formula");
}

TEST_CASE("scan rows are sorted, filtered, and consistent across formats") {
    const auto rows = scan_rows(5, 3, 23, false);
    REQUIRE(!rows.empty());
    for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i - 1].p < rows[i].p);

    const auto nontrivial_rows = scan_rows(5, 3, 23, true);
    for (const auto& r : nontrivial_rows) CHECK(r.nontrivial);

    // csv and json carry identical data
    const ordered_json j = scan_to_json(rows);
    const auto csv_lines = lines_of(scan_csv(rows));
    REQUIRE(csv_lines.size() == rows.size() + 1);
    CHECK(csv_lines[0] ==
          "d,p,splitting,lower_t,upper_t,exact_t,lower_rd,upper_rd,rd_equality,nontrivial");
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto cells = testutil::split_csv_row(csv_lines[i + 1]);
        REQUIRE(cells.size() == 10);
        const ordered_json& row = j[i];
        CHECK(std::stoll(cells[0]) == row["d"].get<int64_t>());
        CHECK(std::stoll(cells[1]) == row["p"].get<int64_t>());
        CHECK(cells[2] == row["splitting"].get<std::string>());
        CHECK(group_from_csv_cell(cells[3]) == row["lower_t"].get<std::vector<int64_t>>());
        CHECK(group_from_csv_cell(cells[4]) == row["upper_t"].get<std::vector<int64_t>>());
        if (row["exact_t"].is_null())
            CHECK(cells[5].empty());
        else
            CHECK(group_from_csv_cell(cells[5]) == row["exact_t"].get<std::vector<int64_t>>());
        CHECK(group_from_csv_cell(cells[6]) == row["lower_rd"].get<std::vector<int64_t>>());
        if (row["upper_rd"].is_null())
            CHECK(cells[7].empty());
        else
            CHECK(group_from_csv_cell(cells[7]) == row["upper_rd"].get<std::vector<int64_t>>());
        CHECK(cells[8] == row["rd_equality"].get<std::string>());
        CHECK(cells[9] == (row["nontrivial"].get<bool>() ? "true" : "false"));
    }
}

TEST_CASE("scan json is byte-identical across runs") {
    const std::string a = render_scan(scan_rows(5, 3, 97, false), "json");
    const std::string b = render_scan(scan_rows(5, 3, 97, false), "json");
    CHECK(a == b);
}

TEST_CASE("table output uses the bound notation in headers") {
    const auto rows = scan_rows(2, 3, 7, false);
    const std::string table = scan_table(rows);
    CHECK(table.find("T_lower") != std::string::npos);
    CHECK(table.find("T_upper") != std::string::npos);
    CHECK(table.find("D=T?") != std::string::npos);
    CHECK(table.find("RD_lower") != std::string::npos);
    CHECK(table.find("RD_upper") != std::string::npos);

    const std::string one = analysis_table(analyze_pair(2, 5));
    CHECK(one.find("T_lower     C3") != std::string::npos);
    CHECK(one.find("T_upper     C6") != std::string::npos);
}

TEST_CASE("scan range handling") {
    CHECK(scan_rows(5, 24, 28, false).empty());  // no primes in range
    CHECK_THROWS_WITH_AS(scan_rows(5, 7, 5, false), doctest::Contains("OutOfRange"), Error);
    CHECK_THROWS_WITH_AS(scan_rows(5, 2, 5, false), doctest::Contains("OutOfRange"), Error);
    CHECK_THROWS_WITH_AS(scan_rows(5, 3, 5000, false), doctest::Contains("CapExceeded"), Error);
    CHECK_THROWS_WITH_AS(scan_rows(12, 3, 13, false), doctest::Contains("NotSquareFree"), Error);
}
