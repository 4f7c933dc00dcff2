// quadswan: Swan subgroup and kernel group bounds for O_K[C_p] over
// imaginary quadratic fields K = Q(sqrt(-d)).
//
// Exit codes: 0 success, 1 verification mismatch, 2 invalid input,
// 3 cap exceeded.

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "quadswan/cyclotomic.hpp"
#include "quadswan/errors.hpp"
#include "quadswan/numutil.hpp"
#include "quadswan/report.hpp"
#include "quadswan/residue_ring.hpp"
#include "quadswan/stickelberger.hpp"
#include "quadswan/version.hpp"

namespace {

using quadswan::int64_t;

std::string join_factors(const std::vector<int64_t>& fs) {
    std::string s = "[";
    for (std::size_t i = 0; i < fs.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(fs[i]);
    }
    return s + "]";
}

int run_analyze(int64_t d, int64_t p, const std::string& format, const quadswan::ToolCaps& caps) {
    const quadswan::AnalysisReport r = quadswan::analyze_pair(d, p, caps);
    std::cout << quadswan::render_analysis(r, format);
    return 0;
}

int run_scan(int64_t d, int64_t p_min, int64_t p_max, bool only_nontrivial, const std::string& format,
             const quadswan::ToolCaps& caps) {
    const auto rows = quadswan::scan_rows(d, p_min, p_max, only_nontrivial, caps);
    std::cout << quadswan::render_scan(rows, format);
    return 0;
}

int run_stickelberger(int64_t p, const std::string& format, const quadswan::ToolCaps& caps) {
    const auto ideal = quadswan::stickelberger_ideal(p, 1, caps.lattice_cap);
    const int64_t formula = (p - 1) / 2;
    const bool match = ideal.epsilon_gen == formula;
    if (format == "json") {
        quadswan::ordered_json j;
        j["p"] = p;
        j["theta"] = quadswan::theta(p).coeffs;
        j["basis_rank"] = ideal.basis.size();
        j["dimension"] = p - 1;
        j["epsilon_gen"] = ideal.epsilon_gen;
        j["formula_value"] = formula;
        j["match"] = match;
        std::cout << j.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "p,basis_rank,dimension,epsilon_gen,formula_value,match\r\n"
                  << p << ',' << ideal.basis.size() << ',' << (p - 1) << ',' << ideal.epsilon_gen << ','
                  << formula << ',' << (match ? "true" : "false") << "\r\n";
    } else {
        std::cout << "p            " << p << '\n';
        std::cout << "theta        " << join_factors(quadswan::theta(p).coeffs) << '\n';
        std::cout << "basis        " << ideal.basis.size() << " vectors of dimension " << (p - 1) << '\n';
        std::cout << "epsilon_gen  " << ideal.epsilon_gen << '\n';
        std::cout << "formula      " << formula << '\n';
        std::cout << "match        " << (match ? "yes" : "NO") << '\n';
    }
    return match ? 0 : 1;
}

int run_oracle(int64_t d, int64_t p, const quadswan::ToolCaps& caps) {
    const quadswan::ResidueRing ring(quadswan::make_field(d), p);
    const auto pres = quadswan::unit_group_structure(ring, caps.structure_cap);
    const auto constructive = quadswan::AbGroup::from_orders(pres.orders).invariant_factors();
    const auto oracle = quadswan::oracle_unit_structure(ring, caps.oracle_cap);
    const bool match = constructive == oracle;
    std::cout << "constructive " << join_factors(constructive) << '\n';
    std::cout << "brute-force  " << join_factors(oracle) << '\n';
    std::cout << (match ? "match" : "MISMATCH") << '\n';
    return match ? 0 : 1;
}

int run_cyclo_check(int64_t p) {
    const bool ok = quadswan::verify_congruence(p);
    std::cout << (ok ? "ok" : "FAILED") << ": cyclotomic unit congruence for p = " << p << "\n";
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Swan subgroup bounds for imaginary quadratic fields"};
    app.set_version_flag("--version", quadswan::kVersion);
    app.require_subcommand(1);
    app.fallthrough();  // cap flags may follow the subcommand

    quadswan::ToolCaps caps;
    app.add_option("--max-p", caps.structure_cap, "cap on p for the constructive unit-group path");
    app.add_option("--oracle-cap", caps.oracle_cap, "cap on p for brute-force enumeration");
    app.add_option("--lattice-cap", caps.lattice_cap, "cap on p for the Stickelberger lattice");

    int64_t d = 0, p = 0, p_min = 0, p_max = 0;
    std::string format = "table";
    bool only_nontrivial = false;

    auto add_format = [&format](CLI::App* cmd) {
        cmd->add_option("--format", format, "table, json, or csv")
            ->check(CLI::IsMember({"table", "json", "csv"}));
    };

    auto* analyze = app.add_subcommand("analyze", "bounds for one (d, p) pair");
    analyze->add_option("d", d, "field parameter: K = Q(sqrt(-d))")->required();
    analyze->add_option("p", p, "odd prime")->required();
    add_format(analyze);

    auto* scan = app.add_subcommand("scan", "bounds for every odd prime in a range");
    scan->add_option("d", d, "field parameter: K = Q(sqrt(-d))")->required();
    scan->add_option("p_min", p_min, "lower end of the prime range")->required();
    scan->add_option("p_max", p_max, "upper end of the prime range")->required();
    scan->add_flag("--only-nontrivial", only_nontrivial,
                   "keep only rows with a nontrivial realizable lower bound");
    add_format(scan);

    auto* stick = app.add_subcommand("stickelberger", "Stickelberger ideal and its augmentation");
    stick->add_option("p", p, "odd prime")->required();
    add_format(stick);

    auto* oracle = app.add_subcommand("oracle", "constructive vs brute-force unit group");
    oracle->add_option("d", d, "field parameter: K = Q(sqrt(-d))")->required();
    oracle->add_option("p", p, "odd prime")->required();

    auto* cyclo = app.add_subcommand("cyclo-check", "cyclotomic unit congruence check");
    cyclo->add_option("p", p, "odd prime")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(analyze)) return run_analyze(d, p, format, caps);
        if (app.got_subcommand(scan)) return run_scan(d, p_min, p_max, only_nontrivial, format, caps);
        if (app.got_subcommand(stick)) return run_stickelberger(p, format, caps);
        if (app.got_subcommand(oracle)) return run_oracle(d, p, caps);
        if (app.got_subcommand(cyclo)) return run_cyclo_check(p);
    } catch (const quadswan::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.code() == quadswan::Errc::CapExceeded ? 3 : 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
