// Python bindings for the main operations: field/splitting queries, unit
// group structure, the Swan/kernel/realizable bound reports, Stickelberger
// data, the cyclotomic congruence check, and the exact linear algebra.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <gmpxx.h>

#include "quadswan/abelian.hpp"
#include "quadswan/cyclotomic.hpp"
#include "quadswan/errors.hpp"
#include "quadswan/matz.hpp"
#include "quadswan/quadfield.hpp"
#include "quadswan/report.hpp"
#include "quadswan/residue_ring.hpp"
#include "quadswan/stickelberger.hpp"
#include "quadswan/swan.hpp"
#include "quadswan/version.hpp"

namespace py = pybind11;

namespace {

py::object json_to_py(const quadswan::ordered_json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

py::int_ mpz_to_py(const mpz_class& z) {
    return py::reinterpret_steal<py::int_>(PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

mpz_class py_to_mpz(const py::int_& v) {
    const py::object& obj = v;
    return mpz_class(static_cast<std::string>(py::str(obj)));
}

quadswan::MatZ matrix_from_py(const std::vector<std::vector<py::int_>>& rows) {
    const std::size_t nr = rows.size();
    const std::size_t nc = nr == 0 ? 0 : rows[0].size();
    quadswan::MatZ m(nr, nc);
    for (std::size_t i = 0; i < nr; ++i) {
        if (rows[i].size() != nc) throw py::value_error("ragged matrix");
        for (std::size_t j = 0; j < nc; ++j) m.at(i, j) = py_to_mpz(rows[i][j]);
    }
    return m;
}

py::list matrix_to_py(const quadswan::MatZ& m) {
    py::list rows;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        py::list row;
        for (std::size_t j = 0; j < m.cols(); ++j) row.append(mpz_to_py(m.at(i, j)));
        rows.append(row);
    }
    return rows;
}

std::vector<quadswan::int64_t> unit_group_invariants(quadswan::int64_t d, quadswan::int64_t p) {
    quadswan::ResidueRing ring(quadswan::make_field(d), p);
    return quadswan::AbGroup::from_orders(quadswan::unit_group_structure(ring).orders)
        .invariant_factors();
}

std::vector<quadswan::int64_t> oracle_unit_invariants(quadswan::int64_t d, quadswan::int64_t p) {
    quadswan::ResidueRing ring(quadswan::make_field(d), p);
    return quadswan::oracle_unit_structure(ring);
}

}  // namespace

PYBIND11_MODULE(_quadswan, m) {
    m.doc() = "Swan subgroup and kernel group bounds for imaginary quadratic fields";
    m.attr("__version__") = quadswan::kVersion;

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const quadswan::Error& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    m.def("make_field", [](quadswan::int64_t d) {
        const auto f = quadswan::make_field(d);
        py::dict out;
        out["d"] = f.d;
        out["disc"] = f.disc;
        out["minpoly"] = py::make_tuple(f.minpoly_c1, f.minpoly_c0);
        return out;
    }, py::arg("d"), "Field data for K = Q(sqrt(-d)): discriminant and integral minimal polynomial.");

    m.def("legendre", &quadswan::legendre, py::arg("a"), py::arg("p"));

    m.def("splitting_type", [](quadswan::int64_t d, quadswan::int64_t p) {
        return std::string(quadswan::to_string(quadswan::splitting_type(quadswan::make_field(d), p)));
    }, py::arg("d"), py::arg("p"));

    m.def("is_unramified", [](quadswan::int64_t d, quadswan::int64_t p) {
        return quadswan::is_unramified(quadswan::make_field(d), p);
    }, py::arg("d"), py::arg("p"));

    m.def("unit_group_invariants", &unit_group_invariants, py::arg("d"), py::arg("p"),
          "Invariant factors of (O_K/pO_K)*, constructive path.");
    m.def("oracle_unit_invariants", &oracle_unit_invariants, py::arg("d"), py::arg("p"),
          "Invariant factors of (O_K/pO_K)* by brute-force enumeration.");

    m.def("analyze", [](quadswan::int64_t d, quadswan::int64_t p) {
        return json_to_py(quadswan::analysis_to_json(quadswan::analyze_pair(d, p)));
    }, py::arg("d"), py::arg("p"), "Full bound report for one (d, p) pair as a dict.");

    m.def("analyze_json", [](quadswan::int64_t d, quadswan::int64_t p) {
        return quadswan::analysis_to_json(quadswan::analyze_pair(d, p)).dump(2) + "\n";
    }, py::arg("d"), py::arg("p"));

    m.def("scan", [](quadswan::int64_t d, quadswan::int64_t p_min, quadswan::int64_t p_max,
                     bool only_nontrivial) {
        return json_to_py(quadswan::scan_to_json(quadswan::scan_rows(d, p_min, p_max, only_nontrivial)));
    }, py::arg("d"), py::arg("p_min"), py::arg("p_max"), py::arg("only_nontrivial") = false);

    m.def("theta_coefficients", [](quadswan::int64_t p) { return quadswan::theta(p).coeffs; },
          py::arg("p"));
    m.def("swan_power_exponent", [](quadswan::int64_t p) { return quadswan::swan_power_exponent(p); },
          py::arg("p"), "Augmentation generator of the Stickelberger ideal; equals (p-1)/2.");

    m.def("verify_congruence", [](quadswan::int64_t p) { return quadswan::verify_congruence(p); },
          py::arg("p"));

    m.def("smith_normal_form", [](const std::vector<std::vector<py::int_>>& rows) {
        const auto s = quadswan::smith_normal_form(matrix_from_py(rows));
        return py::make_tuple(matrix_to_py(s.d), matrix_to_py(s.u), matrix_to_py(s.v));
    }, py::arg("matrix"), "Exact Smith normal form; returns (D, U, V) with U*M*V = D.");

    m.def("quotient_group", [](const std::vector<quadswan::int64_t>& orders,
                               const std::vector<std::vector<quadswan::int64_t>>& gens) {
        return quadswan::quotient(orders, gens).invariant_factors();
    }, py::arg("orders"), py::arg("generators"));

    m.def("power_subgroup", [](const std::vector<quadswan::int64_t>& orders, quadswan::int64_t k) {
        return quadswan::power_subgroup(quadswan::AbGroup::from_orders(orders), k).invariant_factors();
    }, py::arg("orders"), py::arg("k"));

    m.def("torsion_subgroup", [](const std::vector<quadswan::int64_t>& orders, quadswan::int64_t k) {
        return quadswan::torsion_subgroup(quadswan::AbGroup::from_orders(orders), k).invariant_factors();
    }, py::arg("orders"), py::arg("k"));
}
