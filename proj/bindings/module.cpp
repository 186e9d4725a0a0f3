#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "polyspec/json_io.hpp"

namespace py = pybind11;
using namespace polyspec;
using nlohmann::json;

// The python surface works on JSON strings and string-encoded rationals so
// exactness survives the crossing; the heavy lifting stays in C++.
namespace {

DiffOperator op_from_str(const std::string& op_json) {
    return operator_from_json(json::parse(op_json));
}

Params params_from_dict(const py::dict& d) {
    Params q;
    for (const auto& item : d)
        q[py::cast<std::string>(item.first)] = Rational::parse(py::cast<std::string>(py::str(item.second)));
    return q;
}

Interval interval_from_strings(const std::string& lo, const std::string& hi) {
    Interval I;
    if (lo != "-inf") I.lo = Rational::parse(lo);
    if (hi != "+inf" && hi != "inf") I.hi = Rational::parse(hi);
    return I;
}

}  // namespace

PYBIND11_MODULE(_polyspec, m) {
    m.doc() = "exact self-adjoint differential operator toolkit";

    m.def("catalog", []() { return catalog_to_json().dump(); },
          "catalog of operator families as a JSON string");

    m.def(
        "family",
        [](const std::string& id, const py::dict& params) {
            return operator_to_json(instantiate(id, params_from_dict(params)).op).dump();
        },
        py::arg("id"), py::arg("params"),
        "instantiate a catalog family; returns operator JSON");

    m.def(
        "verify",
        [](const std::string& op_json, const std::string& lo, const std::string& hi) {
            return report_to_json(verify(op_from_str(op_json), interval_from_strings(lo, hi)))
                .dump();
        },
        py::arg("op_json"), py::arg("lo") = "-inf", py::arg("hi") = "+inf",
        "verification report as a JSON string");

    m.def(
        "eigenvalues",
        [](const std::string& op_json, int max_degree) {
            Spectrum s = eigenvalues(op_from_str(op_json), max_degree);
            std::vector<std::string> out;
            for (const auto& l : s.lambdas) out.push_back(l.str());
            return out;
        },
        py::arg("op_json"), py::arg("max_degree") = 8,
        "eigenvalues as exact rational strings");

    m.def(
        "eigen",
        [](const std::string& op_json, int max_degree, const std::string& lo,
           const std::string& hi) {
            DiffOperator op = op_from_str(op_json);
            Spectrum s = eigenvalues(op, max_degree);
            EigenBasis basis = eigenbasis(op, max_degree);
            std::string warning;
            try {
                WeightForm w = build_weight(op, interval_from_strings(lo, hi));
                basis = orthogonalize_degenerate(basis, s, moments(w, 2 * max_degree));
            } catch (const std::exception& e) {
                warning = e.what();
            }
            return spectrum_to_json(s, basis, warning).dump();
        },
        py::arg("op_json"), py::arg("max_degree") = 8, py::arg("lo") = "-inf",
        py::arg("hi") = "+inf", "spectrum and eigenbasis as a JSON string");

    m.def(
        "gram",
        [](const std::string& op_json, int max_degree, const std::string& lo,
           const std::string& hi) {
            DiffOperator op = op_from_str(op_json);
            Spectrum s = eigenvalues(op, max_degree);
            EigenBasis basis = eigenbasis(op, max_degree);
            WeightForm w = build_weight(op, interval_from_strings(lo, hi));
            MomentTable mt = moments(w, 2 * max_degree);
            basis = orthogonalize_degenerate(basis, s, mt);
            return gram_to_json(gram(basis, mt)).dump();
        },
        py::arg("op_json"), py::arg("max_degree") = 8, py::arg("lo") = "-inf",
        py::arg("hi") = "+inf", "Gram matrix of the orthogonalized eigenbasis (JSON)");

    m.def(
        "compose",
        [](const std::string& op1_json, const std::string& op2_json) {
            return operator_to_json(compose(op_from_str(op1_json), op_from_str(op2_json)))
                .dump();
        },
        py::arg("op1_json"), py::arg("op2_json"),
        "operator composition op1 after op2; returns operator JSON");

    m.def(
        "apply",
        [](const std::string& op_json, const std::vector<std::string>& poly_coeffs) {
            std::vector<Rational> c;
            for (const auto& s : poly_coeffs) c.push_back(Rational::parse(s));
            Poly result = op_from_str(op_json).apply(Poly(std::move(c)));
            std::vector<std::string> out;
            for (const auto& r : result.coeffs()) out.push_back(r.str());
            return out;
        },
        py::arg("op_json"), py::arg("poly_coeffs"),
        "apply the operator to a polynomial given by ascending coefficients");

    py::register_exception<ConstraintViolation>(m, "ConstraintViolation");
    py::register_exception<UnknownFamilyError>(m, "UnknownFamilyError");
    py::register_exception<IrreducibleFactorError>(m, "IrreducibleFactorError");
    py::register_exception<UnsupportedWeightClassError>(m, "UnsupportedWeightClassError");
}
