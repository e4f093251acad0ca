// SPDX-License-Identifier: MIT
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cubmcf/classify.hpp"
#include "cubmcf/io.hpp"
#include "cubmcf/pythagoras.hpp"
#include "cubmcf/scan.hpp"

namespace py = pybind11;
using namespace cubmcf;

namespace {

using Coords = std::array<py::int_, 3>;

AlgInt from_py(const Coords& c) {
    return AlgInt(Int(py::str(c[0]).cast<std::string>()), Int(py::str(c[1]).cast<std::string>()),
                  Int(py::str(c[2]).cast<std::string>()));
}

py::tuple to_py(const AlgInt& a) {
    py::object as_int = py::module_::import("builtins").attr("int");
    return py::make_tuple(as_int(a[0].get_str()), as_int(a[1].get_str()), as_int(a[2].get_str()));
}

int track_of(const Order& o, const FamilyId& f, const std::string& root) {
    if (!root.empty()) return o.root_of_label(root);
    return o.root_of_label(f.kind == FamilyKind::EnnolaII ? "psi" : "rho");
}

std::string expand(const std::string& family, const std::string& root, const std::string& algo, long max_iter) {
    FamilyId f = FamilyId::parse(family);
    Order o = construct(f);
    int t = track_of(o, f, root);
    if (max_iter <= 0) max_iter = default_max_iter();
    ExpansionRecord rec;
    if (algo == "jpa")
        rec = jpa_expand(o, abs_power_vector(o, t), t, max_iter);
    else if (algo == "ijpa")
        rec = ijpa_expand(o, abs_power_pair(o, t), t, max_iter);
    else if (algo == "brun")
        rec = brun_expand(o, abs_power_vector(o, t), t, max_iter);
    else
        throw Error(Errc::Parse, "unknown algorithm '" + algo + "'");
    return record_to_json(rec, -1);
}

std::string classify(const std::string& family, const std::string& root, long max_iter) {
    FamilyId f = FamilyId::parse(family);
    Order o = construct(f);
    int t = track_of(o, f, root);
    if (max_iter <= 0) max_iter = default_max_iter();
    ExpansionRecord rec = jpa_expand(o, abs_power_vector(o, t), t, max_iter);
    if (!rec.periodic()) throw Error(Errc::NotPeriodic, "no period within " + std::to_string(max_iter) + " steps");
    auto cat = catalog(f);
    ClassifyOptions opt{&cat, table_units(f, o, t), o.labels()[t], nullptr};
    std::string u1 = f.kind == FamilyKind::EnnolaII ? "R" : "rho";
    std::string u2 = f.kind == FamilyKind::SimplestCubic ? "rho'" : u1 + "-1";
    return classification_json(classify_semiconvergents(o, rec, opt), u1, u2);
}

py::object decomposition(const std::string& family, const Coords& x) {
    Order o = construct(FamilyId::parse(family));
    auto w = is_decomposable(o, from_py(x));
    if (!w) return py::none();
    return py::make_tuple(to_py(w->parts.first), to_py(w->parts.second));
}

}  // namespace

PYBIND11_MODULE(_cubmcf, m) {
    m.doc() = "Multidimensional continued fractions and indecomposables in cubic orders";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    m.def("expand_json", &expand, py::arg("family"), py::arg("root") = "", py::arg("algo") = "jpa",
          py::arg("max_iter") = 0);
    m.def("classify_json", &classify, py::arg("family"), py::arg("root") = "", py::arg("max_iter") = 0);
    m.def("catalog_json", [](const std::string& family) {
        FamilyId f = FamilyId::parse(family);
        return catalog_json(catalog(f), construct(f));
    });
    m.def(
        "pythagoras_json",
        [](const std::string& family, const Coords& gamma, int cap) {
            return pythagoras_json(construct(FamilyId::parse(family)), from_py(gamma), cap);
        },
        py::arg("family"), py::arg("gamma"), py::arg("cap") = 8);
    m.def(
        "scan_json",
        [](const std::string& ingest, long trace_bound, unsigned jobs) {
            return scan_json(scan_fields(parse_field_ingest(ingest), trace_bound, jobs));
        },
        py::arg("ingest"), py::arg("trace_bound") = 60, py::arg("jobs") = 1);
    m.def("decomposition", &decomposition, py::arg("family"), py::arg("x"));
    m.def("norm", [](const std::string& family, const Coords& x) {
        return py::module_::import("builtins").attr("int")(construct(FamilyId::parse(family)).norm(from_py(x)).get_str());
    });
}
