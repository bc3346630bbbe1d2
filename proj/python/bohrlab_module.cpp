#include "bohrlab/bohr_lab.hpp"
#include "bohrlab/modular.hpp"
#include "bohrlab/report.hpp"
#include "bohrlab/series.hpp"

#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using bohrlab::cplx;

PYBIND11_MODULE(_bohrlab, m) {
    m.doc() = "majorant-series, modular-function and hyperbolic-metric workbench";

    m.def("eval_j", &bohrlab::eval_j, py::arg("z"), "modular function J on the unit disk");
    m.def("eval_j_derivative", &bohrlab::eval_j_derivative, py::arg("z"));

    m.def(
        "modular_coefficients",
        [](std::size_t order) { return bohrlab::modular_coefficients(order).m_coeffs; },
        py::arg("order") = 64, "coefficients M_n of -J(-z) = z sum M_n z^n");

    m.def(
        "bohr_majorant",
        [](const std::vector<cplx>& coeffs, double r, std::size_t from_index) {
            const auto v = bohrlab::bohr_majorant(bohrlab::TruncatedSeries(coeffs), r, from_index);
            py::dict out;
            out["value"] = v.value;
            out["upper"] = v.upper;
            out["radius"] = v.radius;
            return out;
        },
        py::arg("coeffs"), py::arg("r"), py::arg("from_index") = 0,
        "sum of |a_n| r^n from the given index");

    m.def(
        "extract_coefficients",
        [](const std::function<cplx(cplx)>& evaluator, double radius, std::size_t order) {
            return bohrlab::extract_coefficients(evaluator, radius, order).coeffs;
        },
        py::arg("evaluator"), py::arg("radius"), py::arg("order"),
        "Taylor coefficients of a black-box analytic map via circle sampling");

    m.def("univalence_radius", &bohrlab::univalence_radius, py::arg("alpha"));
    m.def("density_unit_disk", &bohrlab::density_unit_disk, py::arg("z"));
    m.def("working_radius", &bohrlab::working_radius, "e^{-pi}, the certified majorant radius");

    m.def(
        "run_suites",
        [](const std::vector<std::string>& suites, std::size_t order, std::uint64_t seed) {
            bohrlab::RunConfig config;
            config.suites = suites;
            config.order = order;
            config.seed = seed;
            return bohrlab::report_to_json(bohrlab::run(config));
        },
        py::arg("suites"), py::arg("order") = 64, py::arg("seed") = 42,
        "run verification suites, returning the JSON report");
}
