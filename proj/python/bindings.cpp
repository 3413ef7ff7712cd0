#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "staticflow/chart_oracle.hpp"
#include "staticflow/expansion.hpp"
#include "staticflow/flow.hpp"
#include "staticflow/geometry.hpp"
#include "staticflow/report_io.hpp"
#include "staticflow/run_config.hpp"
#include "staticflow/solutions.hpp"

namespace py = pybind11;
using namespace staticflow;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Rotationally symmetric static-flow laboratory";

    py::class_<RadialGrid>(m, "RadialGrid")
        .def(py::init<double, double, std::size_t>(), py::arg("r_min"), py::arg("r_max"), py::arg("count"))
        .def_readonly("r_min", &RadialGrid::r_min)
        .def_readonly("r_max", &RadialGrid::r_max)
        .def_readonly("count", &RadialGrid::count)
        .def_property_readonly("spacing", &RadialGrid::spacing)
        .def("node", &RadialGrid::node)
        .def("nodes", &RadialGrid::nodes);

    py::class_<Profile>(m, "Profile")
        .def(py::init<RadialGrid, std::vector<double>>(), py::arg("grid"), py::arg("values"))
        .def_readonly("grid", &Profile::grid)
        .def_readonly("values", &Profile::values)
        .def("__len__", &Profile::size)
        .def("__getitem__", [](const Profile& p, std::size_t i) { return p.values.at(i); });

    py::class_<RotSymMetric>(m, "RotSymMetric")
        .def(py::init<int, Profile, Profile>(), py::arg("n"), py::arg("A"), py::arg("B"))
        .def(py::init<int, Profile, Profile, double>(), py::arg("n"), py::arg("A"), py::arg("B"),
             py::arg("fiber_ric"))
        .def_readonly("n", &RotSymMetric::n)
        .def_readonly("A", &RotSymMetric::A)
        .def_readonly("B", &RotSymMetric::B)
        .def_readonly("fiber_ric", &RotSymMetric::fiber_ric)
        .def("validate", &RotSymMetric::validate);

    py::class_<StaticTriple>(m, "StaticTriple")
        .def(py::init<RotSymMetric, Profile>(), py::arg("metric"), py::arg("V"))
        .def_readonly("metric", &StaticTriple::metric)
        .def_readonly("V", &StaticTriple::V)
        .def("validate", &StaticTriple::validate);

    py::class_<CurvatureComponents>(m, "CurvatureComponents")
        .def_readonly("ric_rr", &CurvatureComponents::ric_rr)
        .def_readonly("ric_sph", &CurvatureComponents::ric_sph)
        .def_readonly("scal", &CurvatureComponents::scal);

    py::class_<HessianComponents>(m, "HessianComponents")
        .def_readonly("rr", &HessianComponents::rr)
        .def_readonly("sph", &HessianComponents::sph);

    py::class_<StaticResidual>(m, "StaticResidual")
        .def_readonly("tensor_rr", &StaticResidual::tensor_rr)
        .def_readonly("tensor_sph", &StaticResidual::tensor_sph)
        .def_readonly("scalar", &StaticResidual::scalar);

    py::class_<ResidualNorms>(m, "ResidualNorms")
        .def_readonly("tensor_sup", &ResidualNorms::tensor_sup)
        .def_readonly("scalar_sup", &ResidualNorms::scalar_sup)
        .def("sup", &ResidualNorms::sup);

    py::class_<AsDefect>(m, "AsDefect")
        .def_readonly("d2", &AsDefect::d2)
        .def_readonly("da", &AsDefect::da);

    py::class_<LieComponents>(m, "LieComponents")
        .def_readonly("rr", &LieComponents::rr)
        .def_readonly("sph", &LieComponents::sph);

    py::class_<LiftBlockResidual>(m, "LiftBlockResidual")
        .def_readonly("theta", &LiftBlockResidual::theta)
        .def_readonly("rr", &LiftBlockResidual::rr)
        .def_readonly("sph", &LiftBlockResidual::sph);

    m.def("ricci", &ricci, py::arg("g"));
    m.def("hessian_radial", &hessian_radial, py::arg("g"), py::arg("f"));
    m.def("laplacian_radial", &laplacian_radial, py::arg("g"), py::arg("f"));
    m.def("static_residual", &static_residual, py::arg("triple"));
    m.def("residual_norms", py::overload_cast<const StaticTriple&>(&residual_norms), py::arg("triple"));
    m.def("tensor_norm", &tensor_norm, py::arg("g"), py::arg("t_rr"), py::arg("t_sph"));
    m.def("sectional_defect", &sectional_defect, py::arg("g"));
    m.def("as_defect", &as_defect, py::arg("triple"), py::arg("a"));
    m.def("deturck_field", &deturck_field, py::arg("g"), py::arg("g_hat"));
    m.def("lie_derivative_radial", &lie_derivative_radial, py::arg("g"), py::arg("w"));
    m.def("lift_block_check", &lift_block_check, py::arg("triple"));
    m.def("weighted_sup", &weighted_sup, py::arg("f"), py::arg("mu"));

    py::class_<PerturbationSpec> pspec(m, "PerturbationSpec");
    py::enum_<PerturbationSpec::Target>(pspec, "Target")
        .value("A", PerturbationSpec::Target::A)
        .value("B", PerturbationSpec::Target::B)
        .value("V", PerturbationSpec::Target::V);
    pspec.def(py::init<>())
        .def_readwrite("amplitude", &PerturbationSpec::amplitude)
        .def_readwrite("center", &PerturbationSpec::center)
        .def_readwrite("width", &PerturbationSpec::width)
        .def_readwrite("decay", &PerturbationSpec::decay)
        .def_readwrite("target", &PerturbationSpec::target);

    m.def("ads", &ads, py::arg("n"), py::arg("grid"));
    m.def("schwarzschild_ads", &schwarzschild_ads, py::arg("n"), py::arg("mass"), py::arg("grid"));
    m.def("horizon_radius", &horizon_radius, py::arg("n"), py::arg("mass"));
    m.def("perturb", &perturb, py::arg("triple"), py::arg("spec"));

    py::enum_<Scheme>(m, "Scheme")
        .value("rk4", Scheme::rk4)
        .value("euler", Scheme::euler);
    py::enum_<Termination>(m, "Termination")
        .value("completed", Termination::completed)
        .value("budget_exceeded", Termination::budget_exceeded)
        .value("positivity_lost", Termination::positivity_lost)
        .value("nonfinite", Termination::nonfinite);

    py::class_<FlowControls>(m, "FlowControls")
        .def(py::init<>())
        .def_readwrite("t_end", &FlowControls::t_end)
        .def_readwrite("cfl", &FlowControls::cfl)
        .def_readwrite("scheme", &FlowControls::scheme)
        .def_readwrite("monitor_every", &FlowControls::monitor_every)
        .def_readwrite("deviation_budget", &FlowControls::deviation_budget);

    py::class_<FlowState>(m, "FlowState")
        .def(py::init<>())
        .def_readwrite("g", &FlowState::g)
        .def_readwrite("V", &FlowState::V)
        .def_readwrite("t", &FlowState::t)
        .def_readwrite("background", &FlowState::background);

    py::class_<FlowReport>(m, "FlowReport")
        .def_readonly("times", &FlowReport::times)
        .def_readonly("weighted_dev", &FlowReport::weighted_dev)
        .def_readonly("min_lapse", &FlowReport::min_lapse)
        .def_readonly("as_defect", &FlowReport::as_defect)
        .def_readonly("residual_norms", &FlowReport::residual_norms)
        .def_readonly("terminated", &FlowReport::terminated)
        .def_readonly("dt", &FlowReport::dt)
        .def_readonly("steps", &FlowReport::steps)
        .def("max_weighted_dev", &FlowReport::max_weighted_dev);

    py::class_<FlowDerivative>(m, "FlowDerivative")
        .def_readonly("dA", &FlowDerivative::dA)
        .def_readonly("dB", &FlowDerivative::dB)
        .def_readonly("dV", &FlowDerivative::dV);

    m.def("rhs", &rhs, py::arg("state"));
    m.def("max_stable_dt", &max_stable_dt, py::arg("triple"));
    m.def("step", &step, py::arg("state"), py::arg("dt"), py::arg("scheme") = Scheme::rk4);
    m.def("evolve", &evolve, py::arg("initial"), py::arg("controls"),
          py::call_guard<py::gil_scoped_release>());
    m.def("stationarity_drift", &stationarity_drift, py::arg("initial"), py::arg("horizon"),
          py::arg("controls"), py::call_guard<py::gil_scoped_release>());

    py::class_<TruncatedSeries>(m, "TruncatedSeries")
        .def(py::init<std::vector<double>>(), py::arg("coeffs"))
        .def_property_readonly("coeffs", &TruncatedSeries::coeffs)
        .def("order", &TruncatedSeries::order)
        .def("evaluate", &TruncatedSeries::evaluate)
        .def("__getitem__", [](const TruncatedSeries& s, std::size_t k) { return s[k]; });

    py::class_<EinsteinBoundary>(m, "EinsteinBoundary")
        .def(py::init<int, double>(), py::arg("n"), py::arg("scal"))
        .def_readonly("n", &EinsteinBoundary::n)
        .def_readonly("scal", &EinsteinBoundary::scal)
        .def_static("sphere_scal", &EinsteinBoundary::sphere_scal);

    py::class_<ExpansionResult>(m, "ExpansionResult")
        .def_readonly("n", &ExpansionResult::n)
        .def_readonly("scal", &ExpansionResult::scal)
        .def_readonly("c", &ExpansionResult::c)
        .def_readonly("u", &ExpansionResult::u)
        .def_readonly("max_order", &ExpansionResult::max_order)
        .def_readonly("determinants", &ExpansionResult::determinants);

    m.def("reduce_equations", &reduce_equations, py::arg("boundary"), py::arg("c"), py::arg("u"));
    m.def("expand", &expand, py::arg("boundary"), py::arg("order"));
    m.def("closed_form_order2", &closed_form_order2, py::arg("boundary"));
    m.def("solvability_determinant", &solvability_determinant, py::arg("n"), py::arg("m"));
    m.def("special_gauge_of_ads", &special_gauge_of_ads, py::arg("n"), py::arg("order"));
    m.def("parity_check", &parity_check, py::arg("result"), py::arg("tol") = 1e-12);
    m.def("reconstruct", &reconstruct, py::arg("result"), py::arg("tau_grid"));

    m.def("oracle_ricci_diag", &oracle_ricci_diag, py::arg("chart"), py::arg("node"));
    py::class_<DiagonalChart>(m, "DiagonalChart");
    m.def("metric_chart", &metric_chart, py::arg("g"));
    m.def("lift_chart", &lift_chart, py::arg("triple"));

    m.def("run_config_file", &run_file, py::arg("config_path"), py::arg("out_override") = std::nullopt,
          "Run a JSON-configured command; returns the CLI exit status");

    m.attr("__version__") = "0.1.0";
}
