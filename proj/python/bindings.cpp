#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "liqshock/analysis.hpp"
#include "liqshock/errors.hpp"
#include "liqshock/grid.hpp"
#include "liqshock/memory.hpp"
#include "liqshock/params.hpp"
#include "liqshock/payoff.hpp"
#include "liqshock/prices.hpp"
#include "liqshock/solver.hpp"

namespace py = pybind11;
using namespace liqshock;

namespace {

PayoffSpec payoff_from_kwargs(const std::string& kind, double strike,
                              double level,
                              std::vector<std::pair<double, double>> table) {
    if (kind == "call") return make_call(strike);
    if (kind == "put") return make_put(strike);
    if (kind == "constant") return make_constant(level);
    if (kind == "tabulated") return make_tabulated(std::move(table));
    throw ValidationError("payoff kind must be call, put, constant or tabulated");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "indifference pricing under liquidity shocks";

    // Translators run newest-first, so the base must be registered before
    // the derived class or it would shadow it.
    py::register_exception<Error>(m, "SolverError", PyExc_RuntimeError);
    py::register_exception<ValidationError>(m, "ValidationError",
                                            PyExc_ValueError);

    py::class_<ModelParams>(m, "ModelParams")
        .def_readonly("sigma", &ModelParams::sigma)
        .def_readonly("mu", &ModelParams::mu)
        .def_readonly("nu01", &ModelParams::nu01)
        .def_readonly("nu10", &ModelParams::nu10)
        .def_readonly("gamma", &ModelParams::gamma)
        .def_readonly("horizon", &ModelParams::horizon)
        .def_readonly("d0", &ModelParams::d0)
        .def_readonly("kappa", &ModelParams::kappa);
    m.def("derive_constants", &derive_constants, py::arg("sigma"),
          py::arg("mu"), py::arg("nu01"), py::arg("nu10"), py::arg("gamma"),
          py::arg("horizon"));

    py::class_<MertonFactors>(m, "MertonFactors")
        .def_readonly("lam1", &MertonFactors::lam1)
        .def_readonly("lam2", &MertonFactors::lam2)
        .def_readonly("c1", &MertonFactors::c1)
        .def_readonly("c2", &MertonFactors::c2);
    m.def("merton_spectrum", &merton_spectrum, py::arg("params"));
    py::class_<FactorValues>(m, "FactorValues")
        .def_readonly("f0", &FactorValues::f0)
        .def_readonly("f1", &FactorValues::f1)
        .def_readonly("df0", &FactorValues::df0)
        .def_readonly("df1", &FactorValues::df1);
    m.def("evaluate_factors", &evaluate_factors, py::arg("factors"),
          py::arg("t"));

    py::class_<PayoffSpec>(m, "PayoffSpec");
    m.def("make_payoff", &payoff_from_kwargs, py::arg("kind"),
          py::arg("strike") = 0.0, py::arg("level") = 0.0,
          py::arg("table") = std::vector<std::pair<double, double>>{});
    m.def("evaluate_payoff", &evaluate, py::arg("spec"), py::arg("S"));
    m.def("truncate_below", &truncate_below, py::arg("spec"), py::arg("N"),
          py::arg("gamma"));

    py::class_<Grid>(m, "Grid")
        .def_readonly("dx", &Grid::dx)
        .def_readonly("dtau", &Grid::dtau)
        .def_readonly("n_space", &Grid::nSpace)
        .def_readonly("n_time", &Grid::nTime)
        .def_readonly("x_nodes", &Grid::xNodes)
        .def_readonly("s_nodes", &Grid::sNodes);
    m.def("build_grid", &build_grid, py::arg("x_min"), py::arg("x_max"),
          py::arg("n_space"), py::arg("horizon"), py::arg("n_time"));

    py::class_<Surface>(m, "Surface")
        .def_readonly("u", &Surface::u)
        .def_readonly("I", &Surface::I)
        .def(
            "at",
            [](const Surface& s, std::size_t level, std::size_t node) {
                return s.at(level, node);
            },
            py::arg("level"), py::arg("node"))
        .def("memory_at", &Surface::memory_at, py::arg("level"),
             py::arg("node"))
        .def("levels", &Surface::levels);

    py::class_<SolverConfig>(m, "SolverConfig")
        .def(py::init<>())
        .def_readwrite("scheme", &SolverConfig::scheme)
        .def_readwrite("tol_iter", &SolverConfig::tolIter)
        .def_readwrite("max_iter", &SolverConfig::maxIter);
    py::enum_<Scheme>(m, "Scheme")
        .value("DIRECT_IMEX", Scheme::DirectIMEX)
        .value("MONOTONE_ITERATION", Scheme::MonotoneIteration);
    py::class_<SolveReport>(m, "SolveReport")
        .def_readonly("iterations", &SolveReport::iterations)
        .def_readonly("final_increment", &SolveReport::finalIncrement)
        .def_readonly("max_abs_u", &SolveReport::maxAbsU)
        .def_readonly("estimate_ratio", &SolveReport::estimateRatio)
        .def_readonly("warnings", &SolveReport::warnings);
    m.def("solve", &solve, py::arg("params"), py::arg("payoff"),
          py::arg("grid"), py::arg("config"),
          py::call_guard<py::gil_scoped_release>());

    py::class_<PriceSurfaces>(m, "PriceSurfaces")
        .def_readonly("p", &PriceSurfaces::p)
        .def_readonly("q", &PriceSurfaces::q)
        .def_readonly("r0", &PriceSurfaces::r0)
        .def_readonly("r1", &PriceSurfaces::r1);
    m.def("indifference_prices", &indifference_prices, py::arg("surface"),
          py::arg("params"), py::arg("factors"));
    m.def("value_function", &value_function, py::arg("R"), py::arg("X"),
          py::arg("gamma"));

    m.def("constant_payoff_solution", &constant_payoff_solution,
          py::arg("params"), py::arg("factors"), py::arg("h_star"),
          py::arg("tau"));
    m.def("linear_reduction_solution", &linear_reduction_solution,
          py::arg("params"), py::arg("strike"), py::arg("S"), py::arg("tau"));
}
