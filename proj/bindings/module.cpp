#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ttmol/cli.hpp"
#include "ttmol/ladder.hpp"
#include "ttmol/oracle.hpp"
#include "ttmol/specfun.hpp"
#include "ttmol/spectrum.hpp"
#include "ttmol/wavefunc.hpp"

namespace py = pybind11;
using namespace ttmol;

PYBIND11_MODULE(_ttmol, m) {
    m.doc() = "Bound states, wave functions and su(1,1) ladder operators of the "
              "screened two-term diatomic potential";

    // ---- potential ----
    py::class_<PotentialParams>(m, "PotentialParams")
        .def(py::init<double, double, double, double, double, double>(), py::arg("V0"),
             py::arg("V1"), py::arg("beta"), py::arg("q"), py::arg("mu"), py::arg("hbar"))
        .def_readonly("V0", &PotentialParams::V0)
        .def_readonly("V1", &PotentialParams::V1)
        .def_readonly("beta", &PotentialParams::beta)
        .def_readonly("q", &PotentialParams::q)
        .def_readonly("mu", &PotentialParams::mu)
        .def_readonly("hbar", &PotentialParams::hbar);
    py::class_<ScaledParams>(m, "ScaledParams")
        .def(py::init<double, double, double>(), py::arg("v0"), py::arg("v1"), py::arg("q"))
        .def_readonly("v0", &ScaledParams::v0)
        .def_readonly("v1", &ScaledParams::v1)
        .def_readonly("q", &ScaledParams::q);
    m.def("potential_eval", &potential_eval, py::arg("params"), py::arg("r"));
    m.def("scale", &scale);
    m.def("scale_energy", &scale_energy);
    m.def("unscale_energy", &unscale_energy);
    m.def("from_molecular", &from_molecular, py::arg("D0"), py::arg("r0"), py::arg("alpha_shape"),
          py::arg("q"), py::arg("mu"), py::arg("hbar"));
    m.def("is_hulthen_limit", &is_hulthen_limit);

    // ---- spectrum ----
    py::class_<spectrum::BoundState>(m, "BoundState")
        .def_readonly("n", &spectrum::BoundState::n)
        .def_readonly("a1", &spectrum::BoundState::a1)
        .def_readonly("A", &spectrum::BoundState::A)
        .def_readonly("Lambda", &spectrum::BoundState::Lambda)
        .def_readonly("eps", &spectrum::BoundState::eps)
        .def_readonly("E", &spectrum::BoundState::E);
    py::class_<spectrum::NuIntermediates>(m, "NuIntermediates")
        .def_readonly("k_minus", &spectrum::NuIntermediates::k_minus)
        .def_readonly("k_plus", &spectrum::NuIntermediates::k_plus)
        .def_readonly("pi_c0", &spectrum::NuIntermediates::pi_c0)
        .def_readonly("pi_c1", &spectrum::NuIntermediates::pi_c1)
        .def_readonly("tau_c0", &spectrum::NuIntermediates::tau_c0)
        .def_readonly("tau_c1", &spectrum::NuIntermediates::tau_c1)
        .def_readonly("lambda_", &spectrum::NuIntermediates::lambda_)
        .def_readonly("lambda_n", &spectrum::NuIntermediates::lambda_n)
        .def_readonly("a2_sq", &spectrum::NuIntermediates::a2_sq)
        .def_readonly("a3_sq", &spectrum::NuIntermediates::a3_sq);
    m.def("index_A", &spectrum::index_A);
    m.def("well_strength", &spectrum::well_strength);
    m.def("num_bound_states", &spectrum::num_bound_states);
    m.def("energy_level",
          py::overload_cast<const ScaledParams&, int>(&spectrum::energy_level), py::arg("params"),
          py::arg("n"));
    m.def("energy_level",
          py::overload_cast<const PotentialParams&, int>(&spectrum::energy_level),
          py::arg("params"), py::arg("n"));
    m.def("nu_intermediates", &spectrum::nu_intermediates, py::arg("params"), py::arg("n"),
          py::arg("eps"));
    m.def("quantization_residual", &spectrum::quantization_residual, py::arg("params"),
          py::arg("n"), py::arg("eps"));

    // ---- wavefunc ----
    py::enum_<wavefunc::NormConvention>(m, "NormConvention")
        .value("UnitInterval", wavefunc::NormConvention::UnitInterval)
        .value("Radial", wavefunc::NormConvention::Radial);
    py::class_<wavefunc::WaveState>(m, "WaveState")
        .def_readonly("n", &wavefunc::WaveState::n)
        .def_readonly("a1", &wavefunc::WaveState::a1)
        .def_readonly("A", &wavefunc::WaveState::A)
        .def_readonly("q", &wavefunc::WaveState::q)
        .def_readonly("norm_const", &wavefunc::WaveState::norm_const)
        .def_readonly("convention", &wavefunc::WaveState::convention);
    m.def("eval_x", &wavefunc::eval_x);
    m.def("eval_r", &wavefunc::eval_r);
    m.def("normalize_unit_interval", &wavefunc::normalize_unit_interval, py::arg("n"), py::arg("a1"), py::arg("A"),
          py::arg("q"));
    m.def("normalize_radial", &wavefunc::normalize_radial, py::arg("n"), py::arg("a1"),
          py::arg("A"), py::arg("q"), py::arg("beta"));
    m.def("closed_form_norm", &wavefunc::closed_form_norm, py::arg("n"), py::arg("a1"),
          py::arg("A"), py::arg("q"));
    m.def("eigenstate", &wavefunc::eigenstate, py::arg("params"), py::arg("n"),
          py::arg("convention"), py::arg("beta") = 1.0);
    m.def("orthogonality_residual", &wavefunc::orthogonality_residual);

    // ---- ladder ----
    py::class_<ladder::LadderCoeffs>(m, "LadderCoeffs")
        .def_readonly("n", &ladder::LadderCoeffs::n)
        .def_readonly("a1", &ladder::LadderCoeffs::a1)
        .def_readonly("A", &ladder::LadderCoeffs::A)
        .def_readonly("kappa1", &ladder::LadderCoeffs::kappa1)
        .def_readonly("kappa2", &ladder::LadderCoeffs::kappa2)
        .def_readonly("kappa3", &ladder::LadderCoeffs::kappa3)
        .def_readonly("kappa4", &ladder::LadderCoeffs::kappa4)
        .def_readonly("kappa5", &ladder::LadderCoeffs::kappa5);
    py::class_<ladder::FamilyFunction>(m, "FamilyFunction")
        .def_readonly("a1", &ladder::FamilyFunction::a1)
        .def_readonly("A", &ladder::FamilyFunction::A)
        .def_readonly("q", &ladder::FamilyFunction::q)
        .def_readonly("coeffs", &ladder::FamilyFunction::coeffs)
        .def("__call__", [](const ladder::FamilyFunction& f, double x) { return eval(f, x); });
    py::class_<ladder::FamilyState>(m, "FamilyState")
        .def_readonly("n", &ladder::FamilyState::n)
        .def_readonly("a1", &ladder::FamilyState::a1)
        .def_readonly("A", &ladder::FamilyState::A)
        .def_readonly("q", &ladder::FamilyState::q)
        .def_readonly("norm_const", &ladder::FamilyState::norm_const)
        .def_readonly("coeffs", &ladder::FamilyState::coeffs);
    py::class_<ladder::LadderAction>(m, "LadderAction")
        .def_readonly("result", &ladder::LadderAction::result)
        .def_readonly("coeff", &ladder::LadderAction::coeff);
    py::class_<ladder::CommutatorResiduals>(m, "CommutatorResiduals")
        .def_readonly("lower_raise", &ladder::CommutatorResiduals::lower_raise)
        .def_readonly("weight_raise", &ladder::CommutatorResiduals::weight_raise)
        .def_readonly("lower_weight", &ladder::CommutatorResiduals::lower_weight);
    py::class_<ladder::CasimirPair>(m, "CasimirPair")
        .def_readonly("raise_then_lower", &ladder::CasimirPair::raise_then_lower)
        .def_readonly("lower_then_raise", &ladder::CasimirPair::lower_then_raise);
    m.def("kappa_coeffs", &ladder::kappa_coeffs, py::arg("n"), py::arg("a1"), py::arg("A"));
    m.def("make_family_state", &ladder::make_family_state, py::arg("n"), py::arg("a1"),
          py::arg("A"), py::arg("q"), py::arg("norm_override") = 0.0);
    m.def("family_eval", &ladder::eval, py::arg("f"), py::arg("x"));
    m.def("apply_lower", &ladder::apply_lower);
    m.def("apply_raise", &ladder::apply_raise);
    m.def("weight_eigenvalue", &ladder::weight_eigenvalue);
    m.def("commutator_check", &ladder::commutator_check, py::arg("n"), py::arg("a1"),
          py::arg("A"), py::arg("q"));
    m.def("casimir_eigenvalue", &ladder::casimir_eigenvalue);
    m.def("casimir_orderings", &ladder::casimir_orderings);
    m.def("annihilation_residual", &ladder::annihilation_residual);
    m.def("lower_residual", &ladder::lower_residual);
    m.def("raise_residual", &ladder::raise_residual);

    // ---- oracle ----
    py::class_<oracle::RadialGrid>(m, "RadialGrid")
        .def(py::init([](double r_min, double r_max, int npoints) {
                 return oracle::RadialGrid{r_min, r_max, npoints};
             }),
             py::arg("r_min") = 0.0, py::arg("r_max") = 40.0, py::arg("npoints") = 4000)
        .def_readonly("r_min", &oracle::RadialGrid::r_min)
        .def_readonly("r_max", &oracle::RadialGrid::r_max)
        .def_readonly("npoints", &oracle::RadialGrid::npoints)
        .def("spacing", &oracle::RadialGrid::spacing);
    py::class_<oracle::OracleSpectrum>(m, "OracleSpectrum")
        .def_readonly("eigenvalues", &oracle::OracleSpectrum::eigenvalues)
        .def_readonly("eigenvectors", &oracle::OracleSpectrum::eigenvectors)
        .def_readonly("grid", &oracle::OracleSpectrum::grid);
    m.def("scaled_potential", &oracle::scaled_potential);
    m.def("solve_radial", &oracle::solve_radial, py::arg("params"), py::arg("grid"),
          py::arg("count"));
    m.def("richardson", &oracle::richardson, py::arg("params"), py::arg("grid"), py::arg("count"));
    m.def("overlap_with_analytic", &oracle::overlap_with_analytic);
    m.def("level_grid", &oracle::level_grid, py::arg("params"), py::arg("a1"),
          py::arg("npoints") = 4000);

    // ---- specfun ----
    m.def("ln_gamma", &specfun::ln_gamma);
    m.def("gen_binomial", &specfun::gen_binomial);
    m.def("jacobi_eval", [](int n, double alpha, double beta, double z) {
        return specfun::jacobi_eval({n, alpha, beta}, z);
    });
    m.def("jacobi_derivative", [](int n, double alpha, double beta, double z) {
        return specfun::jacobi_derivative({n, alpha, beta}, z);
    });
    m.def("gauss_2f1", &specfun::gauss_2f1, py::arg("a"), py::arg("b"), py::arg("c"),
          py::arg("z"));
    m.def("integrate", &specfun::integrate, py::arg("f"), py::arg("lo"), py::arg("hi"),
          py::arg("npoints"));

    // ---- cli ----
    m.def("run_cli", &cli::run, py::arg("args"),
          "Run a CLI subcommand in-process; returns the exit code.");
}
