#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "betheotto/ensemble.hpp"
#include "betheotto/oracle.hpp"
#include "betheotto/otto.hpp"
#include "betheotto/spectrum.hpp"
#include "betheotto/sweep.hpp"
#include "betheotto/table.hpp"
#include "betheotto/verify.hpp"

#include <sstream>

namespace py = pybind11;
using namespace betheotto;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Bethe-ansatz spectra of repulsive bosons in a box and the quantum Otto "
              "cycle built on them";

    py::register_exception<SolverError>(m, "SolverError", PyExc_RuntimeError);
    py::register_exception<UnderResolvedTailError>(m, "UnderResolvedTailError",
                                                   PyExc_RuntimeError);
    py::register_exception<BracketFailureError>(m, "BracketFailureError", PyExc_RuntimeError);
    py::register_exception<DiagConvergenceError>(m, "DiagConvergenceError", PyExc_RuntimeError);

    py::class_<SpectrumParams>(m, "SpectrumParams")
        .def(py::init<int, double, double, double>(), py::arg("n_particles") = 1,
             py::arg("box_length") = 1.0, py::arg("interaction") = 0.0, py::arg("mass") = 1.0)
        .def_readwrite("n_particles", &SpectrumParams::n_particles)
        .def_readwrite("box_length", &SpectrumParams::box_length)
        .def_readwrite("interaction", &SpectrumParams::interaction)
        .def_readwrite("mass", &SpectrumParams::mass)
        .def("validate", &SpectrumParams::validate);

    py::class_<SolverOptions>(m, "SolverOptions")
        .def(py::init<>())
        .def_readwrite("tolerance", &SolverOptions::tolerance)
        .def_readwrite("max_iterations", &SolverOptions::max_iterations)
        .def_readwrite("max_step_halvings", &SolverOptions::max_step_halvings)
        .def_readwrite("continuation_start", &SolverOptions::continuation_start)
        .def_readwrite("continuation_ratio", &SolverOptions::continuation_ratio)
        .def_readwrite("continuation_ratio_fine", &SolverOptions::continuation_ratio_fine);

    py::class_<BetheSolution>(m, "BetheSolution")
        .def_readonly("k", &BetheSolution::k)
        .def_readonly("energy", &BetheSolution::energy)
        .def_readonly("residual_norm", &BetheSolution::residual_norm)
        .def_readonly("quantum_numbers", &BetheSolution::quantum_numbers)
        .def_readonly("newton_iterations", &BetheSolution::newton_iterations)
        .def_readonly("used_continuation", &BetheSolution::used_continuation)
        .def("__repr__", [](const BetheSolution& s) {
            std::ostringstream os;
            os << "BetheSolution(" << format_quantum_numbers(s.quantum_numbers)
               << ", E=" << s.energy << ")";
            return os.str();
        });

    m.def("enumerate_states", &enumerate_states, py::arg("n_particles"), py::arg("n_cut"));
    m.def("state_count", &state_count, py::arg("n_particles"), py::arg("n_cut"));
    m.def("bethe_residual", &bethe_residual, py::arg("k"), py::arg("qn"), py::arg("params"));
    m.def("bethe_jacobian", &bethe_jacobian, py::arg("k"), py::arg("params"));
    m.def(
        "solve_bethe",
        [](const QuantumNumbers& qn, const SpectrumParams& p, const SolverOptions& opts) {
            return solve_bethe(qn, p, opts);
        },
        py::arg("qn"), py::arg("params"), py::arg("options") = SolverOptions{});
    m.def("asymptotic_energy", &asymptotic_energy, py::arg("qn"), py::arg("params"));
    m.def("free_boson_energy", &free_boson_energy, py::arg("qn"), py::arg("params"));
    m.def("tonks_girardeau_energy", &tonks_girardeau_energy, py::arg("qn"), py::arg("params"));

    py::class_<LevelTable>(m, "LevelTable")
        .def_property_readonly("states",
                               [](const LevelTable& t) { return *t.states; })
        .def_property_readonly("energies",
                               [](const LevelTable& t) { return *t.energies; })
        .def("__len__", &LevelTable::size);

    py::class_<EnsembleParams>(m, "EnsembleParams")
        .def(py::init<>())
        .def_readwrite("temperature", &EnsembleParams::temperature)
        .def_readwrite("spectrum", &EnsembleParams::spectrum)
        .def_readwrite("n_cut", &EnsembleParams::n_cut)
        .def_readwrite("tail_warn_tol", &EnsembleParams::tail_warn_tol)
        .def_readwrite("tail_error_tol", &EnsembleParams::tail_error_tol);

    py::class_<ThermalEnsemble>(m, "ThermalEnsemble")
        .def_readonly("levels", &ThermalEnsemble::levels)
        .def_readonly("probabilities", &ThermalEnsemble::probabilities)
        .def_readonly("partition_function", &ThermalEnsemble::partition_function)
        .def_readonly("energy_shift", &ThermalEnsemble::energy_shift)
        .def_readonly("internal_energy", &ThermalEnsemble::internal_energy)
        .def_readonly("entropy", &ThermalEnsemble::entropy)
        .def_readonly("temperature", &ThermalEnsemble::temperature)
        .def_readonly("tail_probability", &ThermalEnsemble::tail_probability)
        .def_readonly("tail_warning", &ThermalEnsemble::tail_warning)
        .def("log_partition_function", &ThermalEnsemble::log_partition_function)
        .def("level_pairs", &ThermalEnsemble::level_pairs);

    m.def("compute_levels", &compute_levels, py::arg("params"), py::arg("n_cut"),
          py::arg("options") = SolverOptions{});
    m.def("boltzmann_ensemble", &boltzmann_ensemble, py::arg("levels"), py::arg("temperature"),
          py::arg("tail_warn_tol") = 1e-8, py::arg("tail_error_tol") = 1e-4);
    m.def("build_ensemble", &build_ensemble, py::arg("params"),
          py::arg("options") = SolverOptions{});
    m.def("entropy", py::overload_cast<const ThermalEnsemble&>(&entropy), py::arg("ensemble"));
    m.def("entropy_of", py::overload_cast<const std::vector<double>&>(&entropy),
          py::arg("probabilities"));
    m.def("clear_level_cache", &clear_level_cache);

    py::class_<CycleConfig>(m, "CycleConfig")
        .def(py::init<>())
        .def_readwrite("n_particles", &CycleConfig::n_particles)
        .def_readwrite("interaction", &CycleConfig::interaction)
        .def_readwrite("mass", &CycleConfig::mass)
        .def_readwrite("trap_small", &CycleConfig::trap_small)
        .def_readwrite("trap_large", &CycleConfig::trap_large)
        .def_readwrite("hot_temperature", &CycleConfig::hot_temperature)
        .def_readwrite("cold_temperature", &CycleConfig::cold_temperature)
        .def_readwrite("n_cut", &CycleConfig::n_cut)
        .def_readwrite("solver", &CycleConfig::solver)
        .def("validate", &CycleConfig::validate);

    py::class_<CycleResult>(m, "CycleResult")
        .def_readonly("Q1", &CycleResult::Q1)
        .def_readonly("W1", &CycleResult::W1)
        .def_readonly("Q2", &CycleResult::Q2)
        .def_readonly("W2", &CycleResult::W2)
        .def_readonly("W_out", &CycleResult::W_out)
        .def_readonly("efficiency", &CycleResult::efficiency)
        .def_readonly("eta_numerator", &CycleResult::eta_numerator)
        .def_readonly("eta_denominator", &CycleResult::eta_denominator)
        .def_readonly("corner_entropy", &CycleResult::corner_entropy)
        .def_readonly("corner_energy", &CycleResult::corner_energy)
        .def_readonly("valid_engine", &CycleResult::valid_engine)
        .def_readonly("tail_warning", &CycleResult::tail_warning);

    py::class_<CycleCorner>(m, "CycleCorner")
        .def_readonly("label", &CycleCorner::label)
        .def_readonly("temperature", &CycleCorner::temperature)
        .def_readonly("entropy", &CycleCorner::entropy)
        .def_readonly("internal_energy", &CycleCorner::internal_energy);

    m.def("run_cycle", &run_cycle, py::arg("config"));
    m.def("cycle_corners", &cycle_corners, py::arg("config"));
    m.def("level_ratio", &level_ratio, py::arg("qn"), py::arg("config"));
    m.def("two_level_efficiency", &two_level_efficiency, py::arg("config"));
    m.def("asymptotic_efficiency", &asymptotic_efficiency, py::arg("config"));
    m.def("first_order_efficiency", &first_order_efficiency, py::arg("config"));

    py::enum_<GridSpacing>(m, "GridSpacing")
        .value("linear", GridSpacing::linear)
        .value("logarithmic", GridSpacing::logarithmic);

    py::class_<CGrid>(m, "CGrid")
        .def(py::init<>())
        .def_readwrite("c_min", &CGrid::c_min)
        .def_readwrite("c_max", &CGrid::c_max)
        .def_readwrite("points", &CGrid::points)
        .def_readwrite("spacing", &CGrid::spacing);

    py::class_<DipResult>(m, "DipResult")
        .def_readonly("c_star", &DipResult::c_star)
        .def_readonly("eta_min", &DipResult::eta_min)
        .def_readonly("c_lo", &DipResult::c_lo)
        .def_readonly("c_hi", &DipResult::c_hi)
        .def_readonly("interior", &DipResult::interior);

    py::class_<SweepTable>(m, "SweepTable")
        .def_readonly("columns", &SweepTable::columns)
        .def_readonly("rows", &SweepTable::rows)
        .def("__len__", &SweepTable::size)
        .def("to_csv", [](const SweepTable& t) { return to_csv(t); });

    m.def("grid_values", &grid_values, py::arg("grid"));
    m.def("sweep_c", &sweep_c, py::arg("grid"), py::arg("config"));
    m.def("find_dip", &find_dip, py::arg("c_lo"), py::arg("c_hi"), py::arg("config"),
          py::arg("coarse_points") = 64, py::arg("log_tol") = 1e-4);
    m.def("sweep_T2", &sweep_T2, py::arg("hot_temperatures"), py::arg("config"), py::arg("c_lo"),
          py::arg("c_hi"), py::arg("coarse_points") = 64);
    m.def("ratio_curves", &ratio_curves, py::arg("states"), py::arg("grid"), py::arg("config"));
    m.def("find_ratio_dip", &find_ratio_dip, py::arg("qn"), py::arg("config"), py::arg("c_lo"),
          py::arg("c_hi"), py::arg("coarse_points") = 64, py::arg("log_tol") = 1e-4);
    m.def("two_level_comparison", &two_level_comparison, py::arg("grid"),
          py::arg("temperature_pairs"), py::arg("config"));
    m.def("default_ratio_states", &default_ratio_states);
    m.def("minimize_over_log_c", &minimize_over_log_c, py::arg("f"), py::arg("c_lo"),
          py::arg("c_hi"), py::arg("coarse_points") = 64, py::arg("log_tol") = 1e-4);
    m.def("scan_log_grid", &scan_log_grid, py::arg("f"), py::arg("c_lo"), py::arg("c_hi"),
          py::arg("points"));

    m.def("bisection_bethe_2p", &bisection_bethe_2p, py::arg("qn"), py::arg("params"),
          py::arg("tol") = 1e-12);
    m.def("exact_diag_2p", &exact_diag_2p, py::arg("params"), py::arg("cutoff"),
          py::arg("n_levels"));

    py::class_<CertifiedDiag>(m, "CertifiedDiag")
        .def_readonly("energies", &CertifiedDiag::energies)
        .def_readonly("certified_rel_error", &CertifiedDiag::certified_rel_error);
    m.def("certified_exact_diag_2p", &certified_exact_diag_2p, py::arg("params"),
          py::arg("cutoff"), py::arg("n_levels"), py::arg("declared_tol"));

    py::class_<CheckResult>(m, "CheckResult")
        .def_readonly("name", &CheckResult::name)
        .def_readonly("passed", &CheckResult::passed)
        .def_readonly("detail", &CheckResult::detail);

    m.def(
        "verify",
        [](bool quick) {
            VerifyOptions opts;
            opts.quick = quick;
            std::ostringstream log;
            const auto results = run_verification(opts, log);
            return py::make_tuple(all_passed(results), log.str(), results);
        },
        py::arg("quick") = false,
        "Run the oracle/invariant suite; returns (all_passed, report, results).");
}
