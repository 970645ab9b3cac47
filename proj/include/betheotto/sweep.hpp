#pragma once

#include "betheotto/otto.hpp"
#include "betheotto/table.hpp"

#include <functional>
#include <optional>
#include <utility>
#include <vector>

// Data generation behind the figure presets: efficiency and level-ratio
// curves over interaction grids, dip location/depth, and the dip locus as a
// function of the hot-bath temperature.

namespace betheotto {

enum class GridSpacing { linear, logarithmic };

struct CGrid {
    double c_min = 1e-2;
    double c_max = 1e4;
    int points = 61;
    GridSpacing spacing = GridSpacing::logarithmic;

    void validate() const;
};

std::vector<double> grid_values(const CGrid& grid);

struct DipResult {
    double c_star = 0.0;  // argmin of the curve
    double eta_min = 0.0; // value at the minimum
    double c_lo = 0.0;    // bracket enclosing c_star when interior
    double c_hi = 0.0;
    bool interior = false; // false: scan was monotone/flat, no refinement done
};

// Minimum of f over [c_lo, c_hi]: coarse logarithmic scan (coarse_points),
// then golden-section refinement on ln c down to width log_tol, i.e. a
// relative tolerance of log_tol in c_star. f may return nullopt (point
// excluded, e.g. outside the engine regime). interior=false when the coarse
// minimum sits on the range edge; the edge point is still reported.
DipResult minimize_over_log_c(const std::function<std::optional<double>(double)>& f, double c_lo,
                              double c_hi, int coarse_points = 64, double log_tol = 1e-4);

// Plain dense-scan argmin, no refinement. With a large point count this is
// the slow reference the refined dip coordinates are checked against.
DipResult scan_log_grid(const std::function<std::optional<double>(double)>& f, double c_lo,
                        double c_hi, int points);

// One row per grid point, ascending c:
// c, efficiency, Q1, W_out, valid_engine, asymptotic_efficiency,
// first_order_efficiency, error. Solver failures land in `error` with the
// remaining cells empty; nothing is dropped. base.interaction is ignored.
SweepTable sweep_c(const CGrid& grid, const CycleConfig& base);

// Efficiency dip of the cycle over [c_lo, c_hi].
DipResult find_dip(double c_lo, double c_hi, const CycleConfig& base, int coarse_points = 64,
                   double log_tol = 1e-4);

// Rows (T2, c_star, eta_min, interior); the cold bath and everything else
// stay fixed.
SweepTable sweep_T2(const std::vector<double>& hot_temperatures, const CycleConfig& base,
                    double c_lo, double c_hi, int coarse_points = 64);

// Level-ratio curves lambda(c) for the given states. Grid rows carry
// is_minimum=false; after each state's grid block one refined-minimum row is
// appended (is_minimum=true). `reference` is the ideal ratio 1-(L1/L2)^2.
// Columns: state, c, lambda, is_minimum, reference.
SweepTable ratio_curves(const std::vector<QuantumNumbers>& states, const CGrid& grid,
                        const CycleConfig& base);

DipResult find_ratio_dip(const QuantumNumbers& qn, const CycleConfig& base, double c_lo,
                         double c_hi, int coarse_points = 64, double log_tol = 1e-4);

// Exact vs two-level efficiency per temperature pair and grid point.
// Columns: T2, T4, c, exact_efficiency, two_level_efficiency, deviation;
// exact and deviation are empty outside the engine regime.
SweepTable two_level_comparison(const CGrid& grid,
                                const std::vector<std::pair<double, double>>& temperature_pairs,
                                const CycleConfig& base);

// The six lowest N = 2 states, the stock selection for ratio_curves.
std::vector<QuantumNumbers> default_ratio_states();

} // namespace betheotto
