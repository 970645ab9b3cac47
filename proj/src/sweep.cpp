#include "betheotto/sweep.hpp"

#include "betheotto/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace betheotto {

namespace {

constexpr double kGolden = 0.6180339887498949; // (sqrt(5)-1)/2

struct ScanPoint {
    double c = 0.0;
    std::optional<double> value;
};

std::vector<ScanPoint> evaluate_log_grid(const std::function<std::optional<double>(double)>& f,
                                         double c_lo, double c_hi, int points) {
    if (!(c_lo > 0.0) || !(c_lo < c_hi)) throw std::invalid_argument("need 0 < c_lo < c_hi");
    if (points < 3) throw std::invalid_argument("scan needs at least 3 points");
    const double t_lo = std::log(c_lo);
    const double t_hi = std::log(c_hi);
    std::vector<ScanPoint> pts(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i) {
        const double t = t_lo + (t_hi - t_lo) * i / (points - 1);
        pts[static_cast<std::size_t>(i)].c = std::exp(t);
    }
    parallel_for(pts.size(), [&](std::size_t i) { pts[i].value = f(pts[i].c); });
    return pts;
}

std::size_t argmin_defined(const std::vector<ScanPoint>& pts) {
    std::size_t best = pts.size();
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (!pts[i].value) continue;
        if (best == pts.size() || *pts[i].value < *pts[best].value) best = i;
    }
    if (best == pts.size())
        throw std::runtime_error("no defined points in scan range; nothing to minimize");
    return best;
}

} // namespace

void CGrid::validate() const {
    if (!(c_min < c_max)) throw std::invalid_argument("grid needs c_min < c_max");
    if (points < 2) throw std::invalid_argument("grid needs at least 2 points");
    if (spacing == GridSpacing::logarithmic && !(c_min > 0.0))
        throw std::invalid_argument("logarithmic grid needs c_min > 0");
    if (!(c_min >= 0.0)) throw std::invalid_argument("interaction grid must be non-negative");
}

std::vector<double> grid_values(const CGrid& grid) {
    grid.validate();
    std::vector<double> values(static_cast<std::size_t>(grid.points));
    if (grid.spacing == GridSpacing::logarithmic) {
        const double t_lo = std::log(grid.c_min);
        const double t_hi = std::log(grid.c_max);
        for (int i = 0; i < grid.points; ++i)
            values[static_cast<std::size_t>(i)] =
                std::exp(t_lo + (t_hi - t_lo) * i / (grid.points - 1));
    } else {
        for (int i = 0; i < grid.points; ++i)
            values[static_cast<std::size_t>(i)] =
                grid.c_min + (grid.c_max - grid.c_min) * i / (grid.points - 1);
    }
    // keep the endpoints exact; the interior of a log grid is irrational anyway
    values.front() = grid.c_min;
    values.back() = grid.c_max;
    return values;
}

DipResult scan_log_grid(const std::function<std::optional<double>(double)>& f, double c_lo,
                        double c_hi, int points) {
    const auto pts = evaluate_log_grid(f, c_lo, c_hi, points);
    const std::size_t best = argmin_defined(pts);
    DipResult dip;
    dip.c_star = pts[best].c;
    dip.eta_min = *pts[best].value;
    dip.c_lo = c_lo;
    dip.c_hi = c_hi;
    dip.interior = best > 0 && best + 1 < pts.size();
    return dip;
}

DipResult minimize_over_log_c(const std::function<std::optional<double>(double)>& f, double c_lo,
                              double c_hi, int coarse_points, double log_tol) {
    if (!(log_tol > 0.0)) throw std::invalid_argument("log_tol must be > 0");
    const auto pts = evaluate_log_grid(f, c_lo, c_hi, coarse_points);
    const std::size_t best = argmin_defined(pts);

    DipResult dip;
    dip.c_lo = c_lo;
    dip.c_hi = c_hi;
    if (best == 0 || best + 1 == pts.size()) {
        // monotone or flat scan: report the edge point, no interior dip
        dip.c_star = pts[best].c;
        dip.eta_min = *pts[best].value;
        dip.interior = false;
        return dip;
    }

    // golden-section on ln c inside the bracketing triple
    double a = std::log(pts[best - 1].c);
    double b = std::log(pts[best + 1].c);
    dip.c_lo = pts[best - 1].c;
    dip.c_hi = pts[best + 1].c;
    dip.interior = true;

    // track the best defined value seen; undefined probes count as +inf
    double best_t = std::log(pts[best].c);
    double best_v = *pts[best].value;
    auto probe = [&](double t) {
        const std::optional<double> v = f(std::exp(t));
        if (v && *v < best_v) {
            best_v = *v;
            best_t = t;
        }
        return v ? *v : std::numeric_limits<double>::infinity();
    };

    double x1 = b - kGolden * (b - a);
    double x2 = a + kGolden * (b - a);
    double f1 = probe(x1);
    double f2 = probe(x2);
    while (b - a > log_tol) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - kGolden * (b - a);
            f1 = probe(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + kGolden * (b - a);
            f2 = probe(x2);
        }
    }
    dip.c_star = std::exp(best_t);
    dip.eta_min = best_v;
    return dip;
}

namespace {

std::optional<double> cycle_efficiency_at(const CycleConfig& base, double c) {
    CycleConfig cfg = base;
    cfg.interaction = c;
    const CycleResult res = run_cycle(cfg);
    if (!res.valid_engine) return std::nullopt;
    return res.efficiency;
}

} // namespace

SweepTable sweep_c(const CGrid& grid, const CycleConfig& base) {
    const std::vector<double> cs = grid_values(grid);

    struct Row {
        double c = 0.0;
        std::optional<CycleResult> res;
        std::optional<double> eta_asym;
        std::optional<double> eta_first;
        std::string error;
    };
    std::vector<Row> slots(cs.size());
    parallel_for(cs.size(), [&](std::size_t i) {
        Row& row = slots[i];
        row.c = cs[i];
        CycleConfig cfg = base;
        cfg.interaction = cs[i];
        try {
            row.res = run_cycle(cfg);
            if (cs[i] > 0.0) {
                row.eta_asym = asymptotic_efficiency(cfg);
                row.eta_first = first_order_efficiency(cfg);
            }
        } catch (const SolverError& e) {
            row.error = e.what();
        } catch (const UnderResolvedTailError& e) {
            row.error = e.what();
        }
    });

    SweepTable table({"c", "efficiency", "Q1", "W_out", "valid_engine", "asymptotic_efficiency",
                      "first_order_efficiency", "error"});
    for (const Row& row : slots) {
        std::vector<Cell> cells(8, Cell{std::monostate{}});
        cells[0] = row.c;
        if (row.res) {
            if (row.res->efficiency) cells[1] = *row.res->efficiency;
            cells[2] = row.res->Q1;
            cells[3] = row.res->W_out;
            cells[4] = row.res->valid_engine;
        }
        if (row.eta_asym) cells[5] = *row.eta_asym;
        if (row.eta_first) cells[6] = *row.eta_first;
        cells[7] = row.error;
        table.append_row(std::move(cells));
    }
    return table;
}

DipResult find_dip(double c_lo, double c_hi, const CycleConfig& base, int coarse_points,
                   double log_tol) {
    return minimize_over_log_c([&](double c) { return cycle_efficiency_at(base, c); }, c_lo, c_hi,
                               coarse_points, log_tol);
}

SweepTable sweep_T2(const std::vector<double>& hot_temperatures, const CycleConfig& base,
                    double c_lo, double c_hi, int coarse_points) {
    std::vector<DipResult> dips(hot_temperatures.size());
    parallel_for(hot_temperatures.size(), [&](std::size_t i) {
        CycleConfig cfg = base;
        cfg.hot_temperature = hot_temperatures[i];
        dips[i] = find_dip(c_lo, c_hi, cfg, coarse_points);
    });

    SweepTable table({"T2", "c_star", "eta_min", "interior"});
    for (std::size_t i = 0; i < dips.size(); ++i)
        table.append_row(
            {hot_temperatures[i], dips[i].c_star, dips[i].eta_min, dips[i].interior});
    return table;
}

DipResult find_ratio_dip(const QuantumNumbers& qn, const CycleConfig& base, double c_lo,
                         double c_hi, int coarse_points, double log_tol) {
    return minimize_over_log_c(
        [&](double c) -> std::optional<double> {
            CycleConfig cfg = base;
            cfg.interaction = c;
            return level_ratio(qn, cfg);
        },
        c_lo, c_hi, coarse_points, log_tol);
}

SweepTable ratio_curves(const std::vector<QuantumNumbers>& states, const CGrid& grid,
                        const CycleConfig& base) {
    const std::vector<double> cs = grid_values(grid);
    const double l_ratio = base.trap_small / base.trap_large;
    const double reference = 1.0 - l_ratio * l_ratio;

    struct StateBlock {
        std::vector<double> lambdas;
        DipResult dip;
    };
    std::vector<StateBlock> blocks(states.size());
    parallel_for(states.size(), [&](std::size_t s) {
        StateBlock& blk = blocks[s];
        blk.lambdas.resize(cs.size());
        for (std::size_t i = 0; i < cs.size(); ++i) {
            CycleConfig cfg = base;
            cfg.interaction = cs[i];
            blk.lambdas[i] = level_ratio(states[s], cfg);
        }
        blk.dip = find_ratio_dip(states[s], base, grid.c_min > 0 ? grid.c_min : cs[1], grid.c_max);
    });

    SweepTable table({"state", "c", "lambda", "is_minimum", "reference"});
    for (std::size_t s = 0; s < states.size(); ++s) {
        const std::string name = format_quantum_numbers(states[s]);
        for (std::size_t i = 0; i < cs.size(); ++i)
            table.append_row({name, cs[i], blocks[s].lambdas[i], false, reference});
        table.append_row({name, blocks[s].dip.c_star, blocks[s].dip.eta_min, true, reference});
    }
    return table;
}

SweepTable two_level_comparison(const CGrid& grid,
                                const std::vector<std::pair<double, double>>& temperature_pairs,
                                const CycleConfig& base) {
    const std::vector<double> cs = grid_values(grid);

    struct Row {
        std::optional<double> exact;
        double two_level = 0.0;
    };
    std::vector<Row> slots(temperature_pairs.size() * cs.size());
    parallel_for(slots.size(), [&](std::size_t idx) {
        const std::size_t pair_idx = idx / cs.size();
        const std::size_t c_idx = idx % cs.size();
        CycleConfig cfg = base;
        cfg.hot_temperature = temperature_pairs[pair_idx].first;
        cfg.cold_temperature = temperature_pairs[pair_idx].second;
        cfg.interaction = cs[c_idx];
        Row& row = slots[idx];
        const CycleResult res = run_cycle(cfg);
        if (res.valid_engine) row.exact = res.efficiency;
        row.two_level = two_level_efficiency(cfg);
    });

    SweepTable table({"T2", "T4", "c", "exact_efficiency", "two_level_efficiency", "deviation"});
    for (std::size_t p = 0; p < temperature_pairs.size(); ++p) {
        for (std::size_t i = 0; i < cs.size(); ++i) {
            const Row& row = slots[p * cs.size() + i];
            std::vector<Cell> cells(6, Cell{std::monostate{}});
            cells[0] = temperature_pairs[p].first;
            cells[1] = temperature_pairs[p].second;
            cells[2] = cs[i];
            cells[4] = row.two_level;
            if (row.exact) {
                cells[3] = *row.exact;
                cells[5] = std::abs(*row.exact - row.two_level);
            }
            table.append_row(std::move(cells));
        }
    }
    return table;
}

std::vector<QuantumNumbers> default_ratio_states() {
    return {{1, 1}, {1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 3}};
}

} // namespace betheotto
