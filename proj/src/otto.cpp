#include "betheotto/otto.hpp"

#include <cmath>
#include <stdexcept>

namespace betheotto {

void CycleConfig::validate() const {
    spectrum_at(trap_small).validate();
    if (!(trap_small < trap_large))
        throw std::invalid_argument("trap sizes must satisfy L1 < L2");
    if (!(cold_temperature > 0.0) || !(cold_temperature < hot_temperature))
        throw std::invalid_argument("temperatures must satisfy 0 < T4 < T2");
    if (n_cut < 1) throw std::invalid_argument("n_cut must be >= 1");
}

SpectrumParams CycleConfig::spectrum_at(double length) const {
    return SpectrumParams{n_particles, length, interaction, mass};
}

CycleResult run_cycle(const CycleConfig& cfg) {
    cfg.validate();

    const LevelTable lo = compute_levels(cfg.spectrum_at(cfg.trap_small), cfg.n_cut, cfg.solver);
    const LevelTable hi = compute_levels(cfg.spectrum_at(cfg.trap_large), cfg.n_cut, cfg.solver);
    if (lo.states.get() != hi.states.get() && *lo.states != *hi.states)
        throw std::logic_error("energy tables enumerate different level sets");

    const ThermalEnsemble hot = boltzmann_ensemble(lo, cfg.hot_temperature);  // corner 2
    const ThermalEnsemble cold = boltzmann_ensemble(hi, cfg.cold_temperature); // corner 4

    const auto& e1 = *lo.energies;
    const auto& e2 = *hi.energies;
    const auto& p2 = hot.probabilities;
    const auto& p4 = cold.probabilities;
    const std::size_t n = e1.size();

    // Fixed-order sums keep the CSV byte-identical across thread counts.
    double u1 = 0.0, u2 = 0.0, u3 = 0.0, u4 = 0.0, num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        u1 += p4[i] * e1[i];
        u2 += p2[i] * e1[i];
        u3 += p2[i] * e2[i];
        u4 += p4[i] * e2[i];
        const double dp = p2[i] - p4[i];
        num += dp * (e1[i] - e2[i]);
        den += dp * e1[i];
    }

    CycleResult res;
    res.Q1 = u2 - u1;
    res.W1 = u3 - u2;
    res.Q2 = u4 - u3;
    res.W2 = u1 - u4;
    res.W_out = -res.W1 - res.W2;
    res.eta_numerator = num;
    res.eta_denominator = den;
    res.corner_energy = {u1, u2, u3, u4};
    // adiabats leave the occupations untouched, so the corner entropies are
    // literally the same numbers, not merely close
    res.corner_entropy = {cold.entropy, hot.entropy, hot.entropy, cold.entropy};
    res.valid_engine = res.Q1 > 0.0 && res.W_out > 0.0;
    res.tail_warning = hot.tail_warning || cold.tail_warning;
    if (res.valid_engine) res.efficiency = num / den;
    return res;
}

std::vector<CycleCorner> cycle_corners(const CycleConfig& cfg) {
    const CycleResult res = run_cycle(cfg);
    std::vector<CycleCorner> corners(4);
    for (int i = 0; i < 4; ++i) {
        corners[i].label = std::to_string(i + 1);
        corners[i].entropy = res.corner_entropy[static_cast<std::size_t>(i)];
        corners[i].internal_energy = res.corner_energy[static_cast<std::size_t>(i)];
    }
    corners[1].temperature = cfg.hot_temperature;
    corners[3].temperature = cfg.cold_temperature;
    return corners;
}

double level_ratio(const QuantumNumbers& qn, const CycleConfig& cfg) {
    cfg.validate();
    const double e1 = solve_bethe(qn, cfg.spectrum_at(cfg.trap_small), cfg.solver).energy;
    const double e2 = solve_bethe(qn, cfg.spectrum_at(cfg.trap_large), cfg.solver).energy;
    return 1.0 - e2 / e1;
}

double two_level_efficiency(const CycleConfig& cfg) {
    cfg.validate();
    QuantumNumbers ground(static_cast<std::size_t>(cfg.n_particles), 1);
    QuantumNumbers excited = ground;
    excited.back() = 2;

    const SpectrumParams s1 = cfg.spectrum_at(cfg.trap_small);
    const SpectrumParams s2 = cfg.spectrum_at(cfg.trap_large);
    const double gap1 =
        solve_bethe(excited, s1, cfg.solver).energy - solve_bethe(ground, s1, cfg.solver).energy;
    const double gap2 =
        solve_bethe(excited, s2, cfg.solver).energy - solve_bethe(ground, s2, cfg.solver).energy;
    return 1.0 - gap2 / gap1;
}

double asymptotic_efficiency(const CycleConfig& cfg) {
    cfg.validate();
    if (!(cfg.interaction > 0.0))
        throw std::invalid_argument("asymptotic_efficiency requires c > 0");
    const double shift = 2.0 * (cfg.n_particles - 1) / cfg.interaction;
    const double ratio = (cfg.trap_small + shift) / (cfg.trap_large + shift);
    return 1.0 - ratio * ratio;
}

double first_order_efficiency(const CycleConfig& cfg) {
    cfg.validate();
    if (!(cfg.interaction > 0.0))
        throw std::invalid_argument("first_order_efficiency requires c > 0");
    const double l1 = cfg.trap_small;
    const double l2 = cfg.trap_large;
    const double ideal = 1.0 - (l1 / l2) * (l1 / l2);
    return ideal - 4.0 * l1 * (l2 - l1) * (cfg.n_particles - 1) /
                       (cfg.interaction * l2 * l2 * l2);
}

} // namespace betheotto
