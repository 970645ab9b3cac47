#pragma once

#include "betheotto/ensemble.hpp"
#include "betheotto/spectrum.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

// Four-stroke quantum Otto cycle between trap sizes L1 < L2 and bath
// temperatures T2 (hot, at L1) and T4 (cold, at L2):
//   I   isochoric heating at L1:    occupations relax to p(2) = p(T2, L1, c)
//   II  adiabatic expansion L1->L2: occupations frozen, work W1 = U3 - U2 < 0
//   III isochoric cooling at L2:    occupations relax to p(4) = p(T4, L2, c)
//   IV  adiabatic compression:      occupations frozen, work W2 = U1 - U4 > 0
// Efficiency (when the cycle runs as an engine) is
//   eta = sum (p2-p4)(E^L1 - E^L2) / sum (p2-p4) E^L1.

namespace betheotto {

struct CycleConfig {
    int n_particles = 2;
    double interaction = 0.0; // c >= 0
    double mass = 1.0;
    double trap_small = 1.0;  // L1
    double trap_large = 2.0;  // L2
    double hot_temperature = 50.0; // T2
    double cold_temperature = 8.0; // T4
    int n_cut = 20;
    SolverOptions solver;

    void validate() const;
    SpectrumParams spectrum_at(double length) const;
};

struct CycleResult {
    double Q1 = 0.0;    // heat absorbed in stroke I (> 0 in engine regime)
    double W1 = 0.0;    // work in stroke II (< 0: exported)
    double Q2 = 0.0;    // heat released in stroke III (< 0)
    double W2 = 0.0;    // work in stroke IV (> 0: performed on the system)
    double W_out = 0.0; // -W1 - W2 = Q1 + Q2
    std::optional<double> efficiency; // defined only when valid_engine
    double eta_numerator = 0.0;       // sum (p2-p4)(E^L1 - E^L2), always reported
    double eta_denominator = 0.0;     // sum (p2-p4) E^L1
    std::array<double, 4> corner_entropy{};  // S1, S2, S3, S4 (S1=S4, S2=S3)
    std::array<double, 4> corner_energy{};   // U1..U4
    bool valid_engine = false;               // Q1 > 0 and W_out > 0
    bool tail_warning = false;               // either bath ensemble near cutoff
};

struct CycleCorner {
    std::string label;                    // "1".."4"
    std::optional<double> temperature;    // baths only: corners 2 and 4
    double entropy = 0.0;
    double internal_energy = 0.0;
};

CycleResult run_cycle(const CycleConfig& cfg);

// S-T diagram corner table. Corners 1 and 3 are reached by adiabats and are
// not equilibrium states, so they carry no temperature.
std::vector<CycleCorner> cycle_corners(const CycleConfig& cfg);

// Per-level ratio lambda = 1 - E^(L2)/E^(L1): the efficiency of a two-level
// engine running on this single level pair.
double level_ratio(const QuantumNumbers& qn, const CycleConfig& cfg);

// Two-level approximation: eta = 1 - Delta_2/Delta_1 with Delta_i the gap
// between the first excited state (1,...,1,2) and the ground state at L_i.
double two_level_efficiency(const CycleConfig& cfg);

// Strong-coupling closed forms; both reject c = 0.
// eta_asym = 1 - ((L1 + 2(N-1)/c)/(L2 + 2(N-1)/c))^2
double asymptotic_efficiency(const CycleConfig& cfg);
// first order in 1/c: 1 - (L1/L2)^2 - 4 L1 (L2-L1)(N-1)/(c L2^3)
double first_order_efficiency(const CycleConfig& cfg);

} // namespace betheotto
