#pragma once

#include "betheotto/spectrum.hpp"

#include <memory>
#include <utility>
#include <vector>

// Canonical ensembles over the enumerated Bethe spectrum:
//   p_n = exp(-E_n/T) / Z,   Z = sum exp(-E_n/T),
//   U = sum p E,             S = -sum p ln p   (k_B = 1).
// Weights are computed with the ground-state energy subtracted so that low
// temperatures (T ~ 0.5 appears in the figures) do not underflow.

namespace betheotto {

struct EnsembleParams {
    double temperature = 1.0; // T > 0
    SpectrumParams spectrum;
    int n_cut = 20;
    double tail_warn_tol = 1e-8;  // "cutoff converged" threshold
    double tail_error_tol = 1e-4; // above this the cutoff is unusable

    void validate() const;
};

// Aligned (states, energies) for one (SpectrumParams, n_cut). Shared pointers
// come from a process-wide cache keyed by the exact parameter values, so
// repeated sweeps at the same spectrum reuse the solves.
struct LevelTable {
    std::shared_ptr<const std::vector<QuantumNumbers>> states;
    std::shared_ptr<const std::vector<double>> energies;

    std::size_t size() const { return states ? states->size() : 0; }
};

struct ThermalEnsemble {
    LevelTable levels;
    std::vector<double> probabilities; // aligned with levels, sums to 1
    double partition_function = 0.0;   // shifted form: sum exp(-(E - shift)/T)
    double energy_shift = 0.0;         // ground-state energy subtracted above
    double internal_energy = 0.0;
    double entropy = 0.0;
    double temperature = 0.0;
    double tail_probability = 0.0; // occupation of the highest retained level
    bool tail_warning = false;     // tail_probability in (warn_tol, error_tol]

    // True partition function is partition_function * exp(-energy_shift/T);
    // reported in log form to stay finite at low T.
    double log_partition_function() const;

    std::vector<std::pair<QuantumNumbers, double>> level_pairs() const;
};

class UnderResolvedTailError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Solves (or fetches from cache) all levels of the spectrum up to n_cut.
// Solving different states runs in parallel; the stored order is the
// lexicographic enumeration order regardless of thread count.
LevelTable compute_levels(const SpectrumParams& p, int n_cut, const SolverOptions& opts = {});

// Boltzmann occupations over an existing table (used by the Otto cycle to
// pair occupations at one trap size with energies at another).
ThermalEnsemble boltzmann_ensemble(const LevelTable& levels, double temperature,
                                   double tail_warn_tol = 1e-8, double tail_error_tol = 1e-4);

ThermalEnsemble build_ensemble(const EnsembleParams& ep, const SolverOptions& opts = {});

// Shannon entropy of the occupations; p = 0 terms contribute zero.
double entropy(const ThermalEnsemble& te);
double entropy(const std::vector<double>& probabilities);

// Drops every cached level table (mostly for tests and memory hygiene).
void clear_level_cache();

} // namespace betheotto
