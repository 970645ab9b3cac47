#include "betheotto/ensemble.hpp"

#include "betheotto/parallel.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <mutex>
#include <unordered_map>

namespace betheotto {

namespace {

struct LevelKey {
    int n_particles;
    int n_cut;
    std::uint64_t box_length;
    std::uint64_t interaction;
    std::uint64_t mass;
    std::uint64_t tolerance;

    bool operator==(const LevelKey&) const = default;
};

struct LevelKeyHash {
    std::size_t operator()(const LevelKey& k) const {
        std::uint64_t h = 1469598103934665603ull;
        auto mix = [&h](std::uint64_t v) {
            h ^= v;
            h *= 1099511628211ull;
        };
        mix(static_cast<std::uint64_t>(k.n_particles));
        mix(static_cast<std::uint64_t>(k.n_cut));
        mix(k.box_length);
        mix(k.interaction);
        mix(k.mass);
        mix(k.tolerance);
        return static_cast<std::size_t>(h);
    }
};

LevelKey make_key(const SpectrumParams& p, int n_cut, const SolverOptions& opts) {
    return LevelKey{p.n_particles,
                    n_cut,
                    std::bit_cast<std::uint64_t>(p.box_length),
                    std::bit_cast<std::uint64_t>(p.interaction),
                    std::bit_cast<std::uint64_t>(p.mass),
                    std::bit_cast<std::uint64_t>(opts.tolerance)};
}

struct LevelCache {
    std::mutex mutex;
    std::unordered_map<LevelKey, LevelTable, LevelKeyHash> tables;
    // state enumerations shared across L and c, keyed by (N, n_cut)
    std::unordered_map<std::uint64_t, std::shared_ptr<const std::vector<QuantumNumbers>>> states;
};

LevelCache& cache() {
    static LevelCache instance;
    return instance;
}

std::shared_ptr<const std::vector<QuantumNumbers>> cached_states(int n_particles, int n_cut) {
    const std::uint64_t key =
        (static_cast<std::uint64_t>(n_particles) << 32) | static_cast<std::uint64_t>(n_cut);
    {
        std::lock_guard<std::mutex> lock(cache().mutex);
        auto it = cache().states.find(key);
        if (it != cache().states.end()) return it->second;
    }
    auto fresh =
        std::make_shared<const std::vector<QuantumNumbers>>(enumerate_states(n_particles, n_cut));
    std::lock_guard<std::mutex> lock(cache().mutex);
    auto [it, inserted] = cache().states.emplace(key, fresh);
    return it->second;
}

} // namespace

void EnsembleParams::validate() const {
    spectrum.validate();
    if (!(temperature > 0.0)) throw std::invalid_argument("temperature must be > 0");
    if (n_cut < 1) throw std::invalid_argument("n_cut must be >= 1");
    if (!(tail_warn_tol > 0.0) || !(tail_error_tol >= tail_warn_tol))
        throw std::invalid_argument("tail tolerances must satisfy 0 < warn <= error");
}

double ThermalEnsemble::log_partition_function() const {
    return std::log(partition_function) - energy_shift / temperature;
}

std::vector<std::pair<QuantumNumbers, double>> ThermalEnsemble::level_pairs() const {
    std::vector<std::pair<QuantumNumbers, double>> out;
    out.reserve(levels.size());
    for (std::size_t i = 0; i < levels.size(); ++i)
        out.emplace_back((*levels.states)[i], (*levels.energies)[i]);
    return out;
}

LevelTable compute_levels(const SpectrumParams& p, int n_cut, const SolverOptions& opts) {
    p.validate();
    if (n_cut < 1) throw std::invalid_argument("n_cut must be >= 1");

    const LevelKey key = make_key(p, n_cut, opts);
    {
        std::lock_guard<std::mutex> lock(cache().mutex);
        auto it = cache().tables.find(key);
        if (it != cache().tables.end()) return it->second;
    }

    LevelTable table;
    table.states = cached_states(p.n_particles, n_cut);
    auto energies = std::make_shared<std::vector<double>>(table.states->size(), 0.0);
    const auto& states = *table.states;
    parallel_for(states.size(), [&](std::size_t i) {
        (*energies)[i] = solve_bethe(states[i], p, opts).energy;
    });
    table.energies = std::move(energies);

    std::lock_guard<std::mutex> lock(cache().mutex);
    auto [it, inserted] = cache().tables.emplace(key, table);
    return it->second;
}

ThermalEnsemble boltzmann_ensemble(const LevelTable& levels, double temperature,
                                   double tail_warn_tol, double tail_error_tol) {
    if (!levels.states || !levels.energies || levels.states->size() != levels.energies->size())
        throw std::invalid_argument("level table is empty or misaligned");
    if (!(temperature > 0.0)) throw std::invalid_argument("temperature must be > 0");

    const auto& energy = *levels.energies;
    const std::size_t n = energy.size();

    ThermalEnsemble te;
    te.levels = levels;
    te.temperature = temperature;
    te.energy_shift = *std::min_element(energy.begin(), energy.end());

    te.probabilities.resize(n);
    double z = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double w = std::exp(-(energy[i] - te.energy_shift) / temperature);
        te.probabilities[i] = w;
        z += w;
    }
    te.partition_function = z;

    double u = 0.0;
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double p = te.probabilities[i] / z;
        te.probabilities[i] = p;
        u += p * energy[i];
        if (p > 0.0) s -= p * std::log(p);
    }
    te.internal_energy = u;
    te.entropy = s;

    const std::size_t top =
        static_cast<std::size_t>(std::max_element(energy.begin(), energy.end()) - energy.begin());
    te.tail_probability = te.probabilities[top];
    if (te.tail_probability > tail_error_tol)
        throw UnderResolvedTailError(
            "highest retained level carries probability " + std::to_string(te.tail_probability) +
            " at T = " + std::to_string(temperature) + "; increase n_cut");
    te.tail_warning = te.tail_probability > tail_warn_tol;
    return te;
}

ThermalEnsemble build_ensemble(const EnsembleParams& ep, const SolverOptions& opts) {
    ep.validate();
    const LevelTable table = compute_levels(ep.spectrum, ep.n_cut, opts);
    return boltzmann_ensemble(table, ep.temperature, ep.tail_warn_tol, ep.tail_error_tol);
}

double entropy(const std::vector<double>& probabilities) {
    double s = 0.0;
    for (double p : probabilities) {
        if (p < 0.0) throw std::invalid_argument("negative probability");
        if (p > 0.0) s -= p * std::log(p);
    }
    return s;
}

double entropy(const ThermalEnsemble& te) { return entropy(te.probabilities); }

void clear_level_cache() {
    std::lock_guard<std::mutex> lock(cache().mutex);
    cache().tables.clear();
    cache().states.clear();
}

} // namespace betheotto
