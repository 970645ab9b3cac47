#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

// Bethe-ansatz spectrum of N repulsive bosons in a hard-wall box of size L.
// Units: hbar = 1, k_B = 1. Each eigenstate is labelled by a non-decreasing
// tuple of positive quantum numbers; its wave vectors solve the coupled
// Gaudin equations
//
//   k_i L = pi n_i + sum_{j != i} [ atan(c/(k_i-k_j)) + atan(c/(k_i+k_j)) ]
//
// and the energy is sum_i k_i^2 / (2m).

namespace betheotto {

struct SpectrumParams {
    int n_particles = 1;      // N >= 1
    double box_length = 1.0;  // L > 0
    double interaction = 0.0; // c >= 0 (repulsive)
    double mass = 1.0;        // m > 0

    void validate() const;
};

using QuantumNumbers = std::vector<int>;

struct SolverOptions {
    double tolerance = 1e-10;        // max-norm of the residual
    int max_iterations = 200;
    int max_step_halvings = 40;
    double continuation_start = 1e4; // c_big for the homotopy fallback
    double continuation_ratio = 0.5;
    double continuation_ratio_fine = 0.9;
};

struct BetheSolution {
    std::vector<double> k; // strictly increasing, all positive (c > 0)
    double energy = 0.0;
    double residual_norm = 0.0;
    SpectrumParams params;
    QuantumNumbers quantum_numbers;
    int newton_iterations = 0;
    bool used_continuation = false;
};

class SolverError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class NonConvergenceError : public SolverError {
  public:
    NonConvergenceError(const QuantumNumbers& qn, double c, double best_residual);
    double best_residual = 0.0;
};

class OrderingViolationError : public SolverError {
  public:
    using SolverError::SolverError;
};

// All non-decreasing N-tuples with entries in [1, n_cut], lexicographic.
std::vector<QuantumNumbers> enumerate_states(int n_particles, int n_cut);

// Multiset coefficient C(n_cut + N - 1, N) without enumeration.
std::uint64_t state_count(int n_particles, int n_cut);

void validate_quantum_numbers(const QuantumNumbers& qn, int n_particles);

// Residual of the Gaudin equations in the singularity-free form: the
// difference term atan(c/(k_i-k_j)) is evaluated as
// sign(i-j)*pi/2 - atan((k_i-k_j)/c), which is smooth through k_i -> k_j
// and fixes the branch by index order. Requires strictly increasing k.
std::vector<double> bethe_residual(const std::vector<double>& k, const QuantumNumbers& qn,
                                   const SpectrumParams& p);

// Analytic Jacobian of bethe_residual with respect to k (row-major N*N).
std::vector<double> bethe_jacobian(const std::vector<double>& k, const SpectrumParams& p);

// Damped Newton from the strong-coupling initial guess
// k_i = pi (n_i + i - 1) / (L + 2(N-1)/c), with geometric continuation in c
// from continuation_start as the fallback. c = 0 uses the closed form
// k_i = pi n_i / L (no iteration; equal k for repeated n_i are allowed
// there, the strict-ordering invariant applies to c > 0).
BetheSolution solve_bethe(const QuantumNumbers& qn, const SpectrumParams& p,
                          const SolverOptions& opts = {});
BetheSolution solve_bethe(const QuantumNumbers& qn, const SpectrumParams& p, double tol);

// The fallback path on its own: solve at max(c, continuation_start) and walk
// c down geometrically, reusing each converged root as the next guess.
// solve_bethe calls this when the direct Newton attempt fails.
BetheSolution solve_bethe_via_continuation(const QuantumNumbers& qn, const SpectrumParams& p,
                                           const SolverOptions& opts = {});

// Strong-coupling closed form: (pi^2/2m) sum (n_i+i-1)^2 / (L + 2(N-1)/c)^2.
// Rejects c = 0 (the formula does not reduce to the free-boson energy).
double asymptotic_energy(const QuantumNumbers& qn, const SpectrumParams& p);

// Exact limits bounding every level: E(0) and E(c -> infinity).
double free_boson_energy(const QuantumNumbers& qn, const SpectrumParams& p);
double tonks_girardeau_energy(const QuantumNumbers& qn, const SpectrumParams& p);

std::string format_quantum_numbers(const QuantumNumbers& qn);

} // namespace betheotto
