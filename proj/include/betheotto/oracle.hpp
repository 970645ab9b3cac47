#pragma once

#include "betheotto/spectrum.hpp"

#include <vector>

// Independent validators for the Newton solver. Both are deliberately slow
// and simple: a derivative-free nested bisection for two particles, and a
// direct diagonalization of the contact interaction in the symmetrized
// two-boson box basis. They share no solver code with the production path.

namespace betheotto {

class BracketFailureError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class DiagConvergenceError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Nested 1D bisections for N = 2, c > 0. The inner solve finds k1 from the
// first Gaudin equation at fixed k2 on the bracket pi(n1 -/+ 1/2)/L, where
// the residual provably changes sign; the outer bisection closes the second
// equation on [pi n2/L, pi (n2+1)/L].
BetheSolution bisection_bethe_2p(const QuantumNumbers& qn, const SpectrumParams& p,
                                 double tol = 1e-12);

// Symmetrized two-boson sine basis |a <= b|, size M(M+1)/2.
struct DiagBasis {
    int single_particle_cutoff = 0;
    std::vector<std::pair<int, int>> pairs;
};

DiagBasis make_diag_basis(int cutoff);

// Exact density-density overlap of four box modes,
// integral phi_a phi_b phi_c phi_d over the box, by product-to-sum reduction.
double delta_overlap(int a, int b, int c, int d, double box_length);

// Lowest n_levels eigenvalues of H = kinetic + c * delta interaction in the
// truncated symmetric sector, ascending. Truncation error decays like 1/M
// (the interaction builds a cusp), so certify with M-doubling.
std::vector<double> exact_diag_2p(const SpectrumParams& p, int cutoff, int n_levels);

struct CertifiedDiag {
    std::vector<double> energies;            // at cutoff M
    std::vector<double> certified_rel_error; // 2 * |E_M - E_{M/2}| / E_M per level
};

// Runs the diagonalization at M/2 and M and reports a per-level certified
// relative error (twice the M-doubling shift; the shift itself equals the
// residual truncation error for a 1/M law). Throws DiagConvergenceError if
// the certificate exceeds declared_tol.
CertifiedDiag certified_exact_diag_2p(const SpectrumParams& p, int cutoff, int n_levels,
                                      double declared_tol);

} // namespace betheotto
