#include "betheotto/oracle.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <sstream>

namespace betheotto {

namespace {

constexpr double kPi = std::numbers::pi;

// The oracle evaluates the two Gaudin equations on its own, sharing nothing
// with the Newton path. atan(c/d) is taken as sign(i-j) pi/2 - atan(d/c):
// identical to atan(c/d) away from d = 0 and fixed by index order at the
// crossing, which is what makes the brackets below provable.
double residual_1(double k1, double k2, int n1, double L, double c) {
    const double phase =
        -0.5 * kPi - std::atan((k1 - k2) / c) + std::atan(c / (k1 + k2));
    return k1 * L - kPi * n1 - phase;
}

double residual_2(double k1, double k2, int n2, double L, double c) {
    const double phase =
        0.5 * kPi - std::atan((k2 - k1) / c) + std::atan(c / (k1 + k2));
    return k2 * L - kPi * n2 - phase;
}

// Monotone in k1 at fixed k2 (the derivative is L plus positive Lorentzians),
// with guaranteed opposite signs at the ends of [pi(n1-1/2)/L, pi(n1+1/2)/L].
double inner_solve_k1(double k2, int n1, double L, double c) {
    double lo = kPi * (n1 - 0.5) / L;
    double hi = kPi * (n1 + 0.5) / L;
    const double rlo = residual_1(lo, k2, n1, L, c);
    const double rhi = residual_1(hi, k2, n1, L, c);
    if (!(rlo < 0.0) || !(rhi > 0.0)) {
        std::ostringstream os;
        os << "inner bracket lost its sign change: r(" << lo << ") = " << rlo << ", r(" << hi
           << ") = " << rhi;
        throw BracketFailureError(os.str());
    }
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (residual_1(mid, k2, n1, L, c) < 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace

BetheSolution bisection_bethe_2p(const QuantumNumbers& qn, const SpectrumParams& p, double tol) {
    p.validate();
    if (p.n_particles != 2) throw std::invalid_argument("bisection oracle handles N = 2 only");
    validate_quantum_numbers(qn, 2);
    if (!(p.interaction > 0.0)) throw std::invalid_argument("bisection oracle requires c > 0");
    if (!(tol > 0.0)) throw std::invalid_argument("tol must be > 0");

    const double L = p.box_length;
    const double c = p.interaction;
    const int n1 = qn[0];
    const int n2 = qn[1];

    double lo = kPi * n2 / L;
    double hi = kPi * (n2 + 1) / L;
    {
        const double rlo = residual_2(inner_solve_k1(lo, n1, L, c), lo, n2, L, c);
        const double rhi = residual_2(inner_solve_k1(hi, n1, L, c), hi, n2, L, c);
        if (!(rlo < 0.0) || !(rhi > 0.0)) {
            std::ostringstream os;
            os << "outer bracket [" << lo << ", " << hi << "] has residuals (" << rlo << ", "
               << rhi << ") of equal sign";
            throw BracketFailureError(os.str());
        }
    }
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (residual_2(inner_solve_k1(mid, n1, L, c), mid, n2, L, c) < 0.0)
            lo = mid;
        else
            hi = mid;
    }

    const double k2 = 0.5 * (lo + hi);
    const double k1 = inner_solve_k1(k2, n1, L, c);
    const double r1 = residual_1(k1, k2, n1, L, c);
    const double r2 = residual_2(k1, k2, n2, L, c);
    const double rnorm = std::max(std::abs(r1), std::abs(r2));
    if (rnorm > tol) {
        std::ostringstream os;
        os << "bisection stalled at residual " << rnorm << " > tol " << tol << " for state "
           << format_quantum_numbers(qn);
        throw BracketFailureError(os.str());
    }

    BetheSolution sol;
    sol.k = {k1, k2};
    sol.energy = (k1 * k1 + k2 * k2) / (2.0 * p.mass);
    sol.residual_norm = rnorm;
    sol.params = p;
    sol.quantum_numbers = qn;
    return sol;
}

DiagBasis make_diag_basis(int cutoff) {
    if (cutoff < 2) throw std::invalid_argument("diagonalization cutoff must be >= 2");
    DiagBasis basis;
    basis.single_particle_cutoff = cutoff;
    basis.pairs.reserve(static_cast<std::size_t>(cutoff) * (cutoff + 1) / 2);
    for (int a = 1; a <= cutoff; ++a)
        for (int b = a; b <= cutoff; ++b) basis.pairs.emplace_back(a, b);
    return basis;
}

double delta_overlap(int a, int b, int c, int d, double box_length) {
    // 4/L^2 * int sin(a u) sin(b u) sin(c u) sin(d u) dx with u = pi x / L:
    // expanding the sine products leaves indicator terms on index sums.
    const int al = a - b, be = a + b, ga = c - d, de = c + d;
    int t = 0;
    t += (al == ga) + (al == -ga) - (al == de) - (al == -de);
    t += -(be == ga) - (be == -ga) + (be == de) + (be == -de);
    return t / (2.0 * box_length);
}

std::vector<double> exact_diag_2p(const SpectrumParams& p, int cutoff, int n_levels) {
    p.validate();
    if (p.n_particles != 2) throw std::invalid_argument("exact diagonalization handles N = 2 only");
    const DiagBasis basis = make_diag_basis(cutoff);
    const auto n = static_cast<Eigen::Index>(basis.pairs.size());
    if (n_levels < 1 || n_levels > n)
        throw std::invalid_argument("n_levels out of range for this basis");

    const double L = p.box_length;
    const double m = p.mass;
    const double g = p.interaction / m;
    const double kin = kPi * kPi / (2.0 * m * L * L);

    Eigen::MatrixXd H = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto [a, b] = basis.pairs[static_cast<std::size_t>(i)];
        H(i, i) = kin * (a * a + b * b);
        if (g == 0.0) continue;
        const double ni = (a == b) ? 2.0 : 1.0;
        for (Eigen::Index j = i; j < n; ++j) {
            const auto [c, d] = basis.pairs[static_cast<std::size_t>(j)];
            const double nj = (c == d) ? 2.0 : 1.0;
            const double v = g * 2.0 * delta_overlap(a, b, c, d, L) / std::sqrt(ni * nj);
            H(i, j) += v;
            if (j != i) H(j, i) += v;
        }
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(H, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("eigenvalue decomposition failed");
    const auto& ev = solver.eigenvalues(); // ascending
    return std::vector<double>(ev.data(), ev.data() + n_levels);
}

CertifiedDiag certified_exact_diag_2p(const SpectrumParams& p, int cutoff, int n_levels,
                                      double declared_tol) {
    if (cutoff < 4 || cutoff % 2 != 0)
        throw std::invalid_argument("certification needs an even cutoff >= 4");
    const std::vector<double> coarse = exact_diag_2p(p, cutoff / 2, n_levels);
    CertifiedDiag out;
    out.energies = exact_diag_2p(p, cutoff, n_levels);
    out.certified_rel_error.resize(out.energies.size());
    for (std::size_t i = 0; i < out.energies.size(); ++i) {
        const double shift = std::abs(out.energies[i] - coarse[i]) / std::abs(out.energies[i]);
        out.certified_rel_error[i] = 2.0 * shift;
        if (out.certified_rel_error[i] > declared_tol) {
            std::ostringstream os;
            os << "level " << i << " moved by " << shift << " when doubling the cutoff to "
               << cutoff << " (declared tolerance " << declared_tol << ")";
            throw DiagConvergenceError(os.str());
        }
    }
    return out;
}

} // namespace betheotto
