#include "betheotto/spectrum.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace betheotto {

namespace {

constexpr double kPi = std::numbers::pi;

bool strictly_increasing_positive(const std::vector<double>& k) {
    if (k.empty() || k.front() <= 0.0) return false;
    for (std::size_t i = 1; i < k.size(); ++i)
        if (k[i] <= k[i - 1]) return false;
    return true;
}

double max_abs(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

std::vector<double> tg_guess(const QuantumNumbers& qn, double L, double c) {
    const int n = static_cast<int>(qn.size());
    const double denom = L + 2.0 * (n - 1) / c;
    std::vector<double> k(qn.size());
    for (int i = 0; i < n; ++i) k[i] = kPi * (qn[i] + i) / denom;
    return k;
}

double state_energy(const std::vector<double>& k, double mass) {
    double e = 0.0;
    for (double ki : k) e += ki * ki;
    return e / (2.0 * mass);
}

struct NewtonOutcome {
    bool converged = false;
    bool ordering_failed = false;
    std::vector<double> k;
    double residual = 0.0;
    int iterations = 0;
};

NewtonOutcome newton_solve(std::vector<double> k, const QuantumNumbers& qn,
                           const SpectrumParams& p, const SolverOptions& opts) {
    const int n = p.n_particles;
    NewtonOutcome out;
    std::vector<double> r = bethe_residual(k, qn, p);
    double rnorm = max_abs(r);

    Eigen::MatrixXd jac(n, n);
    Eigen::VectorXd rhs(n), step(n);
    std::vector<double> trial(k.size());

    for (int it = 0; it < opts.max_iterations; ++it) {
        if (rnorm <= opts.tolerance) {
            out.converged = true;
            break;
        }
        const std::vector<double> jflat = bethe_jacobian(k, p);
        for (int i = 0; i < n; ++i) {
            rhs(i) = -r[i];
            for (int j = 0; j < n; ++j) jac(i, j) = jflat[static_cast<std::size_t>(i) * n + j];
        }
        step = jac.partialPivLu().solve(rhs);

        double alpha = 1.0;
        bool accepted = false;
        bool last_rejection_was_ordering = false;
        for (int h = 0; h <= opts.max_step_halvings; ++h, alpha *= 0.5) {
            for (int i = 0; i < n; ++i) trial[i] = k[i] + alpha * step(i);
            if (!strictly_increasing_positive(trial)) {
                last_rejection_was_ordering = true;
                continue;
            }
            std::vector<double> rt = bethe_residual(trial, qn, p);
            const double tnorm = max_abs(rt);
            if (tnorm < rnorm) {
                k = trial;
                r = std::move(rt);
                rnorm = tnorm;
                accepted = true;
                break;
            }
            last_rejection_was_ordering = false;
        }
        out.iterations = it + 1;
        if (!accepted) {
            out.ordering_failed = last_rejection_was_ordering;
            break;
        }
    }
    if (!out.converged && rnorm <= opts.tolerance) out.converged = true;
    out.k = std::move(k);
    out.residual = rnorm;
    return out;
}

} // namespace

void SpectrumParams::validate() const {
    if (n_particles < 1) throw std::invalid_argument("n_particles must be >= 1");
    if (!(box_length > 0.0)) throw std::invalid_argument("box_length must be > 0");
    if (!(interaction >= 0.0)) throw std::invalid_argument("interaction must be >= 0 (repulsive)");
    if (!(mass > 0.0)) throw std::invalid_argument("mass must be > 0");
}

NonConvergenceError::NonConvergenceError(const QuantumNumbers& qn, double c, double best)
    : SolverError("Bethe solver did not converge for state " + format_quantum_numbers(qn) +
                  " at c = " + std::to_string(c) +
                  " (best residual " + std::to_string(best) + ")"),
      best_residual(best) {}

std::vector<QuantumNumbers> enumerate_states(int n_particles, int n_cut) {
    if (n_particles < 1) throw std::invalid_argument("n_particles must be >= 1");
    if (n_cut < 1) throw std::invalid_argument("n_cut must be >= 1");
    std::vector<QuantumNumbers> states;
    states.reserve(state_count(n_particles, n_cut));
    QuantumNumbers qn(n_particles, 1);
    for (;;) {
        states.push_back(qn);
        int i = n_particles - 1;
        while (i >= 0 && qn[i] == n_cut) --i;
        if (i < 0) break;
        const int v = qn[i] + 1;
        for (int j = i; j < n_particles; ++j) qn[j] = v;
    }
    return states;
}

std::uint64_t state_count(int n_particles, int n_cut) {
    if (n_particles < 1 || n_cut < 1) throw std::invalid_argument("bad enumeration bounds");
    // C(n_cut + N - 1, N), computed with stepwise division to stay exact
    std::uint64_t result = 1;
    for (int i = 1; i <= n_particles; ++i) {
        result = result * static_cast<std::uint64_t>(n_cut - 1 + i) / static_cast<std::uint64_t>(i);
    }
    return result;
}

void validate_quantum_numbers(const QuantumNumbers& qn, int n_particles) {
    if (static_cast<int>(qn.size()) != n_particles)
        throw std::invalid_argument("quantum-number tuple length must equal n_particles");
    int prev = 1;
    for (int n : qn) {
        if (n < prev) throw std::invalid_argument("quantum numbers must be non-decreasing and >= 1");
        prev = n;
    }
}

std::vector<double> bethe_residual(const std::vector<double>& k, const QuantumNumbers& qn,
                                   const SpectrumParams& p) {
    p.validate();
    const int n = p.n_particles;
    validate_quantum_numbers(qn, n);
    if (static_cast<int>(k.size()) != n) throw std::invalid_argument("k has wrong length");
    if (!(p.interaction > 0.0))
        throw std::invalid_argument("bethe_residual requires c > 0 (c = 0 is closed-form)");
    if (!strictly_increasing_positive(k))
        throw OrderingViolationError("wave vectors must satisfy 0 < k_1 < ... < k_N");

    const double L = p.box_length;
    const double c = p.interaction;
    std::vector<double> r(k.size());
    for (int i = 0; i < n; ++i) {
        double phase = 0.0;
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            const double d = k[i] - k[j];
            const double s = k[i] + k[j];
            // atan(c/d) = sign(d) pi/2 - atan(d/c); sign fixed by index order
            const double branch = (i > j) ? 0.5 * kPi : -0.5 * kPi;
            phase += branch - std::atan(d / c) + std::atan(c / s);
        }
        r[i] = k[i] * L - kPi * qn[i] - phase;
    }
    return r;
}

std::vector<double> bethe_jacobian(const std::vector<double>& k, const SpectrumParams& p) {
    p.validate();
    const int n = p.n_particles;
    if (static_cast<int>(k.size()) != n) throw std::invalid_argument("k has wrong length");
    if (!(p.interaction > 0.0)) throw std::invalid_argument("bethe_jacobian requires c > 0");
    if (!strictly_increasing_positive(k))
        throw OrderingViolationError("wave vectors must satisfy 0 < k_1 < ... < k_N");

    const double L = p.box_length;
    const double c = p.interaction;
    std::vector<double> jac(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) {
        double diag = L;
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            const double d = k[i] - k[j];
            const double s = k[i] + k[j];
            const double wd = c / (c * c + d * d);
            const double ws = c / (c * c + s * s);
            diag += wd + ws;
            jac[static_cast<std::size_t>(i) * n + j] = -wd + ws;
        }
        jac[static_cast<std::size_t>(i) * n + i] = diag;
    }
    return jac;
}

BetheSolution solve_bethe(const QuantumNumbers& qn, const SpectrumParams& p,
                          const SolverOptions& opts) {
    p.validate();
    validate_quantum_numbers(qn, p.n_particles);
    if (!(opts.tolerance > 0.0)) throw std::invalid_argument("tolerance must be > 0");

    BetheSolution sol;
    sol.params = p;
    sol.quantum_numbers = qn;

    const double L = p.box_length;
    const double c = p.interaction;

    if (c == 0.0) {
        sol.k.resize(qn.size());
        for (std::size_t i = 0; i < qn.size(); ++i) sol.k[i] = kPi * qn[i] / L;
        sol.energy = state_energy(sol.k, p.mass);
        sol.residual_norm = 0.0;
        return sol;
    }

    // Direct Newton from the strong-coupling guess covers the whole repulsive
    // range in practice; continuation is the safety net.
    NewtonOutcome direct = newton_solve(tg_guess(qn, L, c), qn, p, opts);
    if (direct.converged) {
        sol.k = std::move(direct.k);
        sol.energy = state_energy(sol.k, p.mass);
        sol.residual_norm = direct.residual;
        sol.newton_iterations = direct.iterations;
        return sol;
    }

    try {
        return solve_bethe_via_continuation(qn, p, opts);
    } catch (const SolverError&) {
        // report the direct attempt; it carries the honest best residual
        if (direct.ordering_failed)
            throw OrderingViolationError(
                "damped Newton could not keep k strictly increasing for state " +
                format_quantum_numbers(qn) + " at c = " + std::to_string(c));
        throw NonConvergenceError(qn, c, direct.residual);
    }
}

BetheSolution solve_bethe_via_continuation(const QuantumNumbers& qn, const SpectrumParams& p,
                                           const SolverOptions& opts) {
    p.validate();
    validate_quantum_numbers(qn, p.n_particles);
    if (!(p.interaction > 0.0))
        throw std::invalid_argument("continuation requires c > 0");

    const double L = p.box_length;
    const double c = p.interaction;
    for (const double ratio : {opts.continuation_ratio, opts.continuation_ratio_fine}) {
        double cc = std::max(c, opts.continuation_start);
        SpectrumParams q = p;
        q.interaction = cc;
        NewtonOutcome stage = newton_solve(tg_guess(qn, L, cc), qn, q, opts);
        if (!stage.converged) continue;
        bool ok = true;
        int iterations = stage.iterations;
        while (cc > c) {
            cc = std::max(c, cc * ratio);
            q.interaction = cc;
            stage = newton_solve(std::move(stage.k), qn, q, opts);
            iterations += stage.iterations;
            if (!stage.converged) {
                ok = false;
                break;
            }
        }
        if (ok) {
            BetheSolution sol;
            sol.params = p;
            sol.quantum_numbers = qn;
            sol.k = std::move(stage.k);
            sol.energy = state_energy(sol.k, p.mass);
            sol.residual_norm = stage.residual;
            sol.newton_iterations = iterations;
            sol.used_continuation = true;
            return sol;
        }
    }
    throw NonConvergenceError(qn, c, std::numeric_limits<double>::quiet_NaN());
}

BetheSolution solve_bethe(const QuantumNumbers& qn, const SpectrumParams& p, double tol) {
    SolverOptions opts;
    opts.tolerance = tol;
    return solve_bethe(qn, p, opts);
}

double asymptotic_energy(const QuantumNumbers& qn, const SpectrumParams& p) {
    p.validate();
    validate_quantum_numbers(qn, p.n_particles);
    if (!(p.interaction > 0.0))
        throw std::invalid_argument("asymptotic_energy requires c > 0");
    const int n = p.n_particles;
    const double denom = p.box_length + 2.0 * (n - 1) / p.interaction;
    double s = 0.0;
    for (int i = 0; i < n; ++i) {
        const double v = qn[i] + i; // n_i + i - 1 with 1-based i
        s += v * v;
    }
    return kPi * kPi * s / (2.0 * p.mass * denom * denom);
}

double free_boson_energy(const QuantumNumbers& qn, const SpectrumParams& p) {
    p.validate();
    validate_quantum_numbers(qn, p.n_particles);
    double s = 0.0;
    for (int ni : qn) s += static_cast<double>(ni) * ni;
    return kPi * kPi * s / (2.0 * p.mass * p.box_length * p.box_length);
}

double tonks_girardeau_energy(const QuantumNumbers& qn, const SpectrumParams& p) {
    p.validate();
    validate_quantum_numbers(qn, p.n_particles);
    double s = 0.0;
    for (std::size_t i = 0; i < qn.size(); ++i) {
        const double v = qn[i] + static_cast<double>(i);
        s += v * v;
    }
    return kPi * kPi * s / (2.0 * p.mass * p.box_length * p.box_length);
}

std::string format_quantum_numbers(const QuantumNumbers& qn) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < qn.size(); ++i) {
        if (i) os << ',';
        os << qn[i];
    }
    os << ')';
    return os.str();
}

} // namespace betheotto
