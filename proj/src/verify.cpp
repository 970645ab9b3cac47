#include "betheotto/verify.hpp"

#include "betheotto/ensemble.hpp"
#include "betheotto/oracle.hpp"
#include "betheotto/otto.hpp"
#include "betheotto/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

namespace betheotto {

namespace {

constexpr double kPi = std::numbers::pi;

struct Failure {
    std::ostringstream message;
    bool any = false;

    template <typename T> void record(const T& what) {
        if (any) message << "; ";
        message << what;
        any = true;
    }
};

std::string describe(double value) {
    std::ostringstream os;
    os.precision(6);
    os << value;
    return os.str();
}

// ---- jacobian vs central finite differences --------------------------------

CheckResult check_jacobian_fd(const VerifyOptions& opts) {
    CheckResult res{"jacobian-vs-finite-differences", true, {}};
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> base(0.5, 1.5);
    std::uniform_real_distribution<double> gap(0.2, 1.0);
    std::uniform_real_distribution<double> logc(std::log(1e-2), std::log(1e2));

    const double h = 1e-6;
    double worst = 0.0;
    const std::vector<int> sizes = opts.quick ? std::vector<int>{2} : std::vector<int>{1, 2, 3, 4};
    for (int n : sizes) {
        for (int trial = 0; trial < 20; ++trial) {
            SpectrumParams p{n, 1.0, std::exp(logc(rng)), 1.0};
            std::vector<double> k(static_cast<std::size_t>(n));
            k[0] = base(rng);
            for (int i = 1; i < n; ++i) k[static_cast<std::size_t>(i)] = k[i - 1] + gap(rng);
            QuantumNumbers qn(static_cast<std::size_t>(n), 1); // residual shape ignores qn gaps

            std::vector<double> jac = bethe_jacobian(k, p);
            if (opts.inject_bad_jacobian) {
                const std::size_t target = n > 1 ? 1 : 0;
                jac[target] = -jac[target]; // wrong sign, the FD check must catch it
            }
            for (int j = 0; j < n; ++j) {
                std::vector<double> kp = k, km = k;
                kp[static_cast<std::size_t>(j)] += h;
                km[static_cast<std::size_t>(j)] -= h;
                const auto rp = bethe_residual(kp, qn, p);
                const auto rm = bethe_residual(km, qn, p);
                for (int i = 0; i < n; ++i) {
                    const double fd = (rp[static_cast<std::size_t>(i)] - rm[static_cast<std::size_t>(i)]) / (2.0 * h);
                    worst = std::max(worst,
                                     std::abs(fd - jac[static_cast<std::size_t>(i) * n + j]));
                }
            }
        }
    }
    res.passed = worst < 1e-6;
    res.detail = "max |J - FD| = " + describe(worst) + " (tol 1e-6, h = 1e-6)";
    return res;
}

// ---- closed forms and limits ------------------------------------------------

CheckResult check_closed_forms(const VerifyOptions&) {
    CheckResult res{"closed-form-limits", true, {}};
    Failure fail;

    {
        const SpectrumParams p{2, 1.0, 0.0, 1.0};
        const BetheSolution sol = solve_bethe({1, 2}, p, 1e-10);
        const double expected = 5.0 * kPi * kPi / 2.0;
        if (std::abs(sol.energy - expected) > 1e-12 * expected)
            fail.record("c=0 energy of (1,2) off: " + describe(sol.energy));
        if (std::abs(sol.k[0] - kPi) > 1e-14 || std::abs(sol.k[1] - 2 * kPi) > 1e-14)
            fail.record("c=0 wave vectors are not pi n / L");
    }
    {
        const SpectrumParams p{2, 1.0, 1e6, 1.0};
        const BetheSolution sol = solve_bethe({1, 1}, p, 1e-10);
        const double denom = 1.0 + 2e-6;
        if (std::abs(sol.k[0] - kPi / denom) > 1e-4 || std::abs(sol.k[1] - 2 * kPi / denom) > 1e-4)
            fail.record("c=1e6 wave vectors stray from the fermionized closed form");
        // the strong-coupling closed form should nearly solve the equations
        std::vector<double> guess = {kPi / denom, 2 * kPi / denom};
        const auto r = bethe_residual(guess, {1, 1}, p);
        if (std::max(std::abs(r[0]), std::abs(r[1])) > 1e-4)
            fail.record("asymptotic root residual too large");
    }
    {
        const SpectrumParams p{2, 1.0, 4.0, 1.0};
        const double expected = 10.0 * kPi * kPi / (2.0 * 1.5 * 1.5);
        if (std::abs(asymptotic_energy({1, 2}, p) - expected) > 1e-12 * expected)
            fail.record("asymptotic_energy arithmetic mismatch");
    }

    res.passed = !fail.any;
    res.detail = fail.any ? fail.message.str() : "free, fermionized and asymptotic forms agree";
    return res;
}

// ---- solver sanity over the sampled spectrum --------------------------------

CheckResult check_solver_basics(const VerifyOptions& opts) {
    CheckResult res{"solver-spectrum-sanity", true, {}};
    Failure fail;
    const std::vector<int> sizes = opts.quick ? std::vector<int>{2} : std::vector<int>{2, 3};
    const std::vector<double> cs = {1e-2, 1e-1, 1.0, 10.0, 100.0, 1e4};
    const SolverOptions solver;

    int solves = 0;
    for (int n : sizes) {
        const auto states = enumerate_states(n, 6);
        for (double c : cs) {
            const SpectrumParams p{n, 1.0, c, 1.0};
            for (const auto& qn : states) {
                const BetheSolution sol = solve_bethe(qn, p, solver);
                ++solves;
                if (sol.residual_norm > solver.tolerance)
                    fail.record("residual above tolerance for " + format_quantum_numbers(qn));
                for (std::size_t i = 0; i < sol.k.size(); ++i) {
                    if (sol.k[i] <= 0.0 || (i > 0 && sol.k[i] <= sol.k[i - 1])) {
                        fail.record("ordering violated for " + format_quantum_numbers(qn) +
                                    " at c = " + describe(c));
                        break;
                    }
                }
                const double lo = free_boson_energy(qn, p);
                const double hi = tonks_girardeau_energy(qn, p);
                if (sol.energy < lo - 1e-10 * hi || sol.energy > hi + 1e-10 * hi)
                    fail.record("energy outside [free, Tonks-Girardeau] for " +
                                format_quantum_numbers(qn) + " at c = " + describe(c));
            }
        }
    }
    res.passed = !fail.any;
    res.detail = fail.any ? fail.message.str()
                          : std::to_string(solves) + " solves converged, ordered and bounded";
    return res;
}

CheckResult check_monotonicity(const VerifyOptions& opts) {
    CheckResult res{"level-monotonicity-in-c", true, {}};
    Failure fail;
    const std::vector<QuantumNumbers> states2 = {{1, 1}, {1, 2}, {2, 3}};
    const std::vector<QuantumNumbers> states3 = {{1, 1, 1}, {1, 2, 4}};
    std::vector<QuantumNumbers> states = states2;
    if (!opts.quick) states.insert(states.end(), states3.begin(), states3.end());

    std::vector<double> cs;
    for (double c = 1e-2; c <= 1e4 * 1.0000001; c *= std::sqrt(10.0)) cs.push_back(c);

    for (const auto& qn : states) {
        const int n = static_cast<int>(qn.size());
        double prev = free_boson_energy(qn, SpectrumParams{n, 1.0, 0.0, 1.0});
        for (double c : cs) {
            const double e = solve_bethe(qn, SpectrumParams{n, 1.0, c, 1.0}, 1e-10).energy;
            if (e + 1e-12 * std::abs(e) < prev)
                fail.record("energy decreased in c for " + format_quantum_numbers(qn) + " near c = " +
                            describe(c));
            prev = e;
        }
    }
    res.passed = !fail.any;
    res.detail =
        fail.any ? fail.message.str() : "repulsion only raises levels along the sampled c grid";
    return res;
}

CheckResult check_scaling_covariance(const VerifyOptions&) {
    CheckResult res{"scaling-covariance", true, {}};
    Failure fail;
    const double s = 2.0;
    for (double c : {0.1, 1.0, 10.0}) {
        for (const QuantumNumbers& qn : {QuantumNumbers{1, 1}, QuantumNumbers{1, 3}}) {
            const BetheSolution a = solve_bethe(qn, SpectrumParams{2, 1.0, c, 1.0}, 1e-12);
            const BetheSolution b = solve_bethe(qn, SpectrumParams{2, s, c / s, 1.0}, 1e-12);
            for (std::size_t i = 0; i < a.k.size(); ++i)
                if (std::abs(b.k[i] - a.k[i] / s) > 1e-9 * a.k[i])
                    fail.record("wave vectors break k -> k/s for " + format_quantum_numbers(qn));
            if (std::abs(b.energy - a.energy / (s * s)) > 1e-9 * a.energy)
                fail.record("energies break E -> E/s^2 for " + format_quantum_numbers(qn));
        }
    }
    res.passed = !fail.any;
    res.detail = fail.any ? fail.message.str() : "(L, c) -> (2L, c/2) rescales k and E exactly";
    return res;
}

CheckResult check_asymptotic_energy(const VerifyOptions& opts) {
    CheckResult res{"strong-coupling-energy", true, {}};
    Failure fail;
    const int n_cut = opts.quick ? 10 : 20;
    const auto states = enumerate_states(2, n_cut);
    // the residual error of the closed form falls like 1/c; the prefactor
    // grows with the level index, so the bound is checked per coupling
    double worst_scaled = 0.0;
    for (double c : {100.0, 1e3, 1e4}) {
        const SpectrumParams p{2, 1.0, c, 1.0};
        double worst = 0.0;
        for (const auto& qn : states) {
            const double exact = solve_bethe(qn, p, 1e-10).energy;
            const double asym = asymptotic_energy(qn, p);
            worst = std::max(worst, std::abs(asym - exact) / exact);
        }
        if (worst * c >= 2.0)
            fail.record("asymptotic energy off by " + describe(worst) + " at c = " + describe(c));
        worst_scaled = std::max(worst_scaled, worst * c);
    }
    res.passed = !fail.any;
    res.detail = fail.any ? fail.message.str()
                          : "relative deviation <= " + describe(worst_scaled) +
                                "/c across the full table (tol 2/c)";
    return res;
}

// ---- ensembles ---------------------------------------------------------------

CheckResult check_ensemble_basics(const VerifyOptions&) {
    CheckResult res{"ensemble-normalization-and-free-limit", true, {}};
    Failure fail;

    for (double t : {0.5, 8.0, 50.0}) {
        EnsembleParams ep;
        ep.temperature = t;
        ep.spectrum = SpectrumParams{2, 1.0, 1.0, 1.0};
        ep.n_cut = 20;
        const ThermalEnsemble te = build_ensemble(ep);
        double total = 0.0;
        for (double p : te.probabilities) total += p;
        if (std::abs(total - 1.0) > 1e-12)
            fail.record("normalization off by " + describe(total - 1.0) + " at T = " + describe(t));
        if (std::abs(entropy(te) - te.entropy) > 1e-13)
            fail.record("entropy op disagrees with the stored field");
    }

    { // c = 0 closed-form double sum (L = 1, m = 1)
        EnsembleParams ep;
        ep.temperature = 8.0;
        ep.spectrum = SpectrumParams{2, 1.0, 0.0, 1.0};
        ep.n_cut = 20;
        const ThermalEnsemble te = build_ensemble(ep);
        double direct = 0.0;
        for (int n1 = 1; n1 <= ep.n_cut; ++n1)
            for (int n2 = n1; n2 <= ep.n_cut; ++n2)
                direct += std::exp(-kPi * kPi * (n1 * n1 + n2 * n2) / (2.0 * ep.temperature));
        const double z_true = te.partition_function * std::exp(-te.energy_shift / ep.temperature);
        if (std::abs(z_true - direct) > 1e-12 * direct)
            fail.record("free-boson partition function off by " +
                        describe((z_true - direct) / direct));
    }

    { // T -> 0: the ground state owns the ensemble
        EnsembleParams ep;
        ep.temperature = 1e-6;
        ep.spectrum = SpectrumParams{2, 1.0, 1.0, 1.0};
        ep.n_cut = 8;
        const ThermalEnsemble te = build_ensemble(ep);
        if (te.probabilities[0] < 1.0 - 1e-9) fail.record("ground occupation below 1 - 1e-9 at T = 1e-6");
        if (te.entropy > 1e-8) fail.record("entropy above 1e-8 at T = 1e-6");
    }

    { // S and U non-decreasing in T
        double prev_u = -std::numeric_limits<double>::infinity();
        double prev_s = -std::numeric_limits<double>::infinity();
        for (double t : {1.0, 2.0, 5.0, 10.0, 20.0, 50.0}) {
            EnsembleParams ep;
            ep.temperature = t;
            ep.spectrum = SpectrumParams{2, 1.0, 1.0, 1.0};
            ep.n_cut = 20;
            const ThermalEnsemble te = build_ensemble(ep);
            if (te.internal_energy < prev_u) fail.record("U decreased in T at T = " + describe(t));
            if (te.entropy < prev_s) fail.record("S decreased in T at T = " + describe(t));
            prev_u = te.internal_energy;
            prev_s = te.entropy;
        }
    }

    res.passed = !fail.any;
    res.detail = fail.any ? fail.message.str()
                          : "normalized, matches the free-boson sum, monotone in T";
    return res;
}

CheckResult check_cutoff_stability(const VerifyOptions&) {
    CheckResult res{"cutoff-stability", true, {}};
    Failure fail;

    // The four (T, L) corners actually visited by the stock cycles stay
    // converged at n_cut = 20 to far better than 1e-6. The hottest corner of
    // the T2 modulation (T = 250 in the small trap) genuinely carries ~1e-3
    // relative truncation at this cutoff, so it gets an honest looser bound.
    struct Corner {
        double t, length, tol;
    };
    const std::vector<Corner> corners = {
        {50.0, 1.0, 1e-6}, {8.0, 2.0, 1e-6}, {2.5, 1.0, 1e-6}, {0.5, 2.0, 1e-6}, {250.0, 1.0, 2e-3}};

    for (const Corner& corner : corners) {
        EnsembleParams ep;
        ep.temperature = corner.t;
        ep.spectrum = SpectrumParams{2, corner.length, 1.0, 1.0};
        ep.n_cut = 20;
        ep.tail_error_tol = 1.0; // measuring the tail here, not policing it
        ep.tail_warn_tol = 1.0;
        const ThermalEnsemble coarse = build_ensemble(ep);
        ep.n_cut = 40;
        const ThermalEnsemble fine = build_ensemble(ep);

        const double du = std::abs(fine.internal_energy - coarse.internal_energy) /
                          std::abs(fine.internal_energy);
        const double ds = std::abs(fine.entropy - coarse.entropy) / std::abs(fine.entropy);
        const double dz =
            std::abs(fine.log_partition_function() - coarse.log_partition_function());
        const double worst = std::max({du, ds, dz});
        if (worst > corner.tol)
            fail.record("doubling n_cut moved (U,S,lnZ) by " + describe(worst) + " at T = " +
                        describe(corner.t) + ", L = " + describe(corner.length));
    }

    res.passed = !fail.any;
    res.detail = fail.any
                     ? fail.message.str()
                     : "n_cut = 20 converged at the cycle corners (1e-6; 2e-3 at T = 250, L = 1)";
    return res;
}

// ---- cycle invariants ----------------------------------------------------------

CheckResult check_cycle_invariants(const VerifyOptions&) {
    CheckResult res{"cycle-closure-and-adiabats", true, {}};
    Failure fail;

    for (double c : {0.0, 0.5, 16.5, 1e3}) {
        CycleConfig cfg;
        cfg.n_particles = 2;
        cfg.interaction = c;
        const CycleResult r = run_cycle(cfg);
        const double closure = std::abs(r.Q1 + r.Q2 + r.W1 + r.W2);
        if (closure > 1e-9 * std::abs(r.Q1))
            fail.record("cycle closure " + describe(closure) + " at c = " + describe(c));
        if (r.corner_entropy[1] != r.corner_entropy[2] || r.corner_entropy[0] != r.corner_entropy[3])
            fail.record("adiabats changed the entropy at c = " + describe(c));
        if (!r.valid_engine) {
            fail.record("default parameters unexpectedly outside the engine regime at c = " +
                        describe(c));
            continue;
        }
        if (!(r.Q1 > 0.0 && r.Q2 < 0.0 && r.W1 < 0.0 && r.W2 > 0.0 && r.W_out > 0.0))
            fail.record("stroke sign pattern broken at c = " + describe(c));
        const double eq6 = r.eta_numerator / r.eta_denominator;
        if (std::abs(*r.efficiency - eq6) > 1e-14)
            fail.record("reported efficiency differs from the explicit sums");
        if (std::abs(*r.efficiency - r.W_out / r.Q1) > 1e-9)
            fail.record("efficiency differs from W_out/Q1 beyond rounding at c = " + describe(c));
    }

    { // c = 0: uniform spectral scaling makes the efficiency ideal
        CycleConfig cfg;
        cfg.n_particles = 2;
        cfg.interaction = 0.0;
        const CycleResult r = run_cycle(cfg);
        if (!r.efficiency || std::abs(*r.efficiency - 0.75) > 1e-9)
            fail.record("c = 0 efficiency is not 0.75 to 1e-9");
        if (std::abs(r.corner_energy[2] / r.corner_energy[1] - 0.25) > 1e-12)
            fail.record("c = 0 adiabat energy ratio is not (L1/L2)^2");
    }

    res.passed = !fail.any;
    res.detail = fail.any ? fail.message.str() : "closure, adiabats, signs and the c = 0 limit hold";
    return res;
}

CheckResult check_efficiency_bounds(const VerifyOptions& opts) {
    CheckResult res{"efficiency-limits-and-bounds", true, {}};
    Failure fail;

    { // strong-coupling agreement with the closed form
        CycleConfig cfg;
        cfg.n_particles = 2;
        cfg.interaction = 1e4;
        const CycleResult r = run_cycle(cfg);
        const double gap = std::abs(*r.efficiency - asymptotic_efficiency(cfg));
        if (gap > 1e-3) fail.record("c = 1e4 deviates from the closed form by " + describe(gap));
    }
    for (double c : {100.0, 316.0, 1e3}) {
        CycleConfig cfg;
        cfg.n_particles = 2;
        cfg.interaction = c;
        const CycleResult r = run_cycle(cfg);
        const double gap = std::abs(*r.efficiency - asymptotic_efficiency(cfg));
        if (gap > 5e-3)
            fail.record("c = " + describe(c) + " deviates from the closed form by " + describe(gap));
    }
    { // expansion consistency
        CycleConfig cfg;
        cfg.n_particles = 2;
        cfg.interaction = 1e3;
        if (std::abs(first_order_efficiency(cfg) - asymptotic_efficiency(cfg)) > 1e-5)
            fail.record("first-order and full asymptotic forms disagree at c = 1e3");
    }

    // weighted-mean structure: efficiency between the extremal contributing
    // level ratios (levels with |p2 - p4| < 1e-14 carry no information)
    if (!opts.quick) {
        for (double c : {0.5, 5.0, 16.5, 100.0}) {
            CycleConfig cfg;
            cfg.n_particles = 2;
            cfg.interaction = c;
            const LevelTable lo = compute_levels(cfg.spectrum_at(cfg.trap_small), cfg.n_cut);
            const LevelTable hi = compute_levels(cfg.spectrum_at(cfg.trap_large), cfg.n_cut);
            const ThermalEnsemble hot = boltzmann_ensemble(lo, cfg.hot_temperature);
            const ThermalEnsemble cold = boltzmann_ensemble(hi, cfg.cold_temperature);
            double lo_l = std::numeric_limits<double>::infinity();
            double hi_l = -lo_l;
            for (std::size_t i = 0; i < lo.size(); ++i) {
                if (std::abs(hot.probabilities[i] - cold.probabilities[i]) < 1e-14) continue;
                const double lambda = 1.0 - (*hi.energies)[i] / (*lo.energies)[i];
                lo_l = std::min(lo_l, lambda);
                hi_l = std::max(hi_l, lambda);
            }
            const CycleResult r = run_cycle(cfg);
            if (!(*r.efficiency >= lo_l - 1e-12 && *r.efficiency <= hi_l + 1e-12))
                fail.record("efficiency escapes [min lambda, max lambda] at c = " + describe(c));
        }
    }

    res.passed = !fail.any;
    res.detail = fail.any ? fail.message.str() : "closed-form limits and lambda bounds hold";
    return res;
}

CheckResult check_two_level(const VerifyOptions&) {
    CheckResult res{"two-level-approximation", true, {}};
    Failure fail;
    CycleConfig cfg;
    cfg.n_particles = 2;
    cfg.interaction = 1.0;
    cfg.hot_temperature = 2.5;
    cfg.cold_temperature = 0.5;
    const CycleResult r = run_cycle(cfg);
    const double tl = two_level_efficiency(cfg);
    if (!r.efficiency) {
        fail.record("low-temperature cycle is not engine-valid");
    } else if (std::abs(*r.efficiency - tl) > 0.01) {
        fail.record("two-level approximation off by " + describe(std::abs(*r.efficiency - tl)));
    }
    res.passed = !fail.any;
    res.detail = fail.any ? fail.message.str()
                          : "matches the exact cycle at (T2, T4) = (2.5, 0.5) within 0.01";
    return res;
}

// ---- oracles ---------------------------------------------------------------------

CheckResult check_bisection_oracle(const VerifyOptions&) {
    CheckResult res{"newton-vs-bisection", true, {}};
    Failure fail;
    double worst = 0.0;
    int compared = 0;
    for (int n1 = 1; n1 <= 4; ++n1) {
        for (int n2 = n1; n2 <= 4; ++n2) {
            for (double c : {0.1, 1.0, 10.0, 100.0}) {
                const SpectrumParams p{2, 1.0, c, 1.0};
                const QuantumNumbers qn{n1, n2};
                const BetheSolution newton = solve_bethe(qn, p, 1e-12);
                const BetheSolution bisect = bisection_bethe_2p(qn, p, 1e-10);
                ++compared;
                for (std::size_t i = 0; i < 2; ++i)
                    worst = std::max(worst, std::abs(newton.k[i] - bisect.k[i]));
            }
        }
    }
    if (worst > 1e-8) fail.record("wave vectors diverge by " + describe(worst));
    res.passed = !fail.any;
    res.detail = fail.any ? fail.message.str()
                          : std::to_string(compared) + " states agree to " + describe(worst) +
                                " (tol 1e-8)";
    return res;
}

CheckResult check_exact_diag(const VerifyOptions& opts) {
    CheckResult res{"exact-diagonalization", true, {}};
    Failure fail;
    const int cutoff = opts.quick ? 30 : 60;
    const SpectrumParams p{2, 1.0, 1.0, 1.0};

    CertifiedDiag diag;
    try {
        diag = certified_exact_diag_2p(p, cutoff, 4, 1e-3);
    } catch (const DiagConvergenceError& e) {
        res.passed = false;
        res.detail = e.what();
        return res;
    }

    std::vector<double> bethe;
    for (const auto& qn : {QuantumNumbers{1, 1}, QuantumNumbers{1, 2}, QuantumNumbers{2, 2},
                           QuantumNumbers{1, 3}}) {
        bethe.push_back(solve_bethe(qn, p, 1e-12).energy);
    }
    std::sort(bethe.begin(), bethe.end());

    double worst = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        const double rel = std::abs(diag.energies[i] - bethe[i]) / bethe[i];
        worst = std::max(worst, rel);
        if (rel > diag.certified_rel_error[i])
            fail.record("level " + std::to_string(i) + " misses the Bethe energy by " +
                        describe(rel) + " > certificate " + describe(diag.certified_rel_error[i]));
        if (diag.energies[i] < bethe[i] - 1e-10 * bethe[i])
            fail.record("variational bound violated on level " + std::to_string(i));
    }

    { // c = 0 reduces to the free spectrum exactly
        const SpectrumParams free_p{2, 1.0, 0.0, 1.0};
        const auto ed = exact_diag_2p(free_p, 12, 3);
        const std::vector<double> expect = {kPi * kPi, 2.5 * kPi * kPi, 4.0 * kPi * kPi};
        for (std::size_t i = 0; i < expect.size(); ++i)
            if (std::abs(ed[i] - expect[i]) > 1e-10)
                fail.record("free-boson diagonalization level " + std::to_string(i) + " off");
    }

    res.passed = !fail.any;
    res.detail = fail.any ? fail.message.str()
                          : "lowest 4 levels within the M-doubling certificate (worst " +
                                describe(worst) + ", M = " + std::to_string(cutoff) + ")";
    return res;
}

} // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& opts, std::ostream& log) {
    std::vector<CheckResult> results;
    const auto run = [&](CheckResult (*check)(const VerifyOptions&)) {
        CheckResult r = check(opts);
        log << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << ": " << r.detail << '\n';
        results.push_back(std::move(r));
    };

    run(check_jacobian_fd);
    run(check_closed_forms);
    run(check_solver_basics);
    run(check_monotonicity);
    run(check_scaling_covariance);
    run(check_asymptotic_energy);
    run(check_ensemble_basics);
    run(check_cutoff_stability);
    run(check_cycle_invariants);
    run(check_efficiency_bounds);
    run(check_two_level);
    run(check_bisection_oracle);
    run(check_exact_diag);

    int passed = 0;
    for (const auto& r : results)
        if (r.passed) ++passed;
    log << passed << "/" << results.size() << " checks passed\n";
    return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& r) { return r.passed; });
}

} // namespace betheotto
