#include <doctest.h>

#include "betheotto/oracle.hpp"
#include "betheotto/spectrum.hpp"

#include <array>
#include <cmath>
#include <numbers>

using namespace betheotto;

namespace {

constexpr double kPi = std::numbers::pi;

// lowest four levels at N = 2, L = 1, c = 1, m = 1, pinned once from the
// independent solvers and used to cross-check every path against every other
const std::vector<QuantumNumbers> kLowStates = {{1, 1}, {1, 2}, {2, 2}, {1, 3}};
const std::vector<double> kLowEnergies = {11.2660685201, 26.5654265170, 40.8969772566,
                                          51.3095192890};

double quadrature_overlap(int a, int b, int c, int d, double L) {
    // plain composite Simpson on the quartic sine product
    const int n = 20000; // even
    const double h = L / n;
    auto f = [&](double x) {
        const double w = kPi * x / L;
        return 4.0 / (L * L) * std::sin(a * w) * std::sin(b * w) * std::sin(c * w) *
               std::sin(d * w);
    };
    double acc = f(0.0) + f(L);
    for (int i = 1; i < n; ++i) acc += f(i * h) * ((i % 2) ? 4.0 : 2.0);
    return acc * h / 3.0;
}

} // namespace

TEST_SUITE("oracle") {

TEST_CASE("bisection reproduces the weak-coupling limit") {
    const SpectrumParams p{2, 1.0, 1e-8, 1.0};
    const BetheSolution sol = bisection_bethe_2p({1, 2}, p);
    CHECK(std::abs(sol.k[0] - kPi) < 1e-6);
    CHECK(std::abs(sol.k[1] - 2 * kPi) < 1e-6);
    CHECK(sol.energy == doctest::Approx((sol.k[0] * sol.k[0] + sol.k[1] * sol.k[1]) / 2.0)
                            .epsilon(1e-15));
}

TEST_CASE("bisection reproduces the fermionized limit") {
    const SpectrumParams p{2, 1.0, 1e6, 1.0};
    const BetheSolution sol = bisection_bethe_2p({1, 1}, p);
    const double denom = 1.0 + 2e-6;
    CHECK(std::abs(sol.k[0] - kPi / denom) < 1e-4);
    CHECK(std::abs(sol.k[1] - 2 * kPi / denom) < 1e-4);
}

TEST_CASE("bisection and Newton agree across couplings") {
    for (const double c : {0.1, 1.0, 10.0, 100.0}) {
        CAPTURE(c);
        const SpectrumParams p{2, 1.0, c, 1.0};
        for (const auto& qn : {QuantumNumbers{1, 1}, QuantumNumbers{1, 4}, QuantumNumbers{2, 3}}) {
            const BetheSolution a = bisection_bethe_2p(qn, p);
            const BetheSolution b = solve_bethe(qn, p, 1e-12);
            CHECK(std::abs(a.k[0] - b.k[0]) < 1e-8);
            CHECK(std::abs(a.k[1] - b.k[1]) < 1e-8);
        }
    }
}

TEST_CASE("bisection input validation") {
    CHECK_THROWS_AS((void)bisection_bethe_2p({1, 1, 1}, SpectrumParams{3, 1.0, 1.0, 1.0}),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)bisection_bethe_2p({1, 1}, SpectrumParams{2, 1.0, 0.0, 1.0}),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)bisection_bethe_2p({0, 1}, SpectrumParams{2, 1.0, 1.0, 1.0}),
                    std::invalid_argument);
}

TEST_CASE("symmetric pair basis") {
    const DiagBasis basis = make_diag_basis(4);
    CHECK(basis.pairs.size() == 10);
    CHECK(basis.pairs.front() == std::pair{1, 1});
    CHECK(basis.pairs.back() == std::pair{4, 4});
    for (const auto& [a, b] : basis.pairs) CHECK(a <= b);
    CHECK_THROWS_AS((void)make_diag_basis(1), std::invalid_argument);
}

TEST_CASE("closed-form overlaps match quadrature") {
    CHECK(delta_overlap(1, 1, 1, 1, 1.0) == doctest::Approx(1.5).epsilon(1e-15));
    CHECK(delta_overlap(1, 1, 1, 1, 2.0) == doctest::Approx(0.75).epsilon(1e-15));
    for (const auto& [a, b, c, d] :
         {std::array{1, 1, 1, 1}, std::array{1, 2, 1, 2}, std::array{1, 1, 2, 2},
          std::array{1, 3, 2, 2}, std::array{2, 4, 1, 3}, std::array{1, 2, 3, 4}}) {
        CAPTURE(a);
        CAPTURE(b);
        CAPTURE(c);
        CAPTURE(d);
        CHECK(delta_overlap(a, b, c, d, 1.0) ==
              doctest::Approx(quadrature_overlap(a, b, c, d, 1.0)).epsilon(1e-8).scale(1.0));
        CHECK(delta_overlap(a, b, c, d, 1.0) == delta_overlap(c, d, a, b, 1.0));
        CHECK(delta_overlap(a, b, c, d, 1.0) == delta_overlap(b, a, c, d, 1.0));
    }
}

TEST_CASE("diagonalization is exact for free bosons") {
    const SpectrumParams p{2, 1.0, 0.0, 1.0};
    const auto levels = exact_diag_2p(p, 12, 4);
    CHECK(levels[0] == doctest::Approx(kPi * kPi).epsilon(1e-13));
    CHECK(levels[1] == doctest::Approx(2.5 * kPi * kPi).epsilon(1e-13));
    CHECK(levels[2] == doctest::Approx(4.0 * kPi * kPi).epsilon(1e-13));
    CHECK(levels[3] == doctest::Approx(5.0 * kPi * kPi).epsilon(1e-13));
}

TEST_CASE("pinned levels at c = 1 agree across all three solvers") {
    const SpectrumParams p{2, 1.0, 1.0, 1.0};

    for (std::size_t i = 0; i < kLowStates.size(); ++i) {
        CHECK(solve_bethe(kLowStates[i], p, 1e-12).energy ==
              doctest::Approx(kLowEnergies[i]).epsilon(1e-9));
        CHECK(bisection_bethe_2p(kLowStates[i], p).energy ==
              doctest::Approx(kLowEnergies[i]).epsilon(1e-9));
    }

    const CertifiedDiag cert = certified_exact_diag_2p(p, 60, 4, 1e-3);
    for (std::size_t i = 0; i < kLowEnergies.size(); ++i) {
        const double rel = std::abs(cert.energies[i] - kLowEnergies[i]) / kLowEnergies[i];
        CHECK(rel < 2.5e-4);                       // observed truncation at this cutoff
        CHECK(rel <= cert.certified_rel_error[i]); // the certificate is honest
        CHECK(cert.certified_rel_error[i] < 1e-3);
        CHECK(cert.energies[i] >= kLowEnergies[i] - 1e-10); // Rayleigh-Ritz bounds from above
    }
}

TEST_CASE("truncation error shrinks as the basis grows") {
    const SpectrumParams p{2, 1.0, 1.0, 1.0};
    const double e15 = exact_diag_2p(p, 15, 1)[0];
    const double e30 = exact_diag_2p(p, 30, 1)[0];
    const double exact = kLowEnergies[0];
    CHECK(std::abs(e30 - exact) < std::abs(e15 - exact));
    CHECK(e30 >= exact - 1e-10);
}

TEST_CASE("certification rejects an unreachable tolerance") {
    const SpectrumParams p{2, 1.0, 1.0, 1.0};
    CHECK_THROWS_AS((void)certified_exact_diag_2p(p, 16, 2, 1e-12), DiagConvergenceError);
    CHECK_THROWS_AS((void)certified_exact_diag_2p(p, 15, 2, 1e-3), std::invalid_argument);
}

} // TEST_SUITE
