#include <doctest.h>

#include "betheotto/oracle.hpp"
#include "betheotto/otto.hpp"

#include <cmath>

using namespace betheotto;

TEST_SUITE("otto") {

TEST_CASE("non-interacting engine runs at 1 - (L1/L2)^2") {
    CycleConfig cfg; // N = 2, c = 0, L1 = 1, L2 = 2, T2 = 50, T4 = 8
    const CycleResult r = run_cycle(cfg);

    REQUIRE(r.valid_engine);
    REQUIRE(r.efficiency.has_value());
    CHECK(*r.efficiency == doctest::Approx(0.75).epsilon(1e-12));
    CHECK_FALSE(r.tail_warning);
}

TEST_CASE("a single particle has no interaction to feel") {
    CycleConfig cfg;
    cfg.n_particles = 1;
    cfg.interaction = 7.3;
    const CycleResult r = run_cycle(cfg);
    REQUIRE(r.valid_engine);
    CHECK(*r.efficiency == doctest::Approx(0.75).epsilon(1e-12));
}

TEST_CASE("fermionized regime approaches the strong-coupling closed form") {
    CycleConfig cfg;
    cfg.interaction = 1e4;
    const CycleResult r = run_cycle(cfg);
    REQUIRE(r.valid_engine);
    CHECK(std::abs(*r.efficiency - asymptotic_efficiency(cfg)) < 1e-3);
    CHECK(*r.efficiency == doctest::Approx(0.74995).epsilon(1e-4));
}

TEST_CASE("cycle bookkeeping is exact") {
    for (double c : {0.0, 1.0, 16.5, 2000.0}) {
        CAPTURE(c);
        CycleConfig cfg;
        cfg.interaction = c;
        const CycleResult r = run_cycle(cfg);

        // strokes recombine into the corner energies
        CHECK(r.Q1 == r.corner_energy[1] - r.corner_energy[0]);
        CHECK(r.W1 == r.corner_energy[2] - r.corner_energy[1]);
        CHECK(r.Q2 == r.corner_energy[3] - r.corner_energy[2]);
        CHECK(r.W2 == r.corner_energy[0] - r.corner_energy[3]);
        CHECK(std::abs(r.Q1 + r.Q2 + r.W1 + r.W2) <= 1e-9 * std::abs(r.Q1));
        CHECK(r.W_out == doctest::Approx(r.Q1 + r.Q2).epsilon(1e-12));

        // adiabats keep the occupations, hence the entropy, frozen
        CHECK(r.corner_entropy[0] == r.corner_entropy[3]);
        CHECK(r.corner_entropy[1] == r.corner_entropy[2]);

        REQUIRE(r.valid_engine);
        CHECK(r.Q1 > 0.0);
        CHECK(r.Q2 < 0.0);
        CHECK(r.W1 < 0.0);
        CHECK(r.W2 > 0.0);
        CHECK(*r.efficiency == r.eta_numerator / r.eta_denominator);
        CHECK(*r.efficiency == doctest::Approx(r.W_out / r.Q1).epsilon(1e-9));
        CHECK(*r.efficiency > 0.0);
        CHECK(*r.efficiency < 1.0);
    }
}

TEST_CASE("too-small temperature split is not an engine") {
    CycleConfig cfg;
    cfg.hot_temperature = 10.0;
    cfg.cold_temperature = 8.0;
    const CycleResult r = run_cycle(cfg);

    CHECK_FALSE(r.valid_engine);
    CHECK_FALSE(r.efficiency.has_value());
    // raw stroke data still reported
    CHECK(r.Q1 < 0.0);
    CHECK(std::abs(r.Q1 + r.Q2 + r.W1 + r.W2) <= 1e-9 * std::abs(r.Q1));
    CHECK(r.eta_denominator != 0.0);
}

TEST_CASE("corner table") {
    CycleConfig cfg;
    const auto corners = cycle_corners(cfg);
    REQUIRE(corners.size() == 4);
    CHECK(corners[0].label == "1");
    CHECK(corners[3].label == "4");

    CHECK_FALSE(corners[0].temperature.has_value());
    CHECK_FALSE(corners[2].temperature.has_value());
    REQUIRE(corners[1].temperature.has_value());
    REQUIRE(corners[3].temperature.has_value());
    CHECK(*corners[1].temperature == 50.0);
    CHECK(*corners[3].temperature == 8.0);

    CHECK(corners[0].entropy == corners[3].entropy);
    CHECK(corners[1].entropy == corners[2].entropy);
    CHECK(corners[1].entropy > corners[0].entropy); // hot bath holds more entropy

    // c = 0 and L2 = 2 L1: expansion scales every level, and the energy, by 1/4
    CHECK(corners[2].internal_energy ==
          doctest::Approx(corners[1].internal_energy / 4.0).epsilon(1e-12));
    CHECK(corners[3].internal_energy ==
          doctest::Approx(corners[0].internal_energy / 4.0).epsilon(1e-12));
}

TEST_CASE("level ratio") {
    CycleConfig cfg;

    SUBCASE("free limit is the ideal ratio for every level") {
        for (const auto& qn : {QuantumNumbers{1, 1}, QuantumNumbers{1, 3}, QuantumNumbers{2, 2}})
            CHECK(level_ratio(qn, cfg) == doctest::Approx(0.75).epsilon(1e-12));
    }
    SUBCASE("strong coupling returns to the ideal ratio") {
        cfg.interaction = 1e6;
        CHECK(level_ratio({1, 1}, cfg) == doctest::Approx(0.75).epsilon(1e-5));
    }
    SUBCASE("finite coupling dips below the ideal ratio") {
        cfg.interaction = 5.0;
        CHECK(level_ratio({1, 1}, cfg) < 0.75);
    }
    SUBCASE("agrees with bisection energies") {
        cfg.interaction = 5.0;
        const double e1 = bisection_bethe_2p({1, 1}, cfg.spectrum_at(cfg.trap_small), 1e-12).energy;
        const double e2 = bisection_bethe_2p({1, 1}, cfg.spectrum_at(cfg.trap_large), 1e-12).energy;
        CHECK(level_ratio({1, 1}, cfg) == doctest::Approx(1.0 - e2 / e1).epsilon(1e-9));
    }
}

TEST_CASE("two-level gap approximation") {
    CycleConfig cfg;

    SUBCASE("free and fermionized limits") {
        CHECK(two_level_efficiency(cfg) == doctest::Approx(0.75).epsilon(1e-12));
        cfg.interaction = 1e6;
        CHECK(two_level_efficiency(cfg) == doctest::Approx(0.75).epsilon(1e-5));
    }
    SUBCASE("tracks the cold low-temperature cycle closely") {
        cfg.interaction = 1.0;
        cfg.hot_temperature = 2.5;
        cfg.cold_temperature = 0.5;
        const CycleResult r = run_cycle(cfg);
        REQUIRE(r.valid_engine);
        CHECK(std::abs(two_level_efficiency(cfg) - *r.efficiency) < 1e-3);
    }
}

TEST_CASE("strong-coupling closed forms") {
    CycleConfig cfg;

    SUBCASE("asymptotic expression") {
        cfg.interaction = 1e12;
        CHECK(asymptotic_efficiency(cfg) == doctest::Approx(0.75).epsilon(1e-9));
        cfg.interaction = 4.0;
        CHECK(asymptotic_efficiency(cfg) == doctest::Approx(1.0 - std::pow(1.5 / 2.5, 2)).epsilon(1e-14));
        cfg.n_particles = 1;
        cfg.interaction = 0.3; // N = 1: no interaction correction at all
        CHECK(asymptotic_efficiency(cfg) == doctest::Approx(0.75).epsilon(1e-14));
    }
    SUBCASE("first-order expression") {
        cfg.n_particles = 3;
        cfg.interaction = 10.0;
        CHECK(first_order_efficiency(cfg) == doctest::Approx(0.75 - 1.0 / 10.0).epsilon(1e-14));
        cfg.n_particles = 1;
        CHECK(first_order_efficiency(cfg) == doctest::Approx(0.75).epsilon(1e-14));
    }
    SUBCASE("the two agree once 1/c is small") {
        cfg.interaction = 1e3;
        CHECK(std::abs(asymptotic_efficiency(cfg) - first_order_efficiency(cfg)) < 1e-5);
    }
    SUBCASE("both reject the free limit") {
        cfg.interaction = 0.0;
        CHECK_THROWS_AS((void)asymptotic_efficiency(cfg), std::invalid_argument);
        CHECK_THROWS_AS((void)first_order_efficiency(cfg), std::invalid_argument);
    }
}

TEST_CASE("configuration validation") {
    CycleConfig cfg;

    cfg.trap_small = 2.0;
    cfg.trap_large = 1.0;
    CHECK_THROWS_AS((void)run_cycle(cfg), std::invalid_argument);

    cfg = CycleConfig{};
    cfg.hot_temperature = 8.0;
    cfg.cold_temperature = 8.0;
    CHECK_THROWS_AS((void)run_cycle(cfg), std::invalid_argument);

    cfg = CycleConfig{};
    cfg.cold_temperature = -1.0;
    CHECK_THROWS_AS((void)run_cycle(cfg), std::invalid_argument);

    cfg = CycleConfig{};
    cfg.interaction = -2.0;
    CHECK_THROWS_AS((void)run_cycle(cfg), std::invalid_argument);

    cfg = CycleConfig{};
    cfg.n_cut = 0;
    CHECK_THROWS_AS((void)run_cycle(cfg), std::invalid_argument);
}

TEST_CASE("a very hot bath still runs, flagging its truncation") {
    CycleConfig cfg;
    cfg.hot_temperature = 250.0;
    const CycleResult r = run_cycle(cfg);
    REQUIRE(r.valid_engine);
    CHECK(*r.efficiency > 0.7);
    CHECK(*r.efficiency < 0.76);
}

} // TEST_SUITE
