#include <doctest.h>

#include <cmath>
#include <random>

#include "heatfcs/errors.hpp"
#include "heatfcs/floquet.hpp"
#include "../oracles/reference_values.hpp"

using namespace heatfcs;
using doctest::Approx;

namespace {
double folded_gap(double a, double b, double drive) {
    double d = std::remainder(a - b, drive);
    return std::abs(d);
}
} // namespace

TEST_CASE("analytic Rabi solution") {
    SUBCASE("resonance") {
        const auto sol = rabi_floquet(RabiParameters::from_detuning(1.0, 0.15, 0.0));
        CHECK(*sol.mixing_angle == Approx(kPi / 4).epsilon(1e-15));
        CHECK(sol.rabi_frequency == Approx(0.3).epsilon(1e-15));
    }
    SUBCASE("figure parameters") {
        const auto sol = rabi_floquet(RabiParameters::from_detuning(1.0, 0.1, 0.02));
        CHECK(sol.rabi_frequency == Approx(reference::kRabiFrequency).epsilon(1e-12));
        CHECK(sol.eps2 - sol.eps1 == Approx(sol.rabi_frequency).epsilon(1e-15));
        CHECK(sol.eps1 == Approx(reference::kQuasienergy1).epsilon(1e-10));
        CHECK(sol.eps2 == Approx(reference::kQuasienergy2).epsilon(1e-10));
    }
    SUBCASE("undriven") {
        const auto sol = rabi_floquet(RabiParameters::from_detuning(1.0, 0.0, -0.05));
        CHECK(*sol.mixing_angle == Approx(kPi / 2));
        CHECK(sol.rabi_frequency == Approx(0.05));
        for (const auto& modes : sol.modes)
            for (int a = 0; a < 2; ++a) CHECK(std::abs(std::abs(modes[a](0)) + std::abs(modes[a](1)) - 1.0) < 1e-15);
    }
}

TEST_CASE("mode invariants") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-0.3, 0.3);
    for (int i = 0; i < 10; ++i) {
        const auto sol = rabi_floquet(RabiParameters::from_detuning(1.0, std::abs(u(rng)), u(rng), 3 * u(rng)));
        for (const auto& m : sol.modes) {
            CHECK(std::abs(m[0].norm() - 1.0) < 1e-12);
            CHECK(std::abs(m[1].norm() - 1.0) < 1e-12);
            CHECK(std::abs(m[0].dot(m[1])) < 1e-12);
        }
        CHECK((sol.modes.front()[0] - sol.modes.back()[0]).norm() < 1e-10);
        CHECK((sol.modes.front()[1] - sol.modes.back()[1]).norm() < 1e-10);
    }
}

TEST_CASE("monodromy agrees with the analytic solution") {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(-0.3, 0.3);
    for (int i = 0; i < 6; ++i) {
        const auto p = RabiParameters::from_detuning(1.0, 0.02 + std::abs(u(rng)), u(rng), 5 * u(rng));
        const auto exact = rabi_floquet(p, 256);
        const auto num = monodromy_floquet([&](double t) { return p.hamiltonian(t); },
                                           p.drive_frequency, 256);
        CHECK(folded_gap(num.eps1, exact.eps1, p.drive_frequency) < 1e-9);
        CHECK(folded_gap(num.eps2, exact.eps2, p.drive_frequency) < 1e-9);
        // modes may differ by a constant phase and, after folding, by a harmonic e^{i k Omega t}
        for (int a = 0; a < 2; ++a) {
            const int b = folded_gap(num.quasienergy(a), exact.eps1, p.drive_frequency) < 1e-6 ? 0 : 1;
            for (std::size_t j = 0; j < exact.modes.size(); ++j)
                CHECK(std::abs(exact.modes[j][b].dot(num.modes[j][a])) >= 1.0 - 1e-9);
        }
    }
}

TEST_CASE("monodromy static limit and refinement") {
    const double omega = 1.0, drive = 0.7;
    Mat2 h = Mat2::Zero();
    h(1, 1) = omega;
    const auto sol = monodromy_floquet([&](double) { return h; }, drive, 64);
    CHECK((folded_gap(sol.eps1, 0.0, drive) < 1e-12 || folded_gap(sol.eps2, 0.0, drive) < 1e-12));
    CHECK((folded_gap(sol.eps1, omega, drive) < 1e-12 || folded_gap(sol.eps2, omega, drive) < 1e-12));

    const auto p = RabiParameters::from_detuning(1.0, 0.1, 0.02);
    auto sampler = [&](double t) { return p.hamiltonian(t); };
    const auto coarse = monodromy_floquet(sampler, p.drive_frequency, 256);
    const auto fine = monodromy_floquet(sampler, p.drive_frequency, 512);
    CHECK(std::abs(coarse.eps1 - fine.eps1) < 1e-10);
    CHECK(std::abs(coarse.eps2 - fine.eps2) < 1e-10);
    CHECK_THROWS_AS(monodromy_floquet(sampler, p.drive_frequency, 32), DomainError);
}

TEST_CASE("monodromy reports degenerate eigenphases") {
    const auto sol_fn = [](double) { return Mat2(Mat2::Zero()); };
    CHECK_THROWS_AS(monodromy_floquet(sol_fn, 1.0, 64), QuasienergyCrossingError);
}

TEST_CASE("bare state populations") {
    const auto res = rabi_floquet(RabiParameters::from_detuning(1.0, 0.1, 0.0));
    for (double phi : {0.0, 0.5, 2.0, kPi}) {
        const auto pops = bare_to_floquet_populations(kPi / 4, 0.0, res, phi);
        CHECK(pops.p1 == Approx(0.5 * (1 - std::cos(phi))).epsilon(1e-14));
    }
    CHECK(bare_to_floquet_populations(kPi / 4, 0.0, res, kPi).p1 == Approx(1.0));

    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int i = 0; i < 20; ++i) {
        const double phi = u(rng);
        const auto p = RabiParameters::from_detuning(1.0, 0.05 + 0.05 * std::abs(u(rng)), 0.1 * u(rng), phi);
        const auto sol = rabi_floquet(p);
        const double theta = *sol.mixing_angle;
        CHECK(bare_to_floquet_populations(0.0, 0.0, sol, phi).p1 == Approx(0.5 * (1 + std::cos(2 * theta))));
        const double delta = u(rng), gamma = u(rng);
        const auto formula = bare_to_floquet_populations(delta, gamma, sol, phi);
        const auto overlap = floquet_populations(sol, bare_state(delta, gamma));
        CHECK(formula.p1 == Approx(overlap.p1).epsilon(1e-12));
        CHECK(formula.p1 >= 0.0);
        CHECK(formula.p2 >= 0.0);
        CHECK(formula.p1 + formula.p2 == Approx(1.0).epsilon(1e-15));
    }
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(RabiParameters::from_detuning(1.0, -0.1, 0.0).validate(), DomainError);
    CHECK_THROWS_AS(rabi_floquet(RabiParameters{1.0, 0.1, 0.0, 0.0}), DomainError);
    CHECK_THROWS_AS(InitialState::from_p1(1.5), DomainError);
}
