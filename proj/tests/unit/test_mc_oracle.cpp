#include <doctest.h>

#include <cmath>

#include "heatfcs/closed_forms.hpp"
#include "heatfcs/errors.hpp"
#include "heatfcs/heat_statistics.hpp"
#include "heatfcs/mc_oracle.hpp"
#include "../support/fixtures.hpp"

using namespace heatfcs;
using namespace heatfcs::testing;
using doctest::Approx;

TEST_CASE("zero coupling yields no heat") {
    const auto m = build_model(fig1_params(), fig1_bath(), Mat2::Zero());
    const auto ens = sample_heat(m.table, InitialState::from_p1(0.5), 100.0, 1000, 1);
    for (double q : ens.samples) CHECK(q == 0.0);
}

TEST_CASE("sigma_z saturation fraction") {
    const auto m = fig1_model(pauli::sigma_z());
    const auto lr = longitudinal_rates(*m.sol.mixing_angle, m.sol.rabi_frequency, m.bath);
    const std::size_t n = 100000;
    const auto ens = sample_heat(m.table, InitialState::from_p1(1.0), 50.0 / lr.gamma(), n, 7);
    const auto dist = empirical_distribution(ens);
    CHECK(dist.atoms.size() <= 3);
    double up = 0;
    for (const auto& a : dist.atoms)
        if (a.m == -1 && a.n == 0) up = a.weight;
    const double p = lr.gamma_plus / lr.gamma();
    CHECK(std::abs(up - p) <= 4 * std::sqrt(p * (1 - p) / n));
}

TEST_CASE("reproducibility and thread independence") {
    const auto m = fig1_model();
    const auto init = dss(m.table);
    SamplerOptions one;
    one.threads = 1;
    SamplerOptions many;
    many.threads = 4;
    const auto a = sample_heat(m.table, init, 20 * m.tau(), 10000, 99, one);
    const auto b = sample_heat(m.table, init, 20 * m.tau(), 10000, 99, many);
    CHECK(a.samples == b.samples);
    const auto c = sample_heat(m.table, init, 20 * m.tau(), 10000, 100, many);
    CHECK(a.samples != c.samples);
}

TEST_CASE("empirical characteristic function") {
    const auto m = build_model(fig1_params(0.1), fig1_bath(0.3), pauli::sigma_x());
    const auto init = InitialState::from_p1(0.7);
    RandomModels gen(5);
    for (int i = 0; i < 4; ++i) {
        const double t = gen.uniform(1.0, 30.0) * m.tau();
        const std::size_t n = 200000;
        const auto ens = sample_heat(m.table, init, t, n, 1000 + i);
        for (int j = 0; j < 3; ++j) {
            const double nu = gen.uniform(-3.0, 3.0);
            cplx acc = 0;
            double re2 = 0, im2 = 0;
            for (double q : ens.samples) {
                const cplx e = std::polar(1.0, nu * q);
                acc += e;
                re2 += e.real() * e.real();
                im2 += e.imag() * e.imag();
            }
            const double dn = static_cast<double>(n);
            const cplx mean = acc / dn;
            const double se_re = std::sqrt((re2 / dn - mean.real() * mean.real()) / dn);
            const double se_im = std::sqrt((im2 / dn - mean.imag() * mean.imag()) / dn);
            const cplx g = characteristic_function(m.table, init, nu, t);
            CHECK(std::abs(mean.real() - g.real()) <= 5 * se_re + 1e-12);
            CHECK(std::abs(mean.imag() - g.imag()) <= 5 * se_im + 1e-12);
        }
    }
}

TEST_CASE("self-harmonic channels carry heat") {
    const auto m = fig1_model();
    const auto init = dss(m.table);
    const double t = 80 * m.tau();
    const std::size_t n = 20000;
    const auto with = sample_heat(m.table, init, t, n, 3);
    SamplerOptions opts;
    opts.self_harmonics = false;
    const auto without = sample_heat(m.table, init, t, n, 3, opts);
    const double se = std::sqrt(with.variance() / n + without.variance() / n);
    CHECK(std::abs(with.mean() - without.mean()) > 10 * se);
    CHECK(with.mean() == Approx(mean_heat(m.table, init, t)).epsilon(0.02));
}

TEST_CASE("lattice bookkeeping") {
    TrajectoryEnsemble one;
    one.samples = {0.0};
    one.drive_frequency = 1.0;
    one.rabi_frequency = 0.2;
    const auto d = empirical_distribution(one);
    REQUIRE(d.atoms.size() == 1);
    CHECK(d.atoms[0].n == 0);
    CHECK(d.atoms[0].m == 0);
    CHECK(d.atoms[0].weight == 1.0);

    one.samples = {0.0, 0.5};
    CHECK_THROWS_AS(empirical_distribution(one), LatticeViolationError);
    one.samples.clear();
    CHECK_THROWS_AS(empirical_distribution(one), DomainError);

    const auto m = fig1_model();
    const auto ens = sample_heat(m.table, dss(m.table), 10 * m.tau(), 5000, 8);
    const auto dist = empirical_distribution(ens);
    CHECK(dist.total() == Approx(1.0).epsilon(1e-15));

    SamplerOptions capped;
    capped.event_cap = 3;
    CHECK_THROWS_AS(sample_heat(m.table, dss(m.table), 1000 * m.tau(), 10, 8, capped), EventCapError);
    CHECK_THROWS_AS(sample_heat(m.table, dss(m.table), 1.0, 0, 8), DomainError);
}
