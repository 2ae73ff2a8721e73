// Shared model builders for unit and acceptance tests.

#pragma once

#include <cmath>
#include <random>

#include "heatfcs/bath.hpp"
#include "heatfcs/floquet.hpp"
#include "heatfcs/linalg.hpp"
#include "heatfcs/rates.hpp"
#include "heatfcs/tilted.hpp"

namespace heatfcs::testing {

struct Model {
    RabiParameters params;
    BathParameters bath;
    FloquetSolution sol;
    RateTable table;

    double tau() const { return sol.period; }
};

inline Model build_model(const RabiParameters& params, const BathParameters& bath,
                         const Mat2& coupling, int k_max = 2) {
    Model m{params, bath, rabi_floquet(params), {}};
    m.table = partial_rates(coupling_fourier(coupling, m.sol, k_max), m.sol, bath);
    return m;
}

inline RabiParameters fig1_params(double detuning = 0.02, double phase = 0.0) {
    return RabiParameters::from_detuning(1.0, 0.1, detuning, phase);
}

inline BathParameters fig1_bath(double temperature = 0.1) {
    return BathParameters::from_temperature(0.01, temperature);
}

inline Model fig1_model(const Mat2& coupling = pauli::sigma_x()) {
    return build_model(fig1_params(), fig1_bath(), coupling);
}

struct RandomModels {
    std::mt19937_64 rng;
    explicit RandomModels(std::uint64_t seed) : rng(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

    RabiParameters params() {
        return RabiParameters::from_detuning(1.0, uniform(0.02, 0.3), uniform(-0.3, 0.3),
                                             uniform(0.0, 2.0 * kPi));
    }
    BathParameters bath() { return BathParameters::from_temperature(uniform(0.005, 0.05), uniform(0.05, 1.0)); }
    Model model(const Mat2& coupling) { return build_model(params(), bath(), coupling); }
    InitialState init() { return InitialState::from_p1(uniform(0.0, 1.0)); }
};

} // namespace heatfcs::testing
