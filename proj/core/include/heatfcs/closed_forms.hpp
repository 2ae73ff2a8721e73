// closed_forms.hpp: exact results for longitudinal (sigma_z) coupling and the undriven qubit

#pragma once

#include "heatfcs/bath.hpp"
#include "heatfcs/distribution.hpp"
#include "heatfcs/floquet.hpp"
#include "heatfcs/tilted.hpp"

namespace heatfcs {

// Gamma_{+/-} = 2 pi S_{12,0}^2 s(+/-Omega_R); Gamma = Gamma_+ + Gamma_-.
struct LongitudinalRates {
    double gamma_plus{0.0};
    double gamma_minus{0.0};
    double rabi_frequency{0.0};

    double gamma() const { return gamma_plus + gamma_minus; }
};

LongitudinalRates longitudinal_rates(double theta, double rabi_frequency,
                                     const BathParameters& bath);

std::complex<double> sigma_z_cf(const LongitudinalRates& rates, const InitialState& init,
                                double nu, double t);

// Probabilities that the environment absorbed (p_down, Q = +Omega_R) or emitted
// (p_up, Q = -Omega_R) one dressed quantum by time t.
struct LongitudinalJumps {
    double p_down{0.0};
    double p_up{0.0};
};
LongitudinalJumps sigma_z_jumps(const LongitudinalRates& rates, const InitialState& init, double t);

HeatDistribution sigma_z_pdf(const LongitudinalRates& rates, const InitialState& init, double t,
                             double drive_frequency);

// <Q^k> = Omega_R^k [p_down(t) + (-1)^k p_up(t)].
double sigma_z_moment(const LongitudinalRates& rates, const InitialState& init, int k, double t);

// Undriven qubit H = (omega/2) sigma_z coupled through sigma_x. Index 0 is the ground state.
//   A11 = -2u, A12 = 2d e^{i omega nu}, A21 = 2u e^{-i omega nu}, A22 = -2d,
// with d = pi J(omega)(n_B + 1) and u = pi J(omega) n_B.
GeneralizedRateMatrix undriven_generator(double omega, const BathParameters& bath, double nu);

} // namespace heatfcs
