// heat_statistics.hpp: mean heat power, cumulants and heat distributions
//
// Sign convention: Q > 0 is heat delivered to the environment.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "heatfcs/distribution.hpp"
#include "heatfcs/floquet.hpp"
#include "heatfcs/rates.hpp"

namespace heatfcs {

// <Qdot> = - sum_{a,b,k} Delta_{ab,k} a_{ab,k} rho_bb.
double mean_heat_power(const RateTable& table, const InitialState& populations);

// Exact <Q>(t): the power integrated along the relaxing populations.
double mean_heat(const RateTable& table, const InitialState& init, double t);

struct CumulantSet {
    double t{0.0};
    double mean{0.0};
    double variance{0.0};
    double skewness{0.0};  // third cumulant <(dQ)^3>
    double mean_rate{0.0};
    double variance_rate{0.0};
    double skewness_rate{0.0};
    std::vector<std::string> warnings;
};

// (-i)^n d^n xi_+/dnu^n at nu = 0 for n = 1..order (real parts, imaginary residue checked).
std::vector<double> dominant_cumulant_rates(const RateTable& table, int order = 3);

// Long-time cumulants <<Q>>_n = (-i)^n xi_+^(n)(0) t. Orders above `order` are left NaN.
CumulantSet longtime_cumulants(const RateTable& table, double t, int order = 3);

// Exact cumulants at time t from derivatives of log G(nu, t).
CumulantSet finite_time_cumulants(const RateTable& table, const InitialState& init, double t);

// a = -i xi_+'(0)/Omega and b = -xi_+''(0)/(2 Omega^2), so that the envelope below has
// mean a t Omega and variance 2 b t Omega^2. Throws InvalidExpansionError when b <= 0.
EnvelopeParameters envelope_parameters(const RateTable& table);

// w(Q,t) = 1/sqrt(2 pi) / (sqrt(2bt) Omega) exp[-(Q - a t Omega)^2 / (4 b t Omega^2)].
double gaussian_envelope(double q, double t, const RateTable& table);
double gaussian_envelope(double q, double t, const EnvelopeParameters& env, double drive_frequency);

struct LongtimePdfOptions {
    std::optional<std::pair<long, long>> n_range;  // inclusive; default covers mean +- 8 sigma
    double validity_threshold{10.0};               // warn when b t is below this
};

// Gaussian-comb approximation: triplets of atoms at n Omega + {-Omega_R, 0, +Omega_R} with
// weights p_up, 1 - p_up - p_down, p_down times w(Q,t) Omega.
HeatDistribution longtime_pdf(const RateTable& table, const InitialState& init, double t,
                              const LongtimePdfOptions& options = {});

// Exact atom weights at time t from the comb decomposition
//   G(nu,t) = Phi_0(nu) + e^{i nu Omega_R} Phi_{+1}(nu) + e^{-i nu Omega_R} Phi_{-1}(nu),
// each Phi periodic in nu and Fourier-inverted on `grid` samples per period.
HeatDistribution finite_time_pdf(const RateTable& table, const InitialState& init, double t,
                                 std::size_t grid);

// Smallest power-of-two grid (>= 256) that resolves the distribution at time t.
std::size_t suggested_grid(const RateTable& table, const InitialState& init, double t);

} // namespace heatfcs
