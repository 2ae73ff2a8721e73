#include "heatfcs/closed_forms.hpp"

#include <cmath>

#include "heatfcs/errors.hpp"

namespace heatfcs {

LongitudinalRates longitudinal_rates(double theta, double rabi_frequency,
                                     const BathParameters& bath) {
    const double s12 = std::sin(2.0 * theta);
    const double amp2 = s12 * s12;
    return {2.0 * kPi * amp2 * spectral_s(rabi_frequency, bath),
            2.0 * kPi * amp2 * spectral_s(-rabi_frequency, bath), rabi_frequency};
}

std::complex<double> sigma_z_cf(const LongitudinalRates& rates, const InitialState& init,
                                double nu, double t) {
    if (t < 0.0) throw DomainError("sigma_z_cf requires t >= 0");
    const double g = rates.gamma();
    if (g == 0.0) return 1.0;
    const double decay = std::exp(-g * t);
    const double grow = -std::expm1(-g * t);
    const double fp = rates.gamma_plus / g;
    const double fm = rates.gamma_minus / g;
    const double w = rates.rabi_frequency * nu;
    return fp * init.p1 * grow * std::polar(1.0, -w) + fm * init.p2 * grow * std::polar(1.0, w) +
           fp * (init.p2 + init.p1 * decay) + fm * (init.p1 + init.p2 * decay);
}

LongitudinalJumps sigma_z_jumps(const LongitudinalRates& rates, const InitialState& init,
                                double t) {
    if (t < 0.0) throw DomainError("sigma_z_jumps requires t >= 0");
    const double g = rates.gamma();
    if (g == 0.0) return {};
    const double grow = -std::expm1(-g * t);
    return {rates.gamma_minus / g * grow * init.p2, rates.gamma_plus / g * grow * init.p1};
}

HeatDistribution sigma_z_pdf(const LongitudinalRates& rates, const InitialState& init, double t,
                             double drive_frequency) {
    const auto jumps = sigma_z_jumps(rates, init, t);
    HeatDistribution dist;
    dist.drive_frequency = drive_frequency;
    dist.rabi_frequency = rates.rabi_frequency;
    dist.t = t;
    dist.atoms = {Atom{0, -1, jumps.p_up}, Atom{0, 0, 1.0 - jumps.p_up - jumps.p_down},
                  Atom{0, 1, jumps.p_down}};
    return dist;
}

double sigma_z_moment(const LongitudinalRates& rates, const InitialState& init, int k, double t) {
    if (k < 1) throw DomainError("moment order must be >= 1");
    const auto jumps = sigma_z_jumps(rates, init, t);
    const double sign = k % 2 == 0 ? 1.0 : -1.0;
    return std::pow(rates.rabi_frequency, k) * (jumps.p_down + sign * jumps.p_up);
}

GeneralizedRateMatrix undriven_generator(double omega, const BathParameters& bath, double nu) {
    if (!(omega > 0.0)) throw DomainError("undriven_generator requires omega > 0");
    const double n = bose_occupation(omega, bath);
    const double j = bath.coupling * omega;
    const double d = kPi * j * (n + 1.0);
    const double u = kPi * j * n;
    GeneralizedRateMatrix g;
    g.counting_field = nu;
    g.entries(0, 0) = -2.0 * u;
    g.entries(0, 1) = 2.0 * d * std::polar(1.0, omega * nu);
    g.entries(1, 0) = 2.0 * u * std::polar(1.0, -omega * nu);
    g.entries(1, 1) = -2.0 * d;
    return g;
}

} // namespace heatfcs
