// bath.hpp: thermal Ohmic environment, J(E) = eta * E, hbar = k_B = 1

#pragma once

#include <complex>

namespace heatfcs {

struct BathParameters {
    double coupling{0.01};           // eta, dimensionless Ohmic strength
    double inverse_temperature{10.0}; // beta; +infinity is the zero-temperature bath

    static BathParameters from_temperature(double coupling, double temperature);
    void validate() const;
};

enum class CorrelationSide { plus, minus };

// 1/(e^{beta E} - 1). Throws DomainError for E <= 0.
double bose_occupation(double energy, const BathParameters& bath);

// Absorption (E > 0) / emission (E < 0) spectral function of the bath.
// s(0) is the two-sided limit eta/beta.
double spectral_s(double energy, const BathParameters& bath);

// Half-range Fourier transform of the counting-field-shifted bath correlation
// function with principal-value parts dropped: I_{+/-}(nu, E) = pi e^{+/- i E nu} s(+/-E).
std::complex<double> correlation_integral(CorrelationSide side, double nu, double energy,
                                          const BathParameters& bath);

} // namespace heatfcs
