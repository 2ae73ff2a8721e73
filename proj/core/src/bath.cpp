#include "heatfcs/bath.hpp"

#include <cmath>
#include <string>

#include "heatfcs/errors.hpp"
#include "heatfcs/linalg.hpp"

namespace heatfcs {

BathParameters BathParameters::from_temperature(double coupling, double temperature) {
    if (!(temperature >= 0.0)) throw DomainError("bath temperature must be >= 0");
    BathParameters b;
    b.coupling = coupling;
    b.inverse_temperature = temperature == 0.0 ? INFINITY : 1.0 / temperature;
    b.validate();
    return b;
}

void BathParameters::validate() const {
    if (!(coupling > 0.0) || !std::isfinite(coupling))
        throw DomainError("bath coupling eta must be positive and finite, got " + std::to_string(coupling));
    if (!(inverse_temperature > 0.0))
        throw DomainError("inverse temperature beta must be positive, got " +
                          std::to_string(inverse_temperature));
}

double bose_occupation(double energy, const BathParameters& bath) {
    if (!(energy > 0.0))
        throw DomainError("bose_occupation requires E > 0, got " + std::to_string(energy));
    return 1.0 / std::expm1(bath.inverse_temperature * energy);
}

double spectral_s(double energy, const BathParameters& bath) {
    const double eta = bath.coupling;
    if (energy > 0.0) return eta * energy * bose_occupation(energy, bath);
    if (energy < 0.0) return -eta * energy * (bose_occupation(-energy, bath) + 1.0);
    return eta / bath.inverse_temperature;
}

std::complex<double> correlation_integral(CorrelationSide side, double nu, double energy,
                                          const BathParameters& bath) {
    const double sign = side == CorrelationSide::plus ? 1.0 : -1.0;
    return kPi * std::polar(1.0, sign * energy * nu) * spectral_s(sign * energy, bath);
}

} // namespace heatfcs
