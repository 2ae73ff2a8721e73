// distribution.hpp: heat distributions supported on the lattice Q = n Omega + m Omega_R

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace heatfcs {

struct Atom {
    long n{0};
    int m{0};  // -1, 0 or +1
    double weight{0.0};
};

struct EnvelopeParameters {
    double a{0.0};  // drift: mean heat = a t Omega
    double b{0.0};  // diffusion: variance = 2 b t Omega^2
};

struct HeatDistribution {
    double drive_frequency{1.0};
    double rabi_frequency{0.0};
    double t{0.0};
    std::vector<Atom> atoms;
    std::optional<EnvelopeParameters> envelope;
    std::vector<std::string> warnings;

    double heat(const Atom& atom) const {
        return static_cast<double>(atom.n) * drive_frequency + atom.m * rabi_frequency;
    }
    double total() const;
    double mean() const;
    double central_moment(int k) const;
    // Sorts atoms by (n, m) and merges duplicates.
    void canonicalize();
    // Throws InvariantError unless weights are >= -1e-12, sum to 1 within tol and m in {-1,0,1}.
    void validate(double tol = 1e-8) const;
};

// Nearest lattice point (n, m) to Q, or nullopt if none lies within tol.
std::optional<Atom> snap_to_lattice(double q, double drive_frequency, double rabi_frequency,
                                    double tol = 1e-9);

// Total mass per bin of width `bin_width` centred on integer multiples of it.
std::map<long, double> coarse_grain(const HeatDistribution& dist, double bin_width);

// 1/2 sum |p - q| over bins of width `bin_width` (0 means atom-level comparison).
double total_variation(const HeatDistribution& p, const HeatDistribution& q, double bin_width);

} // namespace heatfcs
