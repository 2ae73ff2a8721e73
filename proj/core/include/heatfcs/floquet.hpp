// floquet.hpp: Floquet solution of a periodically driven two-level system
//
// Basis (|0>, |1>), |0> the bare ground state. The Rabi Hamiltonian is
//   H(t) = omega |1><1| + g [ e^{i(Omega t - phi)} |0><1| + h.c. ].
// Detuning is stored as Delta = omega - Omega. Quasienergies are labelled so that
// eps2 - eps1 = +Omega_R.

#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "heatfcs/linalg.hpp"

namespace heatfcs {

struct RabiParameters {
    double bare_gap{1.0};          // omega
    double drive_amplitude{0.1};   // g
    double drive_frequency{0.98};  // Omega
    double drive_phase{0.0};       // phi (radians)

    // Builds parameters from Delta = omega - Omega.
    static RabiParameters from_detuning(double bare_gap, double drive_amplitude, double detuning,
                                        double drive_phase = 0.0);
    double detuning() const { return bare_gap - drive_frequency; }
    Mat2 hamiltonian(double t) const;
    void validate() const;
};

// Periodic Floquet modes sampled on t_j = j * period / intervals, j = 0..intervals
// (both endpoints included). modes[j][alpha], alpha = 0 for state 1, 1 for state 2.
struct FloquetSolution {
    double eps1{0.0};
    double eps2{0.0};
    std::optional<double> mixing_angle;  // theta, only for the analytic Rabi solution
    double rabi_frequency{0.0};          // eps2 - eps1
    double drive_frequency{1.0};
    double period{0.0};
    std::vector<std::array<Vec2, 2>> modes;

    std::size_t intervals() const { return modes.empty() ? 0 : modes.size() - 1; }
    double sample_time(std::size_t j) const {
        return period * static_cast<double>(j) / static_cast<double>(intervals());
    }
    double quasienergy(int alpha) const { return alpha == 0 ? eps1 : eps2; }
};

// Floquet-basis populations rho_11(0), rho_22(0).
struct InitialState {
    double p1{1.0};
    double p2{0.0};

    static InitialState from_p1(double p1);
    double z() const { return p2 - p1; }
    void validate() const;
};

FloquetSolution rabi_floquet(const RabiParameters& params, std::size_t intervals = 512);

using HamiltonianSampler = std::function<Mat2(double)>;

struct MonodromyOptions {
    std::size_t substeps{8};  // fourth-order Magnus steps per grid interval
};

// Diagonalizes the one-period propagator. Quasienergies are folded into (-Omega/2, Omega/2]
// and ordered eps1 < eps2.
FloquetSolution monodromy_floquet(const HamiltonianSampler& hamiltonian, double drive_frequency,
                                  std::size_t grid_points, MonodromyOptions options = {});

// State cos(delta)|0> + e^{-i gamma} sin(delta)|1>. With this parametrization the overlap
// with the Rabi mode 1 reproduces the closed-form population below.
Vec2 bare_state(double delta, double gamma);

// rho_11(0) = 1/2 [1 + cos 2delta cos 2theta - sin 2delta sin 2theta cos(gamma + phi)].
// Solutions without a mixing angle fall back to the mode overlap at t = 0.
InitialState bare_to_floquet_populations(double delta, double gamma, const FloquetSolution& sol,
                                         double phi);

// |<phi_alpha(0)|psi>|^2 for a normalized bare-basis state.
InitialState floquet_populations(const FloquetSolution& sol, const Vec2& psi);

} // namespace heatfcs
