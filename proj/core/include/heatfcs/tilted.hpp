// tilted.hpp: counting-field-tilted population generator and its exact solution
//
// d/dt (rho11, rho22)^T = A(nu) (rho11, rho22)^T with
//   A11 = A11^nu - A11 - A21,  A12 = A12^nu,
//   A21 = A21^nu,              A22 = A22^nu - A22 - A12.
// G(nu, t) = rho11^nu(t) + rho22^nu(t) is the characteristic function <e^{i nu Q}>.

#pragma once

#include "heatfcs/floquet.hpp"
#include "heatfcs/linalg.hpp"
#include "heatfcs/rates.hpp"

namespace heatfcs {

struct GeneralizedRateMatrix {
    Mat2 entries = Mat2::Zero();
    double counting_field{0.0};
};

GeneralizedRateMatrix tilted_generator(const RateTable& table, double nu);

// Same generator conjugated by diag(1, e^{-i nu Omega_R}); it is periodic in nu with the
// drive period and has the same spectrum.
Mat2 periodic_tilted_generator(const RateTable& table, double nu);

struct SpectralDecomposition {
    cplx xi_minus;
    cplx xi_plus;
    Vec2 v_minus;  // component sums equal 1
    Vec2 v_plus;
    cplx c_minus;
    cplx c_plus;
    cplx h;        // sqrt(Sigma^2 + 4 Upsilon12^(2)), Re h >= 0
    cplx r;        // -Sigma + Upsilon11 + Upsilon22
    double sigma{0.0};
    bool near_defective{false};  // |h|^2 < 1e-12 Sigma^2: eigenvector formula unusable
};

// Below this |h|/Sigma the decomposition is flagged near-defective and the characteristic
// function is evaluated by a direct 2x2 matrix exponential instead of the eigen-expansion.
inline constexpr double kDefectiveFallback = 1e-6;

SpectralDecomposition spectral_decompose(const RateTable& table, double nu,
                                         const InitialState& init);

// Dominant eigenvalue xi_+(nu) only (no initial-state projection).
cplx dominant_eigenvalue(const RateTable& table, double nu);

std::complex<double> characteristic_function(const RateTable& table, const InitialState& init,
                                             double nu, double t);

// Dynamical steady state of the nu = 0 rate equation.
InitialState dss(const RateTable& table);

// Populations are frozen when A12 + A21 = 0.
InitialState propagate_populations(const RateTable& table, const InitialState& init, double t);

} // namespace heatfcs
