// linalg.hpp: small dense helpers for 2x2 complex matrices

#pragma once

#include <complex>

#include <Eigen/Dense>

namespace heatfcs {

using cplx = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;
using Vec2 = Eigen::Vector2cd;

inline constexpr double kPi = 3.14159265358979323846264338327950288;

namespace pauli {
// Basis ordering is (|0>, |1>) with |0> the bare ground state.
// sigma_z is oriented so that H0 = (omega/2)(1 + sigma_z) puts |1> at energy omega.
Mat2 identity();
Mat2 sigma_x();
Mat2 sigma_y();
Mat2 sigma_z();
} // namespace pauli

// exp(M) for an arbitrary complex 2x2 matrix. Stable for large |M| as long as the
// result itself is representable (both eigen-exponentials are evaluated separately).
Mat2 expm2(const Mat2& m);

// exp(-i K) for Hermitian K, via the SU(2) closed form.
Mat2 expm_hermitian(const Mat2& k);

// Eigenvalues of a 2x2 matrix by the quadratic formula, larger real part first.
std::pair<cplx, cplx> eigenvalues2(const Mat2& m);

bool is_hermitian(const Mat2& m, double tol = 1e-12);

} // namespace heatfcs
