#include "heatfcs/floquet.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "heatfcs/errors.hpp"

namespace heatfcs {

RabiParameters RabiParameters::from_detuning(double bare_gap, double drive_amplitude,
                                             double detuning, double drive_phase) {
    RabiParameters p{bare_gap, drive_amplitude, bare_gap - detuning, drive_phase};
    p.validate();
    return p;
}

Mat2 RabiParameters::hamiltonian(double t) const {
    const cplx drive = drive_amplitude * std::polar(1.0, drive_frequency * t - drive_phase);
    Mat2 h;
    h << 0.0, drive, std::conj(drive), bare_gap;
    return h;
}

void RabiParameters::validate() const {
    if (!(bare_gap > 0.0)) throw DomainError("bare gap omega must be > 0");
    if (!(drive_amplitude >= 0.0)) throw DomainError("drive amplitude g must be >= 0");
    if (!(drive_frequency > 0.0)) throw DomainError("drive frequency Omega must be > 0");
    if (!std::isfinite(drive_phase)) throw DomainError("drive phase must be finite");
}

InitialState InitialState::from_p1(double p1) {
    InitialState s{p1, 1.0 - p1};
    s.validate();
    return s;
}

void InitialState::validate() const {
    if (p1 < -1e-14 || p2 < -1e-14 || std::abs(p1 + p2 - 1.0) > 1e-12) {
        std::ostringstream os;
        os << "initial populations must be nonnegative and sum to 1 (p1=" << p1 << ", p2=" << p2
           << ")";
        throw DomainError(os.str());
    }
}

FloquetSolution rabi_floquet(const RabiParameters& params, std::size_t intervals) {
    params.validate();
    if (intervals < 4) throw DomainError("rabi_floquet needs at least 4 sampling intervals");

    const double detuning = params.detuning();
    const double g = params.drive_amplitude;
    const double theta = 0.5 * std::atan2(2.0 * g, detuning);
    const double omega_r = std::hypot(detuning, 2.0 * g);

    FloquetSolution sol;
    sol.eps1 = 0.5 * (detuning - omega_r);
    sol.eps2 = 0.5 * (detuning + omega_r);
    sol.mixing_angle = theta;
    sol.rabi_frequency = omega_r;
    sol.drive_frequency = params.drive_frequency;
    sol.period = 2.0 * kPi / params.drive_frequency;
    sol.modes.resize(intervals + 1);

    const double c = std::cos(theta);
    const double s = std::sin(theta);
    for (std::size_t j = 0; j <= intervals; ++j) {
        // the last sample is pinned to t = 0 so periodicity holds to rounding
        const std::size_t jj = j == intervals ? 0 : j;
        const double t = sol.period * static_cast<double>(jj) / static_cast<double>(intervals);
        const cplx rot = std::polar(1.0, params.drive_phase - params.drive_frequency * t);
        sol.modes[j][0] = Vec2(c, -s * rot);
        sol.modes[j][1] = Vec2(s, c * rot);
    }
    return sol;
}

namespace {

// One fourth-order Magnus step (two Gauss-Legendre nodes).
Mat2 magnus4_step(const HamiltonianSampler& h, double t, double dt) {
    constexpr double kOffset = 0.28867513459481288225;  // sqrt(3)/6
    const Mat2 h1 = h(t + (0.5 - kOffset) * dt);
    const Mat2 h2 = h(t + (0.5 + kOffset) * dt);
    const Mat2 comm = h2 * h1 - h1 * h2;
    // exponent -i K with K = dt/2 (H1 + H2) - i sqrt(3)/12 dt^2 [H2, H1]
    const Mat2 k = 0.5 * dt * (h1 + h2) - cplx(0.0, 0.14433756729740644113) * dt * dt * comm;
    return expm_hermitian(k);
}

void fix_gauge(Vec2& v) {
    const int big = std::abs(v(0)) >= std::abs(v(1)) ? 0 : 1;
    const cplx phase = v(big) / std::abs(v(big));
    v /= phase;
    v.normalize();
}

} // namespace

FloquetSolution monodromy_floquet(const HamiltonianSampler& hamiltonian, double drive_frequency,
                                  std::size_t grid_points, MonodromyOptions options) {
    if (!(drive_frequency > 0.0)) throw DomainError("drive frequency must be > 0");
    if (grid_points < 64) throw DomainError("monodromy_floquet needs grid_points >= 64");
    if (options.substeps == 0) options.substeps = 1;

    const double period = 2.0 * kPi / drive_frequency;
    const double dt = period / static_cast<double>(grid_points * options.substeps);

    std::vector<Mat2> propagators(grid_points + 1);
    propagators[0] = Mat2::Identity();
    Mat2 u = Mat2::Identity();
    for (std::size_t j = 0; j < grid_points; ++j) {
        for (std::size_t s = 0; s < options.substeps; ++s) {
            const double t = static_cast<double>(j * options.substeps + s) * dt;
            u = magnus4_step(hamiltonian, t, dt) * u;
        }
        propagators[j + 1] = u;
    }

    Eigen::ComplexEigenSolver<Mat2> solver(propagators.back());
    if (solver.info() != Eigen::Success) throw Error("monodromy eigen-decomposition failed");
    const auto& lambdas = solver.eigenvalues();

    const double separation = std::abs(std::arg(lambdas(0) * std::conj(lambdas(1))));
    if (separation < 2.0 * kPi * 1e-10) {
        std::ostringstream os;
        os << "quasienergy crossing: eigenphase separation " << separation / period
           << " is below 1e-10 Omega";
        throw QuasienergyCrossingError(os.str());
    }

    std::array<double, 2> eps{};
    std::array<Vec2, 2> initial{};
    for (int a = 0; a < 2; ++a) {
        eps[a] = -std::arg(lambdas(a)) / period;
        initial[a] = solver.eigenvectors().col(a);
    }
    if (eps[0] > eps[1]) {
        std::swap(eps[0], eps[1]);
        std::swap(initial[0], initial[1]);
    }
    for (auto& v : initial) fix_gauge(v);

    FloquetSolution sol;
    sol.eps1 = eps[0];
    sol.eps2 = eps[1];
    sol.rabi_frequency = eps[1] - eps[0];
    sol.drive_frequency = drive_frequency;
    sol.period = period;
    sol.modes.resize(grid_points + 1);
    for (std::size_t j = 0; j <= grid_points; ++j) {
        const double t = period * static_cast<double>(j) / static_cast<double>(grid_points);
        for (int a = 0; a < 2; ++a) {
            sol.modes[j][a] = std::polar(1.0, eps[a] * t) * (propagators[j] * initial[a]);
        }
    }
    return sol;
}

Vec2 bare_state(double delta, double gamma) {
    return Vec2(std::cos(delta), std::polar(std::sin(delta), -gamma));
}

InitialState bare_to_floquet_populations(double delta, double gamma, const FloquetSolution& sol,
                                         double phi) {
    if (!sol.mixing_angle) return floquet_populations(sol, bare_state(delta, gamma));
    const double theta = *sol.mixing_angle;
    double p1 = 0.5 * (1.0 + std::cos(2.0 * delta) * std::cos(2.0 * theta) -
                       std::sin(2.0 * delta) * std::sin(2.0 * theta) * std::cos(gamma + phi));
    p1 = std::clamp(p1, 0.0, 1.0);
    return InitialState{p1, 1.0 - p1};
}

InitialState floquet_populations(const FloquetSolution& sol, const Vec2& psi) {
    if (sol.modes.empty()) throw DomainError("Floquet solution has no mode samples");
    const double n = psi.squaredNorm();
    double p1 = std::norm(sol.modes.front()[0].dot(psi)) / n;
    p1 = std::clamp(p1, 0.0, 1.0);
    return InitialState{p1, 1.0 - p1};
}

} // namespace heatfcs
