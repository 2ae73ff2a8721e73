#include "heatfcs/rates.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "heatfcs/errors.hpp"
#include "fft.hpp"

namespace heatfcs {

CouplingMatrixElements::CouplingMatrixElements(int k) : k_max(k) {
    if (k < 0) throw DomainError("k_max must be >= 0");
    for (auto& row : entries)
        for (auto& v : row) v.assign(static_cast<std::size_t>(2 * k + 1), cplx{});
}

cplx CouplingMatrixElements::at(int alpha, int beta, int k) const {
    if (k < -k_max || k > k_max) return {};
    return entries[alpha][beta][static_cast<std::size_t>(k + k_max)];
}

cplx& CouplingMatrixElements::at(int alpha, int beta, int k) {
    if (k < -k_max || k > k_max) throw DomainError("harmonic index outside [-k_max, k_max]");
    return entries[alpha][beta][static_cast<std::size_t>(k + k_max)];
}

CouplingMatrixElements coupling_fourier(const Mat2& coupling, const FloquetSolution& sol,
                                        int k_max) {
    const std::size_t n = sol.intervals();
    if (k_max < 0) throw DomainError("k_max must be >= 0");
    if (n < static_cast<std::size_t>(4 * std::max(k_max, 1))) {
        std::ostringstream os;
        os << "coupling_fourier: " << n << " samples per period cannot resolve k_max=" << k_max
           << " (need >= " << 4 * std::max(k_max, 1) << ")";
        throw DomainError(os.str());
    }
    if (!is_hermitian(coupling)) throw DomainError("coupling operator must be Hermitian");

    // integrand samples f_ab(t_j) = <phi_a(t_j)| S |phi_b(t_j)>
    std::array<std::array<std::vector<cplx>, 2>, 2> samples;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            auto& f = samples[a][b];
            f.resize(n);
            for (std::size_t j = 0; j < n; ++j)
                f[j] = sol.modes[j][a].dot(coupling * sol.modes[j][b]);
        }

    // all resolvable harmonics |k| < n/2
    const int k_res = static_cast<int>(n / 2) - 1;
    std::array<std::array<std::vector<cplx>, 2>, 2> spectra;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) spectra[a][b] = detail::forward_dft(samples[a][b]);
    auto harmonic = [&](int a, int b, int k) {
        const auto len = static_cast<long>(n);
        return spectra[a][b][static_cast<std::size_t>(((k % len) + len) % len)];
    };

    CouplingMatrixElements out(k_max);
    // entries that vanish identically only carry round-off; measure tails against the operator too
    const double floor = 1e-24 * coupling.squaredNorm();
    int required = 0;
    bool truncated = false;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            std::vector<double> power(static_cast<std::size_t>(2 * k_res + 1));
            double total = 0.0;
            for (int k = -k_res; k <= k_res; ++k) {
                const cplx c = harmonic(a, b, k);
                power[static_cast<std::size_t>(k + k_res)] = std::norm(c);
                total += std::norm(c);
                if (std::abs(k) <= k_max) out.at(a, b, k) = c;
            }
            const double allowed = 1e-12 * total + floor;
            // smallest cutoff whose tail is below 1e-12 of the total
            double tail = 0.0;
            int need = 0;
            for (int k = k_res; k >= 0; --k) {
                const double shell = power[static_cast<std::size_t>(k + k_res)] +
                                     (k > 0 ? power[static_cast<std::size_t>(-k + k_res)] : 0.0);
                if (tail + shell > allowed) {
                    need = k;
                    break;
                }
                tail += shell;
            }
            required = std::max(required, need);
            if (need > k_max) truncated = true;
        }
    if (truncated) {
        std::ostringstream os;
        os << "coupling Fourier series not converged at k_max=" << k_max << "; required k_max="
           << required;
        throw TruncationError(os.str(), required);
    }
    return out;
}

CouplingMatrixElements sigma_x_elements(double theta) {
    CouplingMatrixElements el(1);
    const double half_sin2 = 0.5 * std::sin(2.0 * theta);
    const double c2 = std::cos(theta) * std::cos(theta);
    const double s2 = std::sin(theta) * std::sin(theta);
    for (int k : {-1, 1}) {
        el.at(0, 0, k) = -half_sin2;
        el.at(1, 1, k) = half_sin2;
    }
    el.at(0, 1, -1) = c2;
    el.at(0, 1, 1) = -s2;
    el.at(1, 0, 1) = c2;
    el.at(1, 0, -1) = -s2;
    return el;
}

CouplingMatrixElements sigma_z_elements(double theta) {
    CouplingMatrixElements el(0);
    el.at(0, 0, 0) = -std::cos(2.0 * theta);
    el.at(1, 1, 0) = std::cos(2.0 * theta);
    el.at(0, 1, 0) = -std::sin(2.0 * theta);
    el.at(1, 0, 0) = -std::sin(2.0 * theta);
    return el;
}

double RateTable::period() const { return 2.0 * kPi / drive_frequency; }

void RateTable::validate() const {
    Eigen::Matrix2d sum = Eigen::Matrix2d::Zero();
    const double scale = std::max(drive_frequency, std::abs(rabi_frequency()));
    for (const auto& ch : channels) {
        if (!(ch.rate >= 0.0) || !std::isfinite(ch.rate)) {
            std::ostringstream os;
            os << "negative or non-finite rate " << ch.rate << " on channel (" << ch.to + 1 << ","
               << ch.from + 1 << "," << ch.harmonic << ")";
            throw InvariantError(os.str());
        }
        const double expected = (ch.to == 0 ? eps1 : eps2) - (ch.from == 0 ? eps1 : eps2) +
                                ch.harmonic * drive_frequency;
        if (std::abs(expected - ch.energy) > 1e-12 * scale)
            throw InvariantError("channel transition energy inconsistent with quasienergies");
        sum(ch.to, ch.from) += ch.rate;
    }
    if ((sum - aggregate).cwiseAbs().maxCoeff() > 1e-12 * std::max(1e-300, sum.cwiseAbs().maxCoeff()))
        throw InvariantError("aggregate rates differ from the sum of partial rates");
}

RateTable partial_rates(const CouplingMatrixElements& elements, const FloquetSolution& sol,
                        const BathParameters& bath) {
    bath.validate();
    RateTable table;
    table.eps1 = sol.eps1;
    table.eps2 = sol.eps2;
    table.drive_frequency = sol.drive_frequency;

    double largest = 0.0;
    for (const auto& row : elements.entries)
        for (const auto& v : row)
            for (const auto& c : v) largest = std::max(largest, std::norm(c));
    // harmonics at quadrature round-off level are not physical channels
    const double floor = 1e-24 * largest;

    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int k = -elements.k_max; k <= elements.k_max; ++k) {
                const double amp2 = std::norm(elements.at(a, b, k));
                if (amp2 <= floor || amp2 == 0.0) continue;
                RateChannel ch;
                ch.to = a;
                ch.from = b;
                ch.harmonic = k;
                ch.energy = sol.quasienergy(a) - sol.quasienergy(b) + k * sol.drive_frequency;
                ch.amplitude2 = amp2;
                ch.rate = 2.0 * kPi * spectral_s(ch.energy, bath) * amp2;
                table.aggregate(a, b) += ch.rate;
                table.channels.push_back(ch);
            }
    return table;
}

Mat2 aggregate_nu(const RateTable& table, double nu) {
    Mat2 out = Mat2::Zero();
    for (const auto& ch : table.channels) out(ch.to, ch.from) += std::polar(ch.rate, -nu * ch.energy);
    return out;
}

Mat2 aggregate_harmonic(const RateTable& table, double nu) {
    Mat2 out = Mat2::Zero();
    for (const auto& ch : table.channels)
        out(ch.to, ch.from) += std::polar(ch.rate, -nu * ch.harmonic * table.drive_frequency);
    return out;
}

} // namespace heatfcs
