#include "heatfcs/heat_statistics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <tuple>
#include <sstream>

#include "heatfcs/differentiate.hpp"
#include "heatfcs/errors.hpp"
#include "heatfcs/tilted.hpp"
#include "fft.hpp"

namespace heatfcs {

namespace {

// Heat power released from each Floquet state: -sum_{a,k} Delta a over channels leaving b.
std::array<double, 2> power_by_source(const RateTable& table) {
    std::array<double, 2> p{0.0, 0.0};
    for (const auto& ch : table.channels) p[ch.from] -= ch.energy * ch.rate;
    return p;
}

double energy_scale(const RateTable& table) {
    return table.drive_frequency + std::abs(table.rabi_frequency());
}

RichardsonOptions derivative_options(const RateTable& table, int order, double scale_time) {
    RichardsonOptions opt;
    opt.initial_step = 1e-3 * table.period();
    opt.max_levels = 10;
    opt.rel_tol = order == 1 ? 1e-11 : (order == 2 ? 1e-10 : 1e-8);
    opt.abs_tol = 1e-9 * table.relaxation() * std::pow(energy_scale(table), order) * scale_time;
    return opt;
}

// (-i)^n * value, checked to be real
double real_cumulant(cplx derivative, int n, double abs_tol) {
    cplx v = derivative;
    for (int i = 0; i < n; ++i) v *= cplx(0.0, -1.0);
    if (std::abs(v.imag()) > 1e-10 * std::abs(v.real()) + abs_tol) {
        std::ostringstream os;
        os << "cumulant of order " << n << " has imaginary residue " << v.imag()
           << " (real part " << v.real() << ")";
        throw DifferentiationError(os.str());
    }
    return v.real();
}

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

} // namespace

double mean_heat_power(const RateTable& table, const InitialState& populations) {
    const auto p = power_by_source(table);
    return p[0] * populations.p1 + p[1] * populations.p2;
}

double mean_heat(const RateTable& table, const InitialState& init, double t) {
    if (t < 0.0) throw DomainError("mean_heat requires t >= 0");
    const auto p = power_by_source(table);
    const double sigma = table.relaxation();
    // no transitions between the Floquet states: populations stay put
    if (sigma == 0.0) return t * (p[0] * init.p1 + p[1] * init.p2);
    const InitialState st = dss(table);
    const double transient = -std::expm1(-sigma * t) / sigma;
    const double occ1 = st.p1 * t + (init.p1 - st.p1) * transient;
    const double occ2 = st.p2 * t + (init.p2 - st.p2) * transient;
    return p[0] * occ1 + p[1] * occ2;
}

std::vector<double> dominant_cumulant_rates(const RateTable& table, int order) {
    if (order < 1 || order > 3) throw DomainError("cumulant order must be in 1..3");
    auto xi = [&table](double nu) { return dominant_eigenvalue(table, nu); };
    std::vector<double> rates;
    for (int n = 1; n <= order; ++n) {
        const auto opt = derivative_options(table, n, 1.0);
        const auto d = richardson_derivative(xi, 0.0, n, opt);
        rates.push_back(real_cumulant(d.value, n, opt.abs_tol));
    }
    return rates;
}

CumulantSet longtime_cumulants(const RateTable& table, double t, int order) {
    if (t < 0.0) throw DomainError("longtime_cumulants requires t >= 0");
    const auto rates = dominant_cumulant_rates(table, order);
    CumulantSet c;
    c.t = t;
    const double nan = std::numeric_limits<double>::quiet_NaN();
    c.mean_rate = rates[0];
    c.variance_rate = order >= 2 ? rates[1] : nan;
    c.skewness_rate = order >= 3 ? rates[2] : nan;
    c.mean = c.mean_rate * t;
    c.variance = c.variance_rate * t;
    c.skewness = c.skewness_rate * t;
    if (t * table.relaxation() < 10.0) {
        std::ostringstream os;
        os << "t = " << t << " is not long compared with 1/(A12+A21) = " << 1.0 / table.relaxation();
        c.warnings.push_back(os.str());
    }
    return c;
}

CumulantSet finite_time_cumulants(const RateTable& table, const InitialState& init, double t) {
    if (t < 0.0) throw DomainError("finite_time_cumulants requires t >= 0");
    CumulantSet c;
    c.t = t;
    if (t == 0.0) return c;
    // log G = xi_+ t + log(c_+ + c_- e^{(xi_- - xi_+) t}); avoids phase wrapping of log G
    auto log_g = [&](double nu) {
        const auto d = spectral_decompose(table, nu, init);
        if (std::abs(d.h) < kDefectiveFallback * d.sigma)
            return std::log(characteristic_function(table, init, nu, t));
        return d.xi_plus * t + std::log(d.c_plus + d.c_minus * std::exp((d.xi_minus - d.xi_plus) * t));
    };
    std::array<double, 3> k{};
    for (int n = 1; n <= 3; ++n) {
        const auto opt = derivative_options(table, n, std::max(t, 1.0 / table.relaxation()));
        const auto d = richardson_derivative(log_g, 0.0, n, opt);
        k[static_cast<std::size_t>(n - 1)] = real_cumulant(d.value, n, opt.abs_tol);
    }
    c.mean = k[0];
    c.variance = k[1];
    c.skewness = k[2];
    c.mean_rate = c.mean / t;
    c.variance_rate = c.variance / t;
    c.skewness_rate = c.skewness / t;
    return c;
}

EnvelopeParameters envelope_parameters(const RateTable& table) {
    const auto rates = dominant_cumulant_rates(table, 2);
    const double omega = table.drive_frequency;
    EnvelopeParameters env{rates[0] / omega, 0.5 * rates[1] / (omega * omega)};
    if (!(env.b > 1e-14 * table.relaxation())) {
        std::ostringstream os;
        os << "Gaussian expansion invalid: b = " << env.b << " <= 0";
        throw InvalidExpansionError(os.str());
    }
    return env;
}

double gaussian_envelope(double q, double t, const EnvelopeParameters& env, double omega) {
    if (!(t > 0.0)) throw DomainError("gaussian_envelope requires t > 0");
    const double sd = std::sqrt(2.0 * env.b * t) * omega;
    const double x = q - env.a * t * omega;
    return std::exp(-x * x / (4.0 * env.b * t * omega * omega)) / (std::sqrt(2.0 * kPi) * sd);
}

double gaussian_envelope(double q, double t, const RateTable& table) {
    return gaussian_envelope(q, t, envelope_parameters(table), table.drive_frequency);
}

HeatDistribution longtime_pdf(const RateTable& table, const InitialState& init, double t,
                              const LongtimePdfOptions& options) {
    if (!(t > 0.0)) throw DomainError("longtime_pdf requires t > 0");
    const EnvelopeParameters env = envelope_parameters(table);
    const double omega = table.drive_frequency;
    const double sigma_total = table.relaxation();
    const double p_up = table.rate(1, 0) * init.p1 / sigma_total;
    const double p_down = table.rate(0, 1) * init.p2 / sigma_total;
    const std::array<double, 3> triplet{p_up, 1.0 - p_up - p_down, p_down};  // m = -1, 0, +1

    const double mean = env.a * t * omega;
    const double sd = std::sqrt(2.0 * env.b * t) * omega;

    HeatDistribution dist;
    dist.drive_frequency = omega;
    dist.rabi_frequency = table.rabi_frequency();
    dist.t = t;
    dist.envelope = env;
    if (env.b * t < options.validity_threshold) {
        std::ostringstream os;
        os << "b t = " << env.b * t << " is below the long-time threshold "
           << options.validity_threshold;
        dist.warnings.push_back(os.str());
    }

    auto comb_mass = [&](long lo, long hi, std::vector<Atom>* out) {
        double mass = 0.0;
        for (long n = lo; n <= hi; ++n)
            for (int m = -1; m <= 1; ++m) {
                const double q = static_cast<double>(n) * omega + m * dist.rabi_frequency;
                const double w = triplet[static_cast<std::size_t>(m + 1)] *
                                 gaussian_envelope(q, t, env, omega) * omega;
                mass += w;
                if (out) out->push_back(Atom{n, m, w});
            }
        return mass;
    };

    const long wide_lo = static_cast<long>(std::floor((mean - 14.0 * sd) / omega)) - 2;
    const long wide_hi = static_cast<long>(std::ceil((mean + 14.0 * sd) / omega)) + 2;
    const double full = comb_mass(wide_lo, wide_hi, nullptr);

    long lo = static_cast<long>(std::floor((mean - 8.0 * sd) / omega)) - 1;
    long hi = static_cast<long>(std::ceil((mean + 8.0 * sd) / omega)) + 1;
    if (options.n_range) std::tie(lo, hi) = *options.n_range;
    const double kept = comb_mass(lo, hi, &dist.atoms);
    if (kept < (1.0 - 1e-8) * full) {
        std::ostringstream os;
        os << "atom window [" << lo << ", " << hi << "] keeps " << kept / full
           << " of the comb mass (need >= 1 - 1e-8)";
        throw MassDeficitError(os.str());
    }
    for (auto& a : dist.atoms) a.weight /= kept;
    return dist;
}

std::size_t suggested_grid(const RateTable& table, const InitialState& init, double t) {
    if (t <= 0.0) return 256;
    const double omega = table.drive_frequency;
    const CumulantSet c = finite_time_cumulants(table, init, t);
    const double width = 24.0 * std::sqrt(std::max(c.variance, 0.0)) / omega + 16.0;
    std::size_t n = 256;
    while (static_cast<double>(n) < 2.0 * width) n *= 2;
    return n;
}

HeatDistribution finite_time_pdf(const RateTable& table, const InitialState& init, double t,
                                 std::size_t grid) {
    if (!is_power_of_two(grid) || grid < 256)
        throw DomainError("finite_time_pdf grid must be a power of two >= 256");
    if (t < 0.0) throw DomainError("finite_time_pdf requires t >= 0");

    HeatDistribution dist;
    dist.drive_frequency = table.drive_frequency;
    dist.rabi_frequency = table.rabi_frequency();
    dist.t = t;
    if (t == 0.0) {
        dist.atoms.push_back(Atom{0, 0, 1.0});
        return dist;
    }

    const double period = table.period();
    std::array<std::vector<cplx>, 3> phi;  // m = -1, 0, +1
    for (auto& v : phi) v.resize(grid);
    for (std::size_t j = 0; j < grid; ++j) {
        const double nu = period * static_cast<double>(j) / static_cast<double>(grid);
        const Mat2 e = expm2(periodic_tilted_generator(table, nu) * t);
        phi[0][j] = e(1, 0) * init.p1;
        phi[1][j] = e(0, 0) * init.p1 + e(1, 1) * init.p2;
        phi[2][j] = e(0, 1) * init.p2;
    }

    const long n_grid = static_cast<long>(grid);
    const long centre = std::lround(mean_heat(table, init, t) / table.drive_frequency);
    const long lo = centre - n_grid / 2;
    const long edge = n_grid / 16;

    double max_imag = 0.0;
    double min_weight = 0.0;
    double edge_mass = 0.0;
    for (int m = -1; m <= 1; ++m) {
        const auto spectrum = detail::forward_dft(phi[static_cast<std::size_t>(m + 1)]);
        for (long n = lo; n < lo + n_grid; ++n) {
            const auto idx = static_cast<std::size_t>(((n % n_grid) + n_grid) % n_grid);
            const cplx w = spectrum[idx];
            max_imag = std::max(max_imag, std::abs(w.imag()));
            min_weight = std::min(min_weight, w.real());
            if (n < lo + edge || n >= lo + n_grid - edge) edge_mass += std::abs(w.real());
            if (w.real() > 0.0) dist.atoms.push_back(Atom{n, m, w.real()});
        }
    }
    if (max_imag > 1e-10 || min_weight < -1e-10) {
        std::ostringstream os;
        os << "comb decomposition produced non-real weights (max |Im| = " << max_imag
           << ", min Re = " << min_weight << ")";
        throw DecompositionError(os.str());
    }
    if (edge_mass > 1e-9) {
        std::ostringstream os;
        os << "counting-field grid of " << grid << " points does not resolve the distribution "
           << "(mass " << edge_mass << " near the aliasing boundary); try grid >= "
           << suggested_grid(table, init, t);
        throw ResolutionError(os.str());
    }
    const double mass = dist.total();
    if (std::abs(mass - 1.0) > 1e-8) {
        std::ostringstream os;
        os << "finite-time distribution mass " << mass << " outside 1 +- 1e-8";
        throw ResolutionError(os.str());
    }
    for (auto& a : dist.atoms) a.weight /= mass;
    dist.canonicalize();
    return dist;
}

} // namespace heatfcs
