#include "heatfcs/tilted.hpp"

#include <cmath>
#include <sstream>

#include "heatfcs/errors.hpp"

namespace heatfcs {

namespace {

Mat2 generator_from(const Mat2& tilted, const Eigen::Matrix2d& a) {
    Mat2 m;
    m(0, 0) = tilted(0, 0) - a(0, 0) - a(1, 0);
    m(0, 1) = tilted(0, 1);
    m(1, 0) = tilted(1, 0);
    m(1, 1) = tilted(1, 1) - a(1, 1) - a(0, 1);
    return m;
}

void require_relaxation(const RateTable& table) {
    if (!(table.relaxation() > 0.0)) {
        std::ostringstream os;
        os << "degenerate generator: A12 + A21 = " << table.relaxation();
        throw DegenerateGeneratorError(os.str());
    }
}

} // namespace

GeneralizedRateMatrix tilted_generator(const RateTable& table, double nu) {
    return {generator_from(aggregate_nu(table, nu), table.aggregate), nu};
}

Mat2 periodic_tilted_generator(const RateTable& table, double nu) {
    return generator_from(aggregate_harmonic(table, nu), table.aggregate);
}

namespace {

// Pieces of the generator with every small nu-dependent difference evaluated without cancellation.
struct Pieces {
    Mat2 a_nu;
    Mat2 ups;  // A^nu - A, from e^{-ix} - 1 = -2i sin(x/2) e^{-ix/2}
    cplx ups2;  // A12^nu A21^nu - A12 A21
    double sigma{0.0};
    cplx r, h, xi_plus, xi_minus;
};

Pieces pieces(const RateTable& table, double nu) {
    require_relaxation(table);
    Pieces p;
    p.ups = Mat2::Zero();
    for (const auto& ch : table.channels) {
        const double x = nu * ch.energy;
        p.ups(ch.to, ch.from) += ch.rate * cplx(0.0, -2.0 * std::sin(0.5 * x)) * std::polar(1.0, -0.5 * x);
    }
    const auto& a = table.aggregate;
    p.a_nu = a.cast<cplx>() + p.ups;
    p.sigma = a(0, 1) + a(1, 0);
    p.ups2 = a(0, 1) * p.ups(1, 0) + p.ups(0, 1) * a(1, 0) + p.ups(0, 1) * p.ups(1, 0);
    p.r = -p.sigma + p.ups(0, 0) + p.ups(1, 1);
    // principal branch: Re h >= 0, so xi_+ is the eigenvalue with the larger real part
    p.h = std::sqrt(p.sigma * p.sigma + 4.0 * p.ups2);
    // det of the generator, written in the small quantities
    const cplx det = p.ups(0, 0) * p.ups(1, 1) - p.ups(0, 0) * a(0, 1) - p.ups(1, 1) * a(1, 0) - p.ups2;
    if (std::abs(p.r - p.h) >= std::abs(p.r + p.h)) {
        p.xi_minus = 0.5 * (p.r - p.h);
        p.xi_plus = p.xi_minus == 0.0 ? 0.5 * (p.r + p.h) : det / p.xi_minus;
    } else {
        p.xi_plus = 0.5 * (p.r + p.h);
        p.xi_minus = det / p.xi_plus;
    }
    return p;
}

// (s + h, s - h) where the smaller of the two is recovered from the accurate product prod.
std::pair<cplx, cplx> split(const cplx& s, const cplx& h, const cplx& prod) {
    const cplx plus = s + h, minus = s - h;
    if (std::abs(plus) >= std::abs(minus))
        return {plus, plus == 0.0 ? minus : prod / plus};
    return {prod / minus, minus};
}

} // namespace

cplx dominant_eigenvalue(const RateTable& table, double nu) { return pieces(table, nu).xi_plus; }

SpectralDecomposition spectral_decompose(const RateTable& table, double nu,
                                         const InitialState& init) {
    const Pieces p = pieces(table, nu);
    const auto& a = table.aggregate;

    SpectralDecomposition d;
    d.sigma = p.sigma;
    d.r = p.r;
    d.h = p.h;
    d.xi_plus = p.xi_plus;
    d.xi_minus = p.xi_minus;
    d.near_defective = std::norm(d.h) < kDefectiveFallback * kDefectiveFallback * d.sigma * d.sigma;

    const double diff = a(0, 1) - a(1, 0);
    const cplx ups12 = p.ups(0, 1), ups21 = p.ups(1, 0);
    const cplx a21 = p.a_nu(1, 0);
    // (diff + 2 A21^nu)^2 - h^2 = 4 A21^nu (Upsilon21 - Upsilon12)
    const auto [den_plus, den_minus] = split(diff + 2.0 * a21, d.h, 4.0 * a21 * (ups21 - ups12));
    d.v_plus = Vec2(diff + d.h, 2.0 * a21) / den_plus;
    d.v_minus = Vec2(diff - d.h, 2.0 * a21) / den_minus;

    // h^2 - (A12^nu + A21^nu)^2 = (Upsilon21 - Upsilon12)(A12 + A12^nu - A21 - A21^nu)
    const cplx sum_nu = p.a_nu(0, 1) + a21;
    const auto [h_plus_sum, h_minus_sum] =
        split(d.h, sum_nu, (ups21 - ups12) * (a(0, 1) + p.a_nu(0, 1) - a(1, 0) - a21));
    const double z = init.z();
    d.c_minus = (h_minus_sum + (ups21 - ups12) * z) / (2.0 * d.h);
    d.c_plus = (h_plus_sum + (ups12 - ups21) * z) / (2.0 * d.h);
    return d;
}

std::complex<double> characteristic_function(const RateTable& table, const InitialState& init,
                                             double nu, double t) {
    if (t < 0.0) throw DomainError("characteristic_function requires t >= 0");
    const SpectralDecomposition d = spectral_decompose(table, nu, init);
    if (d.near_defective) {
        const Mat2 e = expm2(tilted_generator(table, nu).entries * t);
        const Vec2 p0(init.p1, init.p2);
        return (e * p0).sum();
    }
    return d.c_minus * std::exp(d.xi_minus * t) + d.c_plus * std::exp(d.xi_plus * t);
}

InitialState dss(const RateTable& table) {
    require_relaxation(table);
    const double sigma = table.relaxation();
    return InitialState{table.rate(0, 1) / sigma, table.rate(1, 0) / sigma};
}

InitialState propagate_populations(const RateTable& table, const InitialState& init, double t) {
    if (t < 0.0) throw DomainError("propagate_populations requires t >= 0");
    if (t == 0.0 || table.relaxation() == 0.0) return init;
    const InitialState st = dss(table);
    const double decay = std::exp(-table.relaxation() * t);
    const double p1 = st.p1 + (init.p1 - st.p1) * decay;
    return InitialState{p1, st.p2 + (init.p2 - st.p2) * decay};
}

} // namespace heatfcs
