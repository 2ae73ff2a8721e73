#include "heatfcs/linalg.hpp"

#include <cmath>

namespace heatfcs {

namespace pauli {
Mat2 identity() { return Mat2::Identity(); }

Mat2 sigma_x() {
    Mat2 m;
    m << 0.0, 1.0, 1.0, 0.0;
    return m;
}

Mat2 sigma_y() {
    Mat2 m;
    m << 0.0, cplx(0.0, -1.0), cplx(0.0, 1.0), 0.0;
    return m;
}

Mat2 sigma_z() {
    Mat2 m;
    m << -1.0, 0.0, 0.0, 1.0;
    return m;
}
} // namespace pauli

namespace {

// sinh(x)/x and cosh(x) for small complex x by Taylor series (|x| < 0.5 → 1e-18 truncation).
void small_hyperbolic(cplx x, cplx& cosh_x, cplx& sinhc_x) {
    const cplx x2 = x * x;
    cplx term_c = 1.0;
    cplx term_s = 1.0;
    cosh_x = 1.0;
    sinhc_x = 1.0;
    for (int k = 1; k <= 12; ++k) {
        term_c *= x2 / double((2 * k - 1) * (2 * k));
        term_s *= x2 / double((2 * k) * (2 * k + 1));
        cosh_x += term_c;
        sinhc_x += term_s;
    }
}

} // namespace

Mat2 expm2(const Mat2& m) {
    const cplx r = m.trace();
    const cplx diff = m(0, 0) - m(1, 1);
    const cplx h = std::sqrt(diff * diff + 4.0 * m(0, 1) * m(1, 0));
    const cplx half_h = 0.5 * h;
    Mat2 shifted = m;
    shifted(0, 0) -= 0.5 * r;
    shifted(1, 1) -= 0.5 * r;

    cplx even;  // e^{r/2} cosh(h/2)
    cplx odd;   // e^{r/2} sinh(h/2)/(h/2)
    if (std::abs(half_h) < 0.5) {
        cplx c, sc;
        small_hyperbolic(half_h, c, sc);
        const cplx base = std::exp(0.5 * r);
        even = base * c;
        odd = base * sc;
    } else {
        const cplx ep = std::exp(0.5 * (r + h));
        const cplx em = std::exp(0.5 * (r - h));
        even = 0.5 * (ep + em);
        odd = (ep - em) / h;
    }
    return even * Mat2::Identity() + odd * shifted;
}

Mat2 expm_hermitian(const Mat2& k) {
    const double k0 = 0.5 * (k(0, 0).real() + k(1, 1).real());
    const double kz = 0.5 * (k(1, 1).real() - k(0, 0).real());
    const double kx = k(0, 1).real();
    const double ky = -k(0, 1).imag();
    const double norm = std::sqrt(kx * kx + ky * ky + kz * kz);
    Mat2 traceless = k;
    traceless(0, 0) -= k0;
    traceless(1, 1) -= k0;
    const double sinc = norm > 1e-300 ? std::sin(norm) / norm : 1.0;
    Mat2 out = std::cos(norm) * Mat2::Identity() - cplx(0.0, 1.0) * sinc * traceless;
    return std::exp(cplx(0.0, -k0)) * out;
}

std::pair<cplx, cplx> eigenvalues2(const Mat2& m) {
    const cplx r = m.trace();
    const cplx diff = m(0, 0) - m(1, 1);
    const cplx h = std::sqrt(diff * diff + 4.0 * m(0, 1) * m(1, 0));
    cplx a = 0.5 * (r + h);
    cplx b = 0.5 * (r - h);
    if (a.real() < b.real()) std::swap(a, b);
    return {a, b};
}

bool is_hermitian(const Mat2& m, double tol) {
    return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol * std::max(1.0, m.cwiseAbs().maxCoeff());
}

} // namespace heatfcs
