#include "heatfcs/differentiate.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "heatfcs/errors.hpp"

namespace heatfcs {

namespace {

cplx central_stencil(const std::function<cplx(double)>& f, double x0, int order, double h) {
    switch (order) {
        case 1:
            return (f(x0 + h) - f(x0 - h)) / (2.0 * h);
        case 2:
            return (f(x0 + h) - 2.0 * f(x0) + f(x0 - h)) / (h * h);
        case 3:
            return (f(x0 + 2.0 * h) - 2.0 * f(x0 + h) + 2.0 * f(x0 - h) - f(x0 - 2.0 * h)) /
                   (2.0 * h * h * h);
        case 4:
            return (f(x0 + 2.0 * h) - 4.0 * f(x0 + h) + 6.0 * f(x0) - 4.0 * f(x0 - h) +
                    f(x0 - 2.0 * h)) /
                   (h * h * h * h);
        default:
            throw DomainError("richardson_derivative supports orders 1..4");
    }
}

} // namespace

DerivativeEstimate richardson_derivative(const std::function<cplx(double)>& f, double x0,
                                         int order, const RichardsonOptions& options) {
    if (!(options.initial_step > 0.0)) throw DomainError("initial step must be positive");
    const int levels = std::max(options.max_levels, 2);

    std::vector<std::vector<cplx>> table(static_cast<std::size_t>(levels));
    double h = options.initial_step;
    DerivativeEstimate best;
    double best_err = INFINITY;
    std::ostringstream ladder;

    for (int i = 0; i < levels; ++i, h *= 0.5) {
        auto& row = table[static_cast<std::size_t>(i)];
        row.resize(static_cast<std::size_t>(i + 1));
        row[0] = central_stencil(f, x0, order, h);
        double factor = 4.0;
        for (int j = 1; j <= i; ++j, factor *= 4.0) {
            const auto& prev = table[static_cast<std::size_t>(i - 1)];
            row[static_cast<std::size_t>(j)] =
                row[static_cast<std::size_t>(j - 1)] +
                (row[static_cast<std::size_t>(j - 1)] - prev[static_cast<std::size_t>(j - 1)]) /
                    (factor - 1.0);
        }
        const cplx diag = row.back();
        ladder << " h=" << h << ":" << diag;
        if (i == 0) continue;
        const cplx prev_diag = table[static_cast<std::size_t>(i - 1)].back();
        const double err = std::abs(diag - prev_diag);
        if (err < best_err) {
            best_err = err;
            best = {diag, diag - prev_diag, i + 1};
        }
        if (err <= options.rel_tol * std::abs(diag) + options.abs_tol) return best;
        // round-off has taken over once the corrections start growing again
        if (i >= 3 && err > 1e3 * best_err) break;
    }
    std::ostringstream os;
    os << "Richardson extrapolation of derivative order " << order << " did not converge; "
       << "best change " << best_err << "; ladder:" << ladder.str();
    throw DifferentiationError(os.str());
}

} // namespace heatfcs
