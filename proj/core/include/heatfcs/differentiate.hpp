// differentiate.hpp: central finite differences with Richardson extrapolation

#pragma once

#include <functional>

#include "heatfcs/linalg.hpp"

namespace heatfcs {

struct RichardsonOptions {
    double initial_step{1e-2};
    int max_levels{8};
    double rel_tol{1e-9};
    double abs_tol{0.0};  // absolute floor, in the units of the derivative
};

struct DerivativeEstimate {
    cplx value;
    cplx error;  // last accepted change along the Richardson diagonal
    int levels{0};
};

// d^order f / dx^order at x0 for order 1..4. Second-order central stencils are refined by
// step halving; the h^2, h^4, ... error terms are eliminated along the tableau. Throws
// DifferentiationError when successive diagonal entries never agree to tolerance.
DerivativeEstimate richardson_derivative(const std::function<cplx(double)>& f, double x0,
                                         int order, const RichardsonOptions& options = {});

} // namespace heatfcs
