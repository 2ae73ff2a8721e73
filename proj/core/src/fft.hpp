#pragma once

#include <vector>

#include "heatfcs/linalg.hpp"

namespace heatfcs::detail {

// X_n = (1/N) sum_j x_j e^{-2 pi i n j / N}
std::vector<cplx> forward_dft(const std::vector<cplx>& x);

} // namespace heatfcs::detail
