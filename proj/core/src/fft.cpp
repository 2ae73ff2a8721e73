#include "fft.hpp"

#include <mutex>

#include <fftw3.h>

namespace heatfcs::detail {

namespace {
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}
} // namespace

std::vector<cplx> forward_dft(const std::vector<cplx>& x) {
    const int n = static_cast<int>(x.size());
    std::vector<cplx> in(x);
    std::vector<cplx> out(x.size());
    auto* pin = reinterpret_cast<fftw_complex*>(in.data());
    auto* pout = reinterpret_cast<fftw_complex*>(out.data());
    fftw_plan plan;
    {
        std::lock_guard lock(planner_mutex());
        plan = fftw_plan_dft_1d(n, pin, pout, FFTW_FORWARD, FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    {
        std::lock_guard lock(planner_mutex());
        fftw_destroy_plan(plan);
    }
    for (auto& v : out) v /= static_cast<double>(n);
    return out;
}

} // namespace heatfcs::detail
