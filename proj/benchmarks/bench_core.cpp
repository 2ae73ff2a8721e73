#include <benchmark/benchmark.h>

#include "heatfcs/bath.hpp"
#include "heatfcs/floquet.hpp"
#include "heatfcs/heat_statistics.hpp"
#include "heatfcs/mc_oracle.hpp"
#include "heatfcs/rates.hpp"
#include "heatfcs/tilted.hpp"

using namespace heatfcs;

namespace {

struct Setup {
    FloquetSolution sol;
    RateTable table;
    InitialState init;
};

const Setup& transverse() {
    static const Setup s = [] {
        const auto params = RabiParameters::from_detuning(1.0, 0.1, 0.02);
        const auto bath = BathParameters::from_temperature(0.01, 0.1);
        Setup out{rabi_floquet(params), {}, {}};
        out.table = partial_rates(coupling_fourier(pauli::sigma_x(), out.sol, 2), out.sol, bath);
        out.init = dss(out.table);
        return out;
    }();
    return s;
}

void BM_FloquetAndRates(benchmark::State& state) {
    const auto params = RabiParameters::from_detuning(1.0, 0.1, 0.02);
    const auto bath = BathParameters::from_temperature(0.01, 0.1);
    for (auto _ : state) {
        const auto sol = rabi_floquet(params, static_cast<std::size_t>(state.range(0)));
        benchmark::DoNotOptimize(partial_rates(coupling_fourier(pauli::sigma_x(), sol, 2), sol, bath));
    }
}
BENCHMARK(BM_FloquetAndRates)->Arg(256)->Arg(1024);

void BM_CharacteristicFunction(benchmark::State& state) {
    const auto& s = transverse();
    double nu = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(characteristic_function(s.table, s.init, nu, 700 * s.table.period()));
        nu += 1e-3;
    }
}
BENCHMARK(BM_CharacteristicFunction);

void BM_FiniteTimeCumulants(benchmark::State& state) {
    const auto& s = transverse();
    for (auto _ : state) benchmark::DoNotOptimize(finite_time_cumulants(s.table, s.init, 700 * s.table.period()));
}
BENCHMARK(BM_FiniteTimeCumulants);

void BM_FiniteTimePdf(benchmark::State& state) {
    const auto& s = transverse();
    const double t = static_cast<double>(state.range(0)) * s.table.period();
    const auto grid = suggested_grid(s.table, s.init, t);
    for (auto _ : state) benchmark::DoNotOptimize(finite_time_pdf(s.table, s.init, t, grid));
}
BENCHMARK(BM_FiniteTimePdf)->Arg(80)->Arg(700);

void BM_MonteCarlo(benchmark::State& state) {
    const auto& s = transverse();
    SamplerOptions options;
    options.threads = 1;
    for (auto _ : state)
        benchmark::DoNotOptimize(sample_heat(s.table, s.init, 80 * s.table.period(), 10000, 1, options));
    state.SetItemsProcessed(state.iterations() * 10000);
}
BENCHMARK(BM_MonteCarlo)->Unit(benchmark::kMillisecond);

} // namespace
BENCHMARK_MAIN();
