// mc_oracle.hpp: Gillespie sampling of the population jump process behind the tilted generator

#pragma once

#include <cstdint>
#include <vector>

#include "heatfcs/distribution.hpp"
#include "heatfcs/floquet.hpp"
#include "heatfcs/rates.hpp"

namespace heatfcs {

struct TrajectoryEnsemble {
    std::vector<double> samples;  // accumulated heat per trajectory
    std::uint64_t seed{0};
    double t{0.0};
    double drive_frequency{1.0};
    double rabi_frequency{0.0};

    std::size_t size() const { return samples.size(); }
    double mean() const;
    double variance() const;  // unbiased
};

struct SamplerOptions {
    unsigned threads{0};                  // 0: hardware concurrency
    std::uint64_t event_cap{10'000'000};  // per trajectory
    std::size_t shard_size{4096};
    // Diagonal channels alpha = beta with k != 0. Turning them off is only useful for tests.
    bool self_harmonics{true};
};

// Trajectories are split into fixed-size shards; shard s draws from mt19937_64 seeded with
// seed_seq{seed, s}, so the ensemble does not depend on the thread count.
TrajectoryEnsemble sample_heat(const RateTable& table, const InitialState& init, double t,
                               std::size_t n, std::uint64_t seed,
                               const SamplerOptions& options = {});

// Throws LatticeViolationError if a sample is further than 1e-9 from every lattice point.
HeatDistribution empirical_distribution(const TrajectoryEnsemble& ens);

} // namespace heatfcs
