#include "heatfcs/mc_oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <exception>
#include <map>
#include <random>
#include <string>
#include <thread>
#include <utility>

#include "heatfcs/errors.hpp"

namespace heatfcs {

namespace {

struct Jump {
    int to;
    double heat;
    double rate;
};

struct Exits {
    std::vector<Jump> jumps;
    std::vector<double> cumulative;
    double total{0.0};
};

std::array<Exits, 2> build_exits(const RateTable& table, bool self_harmonics) {
    std::array<Exits, 2> exits;
    for (const auto& ch : table.channels) {
        if (!(ch.rate > 0.0)) continue;
        if (ch.to == ch.from && (ch.harmonic == 0 || !self_harmonics)) continue;
        auto& e = exits[static_cast<std::size_t>(ch.from)];
        e.jumps.push_back({ch.to, -ch.energy, ch.rate});
        e.total += ch.rate;
        e.cumulative.push_back(e.total);
    }
    return exits;
}

double run_trajectory(const std::array<Exits, 2>& exits, int state, double t,
                      std::uint64_t cap, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    double clock = 0.0;
    double heat = 0.0;
    std::uint64_t events = 0;
    for (;;) {
        const auto& e = exits[static_cast<std::size_t>(state)];
        if (e.total <= 0.0) break;
        clock += -std::log1p(-unif(rng)) / e.total;
        if (clock > t) break;
        if (++events > cap)
            throw EventCapError("trajectory exceeded " + std::to_string(cap) + " events");
        const double target = unif(rng) * e.total;
        auto it = std::upper_bound(e.cumulative.begin(), e.cumulative.end(), target);
        if (it == e.cumulative.end()) --it;
        const auto& jump = e.jumps[static_cast<std::size_t>(it - e.cumulative.begin())];
        heat += jump.heat;
        state = jump.to;
    }
    return heat;
}

} // namespace

double TrajectoryEnsemble::mean() const {
    if (samples.empty()) return 0.0;
    double s = 0.0;
    for (double q : samples) s += q;
    return s / static_cast<double>(samples.size());
}

double TrajectoryEnsemble::variance() const {
    if (samples.size() < 2) return 0.0;
    const double mu = mean();
    double s = 0.0;
    for (double q : samples) s += (q - mu) * (q - mu);
    return s / static_cast<double>(samples.size() - 1);
}

TrajectoryEnsemble sample_heat(const RateTable& table, const InitialState& init, double t,
                               std::size_t n, std::uint64_t seed, const SamplerOptions& options) {
    if (n == 0) throw DomainError("sample_heat requires N >= 1");
    if (!(t >= 0.0) || !std::isfinite(t)) throw DomainError("sample_heat requires finite t >= 0");
    if (options.shard_size == 0) throw DomainError("shard size must be positive");
    init.validate();
    for (const auto& ch : table.channels)
        if (!std::isfinite(ch.rate) || ch.rate < 0.0)
            throw DomainError("sample_heat requires finite non-negative rates");

    const auto exits = build_exits(table, options.self_harmonics);

    TrajectoryEnsemble ens;
    ens.seed = seed;
    ens.t = t;
    ens.drive_frequency = table.drive_frequency;
    ens.rabi_frequency = table.rabi_frequency();
    ens.samples.assign(n, 0.0);

    const std::size_t shards = (n + options.shard_size - 1) / options.shard_size;
    unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
    threads = static_cast<unsigned>(std::clamp<std::size_t>(threads ? threads : 1, 1, shards));

    auto run_shard = [&](std::size_t shard) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(shard),
                          static_cast<std::uint32_t>(shard >> 32)};
        std::mt19937_64 rng(seq);
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        const std::size_t begin = shard * options.shard_size;
        const std::size_t end = std::min(n, begin + options.shard_size);
        for (std::size_t i = begin; i < end; ++i) {
            const int state = unif(rng) < init.p1 ? 0 : 1;
            ens.samples[i] = run_trajectory(exits, state, t, options.event_cap, rng);
        }
    };

    if (threads == 1) {
        for (std::size_t s = 0; s < shards; ++s) run_shard(s);
        return ens;
    }

    std::vector<std::exception_ptr> failures(threads);
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t s = w; s < shards; s += threads) run_shard(s);
            } catch (...) {
                failures[w] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& f : failures)
        if (f) std::rethrow_exception(f);
    return ens;
}

HeatDistribution empirical_distribution(const TrajectoryEnsemble& ens) {
    if (ens.samples.empty()) throw DomainError("empirical_distribution requires samples");
    std::map<std::pair<long, int>, std::size_t> tally;
    for (double q : ens.samples) {
        auto atom = snap_to_lattice(q, ens.drive_frequency, ens.rabi_frequency, 1e-9);
        if (!atom)
            throw LatticeViolationError("sample Q = " + std::to_string(q) +
                                        " is off the heat lattice");
        ++tally[{atom->n, atom->m}];
    }
    HeatDistribution dist;
    dist.drive_frequency = ens.drive_frequency;
    dist.rabi_frequency = ens.rabi_frequency;
    dist.t = ens.t;
    const double n = static_cast<double>(ens.samples.size());
    for (const auto& [key, count] : tally)
        dist.atoms.push_back({key.first, key.second, static_cast<double>(count) / n});
    return dist;
}

} // namespace heatfcs
