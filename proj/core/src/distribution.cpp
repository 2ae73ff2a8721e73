#include "heatfcs/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "heatfcs/errors.hpp"

namespace heatfcs {

double HeatDistribution::total() const {
    double s = 0.0;
    for (const auto& a : atoms) s += a.weight;
    return s;
}

double HeatDistribution::mean() const {
    double s = 0.0;
    for (const auto& a : atoms) s += a.weight * heat(a);
    return s / total();
}

double HeatDistribution::central_moment(int k) const {
    const double mu = mean();
    double s = 0.0;
    for (const auto& a : atoms) s += a.weight * std::pow(heat(a) - mu, k);
    return s / total();
}

void HeatDistribution::canonicalize() {
    std::sort(atoms.begin(), atoms.end(), [](const Atom& x, const Atom& y) {
        return std::pair(x.n, x.m) < std::pair(y.n, y.m);
    });
    std::vector<Atom> merged;
    for (const auto& a : atoms) {
        if (!merged.empty() && merged.back().n == a.n && merged.back().m == a.m)
            merged.back().weight += a.weight;
        else
            merged.push_back(a);
    }
    atoms = std::move(merged);
}

void HeatDistribution::validate(double tol) const {
    for (const auto& a : atoms) {
        if (a.m < -1 || a.m > 1) throw InvariantError("atom outside m in {-1, 0, 1}");
        if (a.weight < -1e-12) {
            std::ostringstream os;
            os << "negative atom weight " << a.weight << " at (n=" << a.n << ", m=" << a.m << ")";
            throw InvariantError(os.str());
        }
    }
    if (std::abs(total() - 1.0) > tol) {
        std::ostringstream os;
        os << "distribution mass " << total() << " differs from 1 by more than " << tol;
        throw InvariantError(os.str());
    }
}

std::optional<Atom> snap_to_lattice(double q, double drive_frequency, double rabi_frequency,
                                    double tol) {
    std::optional<Atom> best;
    double best_dist = INFINITY;
    for (int m : {0, -1, 1}) {
        const double rest = q - m * rabi_frequency;
        const long n = std::lround(rest / drive_frequency);
        const double dist = std::abs(rest - static_cast<double>(n) * drive_frequency);
        if (dist < best_dist) {
            best_dist = dist;
            best = Atom{n, m, 0.0};
        }
    }
    if (best_dist > tol) return std::nullopt;
    return best;
}

std::map<long, double> coarse_grain(const HeatDistribution& dist, double bin_width) {
    std::map<long, double> bins;
    for (const auto& a : dist.atoms)
        bins[std::lround(std::floor(dist.heat(a) / bin_width + 0.5))] += a.weight;
    return bins;
}

double total_variation(const HeatDistribution& p, const HeatDistribution& q, double bin_width) {
    std::map<std::pair<long, long>, double> diff;
    auto add = [&](const HeatDistribution& d, double sign) {
        for (const auto& a : d.atoms) {
            const auto key = bin_width > 0.0
                                 ? std::pair<long, long>(
                                       std::lround(std::floor(d.heat(a) / bin_width + 0.5)), 0)
                                 : std::pair<long, long>(a.n, a.m);
            diff[key] += sign * a.weight;
        }
    };
    add(p, 1.0);
    add(q, -1.0);
    double tv = 0.0;
    for (const auto& [key, v] : diff) tv += std::abs(v);
    return 0.5 * tv;
}

} // namespace heatfcs
