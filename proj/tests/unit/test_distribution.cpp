#include <doctest.h>

#include "heatfcs/distribution.hpp"
#include "heatfcs/errors.hpp"

using namespace heatfcs;
using doctest::Approx;

TEST_CASE("lattice snapping") {
    const double w = 0.98, r = 0.201;
    auto a = snap_to_lattice(3 * w - r, w, r);
    REQUIRE(a);
    CHECK(a->n == 3);
    CHECK(a->m == -1);
    a = snap_to_lattice(-2 * w, w, r);
    REQUIRE(a);
    CHECK(a->n == -2);
    CHECK(a->m == 0);
    CHECK_FALSE(snap_to_lattice(0.5, w, r));
    CHECK_FALSE(snap_to_lattice(w + 2e-9, w, r));
}

TEST_CASE("moments, canonical order and validation") {
    HeatDistribution d;
    d.drive_frequency = 1.0;
    d.rabi_frequency = 0.25;
    d.atoms = {{1, 0, 0.25}, {0, 1, 0.25}, {1, 0, 0.25}, {-1, -1, 0.25}};
    d.canonicalize();
    REQUIRE(d.atoms.size() == 3);
    CHECK(d.atoms.front().n == -1);
    CHECK(d.atoms.back().weight == Approx(0.5));
    CHECK(d.total() == Approx(1.0));
    const double mean = 0.5 * 1.0 + 0.25 * 0.25 + 0.25 * -1.25;
    CHECK(d.mean() == Approx(mean));
    CHECK(d.central_moment(2) == Approx(0.5 * (1 - mean) * (1 - mean) + 0.25 * (0.25 - mean) * (0.25 - mean) +
                                        0.25 * (-1.25 - mean) * (-1.25 - mean)));
    CHECK_NOTHROW(d.validate());
    auto bad = d;
    bad.atoms[0].weight = -1e-6;
    CHECK_THROWS_AS(bad.validate(), InvariantError);
    bad = d;
    bad.atoms[0].m = 2;
    CHECK_THROWS_AS(bad.validate(), InvariantError);
    bad = d;
    bad.atoms[0].weight += 1e-3;
    CHECK_THROWS_AS(bad.validate(), InvariantError);
}

TEST_CASE("total variation") {
    HeatDistribution p, q;
    p.rabi_frequency = q.rabi_frequency = 0.2;
    p.atoms = {{0, 0, 0.5}, {1, -1, 0.5}};
    q.atoms = {{0, 0, 0.5}, {1, 0, 0.5}};
    CHECK(total_variation(p, q, 0.0) == Approx(0.5));
    CHECK(total_variation(p, q, 1.0) == Approx(0.0));
    CHECK(total_variation(p, p, 0.0) == 0.0);
    const auto bins = coarse_grain(p, 1.0);
    CHECK(bins.at(0) == Approx(0.5));
    CHECK(bins.at(1) == Approx(0.5));
}
