#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "minkcover/covering.hpp"
#include "minkcover/verifier.hpp"

using namespace minkcover;

namespace {

Lattice2 optimal_cover_lattice(double p) {
    const AlMaximum m = covering_constant_al(BallParameter::finite(p));
    return covering_lattice_of(al_hexagon(p, *m.tau_star, *m.sigma_star));
}

} // namespace

TEST_CASE("the diamond partition lattice covers with multiplicity one") {
    const Lattice2 lam1{{1, 1}, {2, 0}};
    const CoverageReport r = is_covering(lam1, BallParameter::limit_one(), 100000, 0);
    CHECK(r.covered_fraction == 1.0);
    CHECK(r.worst_gap <= 0.0);
    CHECK(r.samples == 100000);
    const double mult = multiplicity_estimate(lam1, BallParameter::limit_one(), 100000, 0);
    CHECK(std::abs(mult - 1.0) <= 0.01);
}

TEST_CASE("the square partition lattice covers with multiplicity one") {
    const Lattice2 laminf{{2, 2}, {0, 2}};
    const CoverageReport r = is_covering(laminf, BallParameter::limit_infinity(), 100000, 0);
    CHECK(r.covered_fraction == 1.0);
    const double mult = multiplicity_estimate(laminf, BallParameter::limit_infinity(), 100000, 0);
    CHECK(std::abs(mult - 1.0) <= 0.01);
}

TEST_CASE("the hexagonal circle covering") {
    const Lattice2 lam2{{std::sqrt(3.0), 0.0}, {std::sqrt(3.0) / 2.0, 1.5}};
    CHECK(std::abs(lattice_determinant(lam2) - 3.0 * std::sqrt(3.0) / 2.0) <= 1e-12);
    const CoverageReport r = is_covering(lam2, BallParameter::finite(2.0), 20000, 0);
    CHECK(r.covered_fraction == 1.0);
    const double mult = multiplicity_estimate(lam2, BallParameter::finite(2.0), 100000, 0);
    CHECK(std::abs(mult - density_upper_bound()) <= 0.02 * density_upper_bound());
}

TEST_CASE("optimal covering lattices cover for every grid exponent") {
    for (double p : {1.2, 1.5, 2.0, 2.3, 2.5725, 3.0, 4.0, 8.0}) {
        const Lattice2 lat = optimal_cover_lattice(p);
        const CoverageReport r = is_covering(lat, BallParameter::finite(p), 10000, 0);
        CHECK(r.covered_fraction == 1.0);
        CHECK(r.worst_gap <= 0.0);
    }
}

TEST_CASE("multiplicity estimates the volume to determinant ratio") {
    for (double p : {2.0, 3.0}) {
        const AlMaximum m = covering_constant_al(BallParameter::finite(p));
        const Lattice2 lat = optimal_cover_lattice(p);
        const double want = ball_volume(BallParameter::finite(p)) / m.gamma_al;
        const double got = multiplicity_estimate(lat, BallParameter::finite(p), 100000, 0);
        CHECK(std::abs(got - want) <= 0.02 * want);
    }
}

TEST_CASE("a doubled basis stops covering") {
    const Lattice2 lat = optimal_cover_lattice(3.0);
    const Lattice2 doubled{2.0 * lat.a1, 2.0 * lat.a2};
    const CoverageReport r = is_covering(doubled, BallParameter::finite(3.0), 10000, 0);
    CHECK(r.covered_fraction < 1.0);
    CHECK(r.worst_gap > 0.0);
    // cross-check the reported gap against a brute-force translate search
    double best = std::numeric_limits<double>::infinity();
    for (int m = -10; m <= 10; ++m)
        for (int n = -10; n <= 10; ++n) {
            const Point2 v{m * doubled.a1.x + n * doubled.a2.x,
                           m * doubled.a1.y + n * doubled.a2.y};
            best = std::min(best, gauge(r.worst_point - v, BallParameter::finite(3.0)));
        }
    CHECK(std::abs((best - 1.0) - r.worst_gap) <= 1e-12);
}

TEST_CASE("covering is a lattice property, not a basis property") {
    const Lattice2 lat = optimal_cover_lattice(2.5);
    std::mt19937_64 gen(7);
    std::uniform_int_distribution<int> coef(-6, 6);
    for (int i = 0; i < 100; ++i) {
        // random unimodular transform: pick a,b,c, then solve for d; fall
        // back to a plain shear when no integer d gives determinant one
        int a = coef(gen), b = coef(gen), c = coef(gen), d = 0;
        bool found = false;
        for (d = -7; d <= 7; ++d)
            if (a * d - b * c == 1) {
                found = true;
                break;
            }
        Lattice2 t;
        if (found) {
            t = {{a * lat.a1.x + b * lat.a2.x, a * lat.a1.y + b * lat.a2.y},
                 {c * lat.a1.x + d * lat.a2.x, c * lat.a1.y + d * lat.a2.y}};
        } else {
            const int k = coef(gen);
            t = {lat.a1 + double(k) * lat.a2, lat.a2};
        }
        const CoverageReport r = is_covering(t, BallParameter::finite(2.5), 4000, 11);
        CHECK(r.covered_fraction == 1.0);
    }
}

TEST_CASE("sampling is deterministic in the seed") {
    const Lattice2 lat = optimal_cover_lattice(3.0);
    const CoverageReport a = is_covering(lat, BallParameter::finite(3.0), 5000, 123);
    const CoverageReport b = is_covering(lat, BallParameter::finite(3.0), 5000, 123);
    CHECK(a.covered_fraction == b.covered_fraction);
    CHECK(a.worst_gap == b.worst_gap);
    CHECK(a.worst_point.x == b.worst_point.x);
    CHECK(a.worst_point.y == b.worst_point.y);
    CHECK(multiplicity_estimate(lat, BallParameter::finite(3.0), 5000, 9) ==
          multiplicity_estimate(lat, BallParameter::finite(3.0), 5000, 9));
}

TEST_CASE("verifier input validation") {
    const Lattice2 lat{{1, 0}, {0, 1}};
    CHECK_THROWS_AS(is_covering(lat, BallParameter::finite(2.0), 0, 0), std::domain_error);
    CHECK_THROWS_AS(is_covering({{1, 2}, {2, 4}}, BallParameter::finite(2.0), 100, 0),
                    std::domain_error);
    CHECK_THROWS_AS(multiplicity_estimate(lat, BallParameter::finite(2.0), -5, 0),
                    std::domain_error);
}

TEST_CASE("critical lattices verify for the grid exponents") {
    for (double p : {1.3, 1.7, 2.0, 2.3, 2.5725, 3.0, 5.0, 8.0}) CHECK(verify_critical_lattices(p));
}
