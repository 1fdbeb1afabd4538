#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "minkcover/numerics.hpp"

using namespace minkcover;

namespace {

// Independent oracle: Stirling series at z >= 16 with downward recurrence.
// Remainder after the B16 term is below 1e-19 there.
double stirling_log_gamma(double x) {
    double shift = 0.0;
    double z = x;
    while (z < 16.0) {
        shift -= std::log(z);
        z += 1.0;
    }
    constexpr double terms[] = {1.0 / 12,       -1.0 / 360, 1.0 / 1260,        -1.0 / 1680,
                                1.0 / 1188,     -691.0 / 360360, 1.0 / 156,    -3617.0 / 122400};
    double series = 0.0;
    double zp = z;
    for (double t : terms) {
        series += t / zp;
        zp *= z * z;
    }
    return shift + (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * std::numbers::pi) + series;
}

// Independent oracle: polar quadrature of the ball area,
// V = 2 * integral_0^{pi/2} (cos^p t + sin^p t)^(-2/p) dt, composite Simpson.
double polar_volume(double p) {
    const int n = 1 << 16; // even
    const double h = std::numbers::pi / 2.0 / n;
    const auto r2 = [p](double t) {
        const double c = std::abs(std::cos(t)), s = std::abs(std::sin(t));
        return std::pow(std::pow(c, p) + std::pow(s, p), -2.0 / p);
    };
    double sum = r2(0.0) + r2(std::numbers::pi / 2.0);
    for (int i = 1; i < n; ++i) sum += (i % 2 ? 4.0 : 2.0) * r2(i * h);
    return 2.0 * sum * h / 3.0;
}

} // namespace

TEST_CASE("BallParameter factories and accessors") {
    const BallParameter f = BallParameter::finite(2.5);
    CHECK(f.is_finite());
    CHECK(f.kind() == BallParameter::Kind::finite);
    CHECK(f.value() == 2.5);

    const BallParameter one = BallParameter::limit_one();
    const BallParameter inf = BallParameter::limit_infinity();
    CHECK(!one.is_finite());
    CHECK(!inf.is_finite());
    CHECK_THROWS_AS((void)one.value(), std::logic_error);
    CHECK_THROWS_AS((void)inf.value(), std::logic_error);

    CHECK_THROWS_AS(BallParameter::finite(1.0), std::domain_error);
    CHECK_THROWS_AS(BallParameter::finite(0.5), std::domain_error);
    CHECK_THROWS_AS(BallParameter::finite(std::numeric_limits<double>::infinity()),
                    std::domain_error);
    CHECK_THROWS_AS(BallParameter::finite(std::nan("")), std::domain_error);
}

TEST_CASE("log_gamma closed forms") {
    CHECK(std::abs(log_gamma(1.0)) <= 1e-15);
    CHECK(std::abs(log_gamma(2.0)) <= 1e-15);
    CHECK(log_gamma(0.5) == doctest::Approx(0.5 * std::log(std::numbers::pi)).epsilon(1e-14));
    CHECK(log_gamma(6.0) == doctest::Approx(std::log(120.0)).epsilon(1e-14));
    CHECK(log_gamma(11.0) == doctest::Approx(std::log(3628800.0)).epsilon(1e-14));
    CHECK_THROWS_AS(log_gamma(0.0), std::domain_error);
    CHECK_THROWS_AS(log_gamma(-1.5), std::domain_error);
}

TEST_CASE("log_gamma matches the Stirling oracle") {
    for (double x = 0.05; x < 40.0; x += 0.173) {
        const double got = log_gamma(x);
        const double want = stirling_log_gamma(x);
        CHECK(std::abs(got - want) <= 1e-13 * std::max(1.0, std::abs(want)));
    }
}

TEST_CASE("ball_volume limits and closed forms") {
    CHECK(ball_volume(BallParameter::limit_one()) == 2.0);
    CHECK(ball_volume(BallParameter::limit_infinity()) == 4.0);
    CHECK(ball_volume(BallParameter::finite(2.0)) ==
          doctest::Approx(std::numbers::pi).epsilon(1e-14));
    // frozen reference value
    CHECK(ball_volume(BallParameter::finite(3.0)) ==
          doctest::Approx(3.533277500570902).epsilon(1e-13));
}

TEST_CASE("ball_volume is increasing in p and approaches the square") {
    double prev = 0.0;
    for (double p : {1.1, 1.3, 1.7, 2.0, 2.5, 3.0, 4.0, 6.0, 10.0, 16.0, 32.0}) {
        const double v = ball_volume(BallParameter::finite(p));
        CHECK(v > prev);
        CHECK(v < 4.0);
        prev = v;
    }
    CHECK(ball_volume(BallParameter::finite(64.0)) > 3.9);
}

TEST_CASE("ball_volume matches the polar quadrature oracle") {
    for (double p : {1.3, 1.7, 2.0, 2.5, 3.0, 4.5, 8.0}) {
        const double got = ball_volume(BallParameter::finite(p));
        CHECK(got == doctest::Approx(polar_volume(p)).epsilon(1e-8));
    }
}

TEST_CASE("find_root solves a bracketed root") {
    const Tolerance tol{1e-14, 1e-14, 200};
    const double r = find_root([](double x) { return x * x - 2.0; }, 0.0, 2.0, tol);
    CHECK(r == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("find_root endpoint roots are returned without iteration") {
    const Tolerance tol{1e-12, 1e-12, 200};
    CHECK(find_root([](double x) { return x; }, 0.0, 1.0, tol) == 0.0);
    CHECK(find_root([](double x) { return x - 1.0; }, 0.0, 1.0, tol) == 1.0);
}

TEST_CASE("find_root input validation") {
    const Tolerance tol{1e-12, 1e-12, 200};
    CHECK_THROWS_AS(find_root([](double) { return 1.0; }, 0.0, 1.0, tol), std::domain_error);
    CHECK_THROWS_AS(find_root([](double x) { return x; }, 1.0, 0.0, tol), std::domain_error);
    CHECK_THROWS_AS(find_root([](double x) { return x; }, 0.0, 1.0, Tolerance{0.0, 0.0, 100}),
                    std::domain_error);
    CHECK_THROWS_AS(find_root([](double x) { return std::log(x); }, 0.0, 2.0, tol), SolverError);
}

TEST_CASE("find_root survives tolerances below representable spacing") {
    // the bracket collapses to one ulp and the midpoint is returned
    const Tolerance tight{1e-300, 0.0, 200};
    const double r = find_root([](double x) { return std::atan(x - 1.0); }, 0.0, 2.5, tight);
    CHECK(std::abs(r - 1.0) <= 1e-14);
}

TEST_CASE("find_root reports non-convergence") {
    const Tolerance few{1e-300, 0.0, 4};
    CHECK_THROWS_AS(find_root([](double x) { return std::atan(x - 0.7); }, 0.0, 2.0, few),
                    SolverError);
}

TEST_CASE("maximize_scalar refines an interior maximum") {
    const Tolerance tol{1e-12, 1e-12, 200};
    const MaxResult r =
        maximize_scalar([](double x) { return -(x - 2.31) * (x - 2.31); }, 1.0, 4.0, tol, 64);
    CHECK(std::abs(r.argmax - 2.31) <= 1e-6);
    CHECK(r.max <= 0.0);
    CHECK(r.max >= -1e-12);
}

TEST_CASE("maximize_scalar plateau keeps the left endpoint") {
    const Tolerance tol{1e-12, 1e-12, 200};
    const MaxResult flat = maximize_scalar([](double) { return 5.0; }, 2.0, 3.0, tol, 64);
    CHECK(flat.argmax == 2.0);
    CHECK(flat.max == 5.0);

    // noise far below abs_tol behaves like a plateau
    const MaxResult noisy = maximize_scalar(
        [](double x) { return 5.0 + 1e-15 * std::sin(50.0 * x); }, 2.0, 3.0, tol, 64);
    CHECK(noisy.argmax == 2.0);
}

TEST_CASE("maximize_scalar returns monotone endpoints exactly") {
    const Tolerance tol{1e-12, 1e-12, 200};
    const MaxResult up = maximize_scalar([](double x) { return x; }, 0.0, 1.0, tol, 64);
    CHECK(up.argmax == 1.0);
    CHECK(up.max == 1.0);
    const MaxResult down = maximize_scalar([](double x) { return -x; }, 0.25, 1.0, tol, 64);
    CHECK(down.argmax == 0.25);
    CHECK(down.max == -0.25);
}

TEST_CASE("maximize_scalar handles a sharp non-smooth peak") {
    const Tolerance tol{1e-12, 1e-12, 200};
    const MaxResult r = maximize_scalar(
        [](double x) { return -std::pow(std::abs(x - 0.37), 1.5); }, 0.0, 1.0, tol, 64);
    CHECK(std::abs(r.argmax - 0.37) <= 1e-6);
}

TEST_CASE("maximize_scalar input validation") {
    const Tolerance tol{1e-12, 1e-12, 200};
    CHECK_THROWS_AS(maximize_scalar([](double x) { return x; }, 1.0, 0.0, tol, 64),
                    std::domain_error);
    CHECK_THROWS_AS(maximize_scalar([](double x) { return x; }, 0.0, 1.0, tol, 0),
                    std::domain_error);
    CHECK_THROWS_AS(
        maximize_scalar([](double x) { return 1.0 / (x - 0.5); }, 0.0, 1.0, tol, 64),
        SolverError);
}
