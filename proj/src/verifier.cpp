#include "minkcover/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace minkcover {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double to_unit(std::uint64_t z) { return double(z >> 11) * 0x1.0p-53; }

double norm2(Point2 v) { return std::hypot(v.x, v.y); }

struct Sampler {
    Lattice2 given;
    std::int64_t samples = 0;
    std::int64_t grid = 0;
    std::uint64_t seed = 0;

    // Stratified jittered point of the fundamental parallelogram. Each index
    // owns its own generator stream, so evaluation order cannot matter.
    Point2 point(std::int64_t i) const {
        std::uint64_t state = seed + std::uint64_t(i + 1) * 0x9E3779B97F4A7C15ULL;
        const double u = to_unit(splitmix64(state));
        const double v = to_unit(splitmix64(state));
        const double s = (double(i % grid) + u) / double(grid);
        const double t = (double(i / grid) + v) / double(grid);
        return s * given.a1 + t * given.a2;
    }
};

struct TranslateSearch {
    Lattice2 red;   // reduced basis, shortest vector first
    double det = 0.0;
    double n1 = 0.0, n2 = 0.0; // Euclidean basis norms

    explicit TranslateSearch(const Lattice2& lat) : red(reduce_basis(lat)) {
        det = std::abs(lattice_determinant(red));
        n1 = norm2(red.a1);
        n2 = norm2(red.a2);
    }

    // Coefficients of q in the reduced basis. Cramer's rule needs the signed
    // cross product; reduction is free to flip orientation.
    void coords(Point2 q, double& alpha, double& beta) const {
        const double d = cross(red.a1, red.a2);
        alpha = cross(q, red.a2) / d;
        beta = cross(red.a1, q) / d;
    }

    // Any translate v with |q - v|_2 <= reach has basis coefficients within
    // these many steps of (alpha, beta).
    std::int64_t window_m(double reach) const {
        return std::int64_t(std::floor(reach * n2 / det)) + 1;
    }
    std::int64_t window_n(double reach) const {
        return std::int64_t(std::floor(reach * n1 / det)) + 1;
    }

    // Smallest gauge of q - v over all lattice translates v. The initial
    // candidate is the coefficient-rounded point; |w|_p >= |w|_2 / sqrt(2)
    // turns its gauge into a complete Euclidean search radius.
    double min_gauge(Point2 q, BallParameter p) const {
        double alpha = 0.0, beta = 0.0;
        coords(q, alpha, beta);
        const std::int64_t m0 = std::int64_t(std::llround(alpha));
        const std::int64_t n0 = std::int64_t(std::llround(beta));
        double best = gauge(q - (double(m0) * red.a1 + double(n0) * red.a2), p);
        const double reach = std::sqrt(2.0) * best * (1.0 + 1e-9);
        const std::int64_t wm = window_m(reach), wn = window_n(reach);
        for (std::int64_t m = m0 - wm; m <= m0 + wm; ++m)
            for (std::int64_t n = n0 - wn; n <= n0 + wn; ++n) {
                if (m == m0 && n == n0) continue;
                best = std::min(best, gauge(q - (double(m) * red.a1 + double(n) * red.a2), p));
            }
        return best;
    }

    // Number of translates v with gauge(q - v) <= 1 + kCoverSlack.
    std::int64_t cover_count(Point2 q, BallParameter p) const {
        double alpha = 0.0, beta = 0.0;
        coords(q, alpha, beta);
        const std::int64_t m0 = std::int64_t(std::llround(alpha));
        const std::int64_t n0 = std::int64_t(std::llround(beta));
        const double reach = std::sqrt(2.0) * (1.0 + kCoverSlack) * (1.0 + 1e-9);
        const std::int64_t wm = window_m(reach), wn = window_n(reach);
        std::int64_t count = 0;
        for (std::int64_t m = m0 - wm; m <= m0 + wm; ++m)
            for (std::int64_t n = n0 - wn; n <= n0 + wn; ++n)
                if (gauge(q - (double(m) * red.a1 + double(n) * red.a2), p) <= 1.0 + kCoverSlack)
                    ++count;
        return count;
    }
};

void require_sampling(const TranslateSearch& search, std::int64_t samples) {
    if (samples < 1) throw std::domain_error("sampling requires at least one sample");
    // Worst-case search radius over any sample: the rounded candidate is within
    // the covering radius, bounded by the longer reduced basis vector.
    const double reach = std::sqrt(2.0) * std::max(2.0 * search.n2, 1.0 + 1e-6);
    if (search.window_m(reach) > 4096 || search.window_n(reach) > 4096)
        throw std::domain_error("lattice basis too skewed for the sampling window");
}

Sampler make_sampler(const Lattice2& lat, std::int64_t samples, std::uint64_t seed) {
    Sampler s;
    s.given = lat;
    s.samples = samples;
    s.grid = std::int64_t(std::ceil(std::sqrt(double(samples))));
    s.seed = seed;
    return s;
}

} // namespace

CoverageReport is_covering(const Lattice2& lat, BallParameter p, std::int64_t samples,
                           std::uint64_t seed, Exec exec) {
    const TranslateSearch search(lat);
    require_sampling(search, samples);
    const Sampler sampler = make_sampler(lat, samples, seed);

    std::vector<double> min_gauges(static_cast<std::size_t>(samples));
    for_each_index(samples, exec, [&](std::int64_t i) {
        min_gauges[std::size_t(i)] = search.min_gauge(sampler.point(i), p);
    });

    std::int64_t covered = 0;
    std::size_t worst = 0;
    for (std::size_t i = 0; i < min_gauges.size(); ++i) {
        if (min_gauges[i] <= 1.0 + kCoverSlack) ++covered;
        if (min_gauges[i] > min_gauges[worst]) worst = i;
    }

    CoverageReport report;
    report.samples = samples;
    report.covered_fraction = double(covered) / double(samples);
    report.worst_point = sampler.point(std::int64_t(worst));
    report.worst_gap = min_gauges[worst] - 1.0;
    if (covered == samples) report.worst_gap = std::min(report.worst_gap, 0.0);
    return report;
}

double multiplicity_estimate(const Lattice2& lat, BallParameter p, std::int64_t samples,
                             std::uint64_t seed, Exec exec) {
    const TranslateSearch search(lat);
    require_sampling(search, samples);
    const Sampler sampler = make_sampler(lat, samples, seed);

    std::vector<std::int64_t> counts(static_cast<std::size_t>(samples));
    for_each_index(samples, exec, [&](std::int64_t i) {
        counts[std::size_t(i)] = search.cover_count(sampler.point(i), p);
    });

    std::int64_t total = 0;
    for (std::int64_t c : counts) total += c;
    return double(total) / double(samples);
}

bool verify_critical_lattices(double p) {
    for (Branch branch : {Branch::branch0, Branch::branch1}) {
        const Lattice2 lat = critical_lattice(p, branch);
        if (!is_admissible(lat, BallParameter::finite(p), /*strict=*/false)) return false;

        const double expected =
            branch == Branch::branch0 ? delta_branch0(p) : delta_branch1(p);
        if (std::abs(std::abs(lattice_determinant(lat)) - expected) > 1e-10) return false;

        // admissibility puts every enumerated point at gauge >= 1 - slack, so
        // these are boundary contacts; a critical lattice has three pairs
        const auto contacts = lattice_points_within_gauge(lat, BallParameter::finite(p), 1.0 + 1e-9);
        if (contacts.size() != 6) return false;
    }
    return true;
}

} // namespace minkcover
