#include "minkcover/numerics.hpp"

#include <cmath>
#include <numbers>

namespace minkcover {

namespace {

void validate(const Tolerance& tol) {
    if (!(tol.abs_tol > 0.0) || !(tol.rel_tol >= 0.0) || tol.max_iter < 1)
        throw std::domain_error("invalid tolerance: need abs_tol > 0, rel_tol >= 0, max_iter >= 1");
}

// Lanczos approximation, g = 7, 9 terms.
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

} // namespace

BallParameter BallParameter::finite(double p) {
    if (!std::isfinite(p) || !(p > 1.0))
        throw std::domain_error("ball exponent must be finite and > 1 (use the limit markers for p=1, p=inf)");
    return BallParameter(Kind::finite, p);
}

double BallParameter::value() const {
    if (kind_ != Kind::finite)
        throw std::logic_error("BallParameter::value() called on a limit marker");
    return value_;
}

double log_gamma(double x) {
    if (!(x > 0.0)) throw std::domain_error("log_gamma requires x > 0");
    if (x < 0.5) {
        // reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x)
        return std::log(std::numbers::pi / std::sin(std::numbers::pi * x)) - log_gamma(1.0 - x);
    }
    const double z = x - 1.0;
    double sum = kLanczos[0];
    for (int i = 1; i < 9; ++i) sum += kLanczos[i] / (z + i);
    const double base = z + 7.5;
    return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(base) - base + std::log(sum);
}

double ball_volume(BallParameter p) {
    switch (p.kind()) {
        case BallParameter::Kind::limit_one: return 2.0;       // diamond
        case BallParameter::Kind::limit_infinity: return 4.0;  // square
        case BallParameter::Kind::finite: break;
    }
    const double pv = p.value();
    return 4.0 * std::exp(2.0 * log_gamma(1.0 + 1.0 / pv) - log_gamma(1.0 + 2.0 / pv));
}

double find_root(const std::function<double(double)>& f, double lo, double hi,
                 const Tolerance& tol) {
    validate(tol);
    if (!(lo < hi)) throw std::domain_error("find_root requires lo < hi");
    double flo = f(lo);
    double fhi = f(hi);
    if (!std::isfinite(flo) || !std::isfinite(fhi))
        throw SolverError("find_root: non-finite value at bracket end");
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0))
        throw std::domain_error("find_root: no sign change over [lo, hi]");

    double mid = lo;
    for (int it = 0; it < tol.max_iter; ++it) {
        mid = lo + 0.5 * (hi - lo);
        if (mid == lo || mid == hi) return mid; // bracket is one ulp wide
        const double fm = f(mid);
        if (!std::isfinite(fm)) throw SolverError("find_root: non-finite function value");
        if (fm == 0.0 || std::abs(fm) <= tol.abs_tol) return mid;
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
        if (hi - lo <= tol.abs_tol + tol.rel_tol * std::abs(mid)) return lo + 0.5 * (hi - lo);
    }
    throw SolverError("find_root: no convergence within max_iter");
}

MaxResult maximize_scalar(const std::function<double(double)>& f, double lo, double hi,
                          const Tolerance& tol, int grid_cells) {
    validate(tol);
    if (!(lo < hi)) throw std::domain_error("maximize_scalar requires lo < hi");
    if (grid_cells < 1) throw std::domain_error("maximize_scalar requires grid_cells >= 1");

    const auto eval = [&](double x) {
        const double v = f(x);
        if (!std::isfinite(v)) throw SolverError("maximize_scalar: non-finite function value");
        return v;
    };

    // Coarse pass. A candidate must beat the incumbent by more than abs_tol,
    // so near-equal values keep the smallest grid point.
    const int n = grid_cells;
    int best_i = 0;
    double best_x = lo;
    double best_f = eval(lo);
    for (int i = 1; i <= n; ++i) {
        const double x = (i == n) ? hi : lo + (hi - lo) * (double(i) / n);
        const double v = eval(x);
        if (v > best_f + tol.abs_tol) {
            best_i = i;
            best_x = x;
            best_f = v;
        }
    }

    // Golden-section refinement on the two cells around the incumbent.
    const int il = best_i > 0 ? best_i - 1 : 0;
    const int ir = best_i < n ? best_i + 1 : n;
    double a = (il == n) ? hi : lo + (hi - lo) * (double(il) / n);
    double b = (ir == n) ? hi : lo + (hi - lo) * (double(ir) / n);

    constexpr double phi = 0.6180339887498949; // (sqrt(5) - 1) / 2
    double x1 = b - phi * (b - a);
    double x2 = a + phi * (b - a);
    double cand_x = best_x;
    double cand_f = best_f;
    const auto track = [&](double x, double v) {
        if (v > cand_f) {
            cand_x = x;
            cand_f = v;
        }
    };
    if (x1 < x2) {
        double f1 = eval(x1);
        double f2 = eval(x2);
        track(x1, f1);
        track(x2, f2);
        for (int it = 0; it < tol.max_iter; ++it) {
            if (b - a <= tol.abs_tol + tol.rel_tol * std::abs(a + 0.5 * (b - a))) break;
            if (f1 >= f2) {
                b = x2;
                x2 = x1;
                f2 = f1;
                x1 = b - phi * (b - a);
                if (x1 >= x2) break;
                f1 = eval(x1);
                track(x1, f1);
            } else {
                a = x1;
                x1 = x2;
                f1 = f2;
                x2 = a + phi * (b - a);
                if (x2 <= x1) break;
                f2 = eval(x2);
                track(x2, f2);
            }
        }
    }

    // The refined candidate replaces the grid incumbent only on a clear win;
    // plateaus therefore return the grid point itself.
    if (cand_f > best_f + tol.abs_tol) return {cand_x, cand_f};
    return {best_x, best_f};
}

} // namespace minkcover
