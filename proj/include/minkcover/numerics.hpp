#pragma once

// Scalar special functions and 1-D solvers shared by the rest of the library.

#include <functional>
#include <stdexcept>

namespace minkcover {

// Thrown when an iterative solver fails to converge (maps to CLI exit 3).
struct SolverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Tolerance {
    double abs_tol = 1e-12;
    double rel_tol = 1e-12;
    int max_iter = 200;
};

// Exponent of the ball |x|^p + |y|^p <= 1. Finite values are strictly > 1;
// the p=1 diamond and p=inf square exist only as explicit limit markers and
// every consumer special-cases them instead of plugging in extreme exponents.
class BallParameter {
public:
    enum class Kind { finite, limit_one, limit_infinity };

    static BallParameter finite(double p);
    static BallParameter limit_one() { return BallParameter(Kind::limit_one, 0.0); }
    static BallParameter limit_infinity() { return BallParameter(Kind::limit_infinity, 0.0); }

    [[nodiscard]] Kind kind() const { return kind_; }
    [[nodiscard]] bool is_finite() const { return kind_ == Kind::finite; }

    // Finite exponent value; throws std::logic_error on a limit marker.
    [[nodiscard]] double value() const;

private:
    BallParameter(Kind k, double v) : kind_(k), value_(v) {}
    Kind kind_;
    double value_;
};

// ln Gamma(x) for x > 0 (Lanczos approximation, reflection below 0.5).
[[nodiscard]] double log_gamma(double x);

// Area of the ball: 4 Gamma(1+1/p)^2 / Gamma(1+2/p); 2 for the diamond,
// 4 for the square.
[[nodiscard]] double ball_volume(BallParameter p);

// Bisection on a bracketing interval. Requires f(lo) * f(hi) <= 0; returns x
// with |f(x)| <= tol.abs_tol or bracket width <= tol.abs_tol + tol.rel_tol*|x|.
[[nodiscard]] double find_root(const std::function<double(double)>& f,
                               double lo, double hi, const Tolerance& tol);

struct MaxResult {
    double argmax = 0.0;
    double max = 0.0;
};

// Coarse uniform grid (grid_cells cells) followed by golden-section refinement
// around the best cell. Ties on the grid (within abs_tol) keep the smallest
// point, and the refined candidate must beat the grid incumbent by more than
// abs_tol to replace it, so plateaus deterministically return the left edge.
[[nodiscard]] MaxResult maximize_scalar(const std::function<double(double)>& f,
                                        double lo, double hi, const Tolerance& tol,
                                        int grid_cells = 64);

} // namespace minkcover
