#pragma once

// The analytic layer over the hexagon family: the Davis equation, the sigma
// endpoints, the area surface A(sigma, p), its alpha-family of sections, the
// two critical-determinant branches and their crossover constant, and the
// critical lattices themselves. Finite p only; the limit shapes are handled
// by the covering layer.

#include "minkcover/geometry.hpp"
#include "minkcover/numerics.hpp"

namespace minkcover {

// Root in [0,1) of the Davis equation 2(1-tau)^p = 1 + tau^p.
[[nodiscard]] double tau_p(double p);

// sigma_p = (2^p - 1)^(1/p), the right end of the sigma domain.
[[nodiscard]] double sigma_p(double p);

// Family member sigma_{alpha,p} = (2^p - 1)^(1/(alpha p)) = sigma_p^(1/alpha).
[[nodiscard]] double sigma_alpha(double alpha, double p);

// The tau in [0, tau_p] that puts the middle vertex w2 of the al-hexagon on
// the ball boundary. Monotone decreasing in sigma: tau_p at sigma=1, 0 at
// sigma=sigma_p (both endpoints exact). sigma may overshoot the domain ends
// by at most 1e-9 (clamped); anything farther is a domain error.
[[nodiscard]] double tau_inscribed(double p, double sigma);

// Raw area surface A = 3(tau+sigma)(1+tau^p)^(-1/p)(1+sigma^p)^(-1/p).
// No inscription constraint; requires 0 <= tau < sigma.
[[nodiscard]] double moduli_area(double p, double tau, double sigma);

// Area along the inscribed curve: moduli_area at tau_inscribed(p, sigma).
[[nodiscard]] double inscribed_area(double p, double sigma);

// Section of the surface along the alpha-family: moduli_area at
// sigma = sigma_alpha(alpha, p).
[[nodiscard]] double family_area(double alpha, double p, double tau);

// Critical-determinant branches: Delta(p,1) = 4^(-1/p)(1+tau_p)/(1-tau_p)
// and Delta(p,sigma_p) = sigma_p/2.
[[nodiscard]] double delta_branch1(double p);
[[nodiscard]] double delta_branch0(double p);

enum class Branch { branch0, branch1 };

struct CriticalData {
    double p = 0.0;
    double tau_p = 0.0;
    double sigma_p = 0.0;
    double delta_branch1 = 0.0; // Delta(p, 1)
    double delta_branch0 = 0.0; // Delta(p, sigma_p)
    double critical_determinant = 0.0; // min of the two
    Branch active_branch = Branch::branch1; // branch0 on [2, p0], branch1 outside
};

[[nodiscard]] CriticalData critical_determinant(double p);

// Crossover exponent p0 in (2.57, 2.58) where the branches meet.
[[nodiscard]] double davis_constant(const Tolerance& tol);
// Cached value at default tolerance (computed once per process).
[[nodiscard]] double davis_p0();

// min(A) = 3 * Delta(D_p) and its branch-swapped counterpart
// i-min(A) = 3 * max(Delta(p,1), Delta(p,sigma_p)).
[[nodiscard]] double min_area(double p);
[[nodiscard]] double i_min_area(double p);

// Admissible lattice attaining the branch determinant; all three vertex pairs
// +-P1, +-P2, +-(P1+P2) lie on the ball boundary.
[[nodiscard]] Lattice2 critical_lattice(double p, Branch branch);

// A point of the (p, tau, sigma) surface together with the boundary defect of
// the middle hexagon vertex. Factory validates the domain box.
struct ModuliPoint {
    double p = 0.0;
    double tau = 0.0;
    double sigma = 1.0;
    double inscribed_residual = 0.0;
};

[[nodiscard]] ModuliPoint moduli_point(double p, double tau, double sigma);

} // namespace minkcover
