#include "minkcover/moduli.hpp"

#include <algorithm>
#include <cmath>

namespace minkcover {

namespace {

// Root solves run essentially to machine precision; the published residual
// contracts (1e-12 / 1e-11) then hold with two orders of margin.
const Tolerance kTight{1e-15, 4e-16, 200};

// Domain endpoints may be overshot by rounding in optimizers; accept this much.
constexpr double kDomainSlack = 1e-9;

void require_p(double p) {
    if (!std::isfinite(p) || !(p > 1.0))
        throw std::domain_error("exponent must be finite and > 1 here (the limit shapes are handled by the covering layer)");
}

} // namespace

double tau_p(double p) {
    require_p(p);
    const auto davis = [p](double t) {
        return 2.0 * std::pow(1.0 - t, p) - 1.0 - std::pow(t, p);
    };
    return find_root(davis, 0.0, 1.0 - 1e-12, kTight);
}

double sigma_p(double p) {
    require_p(p);
    // (2^p - 1)^(1/p), written as 2 (1 - 2^-p)^(1/p) so large p cannot overflow
    return 2.0 * std::pow(1.0 - std::pow(2.0, -p), 1.0 / p);
}

double sigma_alpha(double alpha, double p) {
    if (!std::isfinite(alpha) || !(alpha >= 1.0)) throw std::domain_error("sigma_alpha requires alpha >= 1");
    return std::pow(sigma_p(p), 1.0 / alpha);
}

double tau_inscribed(double p, double sigma) {
    require_p(p);
    const double sp = sigma_p(p);
    if (sigma < 1.0) {
        if (sigma < 1.0 - kDomainSlack) throw std::domain_error("tau_inscribed requires sigma >= 1");
        sigma = 1.0;
    } else if (sigma > sp) {
        if (sigma > sp + kDomainSlack) throw std::domain_error("tau_inscribed requires sigma <= sigma_p");
        sigma = sp;
    }
    const double x2 = std::pow(1.0 + std::pow(sigma, p), -1.0 / p);
    const double y2 = sigma * x2;
    // boundary defect of the middle vertex w2; increasing in tau
    const auto residual = [p, x2, y2](double t) {
        const double x1 = std::pow(1.0 + std::pow(t, p), -1.0 / p);
        const double dx = x1 - x2; // positive: tau < 1 <= sigma
        return std::pow(dx > 0.0 ? dx : 0.0, p) + std::pow(t * x1 + y2, p) - 1.0;
    };
    const double tp = tau_p(p);
    if (residual(0.0) >= 0.0) return 0.0;   // sigma at (or within ulp of) sigma_p
    if (residual(tp) <= 0.0) return tp;     // sigma at (or within ulp of) 1
    return find_root(residual, 0.0, tp, kTight);
}

double moduli_area(double p, double tau, double sigma) {
    require_p(p);
    if (!(tau >= 0.0)) throw std::domain_error("moduli_area requires tau >= 0");
    if (!(tau < sigma)) throw std::domain_error("moduli_area requires tau < sigma");
    return 3.0 * (tau + sigma) * std::pow(1.0 + std::pow(tau, p), -1.0 / p) *
           std::pow(1.0 + std::pow(sigma, p), -1.0 / p);
}

double inscribed_area(double p, double sigma) {
    return moduli_area(p, tau_inscribed(p, sigma), sigma);
}

double family_area(double alpha, double p, double tau) {
    return moduli_area(p, tau, sigma_alpha(alpha, p));
}

double delta_branch1(double p) {
    const double t = tau_p(p);
    return std::pow(4.0, -1.0 / p) * (1.0 + t) / (1.0 - t);
}

double delta_branch0(double p) { return 0.5 * sigma_p(p); }

double davis_constant(const Tolerance& tol) {
    const auto gap = [](double p) { return delta_branch1(p) - delta_branch0(p); };
    return find_root(gap, 2.5, 2.6, tol);
}

double davis_p0() {
    static const double p0 = davis_constant(kTight);
    return p0;
}

CriticalData critical_determinant(double p) {
    require_p(p);
    CriticalData d;
    d.p = p;
    d.tau_p = tau_p(p);
    d.sigma_p = sigma_p(p);
    d.delta_branch1 = std::pow(4.0, -1.0 / p) * (1.0 + d.tau_p) / (1.0 - d.tau_p);
    d.delta_branch0 = 0.5 * d.sigma_p;
    d.critical_determinant = std::min(d.delta_branch1, d.delta_branch0);
    d.active_branch = (p >= 2.0 && p <= davis_p0()) ? Branch::branch0 : Branch::branch1;
    return d;
}

double min_area(double p) { return 3.0 * critical_determinant(p).critical_determinant; }

double i_min_area(double p) {
    const CriticalData d = critical_determinant(p);
    return 3.0 * std::max(d.delta_branch1, d.delta_branch0);
}

Lattice2 critical_lattice(double p, Branch branch) {
    require_p(p);
    if (branch == Branch::branch0) {
        const double s = sigma_p(p);
        const double x2 = std::pow(1.0 + std::pow(s, p), -1.0 / p);
        return {{1.0, 0.0}, {-x2, s * x2}};
    }
    const double t = tau_p(p);
    const double x1 = std::pow(1.0 + std::pow(t, p), -1.0 / p);
    const double q = std::pow(2.0, -1.0 / p);
    return {{x1, t * x1}, {-q, q}};
}

ModuliPoint moduli_point(double p, double tau, double sigma) {
    require_p(p);
    if (!(tau >= 0.0) || !(tau < sigma)) throw std::domain_error("moduli point requires 0 <= tau < sigma");
    if (!(sigma >= 1.0 - kDomainSlack) || !(sigma <= sigma_p(p) + kDomainSlack))
        throw std::domain_error("moduli point requires 1 <= sigma <= sigma_p");
    if (!(tau <= tau_p(p) + kDomainSlack))
        throw std::domain_error("moduli point requires tau <= tau_p");
    const SymmetricHexagon hex = al_hexagon(p, tau, sigma);
    return {p, tau, sigma, boundary_residual(hex.w2, BallParameter::finite(p))};
}

} // namespace minkcover
