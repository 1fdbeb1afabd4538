#include "minkcover/geometry.hpp"

#include <cmath>
#include <utility>

namespace minkcover {

namespace {

// Boundary points of critical lattices evaluate to gauge 1 up to a few ulp;
// admissibility tests use this slack so they are not misclassified.
constexpr double kBoundarySlack = 1e-9;

// Circumradius of any D_p is at most sqrt(2) (attained by the square), so
// gauge(v) <= G implies |v|_2 <= sqrt(2) * G for every BallParameter.
constexpr double kCircumradius = 1.4142135623730951;

double norm2(Point2 v) { return std::sqrt(v.x * v.x + v.y * v.y); }

void require_nondegenerate(const Lattice2& lat) {
    if (!std::isfinite(lat.a1.x) || !std::isfinite(lat.a1.y) || !std::isfinite(lat.a2.x) ||
        !std::isfinite(lat.a2.y) || cross(lat.a1, lat.a2) == 0.0)
        throw std::domain_error("degenerate lattice basis");
}

} // namespace

double lattice_determinant(const Lattice2& lat) { return std::abs(cross(lat.a1, lat.a2)); }

double gauge(Point2 v, BallParameter p) {
    const double ax = std::abs(v.x);
    const double ay = std::abs(v.y);
    switch (p.kind()) {
        case BallParameter::Kind::limit_one: return ax + ay;
        case BallParameter::Kind::limit_infinity: return ax > ay ? ax : ay;
        case BallParameter::Kind::finite: break;
    }
    const double m = ax > ay ? ax : ay;
    if (m == 0.0) return 0.0;
    const double pv = p.value();
    // scale by the larger coordinate so pow never overflows
    return m * std::pow(std::pow(ax / m, pv) + std::pow(ay / m, pv), 1.0 / pv);
}

double boundary_residual(Point2 v, BallParameter p) {
    if (!p.is_finite())
        throw std::domain_error("boundary_residual is defined for finite p only; use gauge - 1 at the limits");
    const double pv = p.value();
    return std::pow(std::abs(v.x), pv) + std::pow(std::abs(v.y), pv) - 1.0;
}

double hexagon_area(const SymmetricHexagon& hex) {
    return cross(hex.w1, hex.w2) + cross(hex.w2, hex.w3) + cross(hex.w1, hex.w3);
}

double hexagon_area_shoelace(const SymmetricHexagon& hex) {
    const Point2 v[6] = {hex.w1, hex.w2, hex.w3, -hex.w1, -hex.w2, -hex.w3};
    double s = 0.0;
    for (int i = 0; i < 6; ++i) s += cross(v[i], v[(i + 1) % 6]);
    return 0.5 * std::abs(s);
}

Lattice2 covering_lattice_of(const SymmetricHexagon& hex) {
    if (!(hexagon_area(hex) > 0.0)) throw std::domain_error("degenerate hexagon has no covering lattice");
    return {hex.w1 + hex.w2, hex.w2 + hex.w3};
}

SymmetricHexagon al_hexagon(double p, double tau, double sigma) {
    if (!std::isfinite(p) || !(p > 1.0)) throw std::domain_error("al_hexagon requires finite p > 1");
    if (!(tau >= 0.0)) throw std::domain_error("al_hexagon requires tau >= 0");
    if (!(tau < sigma)) throw std::domain_error("al_hexagon requires tau < sigma");
    const double x1 = std::pow(1.0 + std::pow(tau, p), -1.0 / p);
    const double y1 = tau * x1;
    const double x2 = std::pow(1.0 + std::pow(sigma, p), -1.0 / p);
    const double y2 = sigma * x2;
    return {{x1, y1}, {x1 - x2, y1 + y2}, {-x2, y2}, HexKind::al_hexagon};
}

SymmetricHexagon limit_quadrangle(BallParameter p) {
    switch (p.kind()) {
        case BallParameter::Kind::limit_one:
            // diamond, area 2; w2 sits on the segment w1-w3 so the hexagon
            // degenerates to the quadrangle
            return {{1.0, 0.0}, {0.5, 0.5}, {0.0, 1.0}, HexKind::quadrangle};
        case BallParameter::Kind::limit_infinity:
            // square, area 4
            return {{1.0, 1.0}, {0.0, 1.0}, {-1.0, 1.0}, HexKind::quadrangle};
        case BallParameter::Kind::finite: break;
    }
    throw std::domain_error("limit_quadrangle is defined for the limit markers only");
}

Lattice2 reduce_basis(const Lattice2& lat) {
    require_nondegenerate(lat);
    Point2 b1 = lat.a1;
    Point2 b2 = lat.a2;
    if (dot(b1, b1) > dot(b2, b2)) std::swap(b1, b2);
    for (int it = 0; it < 64; ++it) {
        const double r = std::round(dot(b1, b2) / dot(b1, b1));
        b2 = b2 - r * b1;
        if (dot(b2, b2) >= dot(b1, b1)) break;
        std::swap(b1, b2);
    }
    return {b1, b2};
}

std::vector<Point2> lattice_points_within_gauge(const Lattice2& lat, BallParameter p,
                                                double bound) {
    const Lattice2 red = reduce_basis(lat);
    const double det = lattice_determinant(red);
    const double reach = kCircumradius * bound * (1.0 + 1e-9);
    const double wm = reach * norm2(red.a2) / det;
    const double wn = reach * norm2(red.a1) / det;
    if (wm > 4096.0 || wn > 4096.0)
        throw std::domain_error("lattice basis too degenerate for point enumeration");
    const int mm = int(std::floor(wm)) + 1;
    const int mn = int(std::floor(wn)) + 1;
    std::vector<Point2> out;
    for (int m = -mm; m <= mm; ++m) {
        for (int n = -mn; n <= mn; ++n) {
            if (m == 0 && n == 0) continue;
            const Point2 v = double(m) * red.a1 + double(n) * red.a2;
            if (gauge(v, p) <= bound) out.push_back(v);
        }
    }
    return out;
}

bool is_admissible(const Lattice2& lat, BallParameter p, bool strict) {
    const Lattice2 red = reduce_basis(lat);
    // Shortest-vector early out. It also keeps the enumeration window small:
    // once the shortest vector is not deep inside the ball, |a1|_2 is bounded
    // away from zero and the window dimensions are O(1).
    const double g1 = gauge(red.a1, p);
    if (strict ? (g1 <= 1.0 + kBoundarySlack) : (g1 < 1.0 - kBoundarySlack)) return false;
    for (const Point2& v : lattice_points_within_gauge(red, p, 2.0)) {
        const double g = gauge(v, p);
        if (strict ? (g <= 1.0 + kBoundarySlack) : (g < 1.0 - kBoundarySlack)) return false;
    }
    return true;
}

} // namespace minkcover
