#pragma once

// Planar primitives: points, lattices, centrally symmetric hexagons, and the
// hexagon <-> lattice constructions.

#include <cstdint>
#include <vector>

#include "minkcover/numerics.hpp"

namespace minkcover {

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

[[nodiscard]] inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
[[nodiscard]] inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
[[nodiscard]] inline Point2 operator-(Point2 a) { return {-a.x, -a.y}; }
[[nodiscard]] inline Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }
[[nodiscard]] inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
[[nodiscard]] inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }

// Ordered basis pair; the lattice is {m*a1 + n*a2 : m,n integers}.
struct Lattice2 {
    Point2 a1;
    Point2 a2;
};

[[nodiscard]] double lattice_determinant(const Lattice2& lat);

enum class HexKind { al_hexagon, general, quadrangle };

// Centrally symmetric hexagon stored as its three upper-half vertices in
// counterclockwise order; the full vertex cycle is w1, w2, w3, -w1, -w2, -w3.
// For al_hexagon kind, w2 = w1 + w3 (the lattice-sum vertex).
struct SymmetricHexagon {
    Point2 w1;
    Point2 w2;
    Point2 w3;
    HexKind kind = HexKind::general;
};

// p-norm of a point: (|x|^p + |y|^p)^(1/p); |x|+|y| for the diamond marker,
// max(|x|,|y|) for the square marker. Membership in the ball is gauge <= 1.
[[nodiscard]] double gauge(Point2 v, BallParameter p);

// Signed boundary defect |x|^p + |y|^p - 1 (negative inside). Finite p only;
// the limit shapes have polygonal boundaries, use gauge - 1 there.
[[nodiscard]] double boundary_residual(Point2 v, BallParameter p);

// Area of the symmetric hexagon: cross(w1,w2) + cross(w2,w3) + cross(w1,w3),
// which equals the 6-vertex shoelace value exactly.
[[nodiscard]] double hexagon_area(const SymmetricHexagon& hex);

// Independent oracle: literal shoelace loop over all six vertices.
[[nodiscard]] double hexagon_area_shoelace(const SymmetricHexagon& hex);

// Lattice under which the hexagon tiles the plane: basis {w1+w2, w2+w3}.
// Its determinant equals the hexagon area (algebraic identity).
[[nodiscard]] Lattice2 covering_lattice_of(const SymmetricHexagon& hex);

// Hexagon with vertex pairs on the boundary of the finite-p ball:
//   w1 = ((1+tau^p)^(-1/p), tau*(1+tau^p)^(-1/p))
//   w3 = (-(1+sigma^p)^(-1/p), sigma*(1+sigma^p)^(-1/p))
//   w2 = w1 + w3
// w1 and w3 lie on the boundary by construction; w2 need not.
[[nodiscard]] SymmetricHexagon al_hexagon(double p, double tau, double sigma);

// Degenerate quadrangle for a limit marker: the diamond (area 2) or the
// square (area 4), stored with w2 at the midpoint of w1 and w3.
[[nodiscard]] SymmetricHexagon limit_quadrangle(BallParameter p);

// Lagrange-Gauss reduced copy of the basis: a1 becomes a shortest nonzero
// lattice vector. Throws on a degenerate basis.
[[nodiscard]] Lattice2 reduce_basis(const Lattice2& lat);

// Every nonzero lattice point with gauge <= bound (complete by construction:
// the enumeration window is derived from the reduced basis and the ball
// circumradius, which never exceeds sqrt(2)).
[[nodiscard]] std::vector<Point2> lattice_points_within_gauge(const Lattice2& lat,
                                                              BallParameter p, double bound);

// True iff no nonzero lattice point lies in the open ball (non-strict) or the
// closed ball (strict). Enumeration windows come from the reduced basis and
// provably include every point of gauge <= 2.
[[nodiscard]] bool is_admissible(const Lattice2& lat, BallParameter p, bool strict);

// Result of sampling-based coverage checks (see verifier.hpp).
struct CoverageReport {
    double covered_fraction = 0.0;
    std::int64_t samples = 0;
    Point2 worst_point;   // deepest uncovered sample; arbitrary sample if all covered
    double worst_gap = 0.0; // min-over-translates gauge minus 1 at worst_point; <= 0 when covered
};

} // namespace minkcover
