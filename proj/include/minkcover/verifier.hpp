#pragma once

// Sampling-based checks, independent of the analytic layer: does a lattice of
// balls actually cover the plane, and are the claimed critical lattices
// admissible with exactly the stated boundary contacts.

#include <cstdint>

#include "minkcover/geometry.hpp"
#include "minkcover/moduli.hpp"
#include "minkcover/parallel.hpp"

namespace minkcover {

// Points with min-over-translates gauge <= 1 + kCoverSlack count as covered;
// keeps measure-zero seams of exact partitions from being flagged.
inline constexpr double kCoverSlack = 1e-12;

// Stratified sampling of the fundamental parallelogram {s a1 + t a2}, jitter
// seeded per cell; each sample records the minimum gauge over all nearby
// lattice translates (provably complete search window). Deterministic given
// the seed, and identical under serial or parallel execution.
[[nodiscard]] CoverageReport is_covering(const Lattice2& lat, BallParameter p,
                                         std::int64_t samples, std::uint64_t seed,
                                         Exec exec = Exec::parallel);

// Mean number of lattice translates covering a sample point; for a covering
// built from a hexagon of area A this estimates ball_volume(p) / A.
[[nodiscard]] double multiplicity_estimate(const Lattice2& lat, BallParameter p,
                                           std::int64_t samples, std::uint64_t seed,
                                           Exec exec = Exec::parallel);

// Builds both critical lattices for p and checks: admissible (non-strict),
// determinant equal to the branch value within 1e-10, and exactly three
// vertex pairs on the boundary among all enumerated nonzero points.
[[nodiscard]] bool verify_critical_lattices(double p);

} // namespace minkcover
