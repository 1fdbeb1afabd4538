#pragma once

// Covering constants, densities, bounds, the worked p=3 reproduction, the
// general-hexagon oracle, and the p-sweep with its monotonicity evidence.

#include <optional>
#include <string>
#include <vector>

#include "minkcover/geometry.hpp"
#include "minkcover/moduli.hpp"
#include "minkcover/numerics.hpp"
#include "minkcover/parallel.hpp"

namespace minkcover {

// Density upper bound 2*pi/(3*sqrt(3)) for coverings by any convex body, and
// the matching Sas constant 3*sqrt(3)/(2*pi) for inscribed hexagons.
[[nodiscard]] double density_upper_bound();
[[nodiscard]] double sas_constant();

struct AlMaximum {
    std::optional<double> sigma_star; // empty for the limit quadrangles
    std::optional<double> tau_star;
    double gamma_al = 0.0;
};

// Maximum area over the inscribed al-hexagon family, sigma in [1, sigma_p].
// Limit markers return the quadrangle areas 2 and 4 with no optimizer location.
[[nodiscard]] AlMaximum covering_constant_al(BallParameter p, const Tolerance& tol = {},
                                             int grid_cells = 64);

// theta = V(D_p) / gamma.
[[nodiscard]] double covering_density(BallParameter p, double gamma);

struct CoveringSummary {
    double p = 0.0;
    double volume = 0.0;
    double gamma_al = 0.0;
    std::optional<double> sigma_star;
    std::optional<double> tau_star;
    double density_al = 0.0;
    double lower_bound_imin = 0.0;  // i-min(A)
    double sas_bound = 0.0;         // (3 sqrt(3) / 2 pi) * V
    double upper_bound_area = 0.0;  // V itself
    double density_upper = 0.0;     // 2 pi / (3 sqrt(3))
    bool al_reaches_sas = false;    // reported, not asserted
};

[[nodiscard]] CoveringSummary bounds_report(double p, const Tolerance& tol = {},
                                            int grid_cells = 64);

struct GeneralMaximum {
    SymmetricHexagon hexagon;
    double gamma_h = 0.0;
};

// Maximum-area inscribed symmetric hexagon without the lattice-sum constraint:
// three boundary vertices at angles 0 <= t1 < t2 < t3 < pi, coarse angle grid
// plus coordinate descent. Also seeded from the al optimum so the result
// dominates covering_constant_al by construction.
[[nodiscard]] GeneralMaximum gamma_h_general(double p, const Tolerance& tol = {},
                                             int angle_grid = 48, Exec exec = Exec::parallel);

struct ValueComparison {
    std::string name;
    double computed = 0.0;
    double quoted = 0.0;
    double difference = 0.0; // computed - quoted
    double tolerance = 0.0;
    bool match = false;
};

// Recomputation of the published p=3 worked example: the quoted constants are
// compared against values derived here, never substituted for them.
struct P3Report {
    double sigma_2_3 = 0.0;       // sigma_alpha(2, 3)
    double tau_used = 0.12;
    SymmetricHexagon hexagon;     // al_hexagon(3, 0.12, sigma_2_3)
    double area_family = 0.0;     // family_area(2, 3, 0.12)
    double mid_vertex_residual = 0.0;
    double volume = 0.0;          // V(D_3)
    double implied_density = 0.0; // volume / area_family
    double gamma_al = 0.0;
    double gamma_general = 0.0;
    std::vector<ValueComparison> comparisons;
};

[[nodiscard]] P3Report reproduce_p3_example(const Tolerance& tol = {});

// alpha with sigma_alpha(alpha, p) = sigma_star: ln(2^p - 1) / (p ln sigma_star).
// Undefined at sigma_star <= 1 (domain error); the family only reaches 1 in the
// alpha -> infinity limit.
[[nodiscard]] double alpha_fit(double p, double sigma_star);

struct ScanRow {
    double p = 0.0;
    double sigma_star = 0.0;
    double tau_star = 0.0;
    double gamma_al = 0.0;
    double density_al = 0.0;
    double alpha_fit = 0.0; // +inf when sigma_star = 1
    std::optional<double> gamma_general;
    std::optional<double> density_general;
};

// Direction of sampled consecutive differences; evidence, not proof.
enum class Trend { increasing, decreasing, mixed, insufficient };
[[nodiscard]] const char* trend_name(Trend t);

struct ScanVerdicts {
    Trend gamma_below_2 = Trend::insufficient;   // p in (1, 2]
    Trend gamma_above_2 = Trend::insufficient;   // p in [2, inf)
    Trend density_below_2 = Trend::insufficient;
    Trend density_above_2 = Trend::insufficient;
};

struct ScanResult {
    std::vector<ScanRow> rows;
    ScanVerdicts verdicts;
};

// One row per p (strictly increasing input required). Rows are independent and
// computed under `exec`; output order and content do not depend on scheduling.
[[nodiscard]] ScanResult scan(const std::vector<double>& p_values, bool include_general,
                              const Tolerance& tol = {}, int grid_cells = 64,
                              Exec exec = Exec::parallel);

} // namespace minkcover
