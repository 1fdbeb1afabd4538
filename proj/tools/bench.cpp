// Timing comparison of the parallel kernels against their serial reference
// paths. Also checks that both produce bit-identical results, which is the
// contract the test suite relies on.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "minkcover/covering.hpp"
#include "minkcover/verifier.hpp"

using namespace minkcover;

namespace {

template <class F>
double best_of(int reps, F&& f) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        f();
        const auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

void report(const char* name, long long n, double serial_ms, double parallel_ms,
            bool identical) {
    std::printf("%-22s %10lld %11.2f ms %11.2f ms %7.2fx   %s\n", name, n, serial_ms,
                parallel_ms, serial_ms / parallel_ms, identical ? "identical" : "DIFFERENT");
}

} // namespace

int main(int argc, char** argv) {
    int reps = 3;
    if (argc > 1) reps = std::max(1, std::atoi(argv[1]));

#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not available; both columns run the serial path\n");
#endif
    std::printf("%-22s %10s %14s %14s %8s\n", "kernel", "n", "serial", "parallel", "speedup");

    const BallParameter p3 = BallParameter::finite(3.0);
    const AlMaximum m = covering_constant_al(p3);
    const Lattice2 cover = covering_lattice_of(al_hexagon(3.0, *m.tau_star, *m.sigma_star));

    {
        const long long n = 200000;
        CoverageReport rs, rp;
        const double ts = best_of(reps, [&] { rs = is_covering(cover, p3, n, 1, Exec::serial); });
        const double tp = best_of(reps, [&] { rp = is_covering(cover, p3, n, 1, Exec::parallel); });
        const bool same = rs.covered_fraction == rp.covered_fraction &&
                          rs.worst_gap == rp.worst_gap && rs.worst_point.x == rp.worst_point.x &&
                          rs.worst_point.y == rp.worst_point.y;
        report("is_covering", n, ts, tp, same);
    }
    {
        const long long n = 200000;
        double ms = 0, mp = 0;
        const double ts =
            best_of(reps, [&] { ms = multiplicity_estimate(cover, p3, n, 1, Exec::serial); });
        const double tp =
            best_of(reps, [&] { mp = multiplicity_estimate(cover, p3, n, 1, Exec::parallel); });
        report("multiplicity_estimate", n, ts, tp, ms == mp);
    }
    {
        const int grid = 96;
        GeneralMaximum gs, gp;
        const double ts =
            best_of(reps, [&] { gs = gamma_h_general(3.0, {}, grid, Exec::serial); });
        const double tp =
            best_of(reps, [&] { gp = gamma_h_general(3.0, {}, grid, Exec::parallel); });
        const bool same = gs.gamma_h == gp.gamma_h && gs.hexagon.w1.x == gp.hexagon.w1.x &&
                          gs.hexagon.w2.x == gp.hexagon.w2.x && gs.hexagon.w3.x == gp.hexagon.w3.x;
        report("gamma_h_general", (long long)grid * grid * grid / 6, ts, tp, same);
    }
    {
        std::vector<double> ps;
        for (int i = 0; i < 24; ++i) ps.push_back(1.2 + 0.25 * i);
        ScanResult ss, sp;
        const double ts = best_of(reps, [&] { ss = scan(ps, true, {}, 64, Exec::serial); });
        const double tp = best_of(reps, [&] { sp = scan(ps, true, {}, 64, Exec::parallel); });
        bool same = ss.rows.size() == sp.rows.size();
        for (std::size_t i = 0; same && i < ss.rows.size(); ++i)
            same = ss.rows[i].p == sp.rows[i].p && ss.rows[i].gamma_al == sp.rows[i].gamma_al &&
                   ss.rows[i].density_al == sp.rows[i].density_al &&
                   ss.rows[i].sigma_star == sp.rows[i].sigma_star;
        report("scan (with general)", (long long)ps.size(), ts, tp, same);
    }
    return 0;
}
