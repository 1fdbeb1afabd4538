#pragma once

// Execution policy for the data-parallel kernels. Parallel paths write into
// preallocated per-index slots and reduce serially afterwards, so results are
// identical to the serial path bit for bit.

#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace minkcover {

enum class Exec { serial, parallel };

template <class F>
void for_each_index(std::int64_t n, Exec exec, F&& body) {
#ifdef _OPENMP
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
        for (std::int64_t i = 0; i < n; ++i) body(i);
        return;
    }
#else
    (void)exec;
#endif
    for (std::int64_t i = 0; i < n; ++i) body(i);
}

} // namespace minkcover
