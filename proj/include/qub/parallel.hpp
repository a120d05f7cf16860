#pragma once

#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qub {

enum class Exec { serial, parallel };

// Honors QUB_THREADS when set; otherwise the OpenMP default.
inline int thread_count() {
#ifdef _OPENMP
    if (const char* env = std::getenv("QUB_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    return omp_get_max_threads();
#else
    return 1;
#endif
}

// Data-parallel loop over [0, n). The body must only write to its own slot;
// results are then deterministic independent of scheduling.
template <class F>
void parallel_for(Exec mode, long n, F&& body) {
#ifdef _OPENMP
    if (mode == Exec::parallel) {
        int nt = thread_count();
#pragma omp parallel for schedule(dynamic, 1) num_threads(nt)
        for (long i = 0; i < n; ++i) body(i);
        return;
    }
#else
    (void)mode;
#endif
    for (long i = 0; i < n; ++i) body(i);
}

}  // namespace qub
