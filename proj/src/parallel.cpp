#include "catmix/parallel.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace catmix {

int thread_cap() {
    static int cap = [] {
        int hw = 1;
#ifdef _OPENMP
        hw = omp_get_max_threads();
#endif
        if (const char* env = std::getenv("CATMIX_THREADS")) {
            int v = std::atoi(env);
            if (v >= 1 && v < hw) hw = v;
        }
        return hw;
    }();
    return cap;
}

void run_indexed(std::int64_t count, const std::function<void(std::int64_t)>& fn, ExecMode mode) {
#ifdef _OPENMP
    if (mode == ExecMode::OpenMP && thread_cap() > 1) {
#pragma omp parallel for schedule(static) num_threads(thread_cap())
        for (std::int64_t i = 0; i < count; ++i) fn(i);
        return;
    }
#else
    (void)mode;
#endif
    for (std::int64_t i = 0; i < count; ++i) fn(i);
}

} // namespace catmix
