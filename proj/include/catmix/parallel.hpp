#pragma once

#include <cstdint>
#include <functional>

namespace catmix {

enum class ExecMode { Serial, OpenMP };

/// Thread cap: min(CATMIX_THREADS, omp_get_max_threads()); 1 without OpenMP.
int thread_cap();

/// Runs fn(i) for i in [0, count). The OpenMP path assigns iterations to
/// threads statically; results must be written to per-index slots so that
/// both modes produce identical output. fn must not throw.
void run_indexed(std::int64_t count, const std::function<void(std::int64_t)>& fn,
                 ExecMode mode = ExecMode::OpenMP);

} // namespace catmix
