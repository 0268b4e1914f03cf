// Compares the serial reference paths against the OpenMP paths for the
// parallel kernels and reports wall time plus speedup. The two paths must
// produce identical results; the benchmark asserts that too.

#include <chrono>
#include <cstdio>
#include <functional>

#include "catmix/exact_kernel.hpp"
#include "catmix/exclusion.hpp"
#include "catmix/observables.hpp"
#include "catmix/parallel.hpp"
#include "catmix/permutation.hpp"
#include "catmix/sweeps.hpp"
#include "catmix/walks.hpp"

using namespace catmix;

namespace {

double time_ms(const std::function<void()>& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

double run_pair_trials(std::int64_t trials, int n, std::int64_t sweeps, ExecMode mode) {
    std::vector<double> out(trials);
    run_indexed(trials, [&](std::int64_t k) {
        Permutation hi = Permutation::identity(n);
        Permutation lo = Permutation::reversal(n);
        for (std::int64_t s = 0; s < sweeps; ++s) {
            rng::Stream st = rng::Stream::at(99, k, s);
            auto r = SweepRandomness::draw(n, st);
            hi = monotone_sweep(hi, r);
            lo = monotone_sweep(lo, r);
        }
        out[k] = wilson_statistic(hi) - wilson_statistic(lo);
    }, mode);
    double acc = 0;
    for (double v : out) acc += v;
    return acc;
}

void report(const char* name, double serial_ms, double omp_ms) {
    std::printf("%-34s serial %9.1f ms   omp %9.1f ms   speedup %.2fx\n", name, serial_ms, omp_ms,
                serial_ms / omp_ms);
}

} // namespace

int main() {
    std::printf("catmix kernel benchmark (threads capped at %d)\n\n", thread_cap());

    {
        double a = 0, b = 0;
        double ts = time_ms([&] { a = run_pair_trials(400, 32, 150, ExecMode::Serial); });
        double tp = time_ms([&] { b = run_pair_trials(400, 32, 150, ExecMode::OpenMP); });
        if (a != b) { std::printf("FAIL: coupled trials disagree between modes\n"); return 1; }
        report("monotone pair trials n=32", ts, tp);
    }
    {
        TailCurve a, b;
        double ts = time_ms([&] { a = hitting_time_right(48, 0, 4000, 7, {2, 4, 8}, ExecMode::Serial); });
        double tp = time_ms([&] { b = hitting_time_right(48, 0, 4000, 7, {2, 4, 8}, ExecMode::OpenMP); });
        if (a.tail != b.tail) { std::printf("FAIL: hitting tails disagree between modes\n"); return 1; }
        report("hitting tail n=48, 4e3 trials", ts, tp);
    }
    {
        SpectrumReport r;
        double t1 = time_ms([&] { r = killed_srw_spectrum(512); });
        std::printf("%-34s %9.1f ms (residual %.2e)\n", "spectrum gram n=512", t1, r.eigen_residual_max);
    }
    {
        double ts = time_ms([&] { SweepOperator op(7, SweepModel::CAT); (void)op; });
        std::printf("%-34s %9.1f ms\n", "sweep operator build n=7", ts);
    }
    return 0;
}
