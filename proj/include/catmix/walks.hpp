#pragma once

#include <cstdint>
#include <vector>

#include "catmix/parallel.hpp"
#include "catmix/rational.hpp"
#include "catmix/rng.hpp"
#include "catmix/sweeps.hpp"

namespace catmix {

/// Increment law of a tagged card far from the deck ends, averaged over the
/// two exploration directions: P(X=k) = 2^-(|k|+3) + 2^-(3-|k|) for |k|<=1.
/// Mean 0, variance 2.
double increment_pmf(int k);
Rational increment_pmf_exact(int k);

/// Exact sampler for the increment law; the geometric tail is sampled by
/// counting fair-bit runs, so the unbounded support is never truncated.
int sample_increment(rng::Stream& s);

/// One-sweep law of a tagged card's position. Positions are 0..n-1 here;
/// entry k of the result is P(new position = k | old position = x),
/// averaged over the two directions. Exact dyadic rationals, n >= 3.
std::vector<Rational> card_jump_law(int x, int n);

/// Same law conditioned on the exploration direction.
std::vector<Rational> card_jump_law_directed(int x, int n, Direction dir);

/// Samples one sweep of tagged-card motion (position 0..n-1) given the
/// direction; consumes only the bits of the edges the card meets.
int step_tagged_card(int x, int n, Direction dir, rng::Stream& s);
/// Direction drawn from the stream.
int step_tagged_card(int x, int n, rng::Stream& s);

/**
 * Walk pushed up at 0: path(t) = S_t - (min_{s<=t} S_s  ∧  -q0) where S is
 * the partial-sum walk of the increments. Equivalently path(0) = q0 and
 * path(t) = max(path(t-1) + X_t, 0).
 */
std::vector<std::int64_t> pushed_walk_path(const std::vector<int>& increments, std::int64_t q0);

/**
 * Substochastic transition matrix of a killed one-dimensional walk on
 * states 0..n-1. defect(x) = 1 - row sum is the killing mass at x.
 */
struct KilledWalkKernel {
    int n = 0;
    std::vector<std::vector<double>> row; // row[x][y] = P(x -> y)

    double defect(int x) const;
};

/// Kernel of |simple random walk| stopped at n: state 0 moves to 1 surely,
/// interior states move +-1 with probability 1/2, state n-1 moves to n-2
/// with probability 1/2 and is killed otherwise.
KilledWalkKernel killed_srw_kernel(int n);

/// Kernel of the increment-law walk on {1..n} (stored 0-based) with all
/// mass leaving [1..n] killed.
KilledWalkKernel killed_increment_kernel(int n);

struct SpectrumEntry {
    double eigenvalue;
    std::vector<double> eigenvector;
};

struct SpectrumReport {
    int n = 0;
    std::vector<SpectrumEntry> modes;
    double eigen_residual_max = 0; // max_j ||M f_j - lambda_j f_j||_inf
    double gram_offdiag_max = 0;   // under the half-weight-at-0 inner product
    double gram_diag_err = 0;      // max_j |f_j . f_j - (n+1)/2|, plain dot
};

/// Closed-form eigensystem of killed_srw_kernel(n): f_j(x) = cos((2j+1)pi x / 2n),
/// lambda_j = cos((2j+1)pi / 2n). The f_j are orthogonal under the inner
/// product that gives weight 1/2 to state 0 (their plain Gram off-diagonals
/// are identically 1/2); the reported residuals use that convention.
SpectrumReport killed_srw_spectrum(int n);

/// P(walk alive after t steps | start), by row-vector iteration; entry t of
/// the result is the survival probability after t steps (entry 0 is 1).
std::vector<double> survival_curve(const KilledWalkKernel& kernel, int start, std::int64_t t_max);

struct TailCurve {
    std::vector<double> theta;    // grid
    std::vector<std::int64_t> t;  // sweep counts theta*n^2/pi^2
    std::vector<double> tail;     // empirical P(T > t)
};

/// Monte Carlo tail of the first time a tagged card reaches position n-1,
/// in sweeps, starting from `start`. Trials are independent cells of the
/// (seed, trial) grid and run in parallel.
TailCurve hitting_time_right(int n, int start, std::int64_t trials, std::uint64_t seed,
                             const std::vector<double>& thetas, ExecMode mode = ExecMode::OpenMP);

} // namespace catmix
