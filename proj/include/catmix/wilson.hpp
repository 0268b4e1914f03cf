#pragma once

#include <cstdint>
#include <vector>

#include "catmix/parallel.hpp"
#include "catmix/permutation.hpp"

namespace catmix {

/**
 * Inputs of the approximate-eigenfunction lower-bound formula: a statistic
 * Phi with stationary mean zero, contraction rate gamma per step, drift
 * error delta, second-moment bound R, a sup-norm bound, and the target TV
 * deficit eps. Requires 0 < gamma < 2 - sqrt(2).
 */
struct WilsonInputs {
    double phi0;    // Phi at the starting state, > 0
    double gamma;   // contraction rate per step
    double delta;   // |E[Phi'|x] - (1-gamma) Phi(x)| <= delta
    double R;       // E[(Phi'-Phi)^2|x] <= R
    double phi_sup; // ||Phi||_inf bound
    double eps;     // target deficit: TV >= 1 - eps at the returned time

    void validate() const; // throws std::domain_error outside the valid region
};

/// Step count t = log(phi0)/g* - log(48 (delta phi_sup + R) / (gamma eps)) / (2 g*),
/// g* = -log(1-gamma). TV from the start is >= 1-eps at time t. Units follow
/// the statistic's time step (sweeps for the deck statistics here).
double wilson_lower_bound(const WilsonInputs& w);

/// Contraction rate of the sine-weighted height statistic per sweep:
/// gamma(n) = 1 - sum_{k>=-1} cos(k pi/n) 2^-(k+2), in closed form.
/// gamma(n) = pi^2/n^2 - (19/12) pi^4/n^4 + O(n^-6).
double contraction_rate(int n);

/// Partial-sum evaluation of the same series (k <= k_max), for cross-checks.
double contraction_rate_series(int n, int k_max);

enum class ResidualMode { Enumerate, Recursion };

/// Exact conditional one-sweep mean of the sine-weighted height statistic.
/// Enumerate averages all 2 * 2^(n-1) sweep outcomes (n <= 14); Recursion
/// applies the mean-height recursion to the height profile (any n).
double expected_statistic_after_sweep(const Permutation& sigma, ResidualMode mode);

/// |E[Phi' | sigma] - (1 - gamma(n)) Phi(sigma)|.
double drift_residual(const Permutation& sigma, ResidualMode mode = ResidualMode::Enumerate);

struct SecondMomentEstimate {
    double max_mean_square; // max over sampled states of E[(dPhi)^2 | state]
    double std_error;       // of the max'ed state's mean
    double fitted_c;        // max_mean_square / (n log n)
};

/// Monte Carlo bound estimate for E[(dPhi)^2 | state] over `states` sampled
/// uniform decks (plus the identity), `sweeps_per_state` one-sweep draws each.
SecondMomentEstimate increment_second_moment(int n, int states, std::int64_t sweeps_per_state,
                                             std::uint64_t seed, ExecMode mode = ExecMode::OpenMP);

struct LowerBoundReport {
    double t_sweeps;  // the bound in sweeps (may be negative at small n)
    double t_steps;   // times (n-1)
    WilsonInputs inputs;
};

/// Assembled deck lower bound: phi0 = Phi(identity) exactly, gamma from
/// contraction_rate, delta = 3 pi / 4n, R = C n log n with the frozen C,
/// phi_sup = n^2/8.
LowerBoundReport cat_mixing_lower_bound(int n, double eps);

/// Phi of the identity deck (the maximal state), evaluated exactly.
double statistic_at_identity(int n);

} // namespace catmix
