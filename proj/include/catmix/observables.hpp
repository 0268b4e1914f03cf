#pragma once

#include <vector>

#include "catmix/permutation.hpp"

namespace catmix {

/**
 * Height profile of a deck: h(x) = #{z <= x : label <= floor(n/2)} - x*floor(n/2)/n,
 * for x = 1..n. h(n) = 0 and increments lie in {-floor(n/2)/n, 1-floor(n/2)/n}.
 */
struct HeightField {
    int n = 0;
    std::vector<double> values; // values[x-1] = h(x)

    double max_abs() const;
    double l2() const;
};

HeightField height_profile(const Permutation& sigma);

/// Same profile computed from card positions, #{a <= n/2 : pos(a) <= x} - x*floor(n/2)/n.
/// Must agree with height_profile; kept as an independent route for checks.
HeightField height_profile_by_positions(const Permutation& sigma);

/// First-Fourier-mode statistic sum_{x=1}^{n-1} h(x) sin(pi x / n).
double wilson_statistic(const Permutation& sigma);
double wilson_statistic(const HeightField& h);

/// Per-card contribution to a one-sweep change of the statistic:
/// tail sum of sin(pi x/n) from the card's new position minus the tail sum
/// from its old one. Summing over labels a <= floor(n/2) gives the exact change.
double card_statistic_delta(const Permutation& before, const Permutation& after, int label);

/// sin(pi x / n) for x = 0..n, shared by the hot loops.
const std::vector<double>& sin_table(int n);

} // namespace catmix
