#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "catmix/rational.hpp"

namespace catmix::decay {

template <class Scalar>
Scalar half_pow(int e) { // 1 / 2^e, e >= 0
    if constexpr (std::is_same_v<Scalar, Rational>) return pow2_inv(e);
    else return std::ldexp(1.0, -e);
}

template <class Scalar>
Scalar l1_norm(const std::vector<Scalar>& v) {
    Scalar s(0);
    for (const auto& x : v) s += x < Scalar(0) ? Scalar(-x) : x;
    return s;
}

template <class Scalar>
Scalar linf_norm(const std::vector<Scalar>& v) {
    Scalar m(0);
    for (const auto& x : v) {
        Scalar a = x < Scalar(0) ? Scalar(-x) : x;
        if (a > m) m = a;
    }
    return m;
}

/// Centered height column of the identity deck: v(x) = min(x,y) - xy/n,
/// x = 1..n-1. The usual start of the decay recursions.
template <class Scalar>
std::vector<Scalar> height_column_id(int n, int y) {
    std::vector<Scalar> v(n - 1);
    for (int x = 1; x <= n - 1; ++x) {
        if constexpr (std::is_same_v<Scalar, Rational>)
            v[x - 1] = Rational(std::min(x, y)) - Rational(std::int64_t(x) * y, n);
        else
            v[x - 1] = std::min(x, y) - double(x) * y / n;
    }
    return v;
}

/**
 * One sweep of the exact conditional-expectation recursion for a centered
 * height column, indexed 1..n-1. Interior rows average the two direction
 * scans; the two boundary rows have their own coefficient pattern (they
 * leak mass, so this map is strictly substochastic at the ends). Applied
 * to the column of any deck it gives the exact one-sweep expectation.
 */
template <class Scalar>
std::vector<Scalar> mean_height_step(const std::vector<Scalar>& v, int n) {
    if (int(v.size()) != n - 1) throw std::invalid_argument("column must have n-1 entries");
    if (n < 3) throw std::invalid_argument("need n >= 3");
    auto V = [&](int x) -> Scalar { return (x >= 1 && x <= n - 1) ? v[x - 1] : Scalar(0); };
    std::vector<Scalar> out(n - 1, Scalar(0));
    for (int x = 2; x <= n - 2; ++x) {
        Scalar s(0);
        for (int k = -1; k <= n - x - 2; ++k) s += V(x + k) * half_pow<Scalar>(k + 3);
        for (int k = -1; k <= x - 2; ++k) s += V(x - k) * half_pow<Scalar>(k + 3);
        out[x - 1] = s;
    }
    Scalar lo = V(1) * half_pow<Scalar>(3) + V(2) * half_pow<Scalar>(2);
    Scalar hi = V(n - 1) * half_pow<Scalar>(3) + V(n - 2) * half_pow<Scalar>(2);
    for (int k = 2; k <= n - 2; ++k) {
        lo += V(k) * half_pow<Scalar>(k + 2);
        hi += V(n - k) * half_pow<Scalar>(k + 2);
    }
    out[0] = lo;
    out[n - 2] = hi;
    return out;
}

/**
 * One step of the dominating envelope recursion, indexed 1..n-1 with the
 * convention u(0) = u(n) = 0. Its coefficients dominate those of
 * mean_height_step row by row, so from a nonnegative start u stays above
 * the mean height column for every step.
 */
template <class Scalar>
std::vector<Scalar> envelope_step(const std::vector<Scalar>& u, int n) {
    if (int(u.size()) != n - 1) throw std::invalid_argument("envelope must have n-1 entries");
    auto U = [&](int x) -> Scalar { return (x >= 1 && x <= n - 1) ? u[x - 1] : Scalar(0); };
    std::vector<Scalar> out(n - 1, Scalar(0));
    for (int x = 1; x <= n - 1; ++x) {
        Scalar s(0);
        for (int k = -1; k <= n - x - 1; ++k) s += U(x + k) * half_pow<Scalar>(k + 3);
        for (int k = -1; k <= x - 1; ++k) s += U(x - k) * half_pow<Scalar>(k + 3);
        out[x - 1] = s;
    }
    return out;
}

/**
 * One step of the envelope difference sequence, indexed 1..n with zero
 * extension outside. This is exactly the increment-law walk killed on
 * leaving {1..n}: for a nonnegative start the l1 mass equals the walk's
 * survival probability.
 */
template <class Scalar>
std::vector<Scalar> envelope_diff_step(const std::vector<Scalar>& d, int n) {
    if (int(d.size()) != n) throw std::invalid_argument("difference vector must have n entries");
    auto D = [&](int x) -> Scalar { return (x >= 1 && x <= n) ? d[x - 1] : Scalar(0); };
    std::vector<Scalar> out(n, Scalar(0));
    for (int x = 1; x <= n; ++x) {
        Scalar s(0);
        for (int k = -1; k <= n - x; ++k) s += D(x + k) * half_pow<Scalar>(k + 3);
        for (int k = -1; k <= x - 1; ++k) s += D(x - k) * half_pow<Scalar>(k + 3);
        out[x - 1] = s;
    }
    return out;
}

/// Forward differences of an envelope, n entries: d(1) = u(1),
/// d(x) = u(x) - u(x-1), d(n) = -u(n-1).
template <class Scalar>
std::vector<Scalar> diff_column(const std::vector<Scalar>& u, int n) {
    if (int(u.size()) != n - 1) throw std::invalid_argument("envelope must have n-1 entries");
    std::vector<Scalar> d(n);
    d[0] = u[0];
    for (int x = 2; x <= n - 1; ++x) d[x - 1] = u[x - 1] - u[x - 2];
    d[n - 1] = Scalar(0) - u[n - 2];
    return d;
}

struct DecayRow {
    std::int64_t s;  // sweeps
    double d_mass;   // l1 mass of the |d0| superposition bound, worst column
    double u_inf;    // sup norm of the envelope, worst column
    double envelope; // exp(-(1-delta) pi^2 t / n^3) at t = (n-1)s
    double ratio;    // d_mass / envelope
};

struct DecayReport {
    int n;
    double delta;
    std::vector<DecayRow> rows;
    double final_margin; // log(envelope bound * 2n) - log(d_mass) at the last row
};

/**
 * Runs the envelope machinery for every target column y and compares the
 * worst-column decay against the exponential envelope with rate
 * (1-delta) pi^2 / n^3 per raw step. The reported mass is the l1 norm of
 * the killed-walk evolution started from |d0|, which upper-bounds the
 * envelope sup norm at every step.
 */
DecayReport decay_bound_check(int n, std::int64_t sweeps, double delta, std::int64_t stride = 1);

} // namespace catmix::decay
