#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "catmix/distribution.hpp"
#include "catmix/permutation.hpp"
#include "catmix/sweeps.hpp"

namespace catmix {

enum class SweepModel { CAT, MonotoneCAT, SingleDirectional, ATStep };

/**
 * Exact one-sweep (or, for ATStep, one-step) transition operator on S_n,
 * stored as aggregated integer transition counts per source state over a
 * common denominator. Built by enumerating every (direction, bits) outcome,
 * so it is exact by construction and small enough for n <= 8 in operator
 * form; the dense matrix form is gated by memory, not by n alone.
 */
class SweepOperator {
public:
    /// Enumerates all outcomes; censor_mask bit e-1 set means edge e is skipped.
    SweepOperator(int n, SweepModel model, std::uint32_t censor_mask = 0);

    int n() const { return n_; }
    std::int64_t states() const { return nstates_; }
    std::int64_t denominator() const { return denom_; }
    SweepModel model() const { return model_; }

    template <class Scalar>
    Distribution<Scalar> apply(const Distribution<Scalar>& p) const;

    /// Row-stochastic dense matrix, entry [from][to]. Rational matrices are
    /// capped at n <= 6 and double matrices at n <= 7 (memory capacity).
    std::vector<std::vector<Rational>> dense_rational() const;
    std::vector<std::vector<double>> dense_double() const;

    const std::vector<std::pair<std::int32_t, std::int32_t>>& transitions_from(std::int64_t src) const {
        return trans_[src];
    }

private:
    int n_;
    SweepModel model_;
    std::int64_t nstates_;
    std::int64_t denom_;
    std::vector<std::vector<std::pair<std::int32_t, std::int32_t>>> trans_; // (target, count)
};

/// Worst-start exact mixing time in sweeps: the smallest i with
/// max_start TV(P^i_start, uniform) <= eps. The CAT kernel is invariant
/// under left translation, so the identity start already attains the max;
/// starts are still enumerated below the cap as a consistency check.
struct MixingTimeResult {
    std::int64_t sweeps;
    std::vector<double> tv_curve; // from the identity start
    bool max_over_all_starts;     // false above the full-enumeration cap
};
MixingTimeResult mixing_time_exact(int n, double eps, SweepModel model = SweepModel::CAT);

/// Exact TV-to-uniform curves of the plain and censored chains from the
/// identity, one row per sweep 0..sweeps.
struct CensorCompareRow {
    std::int64_t sweep;
    Rational tv_plain;
    Rational tv_censored;
};
std::vector<CensorCompareRow> censoring_compare(int n, const CensoringScheme& scheme, std::int64_t sweeps);

/// TV between the column projections, the grid projections, and the locally
/// uniformized distribution versus their uniform-law counterparts.
struct ProjectedTv {
    Rational tv_hat; // column projection
    Rational tv_bar; // grid projection
    Rational tv_u;   // block-uniformized vs uniform; equals tv_hat exactly
};
ProjectedTv projected_tv(const Distribution<Rational>& nu, const BlockPartition& part);

} // namespace catmix
