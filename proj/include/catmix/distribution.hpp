#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "catmix/errors.hpp"
#include "catmix/permutation.hpp"
#include "catmix/rational.hpp"

namespace catmix {

std::int64_t factorial(int n); // n <= 20

/// Lehmer-code rank of a permutation; rank 0 is the identity. This ordering
/// is the serialization contract for distribution files.
std::int64_t lehmer_rank(const Permutation& sigma);
Permutation lehmer_unrank(int n, std::int64_t rank);

/**
 * Dense probability vector over S_n in Lehmer-rank order. Scalar is
 * Rational for exact pipelines or double for Monte Carlo scale.
 */
template <class Scalar>
struct Distribution {
    int n = 0;
    std::vector<Scalar> p; // size n!

    static Distribution uniform(int n) {
        Distribution d = zero(n);
        Scalar w = Scalar(1) / Scalar(std::int64_t(d.p.size()));
        for (auto& v : d.p) v = w;
        return d;
    }

    static Distribution point_mass(const Permutation& sigma) {
        Distribution d = zero(sigma.size());
        d.p[lehmer_rank(sigma)] = Scalar(1);
        return d;
    }

    static Distribution zero(int n) {
        if (n > 10) throw capacity_error("dense distribution over S_n needs n <= 10");
        Distribution d;
        d.n = n;
        d.p.assign(factorial(n), Scalar(0));
        return d;
    }

    bool is_normalized() const;
};

/// Half L1 distance. Throws on mismatched n.
template <class Scalar>
Scalar total_variation(const Distribution<Scalar>& a, const Distribution<Scalar>& b);

/// Local uniformization: nu^u(sigma) = avg over block-preserving tau of nu(tau o sigma).
/// Requires a normalized input.
template <class Scalar>
Distribution<Scalar> block_uniformize(const Distribution<Scalar>& nu, const BlockPartition& part);

/// JSON text {n, ordering:"lehmer", ranks:[...], probs:[...]} with exact
/// rationals rendered as "num/den" strings.
std::string to_json(const Distribution<Rational>& d);
std::string to_json(const Distribution<double>& d);

extern template struct Distribution<Rational>;
extern template struct Distribution<double>;

} // namespace catmix
