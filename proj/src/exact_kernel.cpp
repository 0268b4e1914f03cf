#include "catmix/exact_kernel.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "catmix/errors.hpp"
#include "catmix/parallel.hpp"

namespace catmix {

namespace {

Permutation apply_outcome(const Permutation& sigma, SweepModel model, Direction dir, std::uint64_t word,
                          std::uint32_t censor_mask) {
    int n = sigma.size();
    Permutation p = sigma;
    for (int i = 0; i < n - 1; ++i) {
        int e = dir == Direction::LeftToRight ? i + 1 : n - 1 - i;
        if (censor_mask & (1u << (e - 1))) continue;
        bool bit = (word >> i) & 1;
        if (model == SweepModel::MonotoneCAT) {
            bool ascending = p.label_at(e) < p.label_at(e + 1);
            if (ascending != bit) p.swap_positions(e, e + 1);
        } else {
            if (bit) p.swap_positions(e, e + 1);
        }
    }
    return p;
}

} // namespace

SweepOperator::SweepOperator(int n, SweepModel model, std::uint32_t censor_mask)
    : n_(n), model_(model) {
    if (n < 2 || n > 8) throw capacity_error("sweep operator enumeration needs 2 <= n <= 8");
    nstates_ = factorial(n);
    trans_.resize(nstates_);

    if (model == SweepModel::ATStep) {
        denom_ = 2 * (n - 1);
        run_indexed(nstates_, [&](std::int64_t src) {
            Permutation sigma = lehmer_unrank(n, src);
            std::map<std::int64_t, std::int32_t> agg;
            agg[src] += n - 1; // the lazy half of every edge choice
            for (int e = 1; e <= n - 1; ++e) {
                Permutation p = sigma;
                p.swap_positions(e, e + 1);
                agg[lehmer_rank(p)] += 1;
            }
            for (auto& [t, c] : agg) trans_[src].emplace_back(std::int32_t(t), c);
        });
        return;
    }

    int dirs = model == SweepModel::SingleDirectional ? 1 : 2;
    std::uint64_t words = std::uint64_t(1) << (n - 1);
    denom_ = std::int64_t(dirs) * std::int64_t(words);
    run_indexed(nstates_, [&](std::int64_t src) {
        Permutation sigma = lehmer_unrank(n, src);
        std::map<std::int64_t, std::int32_t> agg;
        for (int d = 0; d < dirs; ++d)
            for (std::uint64_t w = 0; w < words; ++w) {
                Permutation p = apply_outcome(sigma, model_, Direction(d), w, censor_mask);
                agg[lehmer_rank(p)] += 1;
            }
        for (auto& [t, c] : agg) trans_[src].emplace_back(std::int32_t(t), c);
    });
}

template <class Scalar>
Distribution<Scalar> SweepOperator::apply(const Distribution<Scalar>& p) const {
    if (p.n != n_) throw std::invalid_argument("size mismatch");
    Distribution<Scalar> out = Distribution<Scalar>::zero(n_);
    for (std::int64_t src = 0; src < nstates_; ++src) {
        if (p.p[src] == Scalar(0)) continue;
        for (const auto& [tgt, cnt] : trans_[src]) out.p[tgt] += p.p[src] * Scalar(cnt);
    }
    Scalar d = Scalar(1) / Scalar(denom_);
    for (auto& v : out.p) v *= d;
    return out;
}

template Distribution<Rational> SweepOperator::apply(const Distribution<Rational>&) const;
template Distribution<double> SweepOperator::apply(const Distribution<double>&) const;

std::vector<std::vector<Rational>> SweepOperator::dense_rational() const {
    if (n_ > 6) throw capacity_error("dense rational kernel needs n <= 6 (memory)");
    std::vector<std::vector<Rational>> m(nstates_, std::vector<Rational>(nstates_, Rational(0)));
    for (std::int64_t s = 0; s < nstates_; ++s)
        for (const auto& [t, c] : trans_[s]) m[s][t] = Rational(c, denom_);
    return m;
}

std::vector<std::vector<double>> SweepOperator::dense_double() const {
    if (n_ > 7) throw capacity_error("dense double kernel needs n <= 7 (memory)");
    std::vector<std::vector<double>> m(nstates_, std::vector<double>(nstates_, 0.0));
    for (std::int64_t s = 0; s < nstates_; ++s)
        for (const auto& [t, c] : trans_[s]) m[s][t] = double(c) / double(denom_);
    return m;
}

MixingTimeResult mixing_time_exact(int n, double eps, SweepModel model) {
    if (n > 7) throw capacity_error("exact mixing time needs n <= 7");
    SweepOperator op(n, model);
    std::int64_t nf = factorial(n);

    // left translation invariance of the sweep kernels makes every start
    // equivalent; below the cap we still maximize over all starts.
    std::vector<Permutation> starts;
    bool full = n <= 5;
    if (full)
        for (std::int64_t r = 0; r < nf; ++r) starts.push_back(lehmer_unrank(n, r));
    else {
        starts.push_back(Permutation::identity(n));
        starts.push_back(Permutation::reversal(n));
    }

    std::vector<Distribution<double>> dists;
    dists.reserve(starts.size());
    for (const auto& s : starts) dists.push_back(Distribution<double>::point_mass(s));
    Distribution<double> uni = Distribution<double>::uniform(n);

    MixingTimeResult res;
    res.max_over_all_starts = full;
    std::int64_t i = 0;
    while (true) {
        double worst = 0;
        for (auto& d : dists) worst = std::max(worst, total_variation(d, uni));
        res.tv_curve.push_back(total_variation(dists[0], uni));
        if (worst <= eps) {
            res.sweeps = i;
            return res;
        }
        for (auto& d : dists) d = op.apply(d);
        ++i;
        if (i > 100000) throw invariant_error("mixing time iteration did not converge");
    }
}

std::vector<CensorCompareRow> censoring_compare(int n, const CensoringScheme& scheme, std::int64_t sweeps) {
    if (n > 6) throw capacity_error("exact censoring comparison needs n <= 6");
    SweepOperator plain(n, SweepModel::CAT);
    // censored operators depend only on the active edge mask; cache by mask
    std::map<std::uint32_t, SweepOperator> censored_ops;
    auto mask_at = [&](std::int64_t sweep) {
        std::uint32_t m = 0;
        for (int e = 1; e <= n - 1; ++e)
            if (scheme.censored(sweep, e)) m |= 1u << (e - 1);
        return m;
    };

    auto nu_plain = Distribution<Rational>::point_mass(Permutation::identity(n));
    auto nu_cens = nu_plain;
    auto uni = Distribution<Rational>::uniform(n);

    std::vector<CensorCompareRow> rows;
    for (std::int64_t s = 0; s <= sweeps; ++s) {
        rows.push_back({s, total_variation(nu_plain, uni), total_variation(nu_cens, uni)});
        if (s == sweeps) break;
        nu_plain = plain.apply(nu_plain);
        std::uint32_t m = mask_at(s);
        auto it = censored_ops.find(m);
        if (it == censored_ops.end())
            it = censored_ops.emplace(m, SweepOperator(n, SweepModel::CAT, m)).first;
        nu_cens = it->second.apply(nu_cens);
    }
    return rows;
}

namespace {

/// Groups states by an integer signature and returns the half-L1 distance
/// between the grouped nu and the grouped uniform law.
Rational grouped_tv(const Distribution<Rational>& nu,
                    const std::function<std::vector<int>(const Permutation&)>& signature) {
    std::int64_t nf = factorial(nu.n);
    std::map<std::vector<int>, std::pair<Rational, std::int64_t>> groups; // mass, state count
    for (std::int64_t r = 0; r < nf; ++r) {
        Permutation sigma = lehmer_unrank(nu.n, r);
        auto& g = groups[signature(sigma)];
        g.first += nu.p[r];
        g.second += 1;
    }
    Rational s(0);
    for (const auto& [key, g] : groups) {
        Rational d = g.first - Rational(g.second, nf);
        s += d < Rational(0) ? Rational(-d) : d;
    }
    return s / 2;
}

} // namespace

ProjectedTv projected_tv(const Distribution<Rational>& nu, const BlockPartition& part) {
    if (nu.n > 7) throw capacity_error("projected TV needs n <= 7");
    if (nu.n != part.n) throw std::invalid_argument("size mismatch");

    ProjectedTv out;
    out.tv_hat = grouped_tv(nu, [&](const Permutation& sigma) {
        HeightTable t(sigma);
        std::vector<int> key;
        key.reserve(std::size_t(part.n) * part.K);
        for (int x = 1; x <= part.n; ++x)
            for (int j = 1; j <= part.K; ++j) key.push_back(t.count(x, part.cut[j]));
        return key;
    });
    out.tv_bar = grouped_tv(nu, [&](const Permutation& sigma) {
        HeightTable t(sigma);
        std::vector<int> key;
        key.reserve(std::size_t(part.K) * part.K);
        for (int i = 1; i <= part.K; ++i)
            for (int j = 1; j <= part.K; ++j) key.push_back(t.count(part.cut[i], part.cut[j]));
        return key;
    });
    auto uni = Distribution<Rational>::uniform(nu.n);
    out.tv_u = total_variation(block_uniformize(nu, part), uni);
    return out;
}

} // namespace catmix
