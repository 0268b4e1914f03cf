#include "catmix/wilson.hpp"

#include <cmath>
#include <stdexcept>

#include "catmix/calibration.hpp"
#include "catmix/decay.hpp"
#include "catmix/errors.hpp"
#include "catmix/observables.hpp"
#include "catmix/parallel.hpp"
#include "catmix/rng.hpp"
#include "catmix/sweeps.hpp"

namespace catmix {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

void WilsonInputs::validate() const {
    if (!(gamma > 0 && gamma < 2 - std::sqrt(2.0)))
        throw std::domain_error("gamma must lie in (0, 2 - sqrt(2))");
    if (!(phi0 > 0) || !(delta >= 0) || !(R > 0) || !(phi_sup > 0) || !(eps > 0))
        throw std::domain_error("wilson inputs must be positive (delta >= 0)");
}

double wilson_lower_bound(const WilsonInputs& w) {
    w.validate();
    double gstar = -std::log1p(-w.gamma);
    return std::log(w.phi0) / gstar -
           std::log(48.0 * (w.delta * w.phi_sup + w.R) / (w.gamma * w.eps)) / (2.0 * gstar);
}

double contraction_rate(int n) {
    if (n < 2) throw std::invalid_argument("need n >= 2");
    double c = std::cos(kPi / n);
    return 1.0 - (c / 2.0 + (1.0 - c / 2.0) / (5.0 - 4.0 * c));
}

double contraction_rate_series(int n, int k_max) {
    double th = kPi / n, s = 0;
    for (int k = -1; k <= k_max; ++k) s += std::cos(k * th) * std::ldexp(1.0, -(k + 2));
    return 1.0 - s;
}

double statistic_at_identity(int n) { return wilson_statistic(Permutation::identity(n)); }

double expected_statistic_after_sweep(const Permutation& sigma, ResidualMode mode) {
    int n = sigma.size();
    if (mode == ResidualMode::Recursion) {
        HeightField h = height_profile(sigma);
        std::vector<double> col(h.values.begin(), h.values.end() - 1); // h(n) = 0 dropped
        col = decay::mean_height_step(col, n);
        const auto& st = sin_table(n);
        double s = 0;
        for (int x = 1; x <= n - 1; ++x) s += col[x - 1] * st[x];
        return s;
    }
    if (n > 14) throw capacity_error("sweep enumeration needs n <= 14");
    std::uint64_t words = std::uint64_t(1) << (n - 1);
    std::vector<double> per_dir(2, 0.0);
    run_indexed(2, [&](std::int64_t d) {
        double tot = 0;
        for (std::uint64_t w = 0; w < words; ++w) {
            auto r = SweepRandomness::from_word(n, Direction(d), w);
            tot += wilson_statistic(sweep(sigma, r));
        }
        per_dir[d] = tot;
    });
    return (per_dir[0] + per_dir[1]) / double(2 * words);
}

double drift_residual(const Permutation& sigma, ResidualMode mode) {
    int n = sigma.size();
    double e = expected_statistic_after_sweep(sigma, mode);
    return std::fabs(e - (1.0 - contraction_rate(n)) * wilson_statistic(sigma));
}

SecondMomentEstimate increment_second_moment(int n, int states, std::int64_t sweeps_per_state,
                                             std::uint64_t seed, ExecMode mode) {
    if (states < 1 || sweeps_per_state < 1000)
        throw std::invalid_argument("need states >= 1 and >= 1e3 sweeps per state");
    struct Acc { double mean = 0, var = 0; };
    std::vector<Acc> acc(states);
    run_indexed(states, [&](std::int64_t si) {
        // state 0 is the identity; others are uniform decks
        rng::Stream setup = rng::Stream::at(seed, si, ~std::uint64_t(0));
        Permutation sigma = Permutation::identity(n);
        if (si > 0) { // Fisher-Yates from the stream
            std::vector<int> lab(n);
            for (int i = 0; i < n; ++i) lab[i] = i + 1;
            for (int i = n - 1; i > 0; --i)
                std::swap(lab[i], lab[setup.next_below(i + 1)]);
            sigma = Permutation(lab);
        }
        double phi = wilson_statistic(sigma);
        double sum = 0, sumsq = 0;
        for (std::int64_t t = 0; t < sweeps_per_state; ++t) {
            rng::Stream s = rng::Stream::at(seed, si, t);
            auto r = SweepRandomness::draw(n, s);
            double d = wilson_statistic(sweep(sigma, r)) - phi;
            sum += d * d;
            sumsq += d * d * d * d;
        }
        double m = sum / double(sweeps_per_state);
        acc[si].mean = m;
        acc[si].var = (sumsq / double(sweeps_per_state) - m * m) / double(sweeps_per_state);
    }, mode);
    SecondMomentEstimate out{0, 0, 0};
    for (const auto& a : acc)
        if (a.mean > out.max_mean_square) {
            out.max_mean_square = a.mean;
            out.std_error = std::sqrt(std::max(0.0, a.var));
        }
    out.fitted_c = out.max_mean_square / (n * std::log(double(n)));
    return out;
}

LowerBoundReport cat_mixing_lower_bound(int n, double eps) {
    if (n < 8) throw std::invalid_argument("need n >= 8");
    LowerBoundReport rep;
    rep.inputs.phi0 = statistic_at_identity(n);
    rep.inputs.gamma = contraction_rate(n);
    rep.inputs.delta = 3 * kPi / (4.0 * n);
    rep.inputs.R = kSecondMomentC * n * std::log(double(n));
    rep.inputs.phi_sup = double(n) * n / 8.0;
    rep.inputs.eps = eps;
    rep.t_sweeps = wilson_lower_bound(rep.inputs);
    rep.t_steps = rep.t_sweeps * (n - 1);
    return rep;
}

} // namespace catmix
