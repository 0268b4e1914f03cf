#include "catmix/exclusion.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "catmix/calibration.hpp"
#include "catmix/errors.hpp"
#include "catmix/parallel.hpp"

namespace catmix {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

Configuration::Configuration(std::vector<std::uint8_t> occupancy) : occ_(std::move(occupancy)) {
    for (auto b : occ_) {
        if (b > 1) throw std::invalid_argument("occupancy entries must be 0/1");
        k_ += b;
    }
}

Configuration Configuration::wedge(int n, int k) {
    if (k < 0 || k > n) throw std::invalid_argument("need 0 <= k <= n");
    std::vector<std::uint8_t> v(n, 0);
    for (int i = 0; i < k; ++i) v[i] = 1;
    return Configuration(std::move(v));
}

Configuration Configuration::parse(const std::string& bitstring) {
    std::vector<std::uint8_t> v;
    for (char c : bitstring) {
        if (c == '0') v.push_back(0);
        else if (c == '1') v.push_back(1);
        else throw std::invalid_argument("bitstring must be 0/1 characters");
    }
    return Configuration(std::move(v));
}

std::string Configuration::to_string() const {
    std::string s(occ_.size(), '0');
    for (size_t i = 0; i < occ_.size(); ++i)
        if (occ_[i]) s[i] = '1';
    return s;
}

Configuration Configuration::complement() const {
    std::vector<std::uint8_t> v(occ_.size());
    for (size_t i = 0; i < occ_.size(); ++i) v[i] = occ_[i] ? 0 : 1;
    return Configuration(std::move(v));
}

Configuration project_to_particles(const Permutation& sigma, int k) {
    std::vector<std::uint8_t> v(sigma.size());
    for (int x = 1; x <= sigma.size(); ++x) v[x - 1] = sigma.label_at(x) <= k ? 1 : 0;
    return Configuration(std::move(v));
}

Configuration excl_sweep(const Configuration& xi, const SweepRandomness& r) {
    int n = xi.size();
    if (int(r.bits.size()) != n - 1) throw std::invalid_argument("sweep needs exactly n-1 bits");
    Configuration c = xi;
    for (int i = 0; i < n - 1; ++i) {
        int e = r.direction == Direction::LeftToRight ? i + 1 : n - 1 - i;
        if (r.bits[i]) c.swap_sites(e, e + 1);
    }
    return c;
}

HeightField height_profile(const Configuration& xi) {
    int n = xi.size(), k = xi.particles();
    HeightField h;
    h.n = n;
    h.values.resize(n);
    int c = 0;
    for (int x = 1; x <= n; ++x) {
        c += xi.occupied(x) ? 1 : 0;
        h.values[x - 1] = c - double(x) * k / n;
    }
    return h;
}

double particle_statistic(const Configuration& xi) {
    HeightField h = height_profile(xi);
    const auto& st = sin_table(h.n);
    double s = 0;
    for (int x = 1; x <= h.n; ++x) s += h.values[x - 1] * st[x];
    return s;
}

double expected_particle_statistic_after_sweep(const Configuration& xi) {
    int n = xi.size();
    if (n > 14) throw capacity_error("sweep enumeration needs n <= 14");
    std::uint64_t words = std::uint64_t(1) << (n - 1);
    double tot = 0;
    for (int d = 0; d < 2; ++d)
        for (std::uint64_t w = 0; w < words; ++w) {
            auto r = SweepRandomness::from_word(n, Direction(d), w);
            tot += particle_statistic(excl_sweep(xi, r));
        }
    return tot / double(2 * words);
}

double particle_drift_residual(const Configuration& xi) {
    double e = expected_particle_statistic_after_sweep(xi);
    return std::fabs(e - (1.0 - contraction_rate(xi.size())) * particle_statistic(xi));
}

std::int64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::int64_t colex_rank(const Configuration& xi) {
    std::int64_t rank = 0;
    int i = 0;
    for (int x = 0; x < xi.size(); ++x)
        if (xi.bits()[x]) rank += binomial(x, ++i);
    return rank;
}

Configuration colex_unrank(int n, int k, std::int64_t rank) {
    std::vector<std::uint8_t> v(n, 0);
    for (int i = k; i >= 1; --i) {
        int x = i - 1;
        while (x + 1 < n && binomial(x + 1, i) <= rank) ++x;
        v[x] = 1;
        rank -= binomial(x, i);
    }
    return Configuration(std::move(v));
}

std::vector<Rational> excl_exact_tv(int n, int k, std::int64_t sweeps) {
    std::int64_t states = binomial(n, k);
    if (n > 14 || states * (std::int64_t(1) << n) > (std::int64_t(1) << 24))
        throw capacity_error("exact particle kernel too large: (n choose k) * 2^n over budget");

    std::uint64_t words = std::uint64_t(1) << (n - 1);
    std::int64_t denom = 2 * std::int64_t(words);
    std::vector<std::vector<std::pair<std::int32_t, std::int32_t>>> trans(states);
    run_indexed(states, [&](std::int64_t src) {
        Configuration xi = colex_unrank(n, k, src);
        std::map<std::int64_t, std::int32_t> agg;
        for (int d = 0; d < 2; ++d)
            for (std::uint64_t w = 0; w < words; ++w) {
                auto r = SweepRandomness::from_word(n, Direction(d), w);
                agg[colex_rank(excl_sweep(xi, r))] += 1;
            }
        for (auto& [t, c] : agg) trans[src].emplace_back(std::int32_t(t), c);
    });

    std::vector<Rational> p(states, Rational(0));
    p[colex_rank(Configuration::wedge(n, k))] = Rational(1);
    Rational uni(1, states);
    std::vector<Rational> tv_curve;
    for (std::int64_t s = 0; s <= sweeps; ++s) {
        Rational tv(0);
        for (const auto& v : p) {
            Rational d = v - uni;
            tv += d < Rational(0) ? Rational(-d) : d;
        }
        tv_curve.push_back(tv / 2);
        if (s == sweeps) break;
        std::vector<Rational> q(states, Rational(0));
        for (std::int64_t src = 0; src < states; ++src) {
            if (p[src] == Rational(0)) continue;
            for (const auto& [tgt, cnt] : trans[src]) q[tgt] += p[src] * Rational(cnt);
        }
        for (auto& v : q) v /= Rational(denom);
        p = std::move(q);
    }
    return tv_curve;
}

LowerBoundReport excl_mixing_lower_bound(int n, int k, double eps) {
    int kp = std::min(k, n - k);
    if (kp < 4) throw std::domain_error("need min(k, n-k) >= 4");
    LowerBoundReport rep;
    rep.inputs.phi0 = particle_statistic(Configuration::wedge(n, kp));
    rep.inputs.gamma = contraction_rate(n);
    rep.inputs.delta = 3 * kPi / (4.0 * n);
    rep.inputs.R = kSecondMomentCExcl * kp * std::log(double(kp));
    rep.inputs.phi_sup = rep.inputs.phi0; // the wedge maximizes |Psi|
    rep.inputs.eps = eps;
    rep.t_sweeps = wilson_lower_bound(rep.inputs);
    rep.t_steps = rep.t_sweeps * (n - 1);
    return rep;
}

CouplingTailCurve excl_coupling_time(int n, int k, std::int64_t trials, std::uint64_t seed,
                                     const std::vector<std::int64_t>& sweep_grid, ExecMode mode) {
    if (trials < 1 || sweep_grid.empty()) throw std::invalid_argument("need trials and a sweep grid");
    std::int64_t horizon = *std::max_element(sweep_grid.begin(), sweep_grid.end());

    // per trial: sweep index at which the labeled chains fully matched
    std::vector<std::int64_t> matched_at(trials);
    run_indexed(trials, [&](std::int64_t trial) {
        // site -> particle label (0 = hole); wedge vs anti-wedge starts,
        // particles labeled left to right in both chains
        std::vector<int> a(n + 1, 0), b(n + 1, 0);
        for (int i = 1; i <= k; ++i) a[i] = i;
        for (int i = 1; i <= k; ++i) b[n - k + i] = i;
        std::int64_t when = horizon + 1;
        for (std::int64_t s = 0; s < horizon; ++s) {
            rng::Stream st = rng::Stream::at(seed, trial, s);
            bool right = st.next_bit();
            for (int i = 0; i < n - 1; ++i) {
                int e = right ? n - 1 - i : i + 1;
                bool common = st.next_bit();
                bool aux = st.next_bit();
                bool crossed = (a[e] != 0 && a[e] == b[e + 1]) || (a[e + 1] != 0 && a[e + 1] == b[e]);
                if (crossed) {
                    if (aux) std::swap(a[e], a[e + 1]);
                    else     std::swap(b[e], b[e + 1]);
                } else if (common) {
                    std::swap(a[e], a[e + 1]);
                    std::swap(b[e], b[e + 1]);
                }
            }
            if (std::equal(a.begin(), a.end(), b.begin())) {
                when = s + 1;
                break;
            }
        }
        matched_at[trial] = when;
    }, mode);

    CouplingTailCurve out;
    out.sweeps = sweep_grid;
    for (auto s : sweep_grid) {
        std::int64_t uncoupled = 0;
        for (auto w : matched_at)
            if (w > s) ++uncoupled;
        out.uncoupled.push_back(double(uncoupled) / double(trials));
    }
    return out;
}

} // namespace catmix
