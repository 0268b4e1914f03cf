#include "catmix/walks.hpp"

#include <cmath>
#include <stdexcept>

#include "catmix/errors.hpp"
#include "catmix/parallel.hpp"

namespace catmix {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

double increment_pmf(int k) {
    int a = std::abs(k);
    double p = std::ldexp(1.0, -(a + 3));
    if (a <= 1) p += std::ldexp(1.0, -(3 - a));
    return p;
}

Rational increment_pmf_exact(int k) {
    int a = std::abs(k);
    Rational p = pow2_inv(a + 3);
    if (a <= 1) p += pow2_inv(3 - a);
    return p;
}

int sample_increment(rng::Stream& s) {
    // Tagged-card move in one direction: back one step with probability 1/2,
    // otherwise ride forward a fair-bit run. Direction bit mirrors the sign.
    bool mirror = s.next_bit();
    int x;
    if (s.next_bit()) x = -1;
    else x = s.run_of_ones();
    return mirror ? -x : x;
}

std::vector<Rational> card_jump_law_directed(int x, int n, Direction dir) {
    if (n < 2 || x < 0 || x >= n) throw std::invalid_argument("need n >= 2, 0 <= x <= n-1");
    if (dir == Direction::RightToLeft) {
        auto m = card_jump_law_directed(n - 1 - x, n, Direction::LeftToRight);
        std::vector<Rational> out(n);
        for (int y = 0; y < n; ++y) out[y] = m[n - 1 - y];
        return out;
    }
    std::vector<Rational> law(n, Rational(0));
    if (x >= 1) {
        law[x - 1] = Rational(1, 2);                       // pulled back by the edge behind
        for (int y = x; y < n - 1; ++y)                    // declined, then rode y-x swaps
            law[y] = pow2_inv(y - x + 2);
        law[n - 1] = pow2_inv(n - x);                      // rode the sweep to the end
    } else {
        for (int y = 0; y < n - 1; ++y) law[y] = pow2_inv(y + 1);
        law[n - 1] = pow2_inv(n - 1);
    }
    return law;
}

std::vector<Rational> card_jump_law(int x, int n) {
    if (n < 3) throw std::invalid_argument("closed-form jump law needs n >= 3");
    if (x < 0 || x >= n) throw std::invalid_argument("position out of 0..n-1");
    std::vector<Rational> law(n, Rational(0));
    if (x == 0 || x == n - 1) {
        // one-sided: P(move k) = 2^-(k+2) + 1/4 for k <= 1, far end 2^-n
        for (int k = 0; k <= n - 2; ++k) {
            Rational p = pow2_inv(k + 2);
            if (k <= 1) p += Rational(1, 4);
            law[x == 0 ? k : n - 1 - k] = p;
        }
        law[x == 0 ? n - 1 : 0] = pow2_inv(n);
        return law;
    }
    for (int k = -x + 1; k <= n - x - 2; ++k) law[x + k] = increment_pmf_exact(k);
    for (int k : {-x, n - 1 - x}) {
        int a = std::abs(k);
        Rational p = pow2_inv(a + 2);
        if (a <= 1) p += pow2_inv(3 - a);
        law[x + k] = p;
    }
    return law;
}

int step_tagged_card(int x, int n, Direction dir, rng::Stream& s) {
    if (dir == Direction::RightToLeft) return n - 1 - step_tagged_card(n - 1 - x, n, Direction::LeftToRight, s);
    // left-to-right: the edge behind the card fires first, then it may ride
    if (x >= 1 && s.next_bit()) return x - 1;
    while (x < n - 1 && s.next_bit()) ++x;
    return x;
}

int step_tagged_card(int x, int n, rng::Stream& s) {
    Direction dir = s.next_bit() ? Direction::RightToLeft : Direction::LeftToRight;
    return step_tagged_card(x, n, dir, s);
}

std::vector<std::int64_t> pushed_walk_path(const std::vector<int>& increments, std::int64_t q0) {
    if (q0 < 0) throw std::invalid_argument("q0 must be >= 0");
    std::vector<std::int64_t> path(increments.size() + 1);
    std::int64_t s = 0, run_min = 0;
    path[0] = q0;
    for (size_t i = 0; i < increments.size(); ++i) {
        s += increments[i];
        run_min = std::min(run_min, s);
        path[i + 1] = s - std::min(run_min, -q0);
    }
    return path;
}

double KilledWalkKernel::defect(int x) const {
    double s = 0;
    for (double v : row[x]) s += v;
    return 1.0 - s;
}

KilledWalkKernel killed_srw_kernel(int n) {
    if (n < 2) throw std::invalid_argument("need n >= 2");
    KilledWalkKernel k;
    k.n = n;
    k.row.assign(n, std::vector<double>(n, 0.0));
    k.row[0][1] = 1.0;
    for (int x = 1; x <= n - 2; ++x) {
        k.row[x][x - 1] = 0.5;
        k.row[x][x + 1] = 0.5;
    }
    k.row[n - 1][n - 2] = 0.5; // the other half of the mass is killed
    return k;
}

KilledWalkKernel killed_increment_kernel(int n) {
    KilledWalkKernel k;
    k.n = n;
    k.row.assign(n, std::vector<double>(n, 0.0));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) k.row[x][y] = increment_pmf(y - x);
    return k;
}

SpectrumReport killed_srw_spectrum(int n) {
    if (n < 2) throw std::invalid_argument("need n >= 2");
    KilledWalkKernel M = killed_srw_kernel(n);
    SpectrumReport rep;
    rep.n = n;
    rep.modes.resize(n);
    for (int j = 0; j < n; ++j) {
        auto& m = rep.modes[j];
        m.eigenvalue = std::cos((2 * j + 1) * kPi / (2 * n));
        m.eigenvector.resize(n);
        for (int x = 0; x < n; ++x) m.eigenvector[x] = std::cos((2 * j + 1) * kPi * x / (2 * n));
    }
    // residuals; M is effectively tridiagonal so this is O(n^2)
    double resid = 0;
    for (int j = 0; j < n; ++j) {
        const auto& f = rep.modes[j].eigenvector;
        double lam = rep.modes[j].eigenvalue;
        for (int x = 0; x < n; ++x) {
            double mf = 0;
            if (x == 0) mf = f[1];
            else if (x == n - 1) mf = 0.5 * f[n - 2];
            else mf = 0.5 * (f[x - 1] + f[x + 1]);
            resid = std::max(resid, std::fabs(mf - lam * f[x]));
        }
    }
    rep.eigen_residual_max = resid;

    std::vector<double> offdiag(n, 0.0), diagerr(n, 0.0);
    run_indexed(n, [&](std::int64_t j) {
        const auto& fj = rep.modes[j].eigenvector;
        double worst = 0;
        for (int l = 0; l < n; ++l) {
            if (l == int(j)) continue;
            const auto& fl = rep.modes[l].eigenvector;
            double dot = 0;
            for (int x = 0; x < n; ++x) dot += fj[x] * fl[x];
            dot -= 0.5 * fj[0] * fl[0]; // half weight at the reflecting end
            worst = std::max(worst, std::fabs(dot));
        }
        offdiag[j] = worst;
        double dd = 0;
        for (int x = 0; x < n; ++x) dd += fj[x] * fj[x];
        diagerr[j] = std::fabs(dd - 0.5 * (n + 1));
    });
    for (int j = 0; j < n; ++j) {
        rep.gram_offdiag_max = std::max(rep.gram_offdiag_max, offdiag[j]);
        rep.gram_diag_err = std::max(rep.gram_diag_err, diagerr[j]);
    }
    return rep;
}

std::vector<double> survival_curve(const KilledWalkKernel& kernel, int start, std::int64_t t_max) {
    int n = kernel.n;
    if (start < 0 || start >= n) throw std::invalid_argument("start out of range");
    std::vector<double> p(n, 0.0), q(n, 0.0);
    p[start] = 1.0;
    std::vector<double> out;
    out.reserve(t_max + 1);
    out.push_back(1.0);
    for (std::int64_t t = 1; t <= t_max; ++t) {
        std::fill(q.begin(), q.end(), 0.0);
        for (int x = 0; x < n; ++x) {
            if (p[x] == 0.0) continue;
            const auto& row = kernel.row[x];
            for (int y = 0; y < n; ++y) q[y] += p[x] * row[y];
        }
        std::swap(p, q);
        double s = 0;
        for (double v : p) s += v;
        out.push_back(s);
    }
    return out;
}

TailCurve hitting_time_right(int n, int start, std::int64_t trials, std::uint64_t seed,
                             const std::vector<double>& thetas, ExecMode mode) {
    if (trials < 1) throw std::invalid_argument("need trials >= 1");
    TailCurve c;
    c.theta = thetas;
    std::int64_t t_max = 0;
    for (double th : thetas) {
        auto t = std::int64_t(th * n * n / (kPi * kPi));
        c.t.push_back(t);
        t_max = std::max(t_max, t);
    }
    std::vector<std::int64_t> hit(trials);
    run_indexed(trials, [&](std::int64_t k) {
        int x = start;
        std::int64_t t = 0;
        while (x != n - 1 && t <= t_max) {
            rng::Stream s = rng::Stream::at(seed, k, t); // one stream cell per sweep
            x = step_tagged_card(x, n, s);
            ++t;
        }
        hit[k] = x == n - 1 ? t : t_max + 1;
    }, mode);
    for (auto t : c.t) {
        std::int64_t over = 0;
        for (auto h : hit)
            if (h > t) ++over;
        c.tail.push_back(double(over) / double(trials));
    }
    return c;
}

} // namespace catmix
