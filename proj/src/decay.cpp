#include "catmix/decay.hpp"

#include <algorithm>

namespace catmix::decay {

DecayReport decay_bound_check(int n, std::int64_t sweeps, double delta, std::int64_t stride) {
    DecayReport rep;
    rep.n = n;
    rep.delta = delta;
    constexpr double kPi = 3.14159265358979323846;

    // one envelope and one |d0| mass evolution per target column y
    std::vector<std::vector<double>> u(n), dabs(n);
    for (int y = 1; y <= n; ++y) {
        u[y - 1] = height_column_id<double>(n, y);
        auto d0 = diff_column<double>(u[y - 1], n);
        for (auto& v : d0) v = std::fabs(v);
        dabs[y - 1] = std::move(d0);
    }
    auto snapshot = [&](std::int64_t s) {
        double mass = 0, uinf = 0;
        for (int y = 1; y <= n; ++y) {
            mass = std::max(mass, l1_norm(dabs[y - 1]));
            uinf = std::max(uinf, linf_norm(u[y - 1]));
        }
        double t = double(n - 1) * double(s);
        double env = std::exp(-(1 - delta) * kPi * kPi * t / (double(n) * n * n));
        rep.rows.push_back({s, mass, uinf, env, mass / env});
    };
    snapshot(0);
    for (std::int64_t s = 1; s <= sweeps; ++s) {
        for (int y = 1; y <= n; ++y) {
            u[y - 1] = envelope_step(u[y - 1], n);
            dabs[y - 1] = envelope_diff_step(dabs[y - 1], n);
        }
        if (s % stride == 0 || s == sweeps) snapshot(s);
    }
    const auto& last = rep.rows.back();
    rep.final_margin = std::log(last.envelope * 2.0 * n) - std::log(last.d_mass);
    return rep;
}

} // namespace catmix::decay
