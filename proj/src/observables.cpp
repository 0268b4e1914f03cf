#include "catmix/observables.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace catmix {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

const std::vector<double>& sin_table(int n) {
    static std::map<int, std::vector<double>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) {
        std::vector<double> t(n + 1);
        for (int x = 0; x <= n; ++x) t[x] = std::sin(kPi * x / n);
        it = cache.emplace(n, std::move(t)).first;
    }
    return it->second;
}

double HeightField::max_abs() const {
    double m = 0;
    for (double v : values) m = std::max(m, std::fabs(v));
    return m;
}

double HeightField::l2() const {
    double s = 0;
    for (double v : values) s += v * v;
    return std::sqrt(s);
}

HeightField height_profile(const Permutation& sigma) {
    int n = sigma.size();
    int half = n / 2;
    HeightField h;
    h.n = n;
    h.values.resize(n);
    int c = 0;
    for (int x = 1; x <= n; ++x) {
        c += sigma.label_at(x) <= half ? 1 : 0;
        h.values[x - 1] = c - double(half) * x / n;
    }
    return h;
}

HeightField height_profile_by_positions(const Permutation& sigma) {
    int n = sigma.size();
    int half = n / 2;
    std::vector<int> below(n + 2, 0); // below[x] = #{a <= half : pos(a) = x}
    for (int a = 1; a <= half; ++a) below[sigma.position_of(a)]++;
    HeightField h;
    h.n = n;
    h.values.resize(n);
    int c = 0;
    for (int x = 1; x <= n; ++x) {
        c += below[x];
        h.values[x - 1] = c - double(x) * half / n;
    }
    return h;
}

double wilson_statistic(const HeightField& h) {
    const auto& st = sin_table(h.n);
    double s = 0;
    for (int x = 1; x <= h.n - 1; ++x) s += h.values[x - 1] * st[x];
    return s;
}

double wilson_statistic(const Permutation& sigma) { return wilson_statistic(height_profile(sigma)); }

double card_statistic_delta(const Permutation& before, const Permutation& after, int label) {
    int n = before.size();
    if (after.size() != n) throw std::invalid_argument("size mismatch");
    const auto& st = sin_table(n);
    int qb = before.position_of(label);
    int qa = after.position_of(label);
    if (qa == qb) return 0.0;
    // tail(q) = sum_{x=q}^{n-1} sin(pi x/n); difference telescopes over [min,max)
    double s = 0;
    for (int x = std::min(qa, qb); x < std::max(qa, qb); ++x) s += st[x];
    return qa < qb ? s : -s;
}

} // namespace catmix
