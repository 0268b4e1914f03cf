#include "catmix/distribution.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <type_traits>

namespace catmix {

std::int64_t factorial(int n) {
    if (n < 0 || n > 20) throw std::invalid_argument("factorial supports 0..20");
    std::int64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

std::int64_t lehmer_rank(const Permutation& sigma) {
    int n = sigma.size();
    std::int64_t rank = 0;
    for (int i = 1; i <= n; ++i) {
        int smaller_later = 0;
        for (int j = i + 1; j <= n; ++j)
            if (sigma.label_at(j) < sigma.label_at(i)) ++smaller_later;
        rank += smaller_later * factorial(n - i);
    }
    return rank;
}

Permutation lehmer_unrank(int n, std::int64_t rank) {
    std::vector<int> avail;
    for (int v = 1; v <= n; ++v) avail.push_back(v);
    std::vector<int> lab(n);
    for (int i = 0; i < n; ++i) {
        std::int64_t f = factorial(n - 1 - i);
        int idx = int(rank / f);
        rank %= f;
        lab[i] = avail[idx];
        avail.erase(avail.begin() + idx);
    }
    return Permutation(lab);
}

template <class Scalar>
bool Distribution<Scalar>::is_normalized() const {
    Scalar s(0);
    for (const auto& v : p) s += v;
    if constexpr (std::is_same_v<Scalar, Rational>) {
        return s == Scalar(1);
    } else {
        return std::fabs(s - 1.0) < 1e-12;
    }
}

template <class Scalar>
Scalar total_variation(const Distribution<Scalar>& a, const Distribution<Scalar>& b) {
    if (a.n != b.n) throw std::invalid_argument("size mismatch");
    Scalar s(0);
    for (size_t i = 0; i < a.p.size(); ++i) {
        Scalar d = a.p[i] - b.p[i];
        s += d < Scalar(0) ? Scalar(-d) : d;
    }
    return s / Scalar(2);
}

template <class Scalar>
Distribution<Scalar> block_uniformize(const Distribution<Scalar>& nu, const BlockPartition& part) {
    if (!nu.is_normalized()) throw std::invalid_argument("input distribution must sum to 1");
    if (nu.n != part.n) throw std::invalid_argument("size mismatch");
    auto subgroup = block_subgroup(part);
    Distribution<Scalar> out = Distribution<Scalar>::zero(nu.n);
    std::int64_t nf = factorial(nu.n);
    Scalar w = Scalar(1) / Scalar(std::int64_t(subgroup.size()));
    for (std::int64_t r = 0; r < nf; ++r) {
        Permutation sigma = lehmer_unrank(nu.n, r);
        Scalar acc(0);
        for (const auto& tau : subgroup) acc += nu.p[lehmer_rank(tau.compose(sigma))];
        out.p[r] = acc * w;
    }
    return out;
}

namespace {

std::string rational_str(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

std::string double_str(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

template <class Scalar, class Fmt>
std::string dist_json(const Distribution<Scalar>& d, Fmt fmt, bool quote) {
    std::ostringstream os;
    os << "{\"n\":" << d.n << ",\"ordering\":\"lehmer\",\"ranks\":[";
    bool first = true;
    for (size_t i = 0; i < d.p.size(); ++i) {
        if (d.p[i] == Scalar(0)) continue;
        if (!first) os << ',';
        os << i;
        first = false;
    }
    os << "],\"probs\":[";
    first = true;
    for (size_t i = 0; i < d.p.size(); ++i) {
        if (d.p[i] == Scalar(0)) continue;
        if (!first) os << ',';
        if (quote) os << '"' << fmt(d.p[i]) << '"';
        else os << fmt(d.p[i]);
        first = false;
    }
    os << "]}";
    return os.str();
}

} // namespace

std::string to_json(const Distribution<Rational>& d) {
    return dist_json(d, rational_str, true);
}

std::string to_json(const Distribution<double>& d) {
    return dist_json(d, double_str, false);
}

template struct Distribution<Rational>;
template struct Distribution<double>;
template Rational total_variation(const Distribution<Rational>&, const Distribution<Rational>&);
template double total_variation(const Distribution<double>&, const Distribution<double>&);
template Distribution<Rational> block_uniformize(const Distribution<Rational>&, const BlockPartition&);
template Distribution<double> block_uniformize(const Distribution<double>&, const BlockPartition&);

} // namespace catmix
