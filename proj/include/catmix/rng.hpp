#pragma once

#include <cstdint>

namespace catmix::rng {

/// splitmix64 finalizer; the output sequence mix(k), mix(k+phi), ... is the
/// standard splitmix64 stream for state k.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Counter-based random stream. Word i of a stream is a pure function of
/// (key, i), so any (seed, trial, sweep) cell of an experiment can be
/// regenerated independently of every other cell.
class Stream {
public:
    explicit Stream(std::uint64_t key) : key_(key) {}

    /// Stream for one trial/sweep cell of an experiment grid.
    static Stream at(std::uint64_t seed, std::uint64_t trial, std::uint64_t sweep) {
        std::uint64_t k = mix64(seed ^ 0x5bd1e995u);
        k = mix64(k ^ (trial * 0x9e3779b97f4a7c15ULL));
        k = mix64(k ^ (sweep * 0xc2b2ae3d27d4eb4fULL));
        return Stream(k);
    }

    std::uint64_t next_word() { return mix64(key_ + ctr_++ * 0x9e3779b97f4a7c15ULL); }

    bool next_bit() {
        if (avail_ == 0) {
            buf_ = next_word();
            avail_ = 64;
        }
        bool b = buf_ & 1;
        buf_ >>= 1;
        --avail_;
        return b;
    }

    /// Number of consecutive 1-bits before the first 0 (the 0 is consumed).
    /// Geometric with P(count = j) = 2^-(j+1); never truncates.
    int run_of_ones() {
        int j = 0;
        while (next_bit()) ++j;
        return j;
    }

    /// Uniform in [0,1) with 53 random bits.
    double next_unit() { return (next_word() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, m).  Rejection-free enough for m << 2^64.
    std::uint64_t next_below(std::uint64_t m) {
        // rejection sampling on the top range keeps the law exactly uniform
        std::uint64_t lim = 0xffffffffffffffffULL - 0xffffffffffffffffULL % m;
        std::uint64_t w;
        do { w = next_word(); } while (w >= lim);
        return w % m;
    }

private:
    std::uint64_t key_;
    std::uint64_t ctr_ = 0;
    std::uint64_t buf_ = 0;
    int avail_ = 0;
};

} // namespace catmix::rng
