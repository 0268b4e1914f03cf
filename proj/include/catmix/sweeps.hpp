#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "catmix/permutation.hpp"
#include "catmix/rng.hpp"

namespace catmix {

enum class Direction : std::uint8_t { LeftToRight = 0, RightToLeft = 1 };

/**
 * Randomness driving one full sweep: the exploration direction plus one
 * fair bit per visited edge, indexed by visit step (bit 0 belongs to the
 * first edge the sweep touches).
 *
 * Bit semantics differ per update rule and are fixed here once:
 *   plain sweep:     bit 1 = transpose the edge, 0 = leave it.
 *   monotone sweep:  bit 1 = sort the pair ascending, 0 = descending.
 * Both rules induce the same one-sweep transition kernel.
 */
struct SweepRandomness {
    Direction direction = Direction::LeftToRight;
    std::vector<std::uint8_t> bits; // n-1 fair bits, visit order

    static SweepRandomness draw(int n, rng::Stream& s);
    /// Enumeration helper: direction dir, bit i of `word` drives visit step i.
    static SweepRandomness from_word(int n, Direction dir, std::uint64_t word);
};

/// Raw time t counts edge updates; sweep i covers t in ((n-1)i, (n-1)(i+1)].
inline std::int64_t sweeps_to_steps(int n, std::int64_t sweeps) { return std::int64_t(n - 1) * sweeps; }
inline std::int64_t steps_to_sweeps(int n, std::int64_t steps) { return steps / (n - 1); }

/**
 * Which edges are skipped at a given sweep. The canonical three-phase form
 * censors the cutpoint edges {x_i} during sweep windows [0,s1] u [s2,s3] and
 * nothing in between. Arbitrary explicit schedules are supported for
 * experiments.
 */
class CensoringScheme {
public:
    /// No censoring.
    CensoringScheme() = default;

    /// Censors `edges` during the half-open sweep windows [a,b).
    CensoringScheme(std::vector<int> edges, std::vector<std::pair<std::int64_t, std::int64_t>> windows);

    /// Canonical three-phase scheme for deck size n and parameter eta, with
    /// phase ends derived from the asymptotic schedule (in sweeps).
    static CensoringScheme three_phase(int n, double eta);

    /// Three-phase scheme rescaled so the third phase ends at `total_sweeps`;
    /// phase ends keep the proportions (eta/3) : (1+2*eta/3) : (1+eta).
    static CensoringScheme three_phase_scaled(int n, double eta, std::int64_t total_sweeps);

    /// Censors every edge forever ("everything").
    static CensoringScheme everything(int n);

    /// Parses "three-phase:eta=0.1[,sweeps=50]" or "edges=2,4;windows=0-100,400-500"
    /// or "none" / "everything". Window bounds are sweeps, inclusive of the start.
    static CensoringScheme parse(const std::string& text, int n);

    bool censored(std::int64_t sweep, int edge) const;
    bool empty() const { return edges_.empty(); }
    const std::vector<int>& edges() const { return edges_; }
    const std::vector<std::pair<std::int64_t, std::int64_t>>& windows() const { return windows_; }

private:
    std::vector<int> edges_;
    std::vector<std::pair<std::int64_t, std::int64_t>> windows_; // [a,b) in sweeps; empty edges_ = none
};

/// Plain CAT sweep: visit edges 1..n-1 (or n-1..1), transpose iff bit set.
Permutation sweep(const Permutation& sigma, const SweepRandomness& r);

/// Order-preserving update rule: bit 1 sorts the visited pair ascending,
/// bit 0 descending. Shares the one-sweep kernel with `sweep`.
Permutation monotone_sweep(const Permutation& sigma, const SweepRandomness& r);

/// monotone_sweep with the scheme's censored edges skipped.
Permutation censored_sweep(const Permutation& sigma, const SweepRandomness& r,
                           const CensoringScheme& scheme, std::int64_t sweep_index);

/**
 * Matching coupling of two decks sharing the exploration direction. At each
 * edge: if some card sits at (x, x+1) in one deck and (x+1, x) in the other,
 * the decks move oppositely (the aux bit picks which one swaps); otherwise
 * they make the identical move driven by the shared bit. A card matched in
 * both decks stays matched. Marginally each deck is a plain CAT sweep.
 */
std::pair<Permutation, Permutation> coupled_sweep(const Permutation& sigma, const Permutation& sigma2,
                                                  const SweepRandomness& r,
                                                  const std::vector<std::uint8_t>& aux_bits);

/// CAT variant that always explores left to right.
Permutation single_directional_sweep(const Permutation& sigma, const std::vector<std::uint8_t>& bits);

/// One step of the random adjacent-transposition baseline: uniform edge,
/// transpose with probability 1/2.
Permutation at_step(const Permutation& sigma, rng::Stream& s);

/// State samples at sweep boundaries plus the seed cell that generated them.
struct Trajectory {
    int n = 0;
    std::uint64_t seed = 0;
    std::uint64_t trial = 0;
    std::vector<Permutation> states; // states[i] = state after sweep i (states[0] = start)
};

} // namespace catmix
