#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "catmix/observables.hpp"
#include "catmix/parallel.hpp"
#include "catmix/permutation.hpp"
#include "catmix/rational.hpp"
#include "catmix/sweeps.hpp"
#include "catmix/wilson.hpp"

namespace catmix {

/// Particle configuration on n sites: occupancy bits with a fixed particle
/// count. Serialized as a bitstring "110100...".
class Configuration {
public:
    Configuration() = default;
    explicit Configuration(std::vector<std::uint8_t> occupancy);

    /// All particles packed at the left end.
    static Configuration wedge(int n, int k);
    static Configuration parse(const std::string& bitstring);

    int size() const { return int(occ_.size()); }
    int particles() const { return k_; }
    bool occupied(int x) const { return occ_[x - 1] != 0; } // 1-based
    const std::vector<std::uint8_t>& bits() const { return occ_; }
    std::string to_string() const;

    void swap_sites(int x, int y) { std::swap(occ_[x - 1], occ_[y - 1]); }
    /// Particle/hole involution.
    Configuration complement() const;

    bool operator==(const Configuration&) const = default;

private:
    std::vector<std::uint8_t> occ_;
    int k_ = 0;
};

/// Deck-to-particle projection: labels <= k become particles.
Configuration project_to_particles(const Permutation& sigma, int k);

/// Same edge order and bit semantics as the plain deck sweep; bit 1 swaps
/// the two site contents. Commutes with project_to_particles.
Configuration excl_sweep(const Configuration& xi, const SweepRandomness& r);

/// Height profile g(x) = #occupied among sites <= x, centered by x*k/n.
HeightField height_profile(const Configuration& xi);

/// Sine-weighted height statistic of a configuration.
double particle_statistic(const Configuration& xi);

/// Exact conditional one-sweep mean of the particle statistic, by
/// enumerating all 2 * 2^(n-1) outcomes (n <= 14).
double expected_particle_statistic_after_sweep(const Configuration& xi);
double particle_drift_residual(const Configuration& xi);

/// Colex rank of a configuration among all (n choose k) configurations;
/// the ordering contract for exact particle-system distributions.
std::int64_t colex_rank(const Configuration& xi);
Configuration colex_unrank(int n, int k, std::int64_t rank);
std::int64_t binomial(int n, int k);

/// Exact TV-to-uniform curve of the particle chain from the wedge state,
/// one entry per sweep 0..sweeps. Capacity-gated by (n choose k) * 2^n.
std::vector<Rational> excl_exact_tv(int n, int k, std::int64_t sweeps);

/// Lower-bound report with particle-statistic inputs: phi0 = Psi(wedge),
/// R = C k' log k', both after the particle/hole reduction k' = min(k, n-k).
LowerBoundReport excl_mixing_lower_bound(int n, int k, double eps);

struct CouplingTailCurve {
    std::vector<std::int64_t> sweeps; // grid
    std::vector<double> uncoupled;    // empirical P(chains differ at that sweep)
};

/**
 * Two particle chains under the matching coupling, particles labeled left
 * to right at sweep 0 in both chains. Starts are the wedge and the
 * anti-wedge (the two extreme packings). Reports the empirical fraction of
 * trials still uncoupled at each grid sweep.
 */
CouplingTailCurve excl_coupling_time(int n, int k, std::int64_t trials, std::uint64_t seed,
                                     const std::vector<std::int64_t>& sweep_grid,
                                     ExecMode mode = ExecMode::OpenMP);

} // namespace catmix
