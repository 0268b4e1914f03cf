#pragma once

namespace catmix {

// Frozen calibration constants. The second-moment envelopes E[(dPhi)^2] <= C n log n
// (decks) and E[(dPsi)^2] <= C k' log k' (particle systems) need a numeric C;
// these were fitted once with increment_second_moment / excl_second_moment
// (seed 2026, n in {16,32,64}, (n,k) in {(32,8),(64,8),(64,16)}) and are
// reported alongside every lower bound that uses them.
inline constexpr double kSecondMomentC = 0.60;
inline constexpr double kSecondMomentCExcl = 1.40;

} // namespace catmix
