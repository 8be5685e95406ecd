#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "puresep/state.hpp"

namespace puresep {

/// (|0...0> + |1...1> + ... )/sqrt(levels): the uniform superposition of all
/// `levels` diagonal kets on n parties. n = 2, levels = 2 is the EPR pair,
/// n = 3 the GHZ state.
PureState cat_state(int parties, int levels = 2);

/// Uniform superposition of the n qubit basis states with a single 1.
PureState w_state(int parties);

/// Tensor product of normalized single-party states.
PureState product_state(std::span<const PureState> factors);

/// All 2d real components i.i.d. standard normal, then normalized.
/// Deterministic for a fixed seed (within one build of the library).
PureState random_state(const DimensionProfile& profile, std::uint64_t seed);

/// The n random normalized single-party factors behind random_product_state,
/// retained so tests can compare them against extracted factors.
std::vector<PureState> random_product_factors(const DimensionProfile& profile,
                                              std::uint64_t seed);

/// product_state(random_product_factors(profile, seed)).
PureState random_product_state(const DimensionProfile& profile, std::uint64_t seed);

/// normalize(state + eps * dir_perp), where dir_perp is `direction`
/// orthogonalized against `state` and rescaled to unit norm. Throws
/// DegenerateStateError when eps != 0 and the direction is parallel to
/// the state.
PureState perturb(const PureState& state, const PureState& direction, double epsilon);

}  // namespace puresep
