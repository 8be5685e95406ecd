#pragma once

#include "puresep/errors.hpp"

namespace puresep {

/// Thresholds that turn exact zero-tests into floating-point decisions.
struct ToleranceConfig {
    double norm = 1e-9;      ///< accepted |sum |a|^2 - 1| after construction
    double zero = 1e-12;     ///< entry magnitudes at or below this count as zero
    double det = 1e-8;       ///< |det(M M^dagger - I)| at or below this counts as zero
    double rank = 1e-8;      ///< sigma_2/sigma_1 at or below this counts as rank 1
    double fidelity = 1e-9;  ///< accepted 1 - |<reconstruction|state>|^2

    void validate() const {
        if (norm <= 0 || zero <= 0 || det <= 0 || rank <= 0 || fidelity <= 0)
            throw ArgumentError("tolerances must be strictly positive");
    }
};

// Construction-time constants of the state type itself (not configurable
// per call: a PureState is normalized by contract).
inline constexpr double kNormTolerance = 1e-9;  // flag renormalization above this
inline constexpr double kNormSlack = 1e-3;      // reject input norms further off than this
inline constexpr double kZeroTolerance = 1e-12;

}  // namespace puresep
