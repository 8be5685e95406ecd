#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "puresep/criteria.hpp"
#include "puresep/state.hpp"
#include "puresep/tolerances.hpp"

namespace puresep {

/// One cut's spectrum as seen by the reference path.
struct CutSpectrum {
    int party = 0;
    /// Schmidt coefficients, descending; min(d_k, r) entries, best effort
    /// beyond the second one.
    std::vector<double> singular_values;
    /// ||M - s1 u v*||_F / s1 for the fitted dominant triplet. This is the
    /// decision quantity: it can only overestimate the true rank-1 defect,
    /// so a value under the cutoff is trustworthy evidence of separability.
    double residual_ratio = 0.0;
    int schmidt_rank = 1;
    /// Whether the dominant fit met its residual tolerance. A non-converged
    /// fit only happens for heavily entangled cuts (two leading coefficients
    /// nearly equal), where the verdict is not in doubt.
    bool converged = false;
};

/// Brute-force separability reference. Fits the best product vector across
/// every cut by alternating matrix-vector iteration and measures what is
/// left over, entrywise. Shares no matrix or eigenvalue code with the
/// criteria, so the two paths can check each other.
struct OracleReport {
    std::vector<CutSpectrum> cuts;
    bool separable = false;
    double cutoff = 0.0;      // residual-ratio threshold applied per cut
    double min_margin = 0.0;  // smallest factor by which any cut clears the cutoff
};

OracleReport oracle_schmidt(const PureState& state, const ToleranceConfig& tol = {});

/// Decision routes compared by cross_validate: the four criteria in their
/// fixed order, then the oracle.
inline constexpr std::size_t kMethodCount = 5;
std::string_view method_label(std::size_t method);

struct CrossValidationReport {
    std::size_t states = 0;
    /// agreement[a][b] = number of states on which routes a and b matched.
    std::array<std::array<std::size_t, kMethodCount>, kMethodCount> agreement{};
    std::vector<std::size_t> disagreements;  // indices where any two routes differ
    std::vector<std::size_t> indecisive;     // indices the oracle decided with margin < 10x
    std::size_t oracle_separable = 0;
};

/// Runs all four criteria plus the oracle over a batch of states and
/// tabulates how often each pair of routes agreed.
CrossValidationReport cross_validate(std::span<const PureState> states,
                                     const CriteriaOptions& opts = {});

}  // namespace puresep
