#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "puresep/criteria.hpp"
#include "puresep/state.hpp"

namespace puresep {

/// Deterministic dense load for the benchmarks: amplitudes proportional to
/// 1, 2, ..., d. Every cut matrix has rank exactly 2 (each row is an affine
/// ramp in the column index), so the state is entangled across every cut and
/// nothing can take an early exit.
PureState worst_case_state(const DimensionProfile& profile);

struct SweepPoint {
    int parties = 0;
    int dk = 0;                  // uniform per-party dimension
    std::size_t total = 0;       // d
    std::size_t complement = 0;  // r of one cut
    std::uint64_t ops = 0;       // cmul + cadd + cmp of one evaluation
    double seconds = 0.0;        // median wall time over the reps
};

struct CriterionSweep {
    Criterion criterion = Criterion::kDeterminant;
    std::vector<SweepPoint> points;
};

/// Grows the party count at a fixed per-party dimension (2 = qubits,
/// 3 = qutrits).
struct FamilySweepSpec {
    int level = 2;
    int n_min = 5;
    int n_max = 10;
    int reps = 3;
    std::vector<Criterion> criteria{Criterion::kProportionality, Criterion::kMinors,
                                    Criterion::kDeterminant};
    std::size_t mem_limit_mb = 512;
};

/// Grows the per-party dimension at a fixed party count.
struct FixedNSweepSpec {
    int parties = 3;
    int dk_min = 3;
    int dk_max = 8;
    int reps = 3;
    std::vector<Criterion> criteria{Criterion::kProportionality, Criterion::kMinors,
                                    Criterion::kDeterminant};
    std::size_t mem_limit_mb = 512;
};

/// Runs each requested criterion (exhaustive scan; the determinant also takes
/// its dense elimination route where available) over the size ladder.
/// Points whose working-set estimate exceeds the memory limit are skipped.
std::vector<CriterionSweep> run_family_sweep(const FamilySweepSpec& spec);
std::vector<CriterionSweep> run_fixed_n_sweep(const FixedNSweepSpec& spec);

/// Least-squares slope of log(y) against log(x). Needs at least two points,
/// distinct positive x and positive y.
double fit_loglog_slope(std::span<const double> x, std::span<const double> y);

/// Slope of ops against the total dimension d.
double slope_vs_total(const CriterionSweep& sweep);

/// Slope of ops against one cut's complement dimension r.
double slope_vs_complement(const CriterionSweep& sweep);

/// Slope of ops / d^exponent against the party count: divides out the
/// claimed per-cut cost and checks that what remains is the linear scan over
/// parties.
double normalized_party_slope(const CriterionSweep& sweep, double exponent);

}  // namespace puresep
