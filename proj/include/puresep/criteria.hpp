#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "puresep/counters.hpp"
#include "puresep/state.hpp"
#include "puresep/tolerances.hpp"

namespace puresep {

/// The four equivalent single-cut separability tests. They agree exactly in
/// exact arithmetic; in floating point each has its own sensitivity profile,
/// which classify() cross-checks.
enum class Criterion { kDeterminant, kRank, kMinors, kProportionality };

/// Short stable name used on the command line and in machine output:
/// "det", "rank", "minors", "prop".
std::string_view criterion_name(Criterion c);
std::optional<Criterion> criterion_from_name(std::string_view name);

/// All four criteria in a fixed order (det, rank, minors, prop).
std::span<const Criterion> all_criteria();

/// Location of a non-vanishing 2x2 minor, in unpruned matrix coordinates.
struct MinorCoords {
    std::size_t row_a = 0;
    std::size_t row_b = 0;
    int col_a = 0;
    int col_b = 0;
};

/// Location of a failed column-proportionality check, in unpruned matrix
/// coordinates. The pivot is the reference entry; (row, col) is where the
/// cross-product against the pivot column failed to vanish.
struct PropCoords {
    std::size_t pivot_row = 0;
    int pivot_col = 0;
    std::size_t row = 0;
    int col = 0;
};

/// Evidence for an "entangled" verdict: which cut failed, the magnitude that
/// exceeded its threshold, and (for the entrywise criteria) where.
struct Witness {
    Criterion criterion = Criterion::kDeterminant;
    int party = 0;
    double violation = 0.0;
    double threshold = 0.0;
    std::optional<MinorCoords> minor;
    std::optional<PropCoords> prop;
};

/// Per-cut diagnostic value. Its meaning depends on the criterion:
/// determinant value (signed), second-to-first singular value ratio, largest
/// minor magnitude, or largest normalized proportionality defect.
struct PartyValue {
    int party = 0;
    double value = 0.0;
};

struct Verdict {
    Criterion criterion = Criterion::kDeterminant;
    bool separable = false;
    std::vector<PartyValue> values;  // one entry per examined cut
    std::optional<Witness> witness;  // present iff not separable
    OpCounters ops;                  // arithmetic attributed to this evaluation
};

struct CriteriaOptions {
    ToleranceConfig tol{};
    /// Keep scanning all cuts (and, for the entrywise criteria, all entries)
    /// after the first violation, reporting the largest one.
    bool exhaustive = false;
    /// Additionally evaluate the determinant on the large-side matrix with
    /// dense elimination and require agreement with the spectral route.
    bool dense_determinant = false;
    /// Optional external tally; each verdict's ops are added to it.
    OpCounters* counters = nullptr;
};

/// Cut determinants: party k is separable from the rest iff
/// det(MM^dagger - I) vanishes, equivalently the product of (lambda - 1)
/// over the small Gram spectrum times a parity sign. Tolerance: tol.det.
Verdict det_criterion(const PureState& state, const CriteriaOptions& opts = {});

/// Singular-value route: the cut matrix must have numerical rank 1, i.e.
/// sigma_2 / sigma_1 <= tol.rank for every cut.
Verdict rank_criterion(const PureState& state, const CriteriaOptions& opts = {});

/// Entrywise route: every 2x2 minor of every cut matrix must vanish
/// (magnitude <= tol.zero).
Verdict minor_criterion(const PureState& state, const CriteriaOptions& opts = {});

/// Linear-cost route: after removing all-zero rows and columns, every column
/// must be proportional to the pivot column; checked as cross-products
/// against a pivot entry, threshold tol.zero * |pivot|.
Verdict proportionality_criterion(const PureState& state, const CriteriaOptions& opts = {});

Verdict evaluate(Criterion criterion, const PureState& state, const CriteriaOptions& opts = {});

/// A full tensor factorization of a product state.
struct FactorDecomposition {
    std::vector<PureState> factors;  // one single-party state per party
    double fidelity = 0.0;           // squared overlap of the rebuilt product with the input
    PureState reassembled;           // the rebuilt product, phase-aligned with the input
};

/// Recovers the tensor factors of a product state. The global phase is folded
/// into the first factor so the rebuilt product overlaps the input with a
/// real positive amplitude. Throws ExtractionError when the input is not a
/// product state to working precision (rank ratio above tol.rank, or rebuilt
/// fidelity below 1 - tol.fidelity).
FactorDecomposition extract_factors(const PureState& state, const ToleranceConfig& tol = {});

/// Two verdicts that should have agreed but did not.
struct ConflictInfo {
    Criterion first = Criterion::kDeterminant;
    Criterion second = Criterion::kRank;
    std::string detail;
};

/// Outcome of running a set of criteria plus consistency checks. `conflict`
/// being set means the run is a numerical failure: the requested criteria
/// (or a criterion and the factor-extraction cross-check) disagreed.
struct ClassifyResult {
    std::vector<Verdict> verdicts;
    bool separable = false;
    std::optional<ConflictInfo> conflict;
    std::optional<FactorDecomposition> decomposition;
};

/// Runs the requested criteria and reconciles them. On consensus "separable"
/// it also extracts factors; an extraction failure is itself treated as a
/// disagreement (the rank criterion is appended as arbiter).
ClassifyResult classify(const PureState& state, std::span<const Criterion> criteria,
                        const CriteriaOptions& opts = {});

}  // namespace puresep
