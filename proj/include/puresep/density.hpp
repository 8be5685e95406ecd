#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "puresep/counters.hpp"
#include "puresep/state.hpp"
#include "puresep/unfolding.hpp"

namespace puresep {

/// How a ReducedDensity was produced; the Gram routes and the direct partial
/// trace must agree entrywise, which the tests exercise as an identity.
enum class DensityOrigin { kGramLarge, kGramSmall, kPartialTrace };

/// A Hermitian positive semidefinite matrix describing one side of a
/// bipartite cut of a pure state. Row-major square storage.
class ReducedDensity {
public:
    ReducedDensity(std::size_t order, std::vector<Complex> entries, DensityOrigin origin);

    std::size_t order() const { return order_; }
    DensityOrigin origin() const { return origin_; }

    Complex at(std::size_t i, std::size_t j) const { return entries_[i * order_ + j]; }
    std::span<const Complex> entries() const { return entries_; }

    double trace_real() const;

    /// Eigenvalues, descending. For a normalized state they sum to 1.
    std::vector<double> eigenvalues(OpCounters* counters = nullptr) const;

    /// Entrywise max-norm distance to another matrix of the same order.
    double max_abs_diff(const ReducedDensity& other) const;

private:
    std::size_t order_;
    std::vector<Complex> entries_;
    DensityOrigin origin_;
};

/// M M^dagger for an unfolding M: the reduced state of everything except
/// M's party. Dimension r x r with r = d / d_k.
ReducedDensity gram_large(const ModeUnfolding& unfolding, OpCounters* counters = nullptr);

/// M^dagger M: d_k x d_k, sharing its spectrum with the party's own reduced
/// state (it is that matrix's transpose).
ReducedDensity gram_small(const ModeUnfolding& unfolding, OpCounters* counters = nullptr);

/// Traces `party` out of the state directly from the amplitudes, without
/// going through an unfolding. Rows/columns are labelled by the remaining
/// parties' joint levels, last party fastest — the same basis order as
/// gram_large, so the two are comparable entry by entry.
ReducedDensity partial_trace(const PureState& state, int party, OpCounters* counters = nullptr);

}  // namespace puresep
