#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "puresep/counters.hpp"
#include "puresep/state.hpp"

namespace puresep {

/// Matricization of an n-partite state along one party.
///
/// Column c holds the amplitudes where the chosen party sits in level c; row
/// indices run lexicographically over the joint levels of the remaining
/// parties (last party fastest, matching the flat amplitude order). The
/// matrix has r = d / d_k rows and d_k columns and is materialized row-major,
/// so rows are contiguous.
class ModeUnfolding {
public:
    /// Builds the matrix for `party` (0-based). Requires a profile with at
    /// least two parties.
    ModeUnfolding(const PureState& state, int party);

    int party() const { return party_; }
    std::size_t rows() const { return rows_; }
    int cols() const { return cols_; }

    Complex at(std::size_t row, int col) const {
        return entries_[row * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(col)];
    }

    /// Contiguous view of one row.
    std::span<const Complex> row(std::size_t r) const {
        return {entries_.data() + r * static_cast<std::size_t>(cols_),
                static_cast<std::size_t>(cols_)};
    }

    std::span<const Complex> entries() const { return entries_; }

    /// Flat amplitude index of entry (row, col) in the originating state.
    std::size_t state_flat(std::size_t row, int col) const;

    /// Decodes a row index into the levels of the remaining parties, in
    /// original party order with this party omitted. `out` must have
    /// parties-1 slots.
    void complement_levels(std::size_t row, std::span<int> out) const;

    const DimensionProfile& profile() const { return profile_; }

    double frobenius_norm_sq() const;

private:
    DimensionProfile profile_;
    int party_;
    std::size_t rows_;
    int cols_;
    std::size_t inner_;  // product of dimensions after `party`; row = hi * inner_ + lo
    std::vector<Complex> entries_;
};

ModeUnfolding build_unfolding(const PureState& state, int party);

/// An unfolding with its all-zero rows and columns removed. `kept_rows` and
/// `kept_cols` map back to the original indices, both ascending.
class PrunedUnfolding {
public:
    PrunedUnfolding(int party, std::vector<std::size_t> kept_rows, std::vector<int> kept_cols,
                    std::vector<Complex> entries);

    int party() const { return party_; }
    std::size_t rows() const { return kept_rows_.size(); }
    int cols() const { return static_cast<int>(kept_cols_.size()); }

    Complex at(std::size_t row, int col) const {
        return entries_[row * kept_cols_.size() + static_cast<std::size_t>(col)];
    }

    std::span<const Complex> row(std::size_t r) const {
        return {entries_.data() + r * kept_cols_.size(), kept_cols_.size()};
    }

    const std::vector<std::size_t>& kept_rows() const { return kept_rows_; }
    const std::vector<int>& kept_cols() const { return kept_cols_; }

private:
    int party_;
    std::vector<std::size_t> kept_rows_;
    std::vector<int> kept_cols_;
    std::vector<Complex> entries_;  // row-major, rows() x cols()
};

/// Removes rows and columns whose entries all have magnitude <= zero_tol.
/// Inspects each entry once; tallies one comparison per entry when counters
/// are supplied.
PrunedUnfolding prune(const ModeUnfolding& unfolding, double zero_tol,
                      OpCounters* counters = nullptr);

}  // namespace puresep
