#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "puresep/errors.hpp"
#include "puresep/tolerances.hpp"

namespace puresep {

using Complex = std::complex<double>;

/// Per-party dimensions (d_1, ..., d_n) of an n-partite system.
///
/// Every d_k >= 1. Single-party profiles (n = 1) exist so that extracted
/// tensor factors are ordinary states; the separability machinery itself
/// requires n >= 2.
class DimensionProfile {
public:
    explicit DimensionProfile(std::vector<int> dims);

    int parties() const noexcept { return static_cast<int>(dims_.size()); }
    int dim(int party) const;
    const std::vector<int>& dims() const noexcept { return dims_; }

    /// Total dimension d = prod_k d_k.
    std::size_t total() const noexcept { return total_; }
    /// D = max_k d_k.
    int max_dim() const noexcept { return max_dim_; }
    /// r = d / d_k, the row count of the mode-k unfolding.
    std::size_t complement(int party) const;

    friend bool operator==(const DimensionProfile&, const DimensionProfile&) = default;

private:
    std::vector<int> dims_;
    std::size_t total_ = 1;
    int max_dim_ = 1;
};

/// Flat index of a multi-index (0-based components, last party fastest):
/// (((i_1*d_2)+i_2)*d_3 + ...) + i_n.
std::size_t flat_index(const DimensionProfile& profile, std::span<const int> multi);

/// Inverse of flat_index; writes the components of `flat` into `multi`.
void unflatten(const DimensionProfile& profile, std::size_t flat, std::span<int> multi);

/// Normalized amplitude vector of an n-partite pure state.
///
/// The constructor accepts vectors whose norm is within 1e-3 of unity and
/// renormalizes them (flagging the event when the deviation exceeds the
/// norm tolerance); anything further off is rejected. Use normalized() to
/// scale an arbitrary nonzero vector. Instances are immutable and safe to
/// share across threads.
class PureState {
public:
    PureState(DimensionProfile profile, std::vector<Complex> amplitudes);

    /// Scales any nonzero amplitude vector to unit norm.
    static PureState normalized(DimensionProfile profile, std::vector<Complex> amplitudes);

    const DimensionProfile& profile() const noexcept { return profile_; }
    std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
    std::size_t size() const noexcept { return amplitudes_.size(); }

    Complex amplitude(std::size_t flat) const { return amplitudes_.at(flat); }
    Complex amplitude(std::span<const int> multi) const;

    /// |input norm^2 - 1| seen at construction, before renormalization.
    double input_deviation() const noexcept { return input_deviation_; }
    /// True when the input deviated by more than the norm tolerance.
    bool was_renormalized() const noexcept { return input_deviation_ > kNormTolerance; }

private:
    DimensionProfile profile_;
    std::vector<Complex> amplitudes_;
    double input_deviation_ = 0.0;
};

/// <a|b> = sum_i conj(a_i) b_i. Throws on profile mismatch.
Complex inner_product(const PureState& a, const PureState& b);

}  // namespace puresep
