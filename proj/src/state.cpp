#include "puresep/state.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace puresep {

namespace {

// d can be large for many parties; refuse profiles whose amplitude vector
// would not fit in memory anyway.
constexpr std::size_t kMaxTotalDimension = std::size_t{1} << 28;

}  // namespace

DimensionProfile::DimensionProfile(std::vector<int> dims) : dims_(std::move(dims)) {
    if (dims_.empty()) throw ArgumentError("a profile needs at least one party");
    for (int d : dims_) {
        if (d < 1) throw ArgumentError("party dimensions must be >= 1");
        if (total_ > kMaxTotalDimension / static_cast<std::size_t>(d))
            throw ArgumentError("total dimension overflows the supported range");
        total_ *= static_cast<std::size_t>(d);
        max_dim_ = std::max(max_dim_, d);
    }
}

int DimensionProfile::dim(int party) const {
    if (party < 0 || party >= parties())
        throw ArgumentError("party index " + std::to_string(party) + " out of range [0, " +
                            std::to_string(parties()) + ")");
    return dims_[static_cast<std::size_t>(party)];
}

std::size_t DimensionProfile::complement(int party) const {
    return total_ / static_cast<std::size_t>(dim(party));
}

std::size_t flat_index(const DimensionProfile& profile, std::span<const int> multi) {
    if (multi.size() != static_cast<std::size_t>(profile.parties()))
        throw ArgumentError("multi-index has " + std::to_string(multi.size()) +
                            " components, profile has " + std::to_string(profile.parties()));
    std::size_t flat = 0;
    for (int k = 0; k < profile.parties(); ++k) {
        const int i = multi[static_cast<std::size_t>(k)];
        const int dk = profile.dims()[static_cast<std::size_t>(k)];
        if (i < 0 || i >= dk)
            throw ArgumentError("component " + std::to_string(i) + " of party " +
                                std::to_string(k) + " out of range [0, " + std::to_string(dk) +
                                ")");
        flat = flat * static_cast<std::size_t>(dk) + static_cast<std::size_t>(i);
    }
    return flat;
}

void unflatten(const DimensionProfile& profile, std::size_t flat, std::span<int> multi) {
    if (flat >= profile.total())
        throw ArgumentError("flat index " + std::to_string(flat) + " out of range");
    if (multi.size() != static_cast<std::size_t>(profile.parties()))
        throw ArgumentError("multi-index buffer has the wrong length");
    for (int k = profile.parties() - 1; k >= 0; --k) {
        const auto dk = static_cast<std::size_t>(profile.dims()[static_cast<std::size_t>(k)]);
        multi[static_cast<std::size_t>(k)] = static_cast<int>(flat % dk);
        flat /= dk;
    }
}

namespace {

double norm_squared(std::span<const Complex> amps) {
    double s = 0.0;
    for (const Complex& a : amps) s += std::norm(a);
    return s;
}

void require_finite(std::span<const Complex> amps) {
    for (const Complex& a : amps)
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
            throw ArgumentError("amplitudes must be finite");
}

}  // namespace

PureState::PureState(DimensionProfile profile, std::vector<Complex> amplitudes)
    : profile_(std::move(profile)), amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() != profile_.total())
        throw ArgumentError("expected " + std::to_string(profile_.total()) + " amplitudes, got " +
                            std::to_string(amplitudes_.size()));
    require_finite(amplitudes_);
    const double n2 = norm_squared(amplitudes_);
    input_deviation_ = std::abs(n2 - 1.0);
    if (input_deviation_ > kNormSlack) {
        std::ostringstream msg;
        msg << "state norm^2 deviates from 1 by " << input_deviation_ << " (limit " << kNormSlack
            << ")";
        throw NormalizationError(msg.str());
    }
    if (input_deviation_ > kNormTolerance) {
        const double inv = 1.0 / std::sqrt(n2);
        for (Complex& a : amplitudes_) a *= inv;
    }
}

PureState PureState::normalized(DimensionProfile profile, std::vector<Complex> amplitudes) {
    if (amplitudes.size() != profile.total())
        throw ArgumentError("expected " + std::to_string(profile.total()) + " amplitudes, got " +
                            std::to_string(amplitudes.size()));
    require_finite(amplitudes);
    const double n = std::sqrt(norm_squared(amplitudes));
    if (n <= kZeroTolerance)
        throw DegenerateStateError("cannot normalize a (numerically) zero amplitude vector");
    const double inv = 1.0 / n;
    for (Complex& a : amplitudes) a *= inv;
    return PureState(std::move(profile), std::move(amplitudes));
}

Complex PureState::amplitude(std::span<const int> multi) const {
    return amplitudes_[flat_index(profile_, multi)];
}

Complex inner_product(const PureState& a, const PureState& b) {
    if (a.profile() != b.profile())
        throw ArgumentError("inner product requires identical profiles");
    Complex s{0.0, 0.0};
    const auto av = a.amplitudes();
    const auto bv = b.amplitudes();
    for (std::size_t i = 0; i < av.size(); ++i) s += std::conj(av[i]) * bv[i];
    return s;
}

}  // namespace puresep
