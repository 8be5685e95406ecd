#include "puresep/density.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "puresep/errors.hpp"
#include "puresep/linalg.hpp"

namespace puresep {

ReducedDensity::ReducedDensity(std::size_t order, std::vector<Complex> entries,
                               DensityOrigin origin)
    : order_(order), entries_(std::move(entries)), origin_(origin) {
    if (order_ == 0) throw ArgumentError("a density matrix needs at least one level");
    if (entries_.size() != order_ * order_)
        throw ArgumentError("density matrix storage does not match its order");
}

double ReducedDensity::trace_real() const {
    double t = 0.0;
    for (std::size_t i = 0; i < order_; ++i) t += entries_[i * order_ + i].real();
    return t;
}

std::vector<double> ReducedDensity::eigenvalues(OpCounters* counters) const {
    return hermitian_eigenvalues(entries_, order_, counters);
}

double ReducedDensity::max_abs_diff(const ReducedDensity& other) const {
    if (order_ != other.order_)
        throw ArgumentError("cannot compare density matrices of different orders");
    double worst = 0.0;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        worst = std::max(worst, std::abs(entries_[i] - other.entries_[i]));
    return worst;
}

ReducedDensity gram_large(const ModeUnfolding& m, OpCounters* counters) {
    const std::size_t r = m.rows();
    const auto c = static_cast<std::size_t>(m.cols());
    std::vector<Complex> out(r * r);
    for (std::size_t i = 0; i < r; ++i) {
        const auto ri = m.row(i);
        for (std::size_t j = i; j < r; ++j) {
            const auto rj = m.row(j);
            Complex sum{0.0, 0.0};
            for (std::size_t k = 0; k < c; ++k) sum += ri[k] * std::conj(rj[k]);
            if (counters) {
                counters->cmul += c;
                counters->cadd += c;
            }
            out[i * r + j] = sum;
            out[j * r + i] = std::conj(sum);
        }
    }
    return ReducedDensity(r, std::move(out), DensityOrigin::kGramLarge);
}

ReducedDensity gram_small(const ModeUnfolding& m, OpCounters* counters) {
    const std::size_t r = m.rows();
    const auto c = static_cast<std::size_t>(m.cols());
    std::vector<Complex> out(c * c, Complex{0.0, 0.0});
    for (std::size_t row = 0; row < r; ++row) {
        const auto v = m.row(row);
        for (std::size_t i = 0; i < c; ++i) {
            for (std::size_t j = i; j < c; ++j) out[i * c + j] += std::conj(v[i]) * v[j];
            if (counters) {
                counters->cmul += c - i;
                counters->cadd += c - i;
            }
        }
    }
    for (std::size_t i = 0; i < c; ++i)
        for (std::size_t j = 0; j < i; ++j) out[i * c + j] = std::conj(out[j * c + i]);
    return ReducedDensity(c, std::move(out), DensityOrigin::kGramSmall);
}

ReducedDensity partial_trace(const PureState& state, int party, OpCounters* counters) {
    const DimensionProfile& profile = state.profile();
    const int n = profile.parties();
    if (n < 2) throw ArgumentError("partial trace needs a state with at least 2 parties");
    if (party < 0 || party >= n)
        throw ArgumentError("party index " + std::to_string(party) + " out of range [0, " +
                            std::to_string(n) + ")");

    const std::size_t r = profile.complement(party);
    const auto dk = static_cast<std::size_t>(profile.dim(party));
    const auto amps = state.amplitudes();

    // Decode a row label into a full multi-index, leaving the traced party's
    // slot untouched. Remaining parties are consumed last-fastest.
    auto decode = [&](std::size_t row, std::vector<int>& multi) {
        for (int s = n - 1; s >= 0; --s) {
            if (s == party) continue;
            const auto d = static_cast<std::size_t>(profile.dim(s));
            multi[static_cast<std::size_t>(s)] = static_cast<int>(row % d);
            row /= d;
        }
    };

    std::vector<int> mi(static_cast<std::size_t>(n), 0);
    std::vector<int> mj(static_cast<std::size_t>(n), 0);
    std::vector<Complex> out(r * r);
    for (std::size_t i = 0; i < r; ++i) {
        decode(i, mi);
        for (std::size_t j = i; j < r; ++j) {
            decode(j, mj);
            Complex sum{0.0, 0.0};
            for (std::size_t level = 0; level < dk; ++level) {
                mi[static_cast<std::size_t>(party)] = static_cast<int>(level);
                mj[static_cast<std::size_t>(party)] = static_cast<int>(level);
                sum += amps[flat_index(profile, mi)] * std::conj(amps[flat_index(profile, mj)]);
            }
            if (counters) {
                counters->cmul += dk;
                counters->cadd += dk;
            }
            out[i * r + j] = sum;
            out[j * r + i] = std::conj(sum);
        }
    }
    return ReducedDensity(r, std::move(out), DensityOrigin::kPartialTrace);
}

}  // namespace puresep
