#include "puresep/unfolding.hpp"

#include <cmath>
#include <string>

#include "puresep/errors.hpp"

namespace puresep {

ModeUnfolding::ModeUnfolding(const PureState& state, int party)
    : profile_(state.profile()), party_(party) {
    if (profile_.parties() < 2)
        throw ArgumentError("unfolding needs a state with at least 2 parties");
    if (party < 0 || party >= profile_.parties())
        throw ArgumentError("party index " + std::to_string(party) + " out of range [0, " +
                            std::to_string(profile_.parties()) + ")");
    cols_ = profile_.dim(party);
    rows_ = profile_.complement(party);
    inner_ = 1;
    for (int s = party + 1; s < profile_.parties(); ++s)
        inner_ *= static_cast<std::size_t>(profile_.dim(s));

    const auto amps = state.amplitudes();
    entries_.resize(rows_ * static_cast<std::size_t>(cols_));
    const auto dk = static_cast<std::size_t>(cols_);
    std::size_t out = 0;
    for (std::size_t row = 0; row < rows_; ++row) {
        const std::size_t hi = row / inner_;
        const std::size_t lo = row % inner_;
        const std::size_t base = hi * dk * inner_ + lo;
        for (std::size_t col = 0; col < dk; ++col) entries_[out++] = amps[base + col * inner_];
    }
}

std::size_t ModeUnfolding::state_flat(std::size_t row, int col) const {
    return (row / inner_ * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(col)) *
               inner_ +
           row % inner_;
}

void ModeUnfolding::complement_levels(std::size_t row, std::span<int> out) const {
    if (out.size() != static_cast<std::size_t>(profile_.parties() - 1))
        throw ArgumentError("complement_levels needs parties-1 output slots");
    std::size_t rest = row;
    std::size_t slot = out.size();
    for (int s = profile_.parties() - 1; s >= 0; --s) {
        if (s == party_) continue;
        const auto d = static_cast<std::size_t>(profile_.dim(s));
        out[--slot] = static_cast<int>(rest % d);
        rest /= d;
    }
}

double ModeUnfolding::frobenius_norm_sq() const {
    double sum = 0.0;
    for (const Complex& e : entries_) sum += std::norm(e);
    return sum;
}

ModeUnfolding build_unfolding(const PureState& state, int party) {
    return ModeUnfolding(state, party);
}

PrunedUnfolding::PrunedUnfolding(int party, std::vector<std::size_t> kept_rows,
                                 std::vector<int> kept_cols, std::vector<Complex> entries)
    : party_(party),
      kept_rows_(std::move(kept_rows)),
      kept_cols_(std::move(kept_cols)),
      entries_(std::move(entries)) {
    if (entries_.size() != kept_rows_.size() * kept_cols_.size())
        throw ArgumentError("pruned unfolding shape does not match its entries");
}

PrunedUnfolding prune(const ModeUnfolding& unfolding, double zero_tol, OpCounters* counters) {
    if (zero_tol < 0.0) throw ArgumentError("zero tolerance must be non-negative");
    const std::size_t r = unfolding.rows();
    const int c = unfolding.cols();
    std::vector<char> row_live(r, 0);
    std::vector<char> col_live(static_cast<std::size_t>(c), 0);
    for (std::size_t i = 0; i < r; ++i) {
        const auto row = unfolding.row(i);
        for (int j = 0; j < c; ++j) {
            if (counters) counters->cmp += 1;
            if (std::abs(row[static_cast<std::size_t>(j)]) > zero_tol) {
                row_live[i] = 1;
                col_live[static_cast<std::size_t>(j)] = 1;
            }
        }
    }

    std::vector<std::size_t> kept_rows;
    for (std::size_t i = 0; i < r; ++i)
        if (row_live[i]) kept_rows.push_back(i);
    std::vector<int> kept_cols;
    for (int j = 0; j < c; ++j)
        if (col_live[static_cast<std::size_t>(j)]) kept_cols.push_back(j);

    std::vector<Complex> entries;
    entries.reserve(kept_rows.size() * kept_cols.size());
    for (std::size_t i : kept_rows)
        for (int j : kept_cols) entries.push_back(unfolding.at(i, j));
    return PrunedUnfolding(unfolding.party(), std::move(kept_rows), std::move(kept_cols),
                           std::move(entries));
}

}  // namespace puresep
