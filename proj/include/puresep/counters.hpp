#pragma once

#include <cstdint>

namespace puresep {

/// Tally of the algorithmic operations a criterion performs: complex
/// multiplications, complex additions, and threshold/pivot comparisons.
/// Loop bookkeeping is not counted, so totals are run-to-run identical
/// for a fixed (state, criterion, mode).
///
/// Callers that do not benchmark pass a null pointer; criteria then skip
/// all tallying.
struct OpCounters {
    std::uint64_t cmul = 0;
    std::uint64_t cadd = 0;
    std::uint64_t cmp = 0;

    std::uint64_t total() const noexcept { return cmul + cadd + cmp; }
    void reset() noexcept { cmul = cadd = cmp = 0; }

    OpCounters& operator+=(const OpCounters& o) noexcept {
        cmul += o.cmul;
        cadd += o.cadd;
        cmp += o.cmp;
        return *this;
    }
    friend bool operator==(const OpCounters&, const OpCounters&) = default;
};

}  // namespace puresep
