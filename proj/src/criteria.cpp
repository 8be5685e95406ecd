#include "puresep/criteria.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <string>

#include "puresep/density.hpp"
#include "puresep/errors.hpp"
#include "puresep/generators.hpp"
#include "puresep/linalg.hpp"
#include "puresep/unfolding.hpp"

namespace puresep {

namespace {

// Rows beyond this skip the dense elimination cross-check; the spectral
// route alone decides.
constexpr std::size_t kDenseDeterminantLimit = 64;

constexpr std::array<Criterion, 4> kAllCriteria = {
    Criterion::kDeterminant,
    Criterion::kRank,
    Criterion::kMinors,
    Criterion::kProportionality,
};

std::string fmt_sci(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", x);
    return buf;
}

void require_multiparty(const PureState& state) {
    if (state.profile().parties() < 2)
        throw ArgumentError("separability criteria need a state with at least 2 parties");
}

// Records a violation, keeping the largest one seen. Returns true when the
// caller should stop scanning (first hit in non-exhaustive mode).
bool note_violation(Verdict& v, Witness w, bool exhaustive) {
    v.separable = false;
    if (!v.witness || w.violation > v.witness->violation) v.witness = std::move(w);
    return !exhaustive;
}

void finish(Verdict& v, const CriteriaOptions& opts) {
    if (opts.counters) *opts.counters += v.ops;
}

}  // namespace

std::string_view criterion_name(Criterion c) {
    switch (c) {
        case Criterion::kDeterminant: return "det";
        case Criterion::kRank: return "rank";
        case Criterion::kMinors: return "minors";
        case Criterion::kProportionality: return "prop";
    }
    throw ArgumentError("unknown criterion value");
}

std::optional<Criterion> criterion_from_name(std::string_view name) {
    for (Criterion c : kAllCriteria)
        if (criterion_name(c) == name) return c;
    return std::nullopt;
}

std::span<const Criterion> all_criteria() { return kAllCriteria; }

Verdict det_criterion(const PureState& state, const CriteriaOptions& opts) {
    opts.tol.validate();
    require_multiparty(state);
    Verdict v;
    v.criterion = Criterion::kDeterminant;
    v.separable = true;

    const int n = state.profile().parties();
    for (int k = 0; k < n; ++k) {
        const ModeUnfolding m(state, k);
        // Building the cut matrix and its Gram matrices is shared setup; the
        // tallied work is the determinant evaluation itself.
        const ReducedDensity small = gram_small(m);
        const std::vector<double> lambda = small.eigenvalues(&v.ops);
        double det = ((m.rows() + static_cast<std::size_t>(m.cols())) % 2 == 0) ? 1.0 : -1.0;
        for (double l : lambda) det *= l - 1.0;
        v.ops.cmul += lambda.size();
        v.ops.cadd += lambda.size();

        if (opts.dense_determinant && m.rows() <= kDenseDeterminantLimit) {
            const ReducedDensity large = gram_large(m);
            std::vector<Complex> shifted(large.entries().begin(), large.entries().end());
            for (std::size_t i = 0; i < large.order(); ++i)
                shifted[i * large.order() + i] -= 1.0;
            const Complex dense = lu_determinant(std::move(shifted), large.order(), &v.ops);
            const double agree_tol = 1e-8 * (1.0 + std::abs(det));
            if (std::abs(dense.imag()) > agree_tol || std::abs(dense.real() - det) > agree_tol)
                throw NumericalError("determinant routes disagree on party " + std::to_string(k) +
                                     ": spectral " + fmt_sci(det) + " vs dense " +
                                     fmt_sci(dense.real()));
        }

        v.values.push_back({k, det});
        if (std::abs(det) > opts.tol.det) {
            Witness w;
            w.criterion = Criterion::kDeterminant;
            w.party = k;
            w.violation = std::abs(det);
            w.threshold = opts.tol.det;
            if (note_violation(v, std::move(w), opts.exhaustive)) break;
        }
    }
    finish(v, opts);
    return v;
}

Verdict rank_criterion(const PureState& state, const CriteriaOptions& opts) {
    opts.tol.validate();
    require_multiparty(state);
    Verdict v;
    v.criterion = Criterion::kRank;
    v.separable = true;

    const int n = state.profile().parties();
    for (int k = 0; k < n; ++k) {
        const ModeUnfolding m(state, k);
        // Work on the cut matrix itself, not its Gram matrix: the ratio of a
        // numerically rank-1 cut must land near machine epsilon, well clear
        // of the tolerance, which squaring would forfeit.
        const std::vector<double> sigma =
            singular_values({m.entries().begin(), m.entries().end()}, m.rows(),
                            static_cast<std::size_t>(m.cols()), &v.ops);
        const double s1 = sigma[0];
        const double s2 = sigma.size() > 1 ? sigma[1] : 0.0;
        const double ratio = s1 > 0.0 ? s2 / s1 : 0.0;

        v.values.push_back({k, ratio});
        if (ratio > opts.tol.rank) {
            Witness w;
            w.criterion = Criterion::kRank;
            w.party = k;
            w.violation = ratio;
            w.threshold = opts.tol.rank;
            if (note_violation(v, std::move(w), opts.exhaustive)) break;
        }
    }
    finish(v, opts);
    return v;
}

Verdict minor_criterion(const PureState& state, const CriteriaOptions& opts) {
    opts.tol.validate();
    require_multiparty(state);
    Verdict v;
    v.criterion = Criterion::kMinors;
    v.separable = true;

    const int n = state.profile().parties();
    bool stop = false;
    for (int k = 0; k < n && !stop; ++k) {
        const ModeUnfolding m(state, k);
        const std::size_t r = m.rows();
        const int c = m.cols();
        double worst = 0.0;
        for (std::size_t i = 0; i < r && !stop; ++i) {
            for (std::size_t j = i + 1; j < r && !stop; ++j) {
                for (int a = 0; a < c && !stop; ++a) {
                    for (int b = a + 1; b < c && !stop; ++b) {
                        const Complex minor = m.at(i, a) * m.at(j, b) - m.at(i, b) * m.at(j, a);
                        v.ops.cmul += 2;
                        v.ops.cadd += 1;
                        v.ops.cmp += 1;
                        const double mag = std::abs(minor);
                        worst = std::max(worst, mag);
                        if (mag > opts.tol.zero) {
                            Witness w;
                            w.criterion = Criterion::kMinors;
                            w.party = k;
                            w.violation = mag;
                            w.threshold = opts.tol.zero;
                            w.minor = MinorCoords{i, j, a, b};
                            stop = note_violation(v, std::move(w), opts.exhaustive);
                        }
                    }
                }
            }
        }
        v.values.push_back({k, worst});
    }
    finish(v, opts);
    return v;
}

Verdict proportionality_criterion(const PureState& state, const CriteriaOptions& opts) {
    opts.tol.validate();
    require_multiparty(state);
    Verdict v;
    v.criterion = Criterion::kProportionality;
    v.separable = true;

    const int n = state.profile().parties();
    bool stop = false;
    for (int k = 0; k < n && !stop; ++k) {
        const ModeUnfolding m(state, k);
        const PrunedUnfolding p = prune(m, opts.tol.zero, &v.ops);
        const std::size_t pr = p.rows();
        const int pc = p.cols();
        if (pr == 0 || pc <= 1) {
            v.values.push_back({k, 0.0});
            continue;
        }

        // First live entry in row-major order anchors the comparison.
        std::size_t pivot_row = 0;
        int pivot_col = -1;
        for (std::size_t i = 0; i < pr && pivot_col < 0; ++i) {
            for (int j = 0; j < pc; ++j) {
                v.ops.cmp += 1;
                if (std::abs(p.at(i, j)) > opts.tol.zero) {
                    pivot_row = i;
                    pivot_col = j;
                    break;
                }
            }
        }
        if (pivot_col < 0)
            throw NumericalError("pruned matrix retained no live entry on party " +
                                 std::to_string(k));

        const Complex pivot = p.at(pivot_row, pivot_col);
        const double pivot_abs = std::abs(pivot);
        const double threshold = opts.tol.zero * pivot_abs;
        double worst = 0.0;
        for (int j = 0; j < pc && !stop; ++j) {
            if (j == pivot_col) continue;
            const Complex ref = p.at(pivot_row, j);
            for (std::size_t i = 0; i < pr && !stop; ++i) {
                if (i == pivot_row) continue;
                const Complex cross = p.at(i, j) * pivot - ref * p.at(i, pivot_col);
                v.ops.cmul += 2;
                v.ops.cadd += 1;
                v.ops.cmp += 1;
                const double mag = std::abs(cross);
                worst = std::max(worst, mag / pivot_abs);
                if (mag > threshold) {
                    Witness w;
                    w.criterion = Criterion::kProportionality;
                    w.party = k;
                    w.violation = mag;
                    w.threshold = threshold;
                    w.prop = PropCoords{p.kept_rows()[pivot_row], p.kept_cols()[static_cast<
                                            std::size_t>(pivot_col)],
                                        p.kept_rows()[i], p.kept_cols()[static_cast<std::size_t>(j)]};
                    stop = note_violation(v, std::move(w), opts.exhaustive);
                }
            }
        }
        v.values.push_back({k, worst});
    }
    finish(v, opts);
    return v;
}

Verdict evaluate(Criterion criterion, const PureState& state, const CriteriaOptions& opts) {
    switch (criterion) {
        case Criterion::kDeterminant: return det_criterion(state, opts);
        case Criterion::kRank: return rank_criterion(state, opts);
        case Criterion::kMinors: return minor_criterion(state, opts);
        case Criterion::kProportionality: return proportionality_criterion(state, opts);
    }
    throw ArgumentError("unknown criterion value");
}

FactorDecomposition extract_factors(const PureState& state, const ToleranceConfig& tol) {
    tol.validate();
    require_multiparty(state);
    const int n = state.profile().parties();

    std::vector<PureState> factors;
    factors.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const ModeUnfolding m(state, k);
        std::size_t best_row = 0;
        double best_norm = -1.0;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            double s = 0.0;
            for (const Complex& e : m.row(i)) s += std::norm(e);
            if (s > best_norm) {
                best_norm = s;
                best_row = i;
            }
        }
        const auto row = m.row(best_row);
        factors.push_back(PureState::normalized(DimensionProfile({m.cols()}),
                                                std::vector<Complex>(row.begin(), row.end())));
    }

    PureState rebuilt = product_state(factors);
    const Complex overlap = inner_product(rebuilt, state);
    const double fidelity = std::norm(overlap);

    CriteriaOptions ropts;
    ropts.tol = tol;
    ropts.exhaustive = true;
    const Verdict rank = rank_criterion(state, ropts);
    if (!rank.separable) {
        double worst_ratio = 0.0;
        for (const PartyValue& pv : rank.values) worst_ratio = std::max(worst_ratio, pv.value);
        throw ExtractionError("state is not a product state: singular value ratio " +
                                  fmt_sci(worst_ratio) + " exceeds " + fmt_sci(tol.rank),
                              fidelity);
    }
    if (fidelity < 1.0 - tol.fidelity)
        throw ExtractionError("rebuilt product misses the state: fidelity " + fmt_sci(fidelity) +
                                  " below 1 - " + fmt_sci(tol.fidelity),
                              fidelity);

    // Fold the residual global phase into the first factor so the rebuilt
    // product overlaps the input with a real positive amplitude.
    const Complex phase = overlap / std::abs(overlap);
    std::vector<Complex> first(factors[0].amplitudes().begin(), factors[0].amplitudes().end());
    for (Complex& a : first) a *= phase;
    factors[0] = PureState(factors[0].profile(), std::move(first));
    rebuilt = product_state(factors);

    return FactorDecomposition{std::move(factors), fidelity, std::move(rebuilt)};
}

ClassifyResult classify(const PureState& state, std::span<const Criterion> criteria,
                        const CriteriaOptions& opts) {
    if (criteria.empty()) throw ArgumentError("classify needs at least one criterion");
    ClassifyResult res;
    res.verdicts.reserve(criteria.size());
    for (Criterion c : criteria) res.verdicts.push_back(evaluate(c, state, opts));

    const Verdict* first_sep = nullptr;
    const Verdict* first_ent = nullptr;
    for (const Verdict& v : res.verdicts) {
        if (v.separable && !first_sep) first_sep = &v;
        if (!v.separable && !first_ent) first_ent = &v;
    }
    if (first_sep && first_ent) {
        res.conflict = ConflictInfo{first_sep->criterion, first_ent->criterion,
                                    "criteria disagree on separability"};
        return res;
    }

    res.separable = first_sep != nullptr;
    if (!res.separable) return res;

    try {
        res.decomposition = extract_factors(state, opts.tol);
    } catch (const ExtractionError& e) {
        // The criteria called the state separable but it does not factor; let
        // the singular-value route arbitrate and surface the disagreement.
        bool have_rank = false;
        for (const Verdict& v : res.verdicts) have_rank = have_rank || v.criterion == Criterion::kRank;
        if (!have_rank) res.verdicts.push_back(rank_criterion(state, opts));
        res.conflict = ConflictInfo{criteria[0], Criterion::kRank, e.what()};
        res.separable = false;
    }
    return res;
}

}  // namespace puresep
