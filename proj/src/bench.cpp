#include "puresep/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <string>

#include "puresep/errors.hpp"

namespace puresep {

namespace {

// Rough per-evaluation working set: the state, one cut matrix, both Gram
// matrices. 16 bytes per complex entry, doubled for slack.
std::size_t working_set_bytes(const DimensionProfile& profile) {
    const std::size_t d = profile.total();
    std::size_t worst_r = 0;
    for (int k = 0; k < profile.parties(); ++k)
        worst_r = std::max(worst_r, profile.complement(k));
    const std::size_t entries = d + d + worst_r * worst_r +
                                static_cast<std::size_t>(profile.max_dim()) *
                                    static_cast<std::size_t>(profile.max_dim());
    return entries * sizeof(Complex) * 2;
}

SweepPoint measure(Criterion criterion, const DimensionProfile& profile, int reps) {
    const PureState state = worst_case_state(profile);
    CriteriaOptions opts;
    opts.exhaustive = true;
    opts.dense_determinant = criterion == Criterion::kDeterminant;

    SweepPoint point;
    point.parties = profile.parties();
    point.dk = profile.dim(0);
    point.total = profile.total();
    point.complement = profile.complement(0);

    std::vector<double> times;
    times.reserve(static_cast<std::size_t>(reps));
    for (int rep = 0; rep < reps; ++rep) {
        const auto t0 = std::chrono::steady_clock::now();
        const Verdict v = evaluate(criterion, state, opts);
        const auto t1 = std::chrono::steady_clock::now();
        times.push_back(std::chrono::duration<double>(t1 - t0).count());
        point.ops = v.ops.total();
    }
    std::sort(times.begin(), times.end());
    point.seconds = times[times.size() / 2];
    return point;
}

std::vector<CriterionSweep> run_sweep(const std::vector<Criterion>& criteria,
                                      const std::vector<DimensionProfile>& ladder, int reps,
                                      std::size_t mem_limit_mb) {
    if (criteria.empty()) throw ArgumentError("a sweep needs at least one criterion");
    if (ladder.empty()) throw ArgumentError("a sweep needs at least one size");
    if (reps < 1) throw ArgumentError("reps must be at least 1");

    std::vector<CriterionSweep> sweeps;
    sweeps.reserve(criteria.size());
    for (Criterion c : criteria) {
        CriterionSweep sweep;
        sweep.criterion = c;
        for (const DimensionProfile& profile : ladder) {
            if (working_set_bytes(profile) > mem_limit_mb * std::size_t{1024} * 1024) break;
            sweep.points.push_back(measure(c, profile, reps));
        }
        if (sweep.points.empty())
            throw ArgumentError("memory limit of " + std::to_string(mem_limit_mb) +
                                " MiB leaves no sizes to measure");
        sweeps.push_back(std::move(sweep));
    }
    return sweeps;
}

}  // namespace

PureState worst_case_state(const DimensionProfile& profile) {
    std::vector<Complex> amps(profile.total());
    for (std::size_t i = 0; i < amps.size(); ++i)
        amps[i] = Complex{static_cast<double>(i + 1), 0.0};
    return PureState::normalized(profile, std::move(amps));
}

std::vector<CriterionSweep> run_family_sweep(const FamilySweepSpec& spec) {
    if (spec.level < 2) throw ArgumentError("family level must be at least 2");
    if (spec.n_min < 2 || spec.n_max < spec.n_min)
        throw ArgumentError("family sweep needs 2 <= n_min <= n_max");
    std::vector<DimensionProfile> ladder;
    for (int n = spec.n_min; n <= spec.n_max; ++n)
        ladder.emplace_back(std::vector<int>(static_cast<std::size_t>(n), spec.level));
    return run_sweep(spec.criteria, ladder, spec.reps, spec.mem_limit_mb);
}

std::vector<CriterionSweep> run_fixed_n_sweep(const FixedNSweepSpec& spec) {
    if (spec.parties < 2) throw ArgumentError("fixed-n sweep needs at least 2 parties");
    if (spec.dk_min < 2 || spec.dk_max < spec.dk_min)
        throw ArgumentError("fixed-n sweep needs 2 <= dk_min <= dk_max");
    std::vector<DimensionProfile> ladder;
    for (int dk = spec.dk_min; dk <= spec.dk_max; ++dk)
        ladder.emplace_back(std::vector<int>(static_cast<std::size_t>(spec.parties), dk));
    return run_sweep(spec.criteria, ladder, spec.reps, spec.mem_limit_mb);
}

double fit_loglog_slope(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw ArgumentError("slope fit needs matching x and y lengths");
    if (x.size() < 2) throw ArgumentError("slope fit needs at least two points");
    const auto m = static_cast<double>(x.size());
    double mx = 0.0;
    double my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] <= 0.0 || y[i] <= 0.0)
            throw ArgumentError("slope fit needs strictly positive values");
        mx += std::log(x[i]);
        my += std::log(y[i]);
    }
    mx /= m;
    my /= m;
    double sxx = 0.0;
    double sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = std::log(x[i]) - mx;
        sxx += dx * dx;
        sxy += dx * (std::log(y[i]) - my);
    }
    if (sxx == 0.0) throw ArgumentError("slope fit needs at least two distinct x values");
    return sxy / sxx;
}

namespace {

double sweep_slope(const CriterionSweep& sweep, double (*xof)(const SweepPoint&)) {
    std::vector<double> xs;
    std::vector<double> ys;
    xs.reserve(sweep.points.size());
    ys.reserve(sweep.points.size());
    for (const SweepPoint& p : sweep.points) {
        xs.push_back(xof(p));
        ys.push_back(static_cast<double>(p.ops));
    }
    return fit_loglog_slope(xs, ys);
}

}  // namespace

double slope_vs_total(const CriterionSweep& sweep) {
    return sweep_slope(sweep, [](const SweepPoint& p) { return static_cast<double>(p.total); });
}

double slope_vs_complement(const CriterionSweep& sweep) {
    return sweep_slope(sweep,
                       [](const SweepPoint& p) { return static_cast<double>(p.complement); });
}

double normalized_party_slope(const CriterionSweep& sweep, double exponent) {
    std::vector<double> xs;
    std::vector<double> ys;
    xs.reserve(sweep.points.size());
    ys.reserve(sweep.points.size());
    for (const SweepPoint& p : sweep.points) {
        xs.push_back(static_cast<double>(p.parties));
        ys.push_back(static_cast<double>(p.ops) /
                     std::pow(static_cast<double>(p.total), exponent));
    }
    return fit_loglog_slope(xs, ys);
}

}  // namespace puresep
