#include "puresep/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "puresep/errors.hpp"

namespace puresep {

namespace {

constexpr int kFitBudget = 200000;  // alternating steps for the dominant fit
constexpr int kTailBudget = 20000;  // per deflation round for the tail values
constexpr double kFitResidualTol = 1e-12;
constexpr std::uint64_t kStartSeed = 0x5eed5eed1234abcdULL;

// Geometry of one cut, derived from divisor strides alone.
struct CutShape {
    std::size_t stride;  // joint size of the parties after this one
    std::size_t dk;      // this party's dimension
    std::size_t r;       // everything else
};

CutShape cut_shape(const DimensionProfile& profile, int party) {
    std::size_t stride = 1;
    for (int s = profile.parties() - 1; s > party; --s)
        stride *= static_cast<std::size_t>(profile.dim(s));
    const auto dk = static_cast<std::size_t>(profile.dim(party));
    return {stride, dk, profile.total() / dk};
}

// Dense r x dk scratch of the cut, filled straight from the flat amplitudes:
// an amplitude's column is its level at `party`, its row packs the high and
// low halves of the remaining index.
std::vector<Complex> cut_matrix(const PureState& state, const CutShape& sh) {
    const auto amps = state.amplitudes();
    std::vector<Complex> mat(sh.r * sh.dk);
    for (std::size_t f = 0; f < amps.size(); ++f) {
        const std::size_t col = (f / sh.stride) % sh.dk;
        const std::size_t row = (f / (sh.stride * sh.dk)) * sh.stride + f % sh.stride;
        mat[row * sh.dk + col] = amps[f];
    }
    return mat;
}

double vec_norm(std::span<const Complex> x) {
    double s = 0.0;
    for (const Complex& e : x) s += std::norm(e);
    return std::sqrt(s);
}

struct Rank1Fit {
    double sigma = 0.0;
    std::vector<Complex> u;  // length r
    std::vector<Complex> v;  // length dk
    bool converged = false;
};

// Alternating power steps u <- Mv, v <- M*u from a seeded random start,
// until the singular value stagnates and the residual ||Mv - sigma u|| meets
// its tolerance. A zero matrix short-circuits with sigma = 0.
Rank1Fit dominant_triplet(const std::vector<Complex>& mat, std::size_t r, std::size_t dk,
                          std::uint64_t seed, int budget) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Rank1Fit fit;
    fit.u.assign(r, Complex{0.0, 0.0});
    fit.v.resize(dk);
    double vn = 0.0;
    do {
        for (Complex& e : fit.v) e = Complex{gauss(rng), gauss(rng)};
        vn = vec_norm(fit.v);
    } while (vn == 0.0);
    for (Complex& e : fit.v) e /= vn;

    double sigma_prev = -1.0;
    for (int step = 0; step < budget; ++step) {
        for (std::size_t i = 0; i < r; ++i) {
            Complex acc{0.0, 0.0};
            for (std::size_t j = 0; j < dk; ++j) acc += mat[i * dk + j] * fit.v[j];
            fit.u[i] = acc;
        }
        const double un = vec_norm(fit.u);
        if (un == 0.0) {
            fit.sigma = 0.0;
            fit.converged = true;
            return fit;
        }
        for (Complex& e : fit.u) e /= un;

        for (std::size_t j = 0; j < dk; ++j) fit.v[j] = Complex{0.0, 0.0};
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < dk; ++j) fit.v[j] += std::conj(mat[i * dk + j]) * fit.u[i];
        const double sigma = vec_norm(fit.v);
        if (sigma == 0.0) {
            fit.sigma = 0.0;
            fit.converged = true;
            return fit;
        }
        for (Complex& e : fit.v) e /= sigma;
        fit.sigma = sigma;

        if (sigma_prev >= 0.0 && std::abs(sigma - sigma_prev) <= 1e-14 * sigma) {
            double res2 = 0.0;
            for (std::size_t i = 0; i < r; ++i) {
                Complex acc{0.0, 0.0};
                for (std::size_t j = 0; j < dk; ++j) acc += mat[i * dk + j] * fit.v[j];
                res2 += std::norm(acc - sigma * fit.u[i]);
            }
            if (std::sqrt(res2) <= kFitResidualTol * sigma) {
                fit.converged = true;
                break;
            }
        }
        sigma_prev = sigma;
    }
    return fit;
}

void deflate(std::vector<Complex>& mat, std::size_t r, std::size_t dk, const Rank1Fit& fit) {
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < dk; ++j)
            mat[i * dk + j] -= fit.sigma * fit.u[i] * std::conj(fit.v[j]);
}

CutSpectrum oracle_cut(const PureState& state, int party, const ToleranceConfig& tol) {
    const CutShape sh = cut_shape(state.profile(), party);
    CutSpectrum cut;
    cut.party = party;
    if (sh.dk == 1) {
        cut.singular_values = {vec_norm(state.amplitudes())};
        cut.schmidt_rank = 1;
        cut.converged = true;
        return cut;
    }

    std::vector<Complex> mat = cut_matrix(state, sh);
    const std::uint64_t salt = kStartSeed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(party);

    Rank1Fit fit = dominant_triplet(mat, sh.r, sh.dk, salt, kFitBudget);
    if (fit.sigma == 0.0) throw NumericalError("oracle met an all-zero cut matrix");
    deflate(mat, sh.r, sh.dk, fit);
    double res2 = 0.0;
    for (const Complex& e : mat) res2 += std::norm(e);
    cut.residual_ratio = std::sqrt(res2) / fit.sigma;
    cut.converged = fit.converged;
    if (!cut.converged && cut.residual_ratio <= 1e-4)
        throw NumericalError("oracle fit stalled while the verdict was still close on party " +
                             std::to_string(party));

    cut.singular_values.push_back(fit.sigma);
    const std::size_t levels = std::min(sh.dk, sh.r);
    for (std::size_t round = 1; round < levels; ++round) {
        Rank1Fit tail = dominant_triplet(mat, sh.r, sh.dk, salt + round, kTailBudget);
        cut.singular_values.push_back(tail.sigma);
        if (tail.sigma == 0.0) break;
        deflate(mat, sh.r, sh.dk, tail);
    }
    cut.singular_values.resize(levels, 0.0);
    std::sort(cut.singular_values.begin(), cut.singular_values.end(), std::greater<>());

    if (cut.residual_ratio <= tol.rank) {
        cut.schmidt_rank = 1;
    } else {
        int count = 0;
        for (double s : cut.singular_values)
            if (s > tol.rank * cut.singular_values[0]) ++count;
        cut.schmidt_rank = std::max(count, 2);
    }
    return cut;
}

}  // namespace

OracleReport oracle_schmidt(const PureState& state, const ToleranceConfig& tol) {
    tol.validate();
    const int n = state.profile().parties();
    if (n < 2) throw ArgumentError("the oracle needs a state with at least 2 parties");

    OracleReport rep;
    rep.cutoff = tol.rank;
    rep.separable = true;
    rep.min_margin = std::numeric_limits<double>::infinity();
    rep.cuts.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        CutSpectrum cut = oracle_cut(state, k, tol);
        const bool sep = cut.schmidt_rank == 1;
        rep.separable = rep.separable && sep;
        const double margin =
            sep ? (cut.residual_ratio > 0.0 ? rep.cutoff / cut.residual_ratio
                                            : std::numeric_limits<double>::infinity())
                : cut.residual_ratio / rep.cutoff;
        rep.min_margin = std::min(rep.min_margin, margin);
        rep.cuts.push_back(std::move(cut));
    }
    return rep;
}

std::string_view method_label(std::size_t method) {
    if (method < 4) return criterion_name(all_criteria()[method]);
    if (method == 4) return "oracle";
    throw ArgumentError("method index out of range");
}

CrossValidationReport cross_validate(std::span<const PureState> states,
                                     const CriteriaOptions& opts) {
    CrossValidationReport rep;
    rep.states = states.size();
    const auto crits = all_criteria();
    for (std::size_t idx = 0; idx < states.size(); ++idx) {
        const PureState& s = states[idx];
        std::array<bool, kMethodCount> sep{};
        for (std::size_t a = 0; a < crits.size(); ++a) sep[a] = evaluate(crits[a], s, opts).separable;
        const OracleReport oracle = oracle_schmidt(s, opts.tol);
        sep[4] = oracle.separable;

        if (oracle.min_margin < 10.0) rep.indecisive.push_back(idx);
        if (oracle.separable) rep.oracle_separable += 1;

        bool mismatch = false;
        for (std::size_t a = 0; a < kMethodCount; ++a)
            for (std::size_t b = 0; b < kMethodCount; ++b) {
                if (sep[a] == sep[b])
                    rep.agreement[a][b] += 1;
                else
                    mismatch = true;
            }
        if (mismatch) rep.disagreements.push_back(idx);
    }
    return rep;
}

}  // namespace puresep
