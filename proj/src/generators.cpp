#include "puresep/generators.hpp"

#include <cmath>
#include <random>

namespace puresep {

PureState cat_state(int parties, int levels) {
    if (parties < 2) throw ArgumentError("cat state needs at least 2 parties");
    if (levels < 2) throw ArgumentError("cat state needs at least 2 levels per party");
    DimensionProfile profile(std::vector<int>(static_cast<std::size_t>(parties), levels));
    std::vector<Complex> amps(profile.total(), Complex{0.0, 0.0});
    const double a = 1.0 / std::sqrt(static_cast<double>(levels));
    std::vector<int> multi(static_cast<std::size_t>(parties), 0);
    for (int level = 0; level < levels; ++level) {
        std::fill(multi.begin(), multi.end(), level);
        amps[flat_index(profile, multi)] = a;
    }
    return PureState(std::move(profile), std::move(amps));
}

PureState w_state(int parties) {
    if (parties < 2) throw ArgumentError("W state needs at least 2 parties");
    DimensionProfile profile(std::vector<int>(static_cast<std::size_t>(parties), 2));
    std::vector<Complex> amps(profile.total(), Complex{0.0, 0.0});
    const double a = 1.0 / std::sqrt(static_cast<double>(parties));
    std::vector<int> multi(static_cast<std::size_t>(parties), 0);
    for (int k = 0; k < parties; ++k) {
        multi[static_cast<std::size_t>(k)] = 1;
        amps[flat_index(profile, multi)] = a;
        multi[static_cast<std::size_t>(k)] = 0;
    }
    return PureState(std::move(profile), std::move(amps));
}

PureState product_state(std::span<const PureState> factors) {
    if (factors.size() < 2) throw ArgumentError("a product state needs at least 2 factors");
    std::vector<int> dims;
    dims.reserve(factors.size());
    for (const PureState& f : factors) {
        if (f.profile().parties() != 1)
            throw ArgumentError("product_state factors must be single-party states");
        dims.push_back(f.profile().dim(0));
    }
    DimensionProfile profile(std::move(dims));
    std::vector<Complex> amps(profile.total());
    std::vector<int> multi(factors.size(), 0);
    for (std::size_t flat = 0; flat < profile.total(); ++flat) {
        unflatten(profile, flat, multi);
        Complex a{1.0, 0.0};
        for (std::size_t k = 0; k < factors.size(); ++k)
            a *= factors[k].amplitude(static_cast<std::size_t>(multi[k]));
        amps[flat] = a;
    }
    return PureState(std::move(profile), std::move(amps));
}

namespace {

PureState single_party(std::vector<Complex> amps) {
    DimensionProfile profile({static_cast<int>(amps.size())});
    return PureState::normalized(std::move(profile), std::move(amps));
}

std::vector<Complex> draw_gaussian(std::mt19937_64& rng, std::size_t count) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<Complex> amps(count);
    for (Complex& a : amps) {
        const double re = gauss(rng);
        const double im = gauss(rng);
        a = Complex{re, im};
    }
    return amps;
}

}  // namespace

PureState random_state(const DimensionProfile& profile, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return PureState::normalized(profile, draw_gaussian(rng, profile.total()));
}

std::vector<PureState> random_product_factors(const DimensionProfile& profile,
                                              std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<PureState> factors;
    factors.reserve(static_cast<std::size_t>(profile.parties()));
    for (int k = 0; k < profile.parties(); ++k)
        factors.push_back(single_party(draw_gaussian(rng, static_cast<std::size_t>(profile.dim(k)))));
    return factors;
}

PureState random_product_state(const DimensionProfile& profile, std::uint64_t seed) {
    const auto factors = random_product_factors(profile, seed);
    PureState state = product_state(factors);
    if (state.profile() != profile)
        throw ArgumentError("internal profile mismatch in random_product_state");
    return state;
}

PureState perturb(const PureState& state, const PureState& direction, double epsilon) {
    if (state.profile() != direction.profile())
        throw ArgumentError("perturb requires matching profiles");
    const Complex overlap = inner_product(state, direction);
    const auto sv = state.amplitudes();
    const auto dv = direction.amplitudes();
    std::vector<Complex> perp(sv.size());
    double n2 = 0.0;
    for (std::size_t i = 0; i < sv.size(); ++i) {
        perp[i] = dv[i] - overlap * sv[i];
        n2 += std::norm(perp[i]);
    }
    const double n = std::sqrt(n2);
    if (n <= kZeroTolerance) {
        if (epsilon == 0.0) return state;
        throw DegenerateStateError("perturbation direction is parallel to the state");
    }
    std::vector<Complex> amps(sv.begin(), sv.end());
    const double scale = epsilon / n;
    for (std::size_t i = 0; i < amps.size(); ++i) amps[i] += scale * perp[i];
    return PureState::normalized(state.profile(), std::move(amps));
}

}  // namespace puresep
