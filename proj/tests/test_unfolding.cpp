#include <cmath>
#include <vector>

#include <doctest.h>

#include "puresep/counters.hpp"
#include "puresep/errors.hpp"
#include "puresep/generators.hpp"
#include "puresep/unfolding.hpp"

using namespace puresep;

TEST_CASE("middle-party unfolding of the 3-qubit cat state") {
    const PureState cat = cat_state(3);
    const ModeUnfolding m(cat, 1);
    CHECK(m.party() == 1);
    CHECK(m.rows() == 4);
    CHECK(m.cols() == 2);

    const double h = 1.0 / std::sqrt(2.0);
    // Rows run over (party 0, party 2) with party 2 fastest; only the
    // all-zero and all-one amplitudes are populated.
    CHECK(m.at(0, 0).real() == doctest::Approx(h).epsilon(1e-15));
    CHECK(m.at(3, 1).real() == doctest::Approx(h).epsilon(1e-15));
    double rest = 0.0;
    for (std::size_t row = 0; row < m.rows(); ++row)
        for (int col = 0; col < m.cols(); ++col)
            if (!(row == 0 && col == 0) && !(row == 3 && col == 1))
                rest += std::abs(m.at(row, col));
    CHECK(rest == 0.0);
    CHECK(m.frobenius_norm_sq() == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("unfolding entries map back to state amplitudes") {
    const DimensionProfile p({2, 3, 2});
    const PureState s = random_state(p, 11);
    std::vector<int> levels(2);
    std::vector<int> multi(3);
    for (int k = 0; k < 3; ++k) {
        const ModeUnfolding m(s, k);
        CHECK(m.rows() == p.complement(k));
        CHECK(m.cols() == p.dim(k));
        CHECK(m.frobenius_norm_sq() == doctest::Approx(1.0).epsilon(1e-13));
        for (std::size_t row = 0; row < m.rows(); ++row) {
            m.complement_levels(row, levels);
            for (int col = 0; col < m.cols(); ++col) {
                const std::size_t flat = m.state_flat(row, col);
                CHECK(m.at(row, col) == s.amplitude(flat));

                // Reinserting the party level must reproduce the flat index.
                int slot = 0;
                for (int party = 0; party < 3; ++party)
                    multi[static_cast<std::size_t>(party)] =
                        party == k ? col : levels[static_cast<std::size_t>(slot++)];
                CHECK(flat_index(p, multi) == flat);
            }
        }
    }
}

TEST_CASE("rows of an unfolding are contiguous views") {
    const PureState s = random_state(DimensionProfile({3, 4}), 5);
    const ModeUnfolding m(s, 0);
    const auto row = m.row(2);
    REQUIRE(row.size() == 3);
    for (int col = 0; col < 3; ++col) CHECK(row[static_cast<std::size_t>(col)] == m.at(2, col));
}

TEST_CASE("unfolding rejects bad parties and single-party states") {
    const PureState s = random_state(DimensionProfile({2, 2}), 1);
    CHECK_THROWS_AS(ModeUnfolding(s, -1), ArgumentError);
    CHECK_THROWS_AS(ModeUnfolding(s, 2), ArgumentError);
    const PureState factor = PureState::normalized(DimensionProfile({3}),
                                                   {Complex{1, 0}, Complex{1, 0}, Complex{1, 0}});
    CHECK_THROWS_AS(ModeUnfolding(factor, 0), ArgumentError);
    CHECK(build_unfolding(s, 1).party() == 1);
}

TEST_CASE("pruning the first cut of the 3-party single-excitation state") {
    const PureState w = w_state(3);
    const ModeUnfolding m(w, 0);
    OpCounters ops;
    const PrunedUnfolding p = prune(m, 1e-12, &ops);

    CHECK(ops.cmp == 8);  // every entry inspected once
    CHECK(p.rows() == 3);
    CHECK(p.cols() == 2);
    CHECK(p.kept_rows() == std::vector<std::size_t>{0, 1, 2});
    CHECK(p.kept_cols() == std::vector<int>{0, 1});

    const double a = 1.0 / std::sqrt(3.0);
    CHECK(p.at(0, 1).real() == doctest::Approx(a).epsilon(1e-15));
    CHECK(p.at(1, 0).real() == doctest::Approx(a).epsilon(1e-15));
    CHECK(p.at(2, 0).real() == doctest::Approx(a).epsilon(1e-15));
    CHECK(std::abs(p.at(0, 0)) == 0.0);
    CHECK(std::abs(p.at(1, 1)) == 0.0);
    CHECK(std::abs(p.at(2, 1)) == 0.0);
}

TEST_CASE("pruning with a huge tolerance removes everything") {
    const PureState w = w_state(3);
    const PrunedUnfolding p = prune(ModeUnfolding(w, 0), 0.6);
    CHECK(p.rows() == 0);
    CHECK(p.cols() == 0);
    CHECK_THROWS_AS(prune(ModeUnfolding(w, 0), -1.0), ArgumentError);
}

TEST_CASE("pruned row views match their entries") {
    const PureState s = random_state(DimensionProfile({2, 2, 3}), 9);
    const PrunedUnfolding p = prune(ModeUnfolding(s, 2), 1e-12);
    // A generic random state has no zero entries, so nothing is pruned.
    CHECK(p.rows() == 4);
    CHECK(p.cols() == 3);
    const auto row = p.row(1);
    for (int col = 0; col < p.cols(); ++col) CHECK(row[static_cast<std::size_t>(col)] == p.at(1, col));
}
