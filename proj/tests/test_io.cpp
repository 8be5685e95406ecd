#include <cmath>
#include <cstdio>
#include <filesystem>
#include <sstream>
#include <string>

#include <doctest.h>

#include "puresep/errors.hpp"
#include "puresep/generators.hpp"
#include "puresep/io.hpp"
#include "puresep/state.hpp"

using namespace puresep;

namespace {

long parse_line_of(const std::string& text) {
    std::istringstream in(text);
    try {
        read_state(in);
    } catch (const ParseError& e) {
        return e.line();
    }
    return -1;
}

}  // namespace

TEST_CASE("the 2-qubit cat state serializes to a stable text form") {
    std::ostringstream out;
    write_state(out, cat_state(2));
    char h17[64];
    std::snprintf(h17, sizeof h17, "%.17g", 1.0 / std::sqrt(2.0));
    const std::string expected =
        std::string("QSTATE 1\n2\n2 2\n") + h17 + " 0\n0 0\n0 0\n" + h17 + " 0\n";
    CHECK(out.str() == expected);
}

TEST_CASE("write/read round-trips are bit exact") {
    const PureState orig = random_state(DimensionProfile({2, 3}), 900);
    std::stringstream buf;
    write_state(buf, orig);
    const PureState back = read_state(buf);
    CHECK(back.profile() == orig.profile());
    REQUIRE(back.size() == orig.size());
    for (std::size_t i = 0; i < orig.size(); ++i) {
        CHECK(back.amplitude(i).real() == orig.amplitude(i).real());
        CHECK(back.amplitude(i).imag() == orig.amplitude(i).imag());
    }
    CHECK(!back.was_renormalized());
}

TEST_CASE("file round-trip through a temporary path") {
    const auto path =
        (std::filesystem::temp_directory_path() / "puresep-io-roundtrip.qstate").string();
    const PureState orig = random_state(DimensionProfile({2, 2, 2}), 901);
    write_state_file(path, orig);
    const PureState back = read_state_file(path);
    CHECK(back.profile() == orig.profile());
    for (std::size_t i = 0; i < orig.size(); ++i) CHECK(back.amplitude(i) == orig.amplitude(i));
    std::filesystem::remove(path);
}

TEST_CASE("comments, blank lines and CRLF endings are tolerated") {
    const std::string text =
        "QSTATE 1\r\n"
        "# a comment\r\n"
        "\r\n"
        "2\r\n"
        "   # indented comment\n"
        "2 2\r\n"
        "1 0\n"
        "\n"
        "0 0\r\n"
        "0 0\n"
        "# trailing comment\n"
        "0 0\n"
        "# after the data\n";
    std::istringstream in(text);
    const PureState s = read_state(in);
    CHECK(s.profile().dims() == std::vector<int>{2, 2});
    CHECK(s.amplitude(std::size_t{0}) == Complex{1.0, 0.0});
}

TEST_CASE("parse errors carry 1-based line numbers") {
    CHECK(parse_line_of("") == 1);
    CHECK(parse_line_of("QSTATE 2\n1\n2\n1 0\n0 0\n") == 1);
    CHECK(parse_line_of("HELLO 1\n") == 1);
    CHECK(parse_line_of("QSTATE 1 extra\n") == 1);
    CHECK(parse_line_of("QSTATE 1\n") == 2);               // party count missing
    CHECK(parse_line_of("QSTATE 1\nfoo\n") == 2);          // party count not a number
    CHECK(parse_line_of("QSTATE 1\n2 3\n") == 2);          // trailing token
    CHECK(parse_line_of("QSTATE 1\n0\n") == 2);            // too few parties
    CHECK(parse_line_of("QSTATE 1\n2\n") == 3);            // dimensions missing
    CHECK(parse_line_of("QSTATE 1\n2\n2\n") == 3);         // dimension list too short
    CHECK(parse_line_of("QSTATE 1\n2\n2 2 2\n") == 3);     // dimension list too long
    CHECK(parse_line_of("QSTATE 1\n2\n2 0\n") == 3);       // non-positive dimension
    CHECK(parse_line_of("QSTATE 1\n2\n2 2\n1 0\n0 0\n") == 6);  // amplitudes missing
    CHECK(parse_line_of("QSTATE 1\n2\n2 2\n1 0\n0\n0 0\n0 0\n") == 5);
    CHECK(parse_line_of("QSTATE 1\n2\n2 2\n1 0\n0 0 0\n0 0\n0 0\n") == 5);
    CHECK(parse_line_of("QSTATE 1\n2\n2 2\n1 0\nx y\n0 0\n0 0\n") == 5);
    CHECK(parse_line_of("QSTATE 1\n2\n2 2\n1 0\n0 0\n0 0\n0 0\nleftover\n") == 8);

    // Comment lines count toward the reported line number.
    CHECK(parse_line_of("QSTATE 1\n# note\n2\n# note\n2 2\nbad line\n") == 6);
}

TEST_CASE("reading enforces the normalization policy") {
    // Norm far from 1: rejected outright.
    {
        std::istringstream in("QSTATE 1\n2\n2 2\n0.25 0\n0.25 0\n0.25 0\n0.25 0\n");
        CHECK_THROWS_AS(read_state(in), NormalizationError);
    }
    // Slightly off: accepted, renormalized, and flagged.
    {
        std::istringstream in("QSTATE 1\n2\n2 2\n1.0001 0\n0 0\n0 0\n0 0\n");
        const PureState s = read_state(in);
        CHECK(s.was_renormalized());
        double norm_sq = 0.0;
        for (std::size_t i = 0; i < s.size(); ++i) norm_sq += std::norm(s.amplitude(i));
        CHECK(norm_sq == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("single-party files are valid") {
    std::istringstream in("QSTATE 1\n1\n3\n0 1\n0 0\n0 0\n");
    const PureState s = read_state(in);
    CHECK(s.profile().parties() == 1);
    CHECK(s.profile().dim(0) == 3);
    CHECK(s.amplitude(std::size_t{0}) == Complex{0.0, 1.0});
}

TEST_CASE("file errors are reported as errors, not crashes") {
    CHECK_THROWS_AS(read_state_file("/no/such/dir/state.qstate"), Error);
    CHECK_THROWS_AS(write_state_file("/no/such/dir/state.qstate", cat_state(2)), Error);
}
