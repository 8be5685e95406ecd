#include "puresep/io.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "puresep/errors.hpp"

namespace puresep {

namespace {

// Serves meaningful lines (non-blank, non-comment) and tracks the 1-based
// line number for error reports.
class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    bool next(std::string& out) {
        std::string raw;
        while (std::getline(in_, raw)) {
            ++line_no_;
            if (!raw.empty() && raw.back() == '\r') raw.pop_back();
            const std::size_t i = raw.find_first_not_of(" \t");
            if (i == std::string::npos) continue;
            if (raw[i] == '#') continue;
            out = raw;
            return true;
        }
        return false;
    }

    long here() const { return line_no_; }
    long after() const { return line_no_ + 1; }
    void count_header() { ++line_no_; }

private:
    std::istream& in_;
    long line_no_ = 0;
};

[[noreturn]] void fail(const std::string& msg, long line) { throw ParseError(msg, line); }

}  // namespace

PureState read_state(std::istream& in) {
    LineReader lr(in);

    std::string line;
    if (!std::getline(in, line)) fail("empty input, expected a QSTATE header", 1);
    lr.count_header();
    if (!line.empty() && line.back() == '\r') line.pop_back();
    {
        std::istringstream h(line);
        std::string magic;
        int version = 0;
        std::string extra;
        if (!(h >> magic >> version) || magic != "QSTATE" || (h >> extra))
            fail("first line must be 'QSTATE 1'", 1);
        if (version != 1)
            fail("unsupported format version " + std::to_string(version), 1);
    }

    if (!lr.next(line)) fail("missing party count", lr.after());
    int parties = 0;
    {
        std::istringstream s(line);
        std::string extra;
        if (!(s >> parties) || (s >> extra))
            fail("party count must be a single integer", lr.here());
        if (parties < 1) fail("party count must be at least 1", lr.here());
    }

    if (!lr.next(line)) fail("missing dimension list", lr.after());
    std::vector<int> dims(static_cast<std::size_t>(parties));
    {
        std::istringstream s(line);
        std::string extra;
        for (int& d : dims)
            if (!(s >> d)) fail("expected " + std::to_string(parties) + " dimensions", lr.here());
        if (s >> extra)
            fail("expected exactly " + std::to_string(parties) + " dimensions", lr.here());
    }

    DimensionProfile profile = [&] {
        try {
            return DimensionProfile(std::move(dims));
        } catch (const ArgumentError& e) {
            fail(e.what(), lr.here());
        }
    }();

    std::vector<Complex> amps;
    amps.reserve(profile.total());
    for (std::size_t i = 0; i < profile.total(); ++i) {
        if (!lr.next(line))
            fail("expected " + std::to_string(profile.total()) + " amplitudes, got " +
                     std::to_string(i),
                 lr.after());
        std::istringstream s(line);
        double re = 0.0;
        double im = 0.0;
        std::string extra;
        if (!(s >> re >> im) || (s >> extra))
            fail("amplitude lines must hold exactly two numbers", lr.here());
        amps.emplace_back(re, im);
    }
    if (lr.next(line)) fail("unexpected content after the last amplitude", lr.here());

    return PureState(std::move(profile), std::move(amps));
}

PureState read_state_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw Error("cannot open '" + path + "' for reading");
    return read_state(f);
}

void write_state(std::ostream& out, const PureState& state) {
    out << "QSTATE 1\n";
    out << state.profile().parties() << "\n";
    const auto& dims = state.profile().dims();
    for (std::size_t i = 0; i < dims.size(); ++i) out << (i ? " " : "") << dims[i];
    out << "\n";
    char buf[64];
    for (const Complex& a : state.amplitudes()) {
        std::snprintf(buf, sizeof buf, "%.17g %.17g", a.real(), a.imag());
        out << buf << "\n";
    }
    if (!out) throw Error("failed while writing state output");
}

void write_state_file(const std::string& path, const PureState& state) {
    std::ofstream f(path);
    if (!f) throw Error("cannot open '" + path + "' for writing");
    write_state(f, state);
    f.flush();
    if (!f) throw Error("failed while writing '" + path + "'");
}

}  // namespace puresep
