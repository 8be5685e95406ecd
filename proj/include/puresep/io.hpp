#pragma once

#include <iosfwd>
#include <string>

#include "puresep/state.hpp"

namespace puresep {

/// Plain-text state serialization:
///
///   QSTATE 1
///   <parties>
///   <d_1> <d_2> ... <d_n>
///   <re> <im>            one line per amplitude, flat order, last party fastest
///
/// After the header line, blank lines and lines starting with '#' are
/// skipped. Amplitudes are written with 17 significant digits, so a
/// write/read cycle reproduces every double bit for bit.
PureState read_state(std::istream& in);
PureState read_state_file(const std::string& path);

void write_state(std::ostream& out, const PureState& state);
void write_state_file(const std::string& path, const PureState& state);

}  // namespace puresep
