#pragma once

#include <string>

#include "sqwalk/circuit.hpp"

namespace sqwalk::io {

/// OpenQASM 2.0 text for a lowered circuit: one register declaration and one
/// statement per gate, x/h/rx/ry/rz/u1/cx vocabulary, angles printed with 17
/// significant digits. Throws std::invalid_argument on gates that have no
/// mapping (more than one control, open controls, controlled non-X).
std::string emit_qasm(const Circuit& circuit);

}  // namespace sqwalk::io
