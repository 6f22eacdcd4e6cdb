#include "sqwalk/qasm.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace sqwalk::io {

namespace {

std::string format_angle(double angle) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", angle);
  return buf;
}

}  // namespace

std::string emit_qasm(const Circuit& circuit) {
  std::ostringstream out;
  out << "OPENQASM 2.0;\n";
  out << "include \"qelib1.inc\";\n";
  out << "qreg q[" << circuit.n_qubits() << "];\n";
  for (const Gate& g : circuit.gates()) {
    if (!g.controls.empty() && !g.is_cx()) {
      throw std::invalid_argument(
          "circuit holds a gate without a QASM mapping; lower first");
    }
    if (g.is_cx()) {
      out << "cx q[" << g.controls[0] << "],q[" << g.target << "];\n";
      continue;
    }
    out << kind_name(g.kind);
    if (has_angle(g.kind)) out << '(' << format_angle(g.angle) << ')';
    out << " q[" << g.target << "];\n";
  }
  return out.str();
}

}  // namespace sqwalk::io
