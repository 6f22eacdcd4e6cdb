// Minimal OpenQASM 2.0 reader for round-trip tests only. Understands exactly
// the statements the emitter produces.
#pragma once

#include <regex>
#include <sstream>
#include <stdexcept>
#include <string>

#include "sqwalk/circuit.hpp"

namespace qasm_reader {

inline sqwalk::Circuit parse(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  const std::regex qreg_re(R"(qreg q\[(\d+)\];)");
  const std::regex one_re(R"((\w+)(?:\(([-+0-9.eE]+)\))? q\[(\d+)\];)");
  const std::regex cx_re(R"(cx q\[(\d+)\],q\[(\d+)\];)");

  int n_qubits = -1;
  std::vector<sqwalk::Gate> gates;
  while (std::getline(in, line)) {
    if (line.empty() || line.starts_with("OPENQASM") ||
        line.starts_with("include")) {
      continue;
    }
    std::smatch m;
    if (std::regex_match(line, m, qreg_re)) {
      n_qubits = std::stoi(m[1]);
      continue;
    }
    if (std::regex_match(line, m, cx_re)) {
      gates.push_back(sqwalk::Gate::cx(std::stoi(m[1]), std::stoi(m[2])));
      continue;
    }
    if (std::regex_match(line, m, one_re)) {
      const std::string name = m[1];
      const int target = std::stoi(m[3]);
      const double angle = m[2].matched ? std::stod(m[2]) : 0.0;
      if (name == "x") gates.push_back(sqwalk::Gate::x(target));
      else if (name == "h") gates.push_back(sqwalk::Gate::h(target));
      else if (name == "rx") gates.push_back(sqwalk::Gate::rx(angle, target));
      else if (name == "ry") gates.push_back(sqwalk::Gate::ry(angle, target));
      else if (name == "rz") gates.push_back(sqwalk::Gate::rz(angle, target));
      else if (name == "u1") gates.push_back(sqwalk::Gate::phase(angle, target));
      else throw std::runtime_error("unknown qasm op: " + name);
      continue;
    }
    throw std::runtime_error("unparsable qasm line: " + line);
  }
  if (n_qubits < 1) throw std::runtime_error("missing qreg declaration");
  sqwalk::Circuit circuit(n_qubits);
  circuit.append(gates);
  return circuit;
}

}  // namespace qasm_reader
