#include "sqwalk/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace sqwalk {

Circuit::Circuit(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw std::invalid_argument("qubit count must be in [1, " +
                                std::to_string(kMaxQubits) + "], got " +
                                std::to_string(n_qubits));
  }
}

Circuit& Circuit::append(Gate gate) {
  auto in_range = [this](int q) { return q >= 0 && q < n_qubits_; };
  if (!in_range(gate.target)) {
    throw std::invalid_argument("gate target out of range");
  }
  if (gate.polarity.empty() && !gate.controls.empty()) {
    gate.polarity.assign(gate.controls.size(), Polarity::Closed);
  }
  if (gate.polarity.size() != gate.controls.size()) {
    throw std::invalid_argument("control polarity list length mismatch");
  }
  std::unordered_set<int> seen;
  for (int c : gate.controls) {
    if (!in_range(c)) throw std::invalid_argument("gate control out of range");
    if (c == gate.target) {
      throw std::invalid_argument("gate target appears in its control list");
    }
    if (!seen.insert(c).second) {
      throw std::invalid_argument("duplicate control qubit");
    }
  }
  if (has_angle(gate.kind) && !std::isfinite(gate.angle)) {
    throw std::invalid_argument("gate angle must be finite");
  }
  gates_.push_back(std::move(gate));
  return *this;
}

Circuit& Circuit::append(const std::vector<Gate>& gates) {
  for (const Gate& g : gates) append(g);
  return *this;
}

Circuit& Circuit::extend(const Circuit& other, int offset) {
  if (offset < 0 || offset + other.n_qubits() > n_qubits_) {
    throw std::invalid_argument("embedded circuit exceeds register");
  }
  for (Gate g : other.gates()) {
    g.target += offset;
    for (int& c : g.controls) c += offset;
    append(std::move(g));
  }
  return *this;
}

Circuit Circuit::inverse() const {
  Circuit inv(n_qubits_);
  for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) {
    inv.append(it->adjoint());
  }
  return inv;
}

int Circuit::cnot_count() const {
  int count = 0;
  for (const Gate& g : gates_) {
    if (g.controls.size() > 1 ||
        std::ranges::count(g.polarity, Polarity::Open) > 0) {
      throw std::invalid_argument(
          "circuit contains unlowered multi-controlled gates; lower first");
    }
    if (g.is_cx()) ++count;
  }
  return count;
}

int Circuit::depth() const {
  std::vector<int> level(n_qubits_, 0);
  int depth = 0;
  for (const Gate& g : gates_) {
    int layer = level[g.target];
    for (int c : g.controls) layer = std::max(layer, level[c]);
    ++layer;
    level[g.target] = layer;
    for (int c : g.controls) level[c] = layer;
    depth = std::max(depth, layer);
  }
  return depth;
}

bool Circuit::is_lowered() const {
  return std::ranges::all_of(gates_, [](const Gate& g) {
    return g.controls.empty() || g.is_cx();
  });
}

Circuit remap(const Circuit& circuit, const std::vector<int>& qubit_map,
              int n_qubits) {
  if (qubit_map.size() != static_cast<std::size_t>(circuit.n_qubits())) {
    throw std::invalid_argument("qubit map length mismatch");
  }
  Circuit out(n_qubits);
  for (Gate g : circuit.gates()) {
    g.target = qubit_map.at(g.target);
    for (int& c : g.controls) c = qubit_map.at(c);
    out.append(std::move(g));
  }
  return out;
}

}  // namespace sqwalk
