#pragma once

#include <vector>

#include "sqwalk/gate.hpp"

namespace sqwalk {

/// Ordered gate sequence over a fixed qubit register.
///
/// List order is application order: gates()[0] acts on the state first.
/// Qubit 0 is the most significant bit of a basis-state label, i.e.
/// |q0 q1 ... q_{n-1}> has index sum_i q_i * 2^{n-1-i}.
///
/// Circuits are immutable once built and safe to share across threads;
/// construction is single-threaded per instance.
class Circuit {
 public:
  static constexpr int kMaxQubits = 24;

  explicit Circuit(int n_qubits);

  int n_qubits() const { return n_qubits_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }

  /// Validates indices against the register width, control distinctness and
  /// target/control disjointness; throws std::invalid_argument otherwise.
  Circuit& append(Gate gate);
  Circuit& append(const std::vector<Gate>& gates);

  Circuit& x(int t) { return append(Gate::x(t)); }
  Circuit& h(int t) { return append(Gate::h(t)); }
  Circuit& rx(double a, int t) { return append(Gate::rx(a, t)); }
  Circuit& ry(double a, int t) { return append(Gate::ry(a, t)); }
  Circuit& rz(double a, int t) { return append(Gate::rz(a, t)); }
  Circuit& phase(double a, int t) { return append(Gate::phase(a, t)); }
  Circuit& cx(int c, int t) { return append(Gate::cx(c, t)); }

  /// Appends every gate of `other`, shifted up by `offset` qubits.
  Circuit& extend(const Circuit& other, int offset = 0);

  /// Reversed gate list with each gate replaced by its adjoint.
  Circuit inverse() const;

  /// Number of singly-controlled PauliX gates. Throws std::invalid_argument
  /// if the circuit still holds multi-controlled or open-controlled gates:
  /// lower first.
  int cnot_count() const;

  /// Critical-path length under greedy left-to-right layering; gates acting
  /// on disjoint qubit sets share a layer.
  int depth() const;

  /// True when every gate is either control-free or a plain CX.
  bool is_lowered() const;

  bool operator==(const Circuit&) const = default;

 private:
  int n_qubits_;
  std::vector<Gate> gates_;
};

/// Copy of `circuit` acting on a `n_qubits`-wide register with qubit i of the
/// source mapped to qubit_map[i]. The map must be injective.
Circuit remap(const Circuit& circuit, const std::vector<int>& qubit_map,
              int n_qubits);

}  // namespace sqwalk
