#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

namespace sqwalk {

enum class GateKind { PauliX, Hadamard, RotX, RotY, RotZ, Phase };

/// Kinds whose matrix is parameterized by an angle.
constexpr bool has_angle(GateKind k) {
  return k == GateKind::RotX || k == GateKind::RotY || k == GateKind::RotZ ||
         k == GateKind::Phase;
}

const char* kind_name(GateKind k);

/// Control activation: Closed fires on |1>, Open on |0>.
enum class Polarity : std::uint8_t { Closed, Open };

/// One gate of the IR: a single-qubit base operation plus an ordered list of
/// control qubits. Multi-controlled gates are first-class; the lowering pass
/// rewrites them into CNOT + single-qubit form.
///
/// Angles are plain double radians, stored exactly as given.
struct Gate {
  GateKind kind = GateKind::PauliX;
  int target = 0;
  double angle = 0.0;              // meaningful only when has_angle(kind)
  std::vector<int> controls;       // pairwise distinct, target excluded
  std::vector<Polarity> polarity;  // parallel to controls

  static Gate x(int target);
  static Gate h(int target);
  static Gate rx(double angle, int target);
  static Gate ry(double angle, int target);
  static Gate rz(double angle, int target);
  static Gate phase(double angle, int target);
  static Gate cx(int control, int target);
  static Gate mcx(std::vector<int> controls, int target);

  /// Copy of this gate with one extra control appended.
  Gate with_control(int control, Polarity p = Polarity::Closed) const;

  /// Rotations and Phase negate their angle; PauliX and Hadamard are
  /// self-inverse. Controls are unchanged.
  Gate adjoint() const;

  /// Single closed-controlled PauliX.
  bool is_cx() const;

  int max_qubit() const;

  bool operator==(const Gate&) const = default;
};

/// Row-major 2x2 matrix {m00, m01, m10, m11} of the base operation.
std::array<std::complex<double>, 4> gate_matrix(GateKind kind, double angle);

}  // namespace sqwalk
