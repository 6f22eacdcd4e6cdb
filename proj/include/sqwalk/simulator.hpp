#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "sqwalk/circuit.hpp"

namespace sqwalk {

using Complex = std::complex<double>;

/// Dense 2^n x 2^n matrix; the independent oracle for circuit verification.
using DenseUnitary = Eigen::MatrixXcd;

/// 2^n complex amplitudes, single writer. Gate application is O(2^n)
/// amplitude updates per gate; multi-controlled gates are applied directly,
/// without lowering.
class StateVector {
 public:
  explicit StateVector(int n_qubits);  // |0...0>
  static StateVector basis(int n_qubits, std::uint64_t index);

  int n_qubits() const { return n_qubits_; }
  std::uint64_t dimension() const { return amps_.size(); }
  std::span<const Complex> amplitudes() const { return amps_; }
  Complex amplitude(std::uint64_t index) const;
  double norm() const;

  void apply(const Gate& gate);
  void apply(const Circuit& circuit);  // throws on width mismatch

 private:
  int n_qubits_;
  std::vector<Complex> amps_;
};

StateVector apply_circuit(StateVector state, const Circuit& circuit);

/// Column j = circuit applied to |j>. Memory-guarded to n <= 12 qubits.
DenseUnitary circuit_unitary(const Circuit& circuit);

DenseUnitary kron(const DenseUnitary& a, const DenseUnitary& b);

/// Cyclic shift P = sum_x |x+1 mod 2^n><x|.
DenseUnitary dense_shift(int n);

/// Hermitian involution pairing labels {2x, 2x+1}: I (x) X.
DenseUnitary even_tile_hamiltonian(int n);

/// Hermitian involution pairing labels {2x+1, 2x+2 mod 2^n}: the even-tile
/// operator conjugated by the cyclic shift, a bordered block matrix with
/// corner 1 entries.
DenseUnitary odd_tile_hamiltonian(int n);

/// cos(theta) I - i sin(theta) h; requires h Hermitian with h^2 = I within
/// 1e-10, which makes this the exact exponential e^{-i theta h}.
DenseUnitary dense_evolution(const DenseUnitary& h, double theta);

/// p_i = |a_i|^2.
std::vector<double> measure_distribution(const StateVector& state);

/// Multinomial counts per outcome, shots >= 1. Deterministic: a fixed seed
/// yields bit-identical counts across runs and platforms.
std::vector<std::uint64_t> sample(const std::vector<double>& dist,
                                  std::uint64_t shots, std::uint64_t seed);

bool is_unitary(const DenseUnitary& u, double tol = 1e-10);

struct PhaseFit {
  bool matches = false;
  Complex phase{1.0, 0.0};  // candidate ~ phase * reference
  double max_err = 0.0;
};

/// Entrywise comparison after fitting a unit-modulus global phase; the phase
/// is estimated on the largest-magnitude entry of the reference to avoid
/// division by near-zero entries.
PhaseFit match_up_to_phase(const DenseUnitary& candidate,
                           const DenseUnitary& reference, double tol = 1e-10);

}  // namespace sqwalk
