#pragma once

#include <cstdint>
#include <vector>

#include "sqwalk/circuit.hpp"

namespace sqwalk {

/// Which increment family the walk builders use: Standard keeps the
/// multi-controlled Toffoli cascade, Alternative trades it for the
/// reduced-CNOT multi-controlled Rx(pi) version.
enum class Variant { Standard, Alternative };

struct LoweringOptions {
  Variant variant = Variant::Standard;  // increment family, consumed by builders
  bool verify = false;                  // oracle-check the lowered circuit
  double phase_tolerance = 1e-10;       // must be > 0
};

/// Index of the lowest set bit of k, i.e. log2(k - (k & (k-1))). Drives the
/// control schedule of the CNOTs inside the rotation cascades: for k = 1..7
/// the sequence is 0,1,0,2,0,1,0. Throws on k = 0.
int lowest_set_bit(std::uint64_t k);

/// Cyclic increment |q> -> |q+1 mod 2^n>, exact and phase-free. Gate list in
/// application order: X on q0 controlled by q1..q_{n-1}, then X on q1
/// controlled by q2..q_{n-1}, ..., finally an uncontrolled X on q_{n-1}.
Circuit increment_perm(int n);

/// inverse(increment_perm(n)): |q> -> |q-1 mod 2^n>.
Circuit decrement_perm(int n);

/// Multi-controlled Rz(theta) as an alternating CX / Phase cascade over the
/// target, 2^m CNOTs for m controls, no ancillas. The k-th CX after the first
/// is controlled by controls[lowest_set_bit(k)]. Requires >= 1 control.
std::vector<Gate> mcrz(double theta, const std::vector<int>& controls,
                       int target);

/// diag(1, ..., 1, e^{i phi}) over controls + target: a Phase(phi/2^{m}) on
/// the first qubit followed by a widening mcrz cascade. Controls may be
/// empty, degenerating to a single Phase gate.
std::vector<Gate> mcphase(double phi, const std::vector<int>& controls,
                          int target);

/// mcphase(pi, ...): multi-controlled Z with 2^{m+1} - 2 CNOTs.
std::vector<Gate> mcz(const std::vector<int>& controls, int target);

/// Multi-controlled X via Hadamard conjugation of mcz on the target.
std::vector<Gate> mct(const std::vector<int>& controls, int target);

/// Multi-controlled Rx via Hadamard conjugation of mcrz. Requires >= 1
/// control.
std::vector<Gate> mcrx(double theta, const std::vector<int>& controls,
                       int target);

/// Reduced-CNOT increment: every multi-controlled X with >= 2 controls is
/// replaced by a multi-controlled Rx(pi) with the same controls and target;
/// the single CX and the final X are kept. Still maps each |q> onto
/// |q+1 mod 2^n>, now with a tile-dependent phase. Lowered CNOT count for
/// n = 4 is 13 against 21 for increment_perm.
Circuit alt_increment(int n);

/// alt_increment over n target qubits with one extra control on every gate
/// (the final X becomes a CX, the CX a Toffoli). Width n+1; the target
/// register is the qubits != control in ascending order. Block structure:
/// identity where the control is 0, alt_increment where it is 1.
Circuit controlled_alt_increment(int n, int control);

/// Rewrites every gate into {X, H, Rx, Ry, Rz, Phase} with at most one
/// closed control, and single-controlled gates into CX only. Open controls
/// are X-conjugated away first. Never changes the circuit's unitary beyond a
/// global phase; with opts.verify the pass checks that against a dense
/// oracle within opts.phase_tolerance and throws std::runtime_error on
/// mismatch. Controlled Hadamard/RotY have no rule here and are rejected.
Circuit lower(const Circuit& circuit, const LoweringOptions& opts = {});

}  // namespace sqwalk
