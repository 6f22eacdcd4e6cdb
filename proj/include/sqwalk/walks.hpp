#pragma once

#include <cstdint>
#include <numbers>

#include "sqwalk/circuit.hpp"
#include "sqwalk/synthesis.hpp"

namespace sqwalk {

/// Only angle the source experiments ever name; used wherever a theta or phi
/// is left open.
inline constexpr double kDefaultTheta = std::numbers::pi / 4.0;
inline constexpr double kDefaultPhi = std::numbers::pi;

enum class Graph { Cycle, Torus, Complete };

/// Parameter bundle for the single-walker builders. For the torus, n_qubits
/// must be even: the first half of the register is the row index, the second
/// half the column index, row-major labels.
struct WalkSpec {
  Graph graph = Graph::Cycle;
  int n_qubits = 4;
  double theta = kDefaultTheta;
  Variant variant = Variant::Standard;
  int steps = 1;
};

struct InteractionSpec {
  enum class Mode { Full, Marked };
  Mode mode = Mode::Full;
  double phi = kDefaultPhi;
  std::uint64_t marked = 0;  // used only in Marked mode
};

// ---------------------------------------------------------------------------
// Tile bookkeeping for the alternative increment.
//
// The reduced-CNOT increment changes the unit vector attached to the k-th odd
// tile {2x+1, 2x+2} (k = x+1). The vector, and with it the 2x2 block of the
// odd-tile evolution, follows lowest_set_bit(k) mod 4.
// ---------------------------------------------------------------------------

enum class TileVector { Plus, MinusI, Minus, PlusI };

/// Axis and sign of the 2x2 evolution block: angle = sign * 2 * theta.
struct TileBlock {
  GateKind axis;  // RotX or RotY
  int sign;       // +1 or -1
};

struct TileSequenceEntry {
  int residue;  // lowest_set_bit(k) mod 4
  TileVector vector;
  TileBlock block;
};

/// (|v> + e |w>)/sqrt(2) with e in {1, -i, -1, +i} determines a Hamiltonian
/// block in {X, -Y, -X, Y} and an evolution block in
/// {Rx(2t), Ry(-2t), Rx(-2t), Ry(2t)}.
TileBlock tile_block(TileVector v);

/// Residue -> vector/block row for the plain alternative increment:
/// 0 -> |+>, 1 -> |-i>, 2 -> |->, 3 -> |+i>.
TileSequenceEntry tile_entry(int residue);

/// Same table for the controlled increment, with |+-> and |+-i> interchanged.
TileSequenceEntry controlled_tile_entry(int residue);

// ---------------------------------------------------------------------------
// Cycle walk
// ---------------------------------------------------------------------------

/// Local operator of the even tessellation {2x, 2x+1}: one Rx(2 theta) on
/// q_{n-1}.
Circuit even_tess_op(int n, double theta);

/// Local operator of the odd tessellation {2x+1, 2x+2}: the even-tile
/// rotation conjugated by the increment, with an X conjugation around the
/// central rotation. The Alternative variant substitutes alt_increment and
/// its inverse.
Circuit odd_tess_op(int n, double theta, Variant variant = Variant::Standard);

/// One walk step = even_tess_op then odd_tess_op, repeated spec.steps times.
Circuit cycle_step(const WalkSpec& spec);

// ---------------------------------------------------------------------------
// Two interacting walkers on a cycle
// ---------------------------------------------------------------------------

/// Diagonal phase e^{i phi} exactly on the equal-position states |x>|x>.
/// Ancilla-free: a CX ladder folds x1 XOR x2 into register 2, an X layer
/// turns the all-zero pattern into all-ones, one multi-controlled Phase(phi)
/// fires, and both layers uncompute.
Circuit interaction_full(int n_per_walker, double phi);

/// Phase e^{i phi} only on |x0>|x0>: X-conjugate the qubits where x0 has a 0
/// bit on both registers, then one multi-controlled Phase over all 2n qubits.
Circuit interaction_marked(int n_per_walker, double phi, std::uint64_t x0);

/// Interaction circuit followed by one cycle step per register. Walker 1
/// occupies the high-order qubits [0, n_per_walker), walker 2 the rest.
Circuit two_walker_step(int n_per_walker, double theta,
                        const InteractionSpec& interaction,
                        Variant variant = Variant::Standard);

// ---------------------------------------------------------------------------
// Torus walk
// ---------------------------------------------------------------------------

/// Which register a controlled increment shifts. Column: control q_{n/2-1}
/// (row LSB), targets the column register. Row: control q_{n-1} (column
/// LSB), targets the row register.
enum class ShiftAxis { Column, Row };

enum class Direction { Forward, Inverse };

/// Controlled-increment over one half of a 2*n_half register: identity where
/// the control is 0, the (possibly alternative) increment where it is 1.
/// `control` must match the ShiftAxis convention above.
Circuit controlled_perm(int n_half, int control, ShiftAxis axis,
                        Direction direction,
                        Variant variant = Variant::Standard);

/// The four local torus operators. HorizEven rotates within rows whose own
/// LSB selects plain vs shifted column tiles; HorizOdd is the same conjugated
/// by X on the row LSB. VertEven / VertOdd act on the row register, selected
/// by the column LSB.
enum class TorusPatch { HorizEven, HorizOdd, VertEven, VertOdd };

Circuit torus_patch_circuit(int n, double theta, Variant variant,
                            TorusPatch patch);

/// Full torus step: HorizEven, VertEven, HorizOdd, VertOdd in application
/// order, repeated spec.steps times.
Circuit torus_step(const WalkSpec& spec);

// ---------------------------------------------------------------------------
// Search on the complete graph
// ---------------------------------------------------------------------------

/// Reflection about |0...0| up to a global phase. exact = true conjugates a
/// full multi-controlled Z with X on every qubit; exact = false replaces the
/// mcz chain by the single mcrz(pi) cascade, cheaper but no longer a pure
/// reflection.
Circuit zero_reflection(int n, bool exact);

/// H-layer, exact zero reflection, H-layer: the inversion about the uniform
/// state up to a global sign.
Circuit grover_diffusion(int n);

/// One search iteration: the zero reflection followed by its H-conjugated
/// twin. `exact` selects the reflection used in both places, matching the
/// hardware-oriented construction where the relaxed reflection replaces
/// every occurrence.
Circuit search_iteration(int n, bool exact);

/// Uniform state preparation followed by `steps` search iterations.
Circuit search_circuit(int n, int steps, bool exact);

/// round(pi sqrt(N) / 4), half-up. N must be a power of two.
int optimal_steps(std::uint64_t n_vertices);

// ---------------------------------------------------------------------------
// Initial-state preparation
// ---------------------------------------------------------------------------

Circuit prep_basis(int n, std::uint64_t index);

/// (|a> + |b>)/sqrt(2) for a != b: H on the highest differing qubit, CX onto
/// the other differing qubits, X where the low branch has 1 bits.
Circuit prep_pair(int n, std::uint64_t a, std::uint64_t b);

Circuit prep_uniform(int n);

/// Uniform superposition of the even labels: H on q0..q_{n-2}.
Circuit prep_even_superposition(int n);

}  // namespace sqwalk
