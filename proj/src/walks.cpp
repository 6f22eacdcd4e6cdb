#include "sqwalk/walks.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace sqwalk {

namespace {

void check_angle(double angle) {
  if (!std::isfinite(angle)) throw std::invalid_argument("angle must be finite");
}

int require_even(int n) {
  if (n < 2 || n % 2 != 0) {
    throw std::invalid_argument("torus register needs an even qubit count");
  }
  return n;
}

Circuit one_cycle_step(int n, double theta, Variant variant) {
  Circuit circuit(n);
  circuit.extend(even_tess_op(n, theta));
  circuit.extend(odd_tess_op(n, theta, variant));
  return circuit;
}

}  // namespace

TileBlock tile_block(TileVector v) {
  switch (v) {
    case TileVector::Plus:   return {GateKind::RotX, +1};
    case TileVector::MinusI: return {GateKind::RotY, -1};
    case TileVector::Minus:  return {GateKind::RotX, -1};
    case TileVector::PlusI:  return {GateKind::RotY, +1};
  }
  throw std::invalid_argument("unknown tile vector");
}

namespace {

TileVector residue_vector(int residue) {
  switch (residue) {
    case 0: return TileVector::Plus;
    case 1: return TileVector::MinusI;
    case 2: return TileVector::Minus;
    case 3: return TileVector::PlusI;
  }
  throw std::invalid_argument("tile residue must be in [0, 3]");
}

TileVector interchange(TileVector v) {
  switch (v) {
    case TileVector::Plus:   return TileVector::PlusI;
    case TileVector::PlusI:  return TileVector::Plus;
    case TileVector::Minus:  return TileVector::MinusI;
    case TileVector::MinusI: return TileVector::Minus;
  }
  throw std::invalid_argument("unknown tile vector");
}

}  // namespace

TileSequenceEntry tile_entry(int residue) {
  const TileVector v = residue_vector(residue);
  return {residue, v, tile_block(v)};
}

TileSequenceEntry controlled_tile_entry(int residue) {
  const TileVector v = interchange(residue_vector(residue));
  return {residue, v, tile_block(v)};
}

Circuit even_tess_op(int n, double theta) {
  check_angle(theta);
  Circuit circuit(n);
  circuit.rx(2 * theta, n - 1);
  return circuit;
}

Circuit odd_tess_op(int n, double theta, Variant variant) {
  check_angle(theta);
  if (n < 2) throw std::invalid_argument("odd tessellation needs n >= 2");
  const Circuit inc =
      variant == Variant::Standard ? increment_perm(n) : alt_increment(n);
  Circuit circuit(n);
  circuit.extend(inc);
  circuit.x(n - 1).rx(2 * theta, n - 1).x(n - 1);
  circuit.extend(inc.inverse());
  return circuit;
}

Circuit cycle_step(const WalkSpec& spec) {
  if (spec.graph != Graph::Cycle) {
    throw std::invalid_argument("cycle_step requires a cycle spec");
  }
  if (spec.steps < 0) throw std::invalid_argument("steps must be >= 0");
  Circuit circuit(spec.n_qubits);
  const Circuit step = one_cycle_step(spec.n_qubits, spec.theta, spec.variant);
  for (int s = 0; s < spec.steps; ++s) circuit.extend(step);
  return circuit;
}

Circuit interaction_full(int n_per_walker, double phi) {
  check_angle(phi);
  const int n = n_per_walker;
  Circuit circuit(2 * n);
  for (int i = 0; i < n; ++i) circuit.cx(i, n + i);
  for (int i = 0; i < n; ++i) circuit.x(n + i);
  std::vector<int> controls;
  for (int q = n; q < 2 * n - 1; ++q) controls.push_back(q);
  circuit.append(mcphase(phi, controls, 2 * n - 1));
  for (int i = n - 1; i >= 0; --i) circuit.x(n + i);
  for (int i = n - 1; i >= 0; --i) circuit.cx(i, n + i);
  return circuit;
}

Circuit interaction_marked(int n_per_walker, double phi, std::uint64_t x0) {
  check_angle(phi);
  const int n = n_per_walker;
  if (x0 >= (1ull << n)) {
    throw std::invalid_argument("marked vertex outside the walker space");
  }
  Circuit circuit(2 * n);
  std::vector<int> flips;
  for (int q = 0; q < 2 * n; ++q) {
    const int bit = n - 1 - (q % n);
    if (((x0 >> bit) & 1) == 0) flips.push_back(q);
  }
  for (int q : flips) circuit.x(q);
  std::vector<int> controls;
  for (int q = 0; q < 2 * n - 1; ++q) controls.push_back(q);
  circuit.append(mcphase(phi, controls, 2 * n - 1));
  for (auto it = flips.rbegin(); it != flips.rend(); ++it) circuit.x(*it);
  return circuit;
}

Circuit two_walker_step(int n_per_walker, double theta,
                        const InteractionSpec& interaction, Variant variant) {
  const int n = n_per_walker;
  Circuit circuit(2 * n);
  circuit.extend(interaction.mode == InteractionSpec::Mode::Full
                     ? interaction_full(n, interaction.phi)
                     : interaction_marked(n, interaction.phi,
                                          interaction.marked));
  const Circuit step = one_cycle_step(n, theta, variant);
  circuit.extend(step, 0);
  circuit.extend(step, n);
  return circuit;
}

Circuit controlled_perm(int n_half, int control, ShiftAxis axis,
                        Direction direction, Variant variant) {
  const int n = 2 * n_half;
  const int expected_control = axis == ShiftAxis::Column ? n_half - 1 : n - 1;
  if (control != expected_control) {
    throw std::invalid_argument("control qubit does not match register split");
  }
  const int base = axis == ShiftAxis::Column ? n_half : 0;

  // Build over control + target register, then place into the full register:
  // qubit 0 of the small circuit is the control.
  Circuit small(n_half + 1);
  if (variant == Variant::Alternative) {
    small = controlled_alt_increment(n_half, 0);
  } else {
    const Circuit inc = increment_perm(n_half);
    for (Gate g : inc.gates()) {
      g.target += 1;
      for (int& c : g.controls) c += 1;
      small.append(g.with_control(0));
    }
  }
  std::vector<int> map(n_half + 1);
  map[0] = control;
  for (int i = 0; i < n_half; ++i) map[i + 1] = base + i;
  Circuit placed = remap(small, map, n);
  return direction == Direction::Forward ? placed : placed.inverse();
}

Circuit torus_patch_circuit(int n, double theta, Variant variant,
                            TorusPatch patch) {
  require_even(n);
  check_angle(theta);
  const int half = n / 2;
  Circuit circuit(n);
  switch (patch) {
    case TorusPatch::HorizEven:
      circuit.extend(
          controlled_perm(half, half - 1, ShiftAxis::Column, Direction::Forward, variant));
      circuit.rx(2 * theta, n - 1);
      circuit.extend(
          controlled_perm(half, half - 1, ShiftAxis::Column, Direction::Inverse, variant));
      return circuit;
    case TorusPatch::VertEven:
      circuit.extend(
          controlled_perm(half, n - 1, ShiftAxis::Row, Direction::Forward, variant));
      circuit.rx(2 * theta, half - 1);
      circuit.extend(
          controlled_perm(half, n - 1, ShiftAxis::Row, Direction::Inverse, variant));
      return circuit;
    case TorusPatch::HorizOdd:
      circuit.x(half - 1);
      circuit.extend(torus_patch_circuit(n, theta, variant, TorusPatch::HorizEven));
      circuit.x(half - 1);
      return circuit;
    case TorusPatch::VertOdd:
      circuit.x(n - 1);
      circuit.extend(torus_patch_circuit(n, theta, variant, TorusPatch::VertEven));
      circuit.x(n - 1);
      return circuit;
  }
  throw std::invalid_argument("unknown torus patch");
}

Circuit torus_step(const WalkSpec& spec) {
  if (spec.graph != Graph::Torus) {
    throw std::invalid_argument("torus_step requires a torus spec");
  }
  if (spec.steps < 0) throw std::invalid_argument("steps must be >= 0");
  const int n = require_even(spec.n_qubits);
  Circuit step(n);
  step.extend(torus_patch_circuit(n, spec.theta, spec.variant, TorusPatch::HorizEven));
  step.extend(torus_patch_circuit(n, spec.theta, spec.variant, TorusPatch::VertEven));
  step.extend(torus_patch_circuit(n, spec.theta, spec.variant, TorusPatch::HorizOdd));
  step.extend(torus_patch_circuit(n, spec.theta, spec.variant, TorusPatch::VertOdd));
  Circuit circuit(n);
  for (int s = 0; s < spec.steps; ++s) circuit.extend(step);
  return circuit;
}

Circuit zero_reflection(int n, bool exact) {
  Circuit circuit(n);
  for (int q = 0; q < n; ++q) circuit.x(q);
  std::vector<int> controls;
  for (int q = 0; q + 1 < n; ++q) controls.push_back(q);
  if (exact) {
    circuit.append(mcz(controls, n - 1));
  } else if (controls.empty()) {
    circuit.rz(std::numbers::pi, n - 1);
  } else {
    circuit.append(mcrz(std::numbers::pi, controls, n - 1));
  }
  for (int q = n - 1; q >= 0; --q) circuit.x(q);
  return circuit;
}

namespace {

Circuit diffusion(int n, bool exact) {
  Circuit circuit(n);
  for (int q = 0; q < n; ++q) circuit.h(q);
  circuit.extend(zero_reflection(n, exact));
  for (int q = 0; q < n; ++q) circuit.h(q);
  return circuit;
}

}  // namespace

Circuit grover_diffusion(int n) { return diffusion(n, /*exact=*/true); }

Circuit search_iteration(int n, bool exact) {
  Circuit circuit(n);
  circuit.extend(zero_reflection(n, exact));
  circuit.extend(diffusion(n, exact));
  return circuit;
}

Circuit search_circuit(int n, int steps, bool exact) {
  if (steps < 0) throw std::invalid_argument("steps must be >= 0");
  Circuit circuit = prep_uniform(n);
  const Circuit iteration = search_iteration(n, exact);
  for (int s = 0; s < steps; ++s) circuit.extend(iteration);
  return circuit;
}

int optimal_steps(std::uint64_t n_vertices) {
  if (n_vertices < 2 || !std::has_single_bit(n_vertices)) {
    throw std::invalid_argument("vertex count must be a power of two");
  }
  return static_cast<int>(std::llround(
      std::numbers::pi * std::sqrt(static_cast<double>(n_vertices)) / 4.0));
}

Circuit prep_basis(int n, std::uint64_t index) {
  Circuit circuit(n);
  if (index >= (1ull << n)) {
    throw std::invalid_argument("basis label outside the register");
  }
  for (int q = 0; q < n; ++q) {
    if ((index >> (n - 1 - q)) & 1) circuit.x(q);
  }
  return circuit;
}

Circuit prep_pair(int n, std::uint64_t a, std::uint64_t b) {
  if (a >= (1ull << n) || b >= (1ull << n)) {
    throw std::invalid_argument("pair labels outside the register");
  }
  if (a == b) throw std::invalid_argument("pair labels must differ");
  const std::uint64_t diff = a ^ b;
  const int pivot_bit = 63 - std::countl_zero(diff);
  if ((a >> pivot_bit) & 1) std::swap(a, b);  // branch a carries pivot = 0
  const int pivot = n - 1 - pivot_bit;
  Circuit circuit(n);
  circuit.h(pivot);
  for (int bit = pivot_bit - 1; bit >= 0; --bit) {
    if ((diff >> bit) & 1) circuit.cx(pivot, n - 1 - bit);
  }
  for (int q = 0; q < n; ++q) {
    if ((a >> (n - 1 - q)) & 1) circuit.x(q);
  }
  return circuit;
}

Circuit prep_uniform(int n) {
  Circuit circuit(n);
  for (int q = 0; q < n; ++q) circuit.h(q);
  return circuit;
}

Circuit prep_even_superposition(int n) {
  Circuit circuit(n);
  for (int q = 0; q + 1 < n; ++q) circuit.h(q);
  return circuit;
}

}  // namespace sqwalk
