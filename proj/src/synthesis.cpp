#include "sqwalk/synthesis.hpp"

#include <bit>
#include <numbers>
#include <stdexcept>
#include <unordered_set>

#include "sqwalk/simulator.hpp"

namespace sqwalk {

namespace {

constexpr double kPi = std::numbers::pi;

void check_control_args(const std::vector<int>& controls, int target,
                        bool allow_empty) {
  if (!allow_empty && controls.empty()) {
    throw std::invalid_argument("at least one control required");
  }
  std::unordered_set<int> seen;
  for (int c : controls) {
    if (c == target) throw std::invalid_argument("target used as control");
    if (!seen.insert(c).second) {
      throw std::invalid_argument("duplicate control qubit");
    }
  }
}

}  // namespace

int lowest_set_bit(std::uint64_t k) {
  if (k == 0) throw std::invalid_argument("lowest_set_bit(0) is undefined");
  return std::countr_zero(k);
}

Circuit increment_perm(int n) {
  Circuit circuit(n);
  for (int t = 0; t + 1 < n; ++t) {
    std::vector<int> controls;
    for (int c = t + 1; c < n; ++c) controls.push_back(c);
    circuit.append(Gate::mcx(std::move(controls), t));
  }
  circuit.x(n - 1);
  return circuit;
}

Circuit decrement_perm(int n) { return increment_perm(n).inverse(); }

std::vector<Gate> mcrz(double theta, const std::vector<int>& controls,
                       int target) {
  check_control_args(controls, target, /*allow_empty=*/false);
  const std::size_t m = controls.size();
  const double step = -theta / static_cast<double>(1ull << m);
  std::vector<Gate> gates;
  gates.reserve(2ull << m);
  gates.push_back(Gate::cx(controls[m - 1], target));
  gates.push_back(Gate::phase(step, target));
  for (std::uint64_t k = 1; k < (1ull << m); ++k) {
    gates.push_back(Gate::cx(controls[lowest_set_bit(k)], target));
    gates.push_back(Gate::phase(k % 2 == 1 ? -step : step, target));
  }
  return gates;
}

std::vector<Gate> mcphase(double phi, const std::vector<int>& controls,
                          int target) {
  check_control_args(controls, target, /*allow_empty=*/true);
  std::vector<int> chain = controls;
  chain.push_back(target);
  const std::size_t n = chain.size();
  std::vector<Gate> gates;
  gates.push_back(
      Gate::phase(phi / static_cast<double>(1ull << (n - 1)), chain[0]));
  for (std::size_t i = 2; i <= n; ++i) {
    std::vector<int> inner(chain.begin(), chain.begin() + (i - 1));
    auto cascade =
        mcrz(phi / static_cast<double>(1ull << (n - i)), inner, chain[i - 1]);
    gates.insert(gates.end(), cascade.begin(), cascade.end());
  }
  return gates;
}

std::vector<Gate> mcz(const std::vector<int>& controls, int target) {
  return mcphase(kPi, controls, target);
}

std::vector<Gate> mct(const std::vector<int>& controls, int target) {
  std::vector<Gate> gates;
  gates.push_back(Gate::h(target));
  auto z = mcz(controls, target);
  gates.insert(gates.end(), z.begin(), z.end());
  gates.push_back(Gate::h(target));
  return gates;
}

std::vector<Gate> mcrx(double theta, const std::vector<int>& controls,
                       int target) {
  check_control_args(controls, target, /*allow_empty=*/false);
  std::vector<Gate> gates;
  gates.push_back(Gate::h(target));
  auto z = mcrz(theta, controls, target);
  gates.insert(gates.end(), z.begin(), z.end());
  gates.push_back(Gate::h(target));
  return gates;
}

Circuit alt_increment(int n) {
  if (n < 2) throw std::invalid_argument("alt_increment needs n >= 2");
  Circuit circuit(n);
  for (int t = 0; t + 2 < n; ++t) {
    Gate g = Gate::rx(kPi, t);
    for (int c = t + 1; c < n; ++c) g = g.with_control(c);
    circuit.append(std::move(g));
  }
  circuit.cx(n - 1, n - 2);
  circuit.x(n - 1);
  return circuit;
}

Circuit controlled_alt_increment(int n, int control) {
  if (control < 0 || control > n) {
    throw std::invalid_argument("control qubit outside the n+1 register");
  }
  std::vector<int> targets;
  for (int q = 0; q <= n; ++q) {
    if (q != control) targets.push_back(q);
  }
  Circuit out(n + 1);
  const Circuit inc = alt_increment(n);
  for (Gate g : inc.gates()) {
    g.target = targets[g.target];
    for (int& c : g.controls) c = targets[c];
    out.append(g.with_control(control));
  }
  return out;
}

namespace {

void emit_lowered(Circuit& out, const Gate& g) {
  if (g.controls.empty()) {
    out.append(g);
    return;
  }
  switch (g.kind) {
    case GateKind::PauliX:
      if (g.controls.size() == 1) {
        out.append(g);
      } else {
        out.append(mct(g.controls, g.target));
      }
      return;
    case GateKind::RotX:
      out.append(mcrx(g.angle, g.controls, g.target));
      return;
    case GateKind::RotZ:
      out.append(mcrz(g.angle, g.controls, g.target));
      return;
    case GateKind::Phase:
      out.append(mcphase(g.angle, g.controls, g.target));
      return;
    case GateKind::Hadamard:
    case GateKind::RotY:
      throw std::invalid_argument(
          std::string("no lowering rule for controlled ") +
          kind_name(g.kind));
  }
}

}  // namespace

Circuit lower(const Circuit& circuit, const LoweringOptions& opts) {
  if (opts.phase_tolerance <= 0) {
    throw std::invalid_argument("phase tolerance must be positive");
  }
  Circuit out(circuit.n_qubits());
  for (const Gate& gate : circuit.gates()) {
    // Open controls become closed ones under X conjugation.
    std::vector<int> flips;
    Gate closed = gate;
    for (std::size_t i = 0; i < closed.polarity.size(); ++i) {
      if (closed.polarity[i] == Polarity::Open) {
        flips.push_back(closed.controls[i]);
        closed.polarity[i] = Polarity::Closed;
      }
    }
    for (int q : flips) out.x(q);
    emit_lowered(out, closed);
    for (auto it = flips.rbegin(); it != flips.rend(); ++it) out.x(*it);
  }
  if (opts.verify) {
    const PhaseFit fit = match_up_to_phase(
        circuit_unitary(out), circuit_unitary(circuit), opts.phase_tolerance);
    if (!fit.matches) {
      throw std::runtime_error("lowered circuit deviates from input unitary");
    }
  }
  return out;
}

}  // namespace sqwalk
