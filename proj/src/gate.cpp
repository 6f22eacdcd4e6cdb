#include "sqwalk/gate.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace sqwalk {

namespace {

Gate make(GateKind kind, double angle, int target) {
  if (has_angle(kind) && !std::isfinite(angle)) {
    throw std::invalid_argument("gate angle must be finite");
  }
  Gate g;
  g.kind = kind;
  g.target = target;
  g.angle = has_angle(kind) ? angle : 0.0;
  return g;
}

}  // namespace

const char* kind_name(GateKind k) {
  switch (k) {
    case GateKind::PauliX:   return "x";
    case GateKind::Hadamard: return "h";
    case GateKind::RotX:     return "rx";
    case GateKind::RotY:     return "ry";
    case GateKind::RotZ:     return "rz";
    case GateKind::Phase:    return "u1";
  }
  return "?";
}

Gate Gate::x(int target) { return make(GateKind::PauliX, 0.0, target); }
Gate Gate::h(int target) { return make(GateKind::Hadamard, 0.0, target); }
Gate Gate::rx(double angle, int target) { return make(GateKind::RotX, angle, target); }
Gate Gate::ry(double angle, int target) { return make(GateKind::RotY, angle, target); }
Gate Gate::rz(double angle, int target) { return make(GateKind::RotZ, angle, target); }
Gate Gate::phase(double angle, int target) { return make(GateKind::Phase, angle, target); }

Gate Gate::cx(int control, int target) {
  return Gate::x(target).with_control(control);
}

Gate Gate::mcx(std::vector<int> controls, int target) {
  Gate g = Gate::x(target);
  g.controls = std::move(controls);
  g.polarity.assign(g.controls.size(), Polarity::Closed);
  return g;
}

Gate Gate::with_control(int control, Polarity p) const {
  Gate g = *this;
  g.controls.push_back(control);
  g.polarity.push_back(p);
  return g;
}

Gate Gate::adjoint() const {
  Gate g = *this;
  if (has_angle(kind)) g.angle = -g.angle;
  return g;
}

bool Gate::is_cx() const {
  return kind == GateKind::PauliX && controls.size() == 1 &&
         polarity.size() == 1 && polarity[0] == Polarity::Closed;
}

int Gate::max_qubit() const {
  int m = target;
  for (int c : controls) m = std::max(m, c);
  return m;
}

std::array<std::complex<double>, 4> gate_matrix(GateKind kind, double angle) {
  using namespace std::complex_literals;
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  switch (kind) {
    case GateKind::PauliX:
      return {0.0, 1.0, 1.0, 0.0};
    case GateKind::Hadamard:
      return {inv_sqrt2, inv_sqrt2, inv_sqrt2, -inv_sqrt2};
    case GateKind::RotX: {
      const double c = std::cos(angle / 2), s = std::sin(angle / 2);
      return {c, -1i * s, -1i * s, c};
    }
    case GateKind::RotY: {
      const double c = std::cos(angle / 2), s = std::sin(angle / 2);
      return {c, -s, s, c};
    }
    case GateKind::RotZ:
      return {std::exp(-0.5i * angle), 0.0, 0.0, std::exp(0.5i * angle)};
    case GateKind::Phase:
      return {1.0, 0.0, 0.0, std::exp(1i * angle)};
  }
  throw std::invalid_argument("unknown gate kind");
}

}  // namespace sqwalk
