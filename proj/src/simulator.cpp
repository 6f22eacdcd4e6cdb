#include "sqwalk/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace sqwalk {

namespace {

constexpr int kUnitaryMaxQubits = 12;  // 2^12 x 2^12 doubles, memory guard

void check_distribution(const std::vector<double>& dist) {
  double sum = 0.0;
  for (double p : dist) {
    if (!(p >= -1e-12)) throw std::invalid_argument("negative probability");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw std::invalid_argument("probabilities do not sum to 1");
  }
}

}  // namespace

StateVector::StateVector(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 1 || n_qubits > Circuit::kMaxQubits) {
    throw std::invalid_argument("state width out of range");
  }
  amps_.assign(1ull << n_qubits, Complex{0.0, 0.0});
  amps_[0] = 1.0;
}

StateVector StateVector::basis(int n_qubits, std::uint64_t index) {
  StateVector s(n_qubits);
  if (index >= s.dimension()) {
    throw std::invalid_argument("basis index out of range");
  }
  s.amps_[0] = 0.0;
  s.amps_[index] = 1.0;
  return s;
}

Complex StateVector::amplitude(std::uint64_t index) const {
  return amps_.at(index);
}

double StateVector::norm() const {
  double sum = 0.0;
  for (const Complex& a : amps_) sum += std::norm(a);
  return std::sqrt(sum);
}

void StateVector::apply(const Gate& gate) {
  if (gate.target < 0 || gate.max_qubit() >= n_qubits_) {
    throw std::invalid_argument("gate exceeds state width");
  }
  const auto m = gate_matrix(gate.kind, gate.angle);
  const std::uint64_t target_bit = 1ull << (n_qubits_ - 1 - gate.target);
  std::uint64_t closed = 0, open = 0;
  for (std::size_t i = 0; i < gate.controls.size(); ++i) {
    if (gate.controls[i] < 0) {
      throw std::invalid_argument("gate exceeds state width");
    }
    const std::uint64_t bit = 1ull << (n_qubits_ - 1 - gate.controls[i]);
    const bool is_closed =
        i >= gate.polarity.size() || gate.polarity[i] == Polarity::Closed;
    (is_closed ? closed : open) |= bit;
  }
  const std::uint64_t dim = amps_.size();
  for (std::uint64_t v = 0; v < dim; ++v) {
    if (v & target_bit) continue;
    if ((v & closed) != closed || (v & open) != 0) continue;
    const std::uint64_t w = v | target_bit;
    const Complex a = amps_[v], b = amps_[w];
    amps_[v] = m[0] * a + m[1] * b;
    amps_[w] = m[2] * a + m[3] * b;
  }
}

void StateVector::apply(const Circuit& circuit) {
  if (circuit.n_qubits() != n_qubits_) {
    throw std::invalid_argument("circuit width does not match state");
  }
  for (const Gate& g : circuit.gates()) apply(g);
}

StateVector apply_circuit(StateVector state, const Circuit& circuit) {
  state.apply(circuit);
  return state;
}

DenseUnitary circuit_unitary(const Circuit& circuit) {
  if (circuit.n_qubits() > kUnitaryMaxQubits) {
    throw std::invalid_argument("dense unitary limited to 12 qubits");
  }
  const std::uint64_t dim = 1ull << circuit.n_qubits();
  DenseUnitary u(dim, dim);
  for (std::uint64_t j = 0; j < dim; ++j) {
    StateVector column = StateVector::basis(circuit.n_qubits(), j);
    column.apply(circuit);
    for (std::uint64_t i = 0; i < dim; ++i) u(i, j) = column.amplitude(i);
  }
  return u;
}

DenseUnitary kron(const DenseUnitary& a, const DenseUnitary& b) {
  DenseUnitary out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

DenseUnitary dense_shift(int n) {
  const Eigen::Index dim = 1ll << n;
  DenseUnitary p = DenseUnitary::Zero(dim, dim);
  for (Eigen::Index x = 0; x < dim; ++x) p((x + 1) % dim, x) = 1.0;
  return p;
}

DenseUnitary even_tile_hamiltonian(int n) {
  if (n < 2) throw std::invalid_argument("tile hamiltonians need n >= 2");
  DenseUnitary x(2, 2);
  x << 0, 1, 1, 0;
  return kron(DenseUnitary::Identity(1ll << (n - 1), 1ll << (n - 1)), x);
}

DenseUnitary odd_tile_hamiltonian(int n) {
  const DenseUnitary p = dense_shift(n);
  return p.adjoint() * even_tile_hamiltonian(n) * p;
}

DenseUnitary dense_evolution(const DenseUnitary& h, double theta) {
  if (h.rows() != h.cols()) throw std::invalid_argument("square matrix required");
  const DenseUnitary id = DenseUnitary::Identity(h.rows(), h.cols());
  if ((h * h - id).cwiseAbs().maxCoeff() > 1e-10) {
    throw std::invalid_argument("generator is not an involution");
  }
  return std::cos(theta) * id - Complex{0.0, 1.0} * std::sin(theta) * h;
}

std::vector<double> measure_distribution(const StateVector& state) {
  std::vector<double> dist(state.dimension());
  auto amps = state.amplitudes();
  for (std::size_t i = 0; i < dist.size(); ++i) dist[i] = std::norm(amps[i]);
  return dist;
}

std::vector<std::uint64_t> sample(const std::vector<double>& dist,
                                  std::uint64_t shots, std::uint64_t seed) {
  if (shots < 1) throw std::invalid_argument("shots must be >= 1");
  check_distribution(dist);
  std::vector<double> cumulative(dist.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < dist.size(); ++i) {
    acc += std::max(dist[i], 0.0);
    cumulative[i] = acc;
  }
  // Raw engine draws mapped to [0,1) by hand: std::uniform_real_distribution
  // is implementation-defined and would break the bit-identical contract.
  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> counts(dist.size(), 0);
  for (std::uint64_t s = 0; s < shots; ++s) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * acc;
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    if (it == cumulative.end()) --it;
    ++counts[static_cast<std::size_t>(it - cumulative.begin())];
  }
  return counts;
}

bool is_unitary(const DenseUnitary& u, double tol) {
  if (u.rows() != u.cols()) return false;
  const DenseUnitary id = DenseUnitary::Identity(u.rows(), u.cols());
  return (u.adjoint() * u - id).cwiseAbs().maxCoeff() <= tol;
}

PhaseFit match_up_to_phase(const DenseUnitary& candidate,
                           const DenseUnitary& reference, double tol) {
  if (candidate.rows() != reference.rows() ||
      candidate.cols() != reference.cols()) {
    throw std::invalid_argument("matrix dimensions differ");
  }
  Eigen::Index i = 0, j = 0;
  reference.cwiseAbs().maxCoeff(&i, &j);
  PhaseFit fit;
  if (std::abs(reference(i, j)) > 0.0) {
    const Complex ratio = candidate(i, j) / reference(i, j);
    if (std::abs(ratio) > 0.0) fit.phase = ratio / std::abs(ratio);
  }
  fit.max_err = (candidate - fit.phase * reference).cwiseAbs().maxCoeff();
  fit.matches = fit.max_err <= tol;
  return fit;
}

}  // namespace sqwalk
