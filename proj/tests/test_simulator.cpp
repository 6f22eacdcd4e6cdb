#include <doctest.h>

#include <numbers>

#include "sqwalk/simulator.hpp"
#include "sqwalk/synthesis.hpp"
#include "sqwalk/walks.hpp"
#include "test_oracles.hpp"

using namespace sqwalk;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("state application basics") {
  Circuit x(1);
  x.x(0);
  StateVector s(1);
  s.apply(x);
  CHECK(s.amplitude(1) == Complex{1.0, 0.0});

  StateVector top = StateVector::basis(4, 15);
  top.apply(increment_perm(4));
  CHECK(std::abs(top.amplitude(0) - 1.0) < 1e-12);

  Circuit h(1);
  h.h(0);
  StateVector plus(1);
  plus.apply(h);
  const auto dist = measure_distribution(plus);
  CHECK(dist[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(dist[1] == doctest::Approx(0.5).epsilon(1e-12));

  StateVector narrow(2);
  CHECK_THROWS_AS(narrow.apply(increment_perm(3)), std::invalid_argument);
  CHECK_THROWS_AS(StateVector::basis(2, 4), std::invalid_argument);
}

TEST_CASE("circuit_unitary") {
  const DenseUnitary id = circuit_unitary(Circuit(2));
  CHECK((id - DenseUnitary::Identity(4, 4)).cwiseAbs().maxCoeff() == 0.0);

  // one even-tile rotation is I (x) Rx(2 theta)
  const DenseUnitary u0 = circuit_unitary(even_tess_op(2, kPi / 4));
  DenseUnitary rx(2, 2);
  const auto m = gate_matrix(GateKind::RotX, kPi / 2);
  rx << m[0], m[1], m[2], m[3];
  const DenseUnitary ref = kron(DenseUnitary::Identity(2, 2), rx);
  CHECK((u0 - ref).cwiseAbs().maxCoeff() < 1e-10);

  // the increment is exactly the cyclic shift matrix
  CHECK((circuit_unitary(increment_perm(3)) - dense_shift(3))
            .cwiseAbs().maxCoeff() == 0.0);

  CHECK_THROWS_AS(circuit_unitary(Circuit(13)), std::invalid_argument);
}

TEST_CASE("tile hamiltonians") {
  DenseUnitary x(2, 2);
  x << 0, 1, 1, 0;
  CHECK((even_tile_hamiltonian(2) - kron(DenseUnitary::Identity(2, 2), x))
            .cwiseAbs().maxCoeff() == 0.0);

  const DenseUnitary h1 = odd_tile_hamiltonian(2);
  CHECK(std::abs(h1(0, 3) - 1.0) < 1e-12);
  CHECK(std::abs(h1(3, 0) - 1.0) < 1e-12);

  for (int n = 2; n <= 4; ++n) {
    const Eigen::Index dim = 1ll << n;
    const DenseUnitary id = DenseUnitary::Identity(dim, dim);
    CHECK((even_tile_hamiltonian(n) * even_tile_hamiltonian(n) - id)
              .cwiseAbs().maxCoeff() < 1e-12);
    CHECK((odd_tile_hamiltonian(n) * odd_tile_hamiltonian(n) - id)
              .cwiseAbs().maxCoeff() < 1e-12);
  }
  CHECK_THROWS_AS(even_tile_hamiltonian(1), std::invalid_argument);
}

TEST_CASE("dense_evolution") {
  const DenseUnitary h0 = even_tile_hamiltonian(3);
  CHECK((dense_evolution(h0, 0.0) - DenseUnitary::Identity(8, 8))
            .cwiseAbs().maxCoeff() == 0.0);

  const DenseUnitary quarter = dense_evolution(h0, kPi / 2);
  CHECK((quarter - Complex{0.0, -1.0} * h0).cwiseAbs().maxCoeff() < 1e-12);

  // independent matrix-exponential oracle
  for (double theta : {0.3, kPi / 8, 1.1}) {
    for (const DenseUnitary& h : {even_tile_hamiltonian(3), odd_tile_hamiltonian(3)}) {
      const DenseUnitary via_expm = oracles::expm(Complex{0.0, -theta} * h);
      CHECK((dense_evolution(h, theta) - via_expm).cwiseAbs().maxCoeff() < 1e-9);
    }
  }

  // group property in theta
  const DenseUnitary lhs = dense_evolution(h0, 0.4) * dense_evolution(h0, 0.35);
  CHECK((lhs - dense_evolution(h0, 0.75)).cwiseAbs().maxCoeff() < 1e-10);

  DenseUnitary not_involution = DenseUnitary::Identity(4, 4) * 2.0;
  CHECK_THROWS_AS(dense_evolution(not_involution, 0.1), std::invalid_argument);
}

TEST_CASE("measure_distribution") {
  CHECK(measure_distribution(StateVector(3)) ==
        std::vector<double>{1, 0, 0, 0, 0, 0, 0, 0});

  StateVector uniform(4);
  uniform.apply(prep_uniform(4));
  for (double p : measure_distribution(uniform)) {
    CHECK(p == doctest::Approx(1.0 / 16).epsilon(1e-12));
  }

  StateVector pair(3);
  pair.apply(prep_pair(3, 3, 4));
  const auto dist = measure_distribution(pair);
  CHECK(dist[3] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(dist[4] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(dist[0] + dist[1] + dist[2] + dist[5] + dist[6] + dist[7] < 1e-12);
}

TEST_CASE("sampling") {
  const auto point = sample({1.0, 0.0}, 500, 42);
  CHECK(point[0] == 500);
  CHECK(point[1] == 0);

  const std::vector<double> uniform16(16, 1.0 / 16);
  const auto a = sample(uniform16, 8192, 1234);
  const auto b = sample(uniform16, 8192, 1234);
  CHECK(a == b);  // bit-identical for a fixed seed

  std::uint64_t total = 0;
  const double sigma = std::sqrt(8192.0 * (1.0 / 16) * (15.0 / 16));
  for (std::uint64_t count : a) {
    total += count;
    CHECK(std::abs(static_cast<double>(count) - 512.0) < 5.0 * sigma);
  }
  CHECK(total == 8192);

  CHECK_THROWS_AS(sample(uniform16, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(sample({0.7, 0.7}, 10, 1), std::invalid_argument);
}

TEST_CASE("unitary helpers") {
  const DenseUnitary u = circuit_unitary(alt_increment(3));
  CHECK(is_unitary(u));
  CHECK(is_unitary(u * 1.001) == false);

  // adjoint route equals the inverse-circuit route
  const DenseUnitary via_inverse = circuit_unitary(alt_increment(3).inverse());
  CHECK((via_inverse - u.adjoint()).cwiseAbs().maxCoeff() < 1e-10);

  const Complex twist = std::exp(Complex{0.0, 0.7});
  const PhaseFit fit = match_up_to_phase(DenseUnitary(twist * u), u);
  CHECK(fit.matches);
  CHECK(std::abs(fit.phase - twist) < 1e-12);

  DenseUnitary off = u;
  off(0, 0) += 1e-6;
  CHECK(match_up_to_phase(off, u, 1e-10).matches == false);
  CHECK_THROWS_AS(match_up_to_phase(u, DenseUnitary::Identity(4, 4)),
                  std::invalid_argument);
}

TEST_CASE("norm preservation across builders") {
  const WalkSpec cycle{Graph::Cycle, 4, 0.9, Variant::Alternative, 3};
  const WalkSpec torus{Graph::Torus, 4, kPi / 4, Variant::Standard, 2};
  for (const Circuit& c : {cycle_step(cycle), torus_step(torus),
                           search_circuit(4, 3, false),
                           two_walker_step(2, kPi / 4, InteractionSpec{})}) {
    StateVector s(c.n_qubits());
    s.apply(prep_uniform(c.n_qubits()));
    s.apply(c);
    CHECK(std::abs(s.norm() - 1.0) < 1e-12);
  }
}
