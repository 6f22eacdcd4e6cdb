#include <doctest.h>

#include <algorithm>
#include <numbers>
#include <sstream>

#include "sqwalk/experiments.hpp"
#include "sqwalk/qasm.hpp"
#include "sqwalk/simulator.hpp"
#include "qasm_reader.hpp"
#include "test_oracles.hpp"

using namespace sqwalk;

namespace {

int count_lines_with(const std::string& text, const std::string& needle) {
  std::istringstream in(text);
  std::string line;
  int count = 0;
  while (std::getline(in, line)) {
    if (line.starts_with(needle)) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("qasm emission") {
  Circuit c(1);
  c.x(0);
  const std::string text = io::emit_qasm(c);
  CHECK(text == "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[1];\nx q[0];\n");

  Circuit two(2);
  two.cx(0, 1);
  CHECK(io::emit_qasm(two).find("cx q[0],q[1];") != std::string::npos);

  // 17 significant digits on angles
  Circuit angle(1);
  angle.phase(std::numbers::pi / 8, 0);
  CHECK(io::emit_qasm(angle).find("u1(0.39269908169872414) q[0];") !=
        std::string::npos);

  const std::string alt = io::emit_qasm(lower(alt_increment(4)));
  CHECK(count_lines_with(alt, "cx ") == 13);

  Circuit unlowered(3);
  unlowered.append(Gate::mcx({0, 1}, 2));
  CHECK_THROWS_AS(io::emit_qasm(unlowered), std::invalid_argument);

  Circuit controlled_rz(2);
  controlled_rz.append(Gate::rz(0.5, 1).with_control(0));
  CHECK_THROWS_AS(io::emit_qasm(controlled_rz), std::invalid_argument);
}

TEST_CASE("qasm round trip preserves the unitary") {
  std::vector<Circuit> circuits;
  circuits.push_back(lower(increment_perm(3)));
  circuits.push_back(lower(alt_increment(4)));
  circuits.push_back(lower(search_iteration(3, false)));
  circuits.push_back(lower(cycle_step({Graph::Cycle, 4, 0.37, Variant::Alternative, 1})));
  for (const Circuit& c : circuits) {
    const Circuit reparsed = qasm_reader::parse(io::emit_qasm(c));
    CHECK(reparsed.n_qubits() == c.n_qubits());
    const PhaseFit fit =
        match_up_to_phase(circuit_unitary(reparsed), circuit_unitary(c));
    CHECK(fit.matches);
    CHECK(fit.max_err < 1e-10);
  }
}

TEST_CASE("json round trip") {
  io::CycleRun run;
  run.n = 4;
  run.steps = 2;
  run.variant = Variant::Alternative;
  run.initial = "basis:0";
  run.shots = 256;
  run.seed = 99;
  const io::ExperimentResult result = io::run_cycle(run);
  const io::ExperimentResult back = io::result_from_json(io::to_json(result));
  CHECK(back == result);

  io::SearchRun search;
  search.n = 3;
  search.exact_reflection = false;
  const io::ExperimentResult sr = io::run_search(search);
  CHECK(io::result_from_json(io::to_json(sr)) == sr);
  CHECK(sr.p_success.has_value());
}

TEST_CASE("csv output") {
  io::TorusRun run;
  run.n = 4;
  run.steps = 1;
  run.shots = 128;
  const std::string csv = io::to_csv(io::run_torus(run));
  CHECK(csv.starts_with("outcome,row,col,probability,count\n"));
  CHECK(csv.find("\n5,1,1,") != std::string::npos);  // label 5 = row 1, col 1

  io::CycleRun cycle;
  const std::string plain = io::to_csv(io::run_cycle(cycle));
  CHECK(plain.starts_with("outcome,probability\n"));
  CHECK(count_lines_with(plain, "") == 17);  // header + 16 outcomes
}

TEST_CASE("cycle runner") {
  io::CycleRun run;
  run.n = 4;
  run.steps = 0;
  run.initial = "pair:3,4";
  const auto result = io::run_cycle(run);
  REQUIRE(result.probabilities.size() == 1);  // echo of the initial state
  CHECK(result.probabilities[0][3] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(result.probabilities[0][4] == doctest::Approx(0.5).epsilon(1e-12));

  run.steps = 1;
  run.variant = Variant::Alternative;
  run.initial = "basis:0";
  const auto one = io::run_cycle(run);
  REQUIRE(one.probabilities.size() == 2);
  CHECK(one.cnot_count == 26);  // 13 per alternative shift pair
  CHECK(one.params.variant == "alternative");

  run.initial = "nonsense";
  CHECK_THROWS_AS(io::run_cycle(run), std::invalid_argument);
  run.initial = "basis:16";
  CHECK_THROWS_AS(io::run_cycle(run), std::invalid_argument);
  run.initial = "pair:1";
  CHECK_THROWS_AS(io::run_cycle(run), std::invalid_argument);
}

TEST_CASE("cycle runner records the whole trajectory") {
  io::CycleRun run;
  run.n = 3;
  run.theta = std::numbers::pi / 4;
  run.steps = 8;
  run.initial = "pair:3,4";
  const auto result = io::run_cycle(run);
  REQUIRE(result.probabilities.size() == 9);  // initial state plus 8 steps
  for (const auto& row : result.probabilities) {
    double sum = 0.0;
    for (int v = 0; v < 8; ++v) {
      CHECK(std::abs(row[v] - row[7 - v]) < 1e-10);
      sum += row[v];
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("runner determinism") {
  io::CycleRun run;
  run.n = 3;
  run.steps = 2;
  run.initial = "uniform";
  run.shots = 512;
  run.seed = 31415;
  const auto a = io::run_cycle(run);
  const auto b = io::run_cycle(run);
  CHECK(a == b);
  REQUIRE(a.counts.has_value());
  std::uint64_t total = 0;
  for (std::uint64_t c : *a.counts) total += c;
  CHECK(total == 512);
}

TEST_CASE("two-walker runner") {
  io::TwoWalkerRun run;
  run.n_per_walker = 2;
  run.phi = 0.0;
  run.steps = 2;
  run.initial = "pairpos:0,2";
  const auto joint = io::run_two_walkers(run);

  // no interaction: the joint distribution is the product of two singles
  io::CycleRun single;
  single.n = 2;
  single.steps = 2;
  const auto from0 = io::run_cycle(single);
  single.initial = "basis:2";
  const auto from2 = io::run_cycle(single);
  for (int x1 = 0; x1 < 4; ++x1) {
    for (int x2 = 0; x2 < 4; ++x2) {
      const double expect = from0.probabilities.back()[x1] *
                            from2.probabilities.back()[x2];
      CHECK(std::abs(joint.probabilities.back()[x1 * 4 + x2] - expect) < 1e-10);
    }
  }

  // steps 0: point mass at the initial pair
  run.steps = 0;
  const auto still = io::run_two_walkers(run);
  CHECK(still.probabilities.back()[2] == doctest::Approx(1.0).epsilon(1e-12));

  // the marked-vertex experiment: parameters echoed
  run.mode = InteractionSpec::Mode::Marked;
  run.marked = 3;
  run.steps = 2;
  run.phi = kDefaultPhi;
  const auto marked = io::run_two_walkers(run);
  CHECK(marked.params.mode == "marked");
  CHECK(marked.params.marked == 3);
  const auto& final = marked.probabilities.back();
  const auto peak = std::max_element(final.begin(), final.end());
  CHECK(*peak > 0.5);  // strongly concentrated after the interaction kicks in

  run.initial = "pairpos:0,4";
  CHECK_THROWS_AS(io::run_two_walkers(run), std::invalid_argument);
}

TEST_CASE("torus runner") {
  io::TorusRun run;
  run.n = 4;
  run.steps = 0;
  const auto still = io::run_torus(run);
  for (int v = 0; v < 16; ++v) {
    const double expect = v % 2 == 0 ? 0.125 : 0.0;
    CHECK(still.probabilities.back()[v] == doctest::Approx(expect).epsilon(1e-12));
  }

  // one step against the dense oracle
  run.steps = 1;
  const auto stepped = io::run_torus(run);
  Eigen::VectorXcd amp = Eigen::VectorXcd::Zero(16);
  for (int v = 0; v < 16; v += 2) amp(v) = 1.0 / std::sqrt(8.0);
  const Eigen::VectorXcd evolved =
      oracles::dense_torus_step(4, kDefaultTheta) * amp;
  for (int v = 0; v < 16; ++v) {
    CHECK(std::abs(stepped.probabilities.back()[v] - std::norm(evolved(v))) <
          1e-10);
  }

  run.n = 3;
  CHECK_THROWS_AS(io::run_torus(run), std::invalid_argument);
  run.n = 4;
  run.initial = "pair:1,2";
  CHECK_THROWS_AS(io::run_torus(run), std::invalid_argument);
}

TEST_CASE("search runner") {
  io::SearchRun run;
  run.n = 4;
  const auto result = io::run_search(run);
  CHECK(result.params.steps == 3);  // optimal for 16 vertices
  CHECK(result.params.exact_reflection == true);
  CHECK(*result.p_success ==
        doctest::Approx(oracles::grover_success(16, 3)).epsilon(1e-9));

  run.steps = 0;
  const auto flat = io::run_search(run);
  CHECK(*flat.p_success == doctest::Approx(1.0 / 16).epsilon(1e-12));
}

TEST_CASE("gatecount reports and builder circuits") {
  auto count_for = [](const std::string& builder, int n) {
    io::BuilderRequest request;
    request.builder = builder;
    request.n = n;
    return io::run_gatecount(request);
  };
  CHECK(count_for("perm", 4).cnot_count == 21);
  CHECK(count_for("alt-perm", 4).cnot_count == 13);
  CHECK(count_for("mcrz", 4).cnot_count == 8);
  CHECK(count_for("mcz", 4).cnot_count == 14);

  const auto report = count_for("cycle-step", 3);
  const Circuit ref =
      lower(cycle_step({Graph::Cycle, 3, kDefaultTheta, Variant::Standard, 1}));
  CHECK(report.depth == ref.depth());
  CHECK(report.cnot_count == ref.cnot_count());

  CHECK_THROWS_AS(count_for("warp-drive", 4), std::invalid_argument);

  const std::string json = io::to_json(count_for("perm", 4));
  CHECK(json.find("\"cnot_count\": 21") != std::string::npos);
  const std::string csv = io::to_csv(count_for("alt-perm", 4));
  CHECK(csv.find("alt-perm,4,13,") != std::string::npos);
}
