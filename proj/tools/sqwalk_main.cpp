// Command-line front end: builds walk circuits, simulates them exactly and
// emits JSON/CSV results or OpenQASM text.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "sqwalk/experiments.hpp"
#include "sqwalk/qasm.hpp"
#include "sqwalk/synthesis.hpp"
#include "sqwalk/walks.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFlagError = 2;
constexpr int kExitInternalError = 3;

struct CommonFlags {
  std::string format = "json";
  std::string out_path;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> shots;
};

void add_common(CLI::App* cmd, CommonFlags& common) {
  cmd->add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "qasm"}));
  cmd->add_option("--out", common.out_path, "Write output to a file");
  cmd->add_option("--seed", common.seed, "Sampling seed");
  cmd->add_option("--shots", common.shots,
                  "Sample counts from the final distribution");
}

void write_output(const CommonFlags& common, const std::string& text) {
  if (common.out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream file(common.out_path);
  if (!file) throw std::invalid_argument("cannot open " + common.out_path);
  file << text;
}

void emit_result(const CommonFlags& common,
                 const sqwalk::io::ExperimentResult& result) {
  if (common.format == "csv") {
    write_output(common, sqwalk::io::to_csv(result));
  } else {
    write_output(common, sqwalk::io::to_json(result));
  }
}

sqwalk::Variant parse_variant(const std::string& name) {
  return name == "alternative" ? sqwalk::Variant::Alternative
                               : sqwalk::Variant::Standard;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Staggered quantum walk circuit synthesis and exact simulation"};
  app.require_subcommand(1);

  // cycle
  auto* cycle = app.add_subcommand("cycle", "Walk on the 2^n-cycle");
  sqwalk::io::CycleRun cycle_run;
  CommonFlags cycle_common;
  std::string cycle_variant = "standard";
  cycle->add_option("--n", cycle_run.n, "Qubits")->check(CLI::Range(2, 24));
  cycle->add_option("--theta", cycle_run.theta, "Walk angle (radians)");
  cycle->add_option("--steps", cycle_run.steps, "Walk steps")
      ->check(CLI::NonNegativeNumber);
  cycle->add_option("--variant", cycle_variant, "Increment family")
      ->check(CLI::IsMember({"standard", "alternative"}));
  cycle->add_option("--initial", cycle_run.initial,
                    "basis:<k> | pair:<a>,<b> | uniform");
  add_common(cycle, cycle_common);

  // two-walkers
  auto* two = app.add_subcommand("two-walkers",
                                 "Two interacting walkers on a cycle");
  sqwalk::io::TwoWalkerRun two_run;
  CommonFlags two_common;
  std::string two_mode = "full";
  two->add_option("--n-per-walker", two_run.n_per_walker, "Qubits per walker")
      ->check(CLI::Range(2, 12));
  two->add_option("--theta", two_run.theta, "Walk angle (radians)");
  two->add_option("--phi", two_run.phi, "Interaction phase (radians)");
  two->add_option("--mode", two_mode, "Interaction mode")
      ->check(CLI::IsMember({"full", "marked"}));
  two->add_option("--marked", two_run.marked, "Marked vertex (marked mode)");
  two->add_option("--steps", two_run.steps, "Walk steps")
      ->check(CLI::NonNegativeNumber);
  two->add_option("--initial", two_run.initial, "pairpos:<x1>,<x2>");
  add_common(two, two_common);

  // torus
  auto* torus = app.add_subcommand("torus", "Walk on the sqrt(N) x sqrt(N) torus");
  sqwalk::io::TorusRun torus_run;
  CommonFlags torus_common;
  std::string torus_variant = "standard";
  torus->add_option("--n", torus_run.n, "Qubits (even)")->check(CLI::Range(2, 24));
  torus->add_option("--theta", torus_run.theta, "Walk angle (radians)");
  torus->add_option("--steps", torus_run.steps, "Walk steps")
      ->check(CLI::NonNegativeNumber);
  torus->add_option("--variant", torus_variant, "Increment family")
      ->check(CLI::IsMember({"standard", "alternative"}));
  torus->add_option("--initial", torus_run.initial,
                    "basis:<k> | even-superposition");
  add_common(torus, torus_common);

  // search
  auto* search = app.add_subcommand("search", "Walk-based search on the complete graph");
  sqwalk::io::SearchRun search_run;
  CommonFlags search_common;
  search->add_option("--n", search_run.n, "Qubits")->check(CLI::Range(1, 24));
  search->add_option("--steps", search_run.steps,
                     "Search iterations (default: round(pi sqrt(N)/4))");
  search->add_flag("--exact-reflection,!--no-exact-reflection",
                   search_run.exact_reflection,
                   "Full multi-controlled Z reflection (default) or the "
                   "reduced mcrz(pi) cascade");
  add_common(search, search_common);

  // gatecount / emit-qasm share the builder flags
  sqwalk::io::BuilderRequest request;
  CommonFlags gatecount_common, qasm_common;
  std::string builder_variant = "standard";
  const std::vector<std::string> builders = {
      "perm", "alt-perm", "mcz", "mcrz", "search-step", "cycle-step", "torus-step"};

  auto* gatecount = app.add_subcommand("gatecount",
                                       "Lower a builder circuit and report CNOT count and depth");
  auto* emitqasm = app.add_subcommand("emit-qasm",
                                      "Lower a builder circuit and print OpenQASM 2.0");
  for (CLI::App* cmd : {gatecount, emitqasm}) {
    cmd->add_option("--builder", request.builder, "Circuit family")
        ->required()
        ->check(CLI::IsMember(builders));
    cmd->add_option("--n", request.n, "Qubits")->check(CLI::Range(1, 24));
    cmd->add_option("--theta", request.theta, "Angle where applicable");
    cmd->add_option("--variant", builder_variant, "Increment family")
        ->check(CLI::IsMember({"standard", "alternative"}));
    cmd->add_flag("--exact-reflection,!--no-exact-reflection",
                  request.exact_reflection, "Reflection used by search-step");
  }
  add_common(gatecount, gatecount_common);
  emitqasm->add_option("--out", qasm_common.out_path, "Write output to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitFlagError;
  }

  try {
    if (*cycle) {
      cycle_run.variant = parse_variant(cycle_variant);
      cycle_run.seed = cycle_common.seed;
      cycle_run.shots = cycle_common.shots;
      if (cycle_common.format == "qasm") {
        write_output(cycle_common, sqwalk::io::emit_qasm(sqwalk::lower(
                                       sqwalk::io::cycle_circuit(cycle_run))));
      } else {
        emit_result(cycle_common, sqwalk::io::run_cycle(cycle_run));
      }
    } else if (*two) {
      two_run.mode = two_mode == "marked" ? sqwalk::InteractionSpec::Mode::Marked
                                          : sqwalk::InteractionSpec::Mode::Full;
      two_run.seed = two_common.seed;
      two_run.shots = two_common.shots;
      if (two_common.format == "qasm") {
        write_output(two_common, sqwalk::io::emit_qasm(sqwalk::lower(
                                     sqwalk::io::two_walkers_circuit(two_run))));
      } else {
        emit_result(two_common, sqwalk::io::run_two_walkers(two_run));
      }
    } else if (*torus) {
      torus_run.variant = parse_variant(torus_variant);
      torus_run.seed = torus_common.seed;
      torus_run.shots = torus_common.shots;
      if (torus_common.format == "qasm") {
        write_output(torus_common, sqwalk::io::emit_qasm(sqwalk::lower(
                                       sqwalk::io::torus_circuit(torus_run))));
      } else {
        emit_result(torus_common, sqwalk::io::run_torus(torus_run));
      }
    } else if (*search) {
      search_run.seed = search_common.seed;
      search_run.shots = search_common.shots;
      if (search_common.format == "qasm") {
        write_output(search_common, sqwalk::io::emit_qasm(sqwalk::lower(
                                        sqwalk::io::search_circuit(search_run))));
      } else {
        emit_result(search_common, sqwalk::io::run_search(search_run));
      }
    } else if (*gatecount) {
      request.variant = parse_variant(builder_variant);
      const auto report = sqwalk::io::run_gatecount(request);
      if (gatecount_common.format == "csv") {
        write_output(gatecount_common, sqwalk::io::to_csv(report));
      } else {
        write_output(gatecount_common, sqwalk::io::to_json(report));
      }
    } else if (*emitqasm) {
      request.variant = parse_variant(builder_variant);
      const auto lowered = sqwalk::lower(sqwalk::io::builder_circuit(request),
                                         {.variant = request.variant});
      write_output(qasm_common, sqwalk::io::emit_qasm(lowered));
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFlagError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternalError;
  }
  return kExitOk;
}
