#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sqwalk/circuit.hpp"
#include "sqwalk/synthesis.hpp"
#include "sqwalk/walks.hpp"

namespace sqwalk::io {

/// Flat echo of the inputs of a run; only the fields relevant to the
/// experiment are set.
struct ExperimentParams {
  std::optional<int> n;
  std::optional<int> n_per_walker;
  std::optional<double> theta;
  std::optional<double> phi;
  std::optional<int> steps;
  std::optional<std::string> variant;  // "standard" | "alternative"
  std::optional<std::string> mode;     // "full" | "marked"
  std::optional<std::uint64_t> marked;
  std::optional<std::string> initial;
  std::optional<bool> exact_reflection;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> shots;

  bool operator==(const ExperimentParams&) const = default;
};

/// Result of one experiment run. probabilities[0] is the distribution after
/// state preparation, probabilities[k] the one after k walk steps; every row
/// sums to 1 within 1e-12. counts, when sampling was requested, are drawn
/// from the final row. cnot_count and depth describe the lowered full
/// circuit (preparation plus all steps).
struct ExperimentResult {
  std::string experiment;
  ExperimentParams params;
  std::vector<std::vector<double>> probabilities;
  std::optional<std::vector<std::uint64_t>> counts;
  int cnot_count = 0;
  int depth = 0;
  std::optional<double> p_success;  // search only: final P(outcome 0)

  bool operator==(const ExperimentResult&) const = default;
};

std::string to_json(const ExperimentResult& result);
ExperimentResult result_from_json(const std::string& text);

/// Final distribution as outcome,probability[,count] rows; torus results get
/// additional row,col columns (label div sqrt(N), label mod sqrt(N)).
std::string to_csv(const ExperimentResult& result);

// ---------------------------------------------------------------------------
// Runners. Each maps one CLI subcommand; all are deterministic given seed.
// ---------------------------------------------------------------------------

struct CycleRun {
  int n = 4;
  double theta = kDefaultTheta;
  int steps = 1;
  Variant variant = Variant::Standard;
  std::string initial = "basis:0";  // basis:<k> | pair:<a>,<b> | uniform
  std::optional<std::uint64_t> shots;
  std::uint64_t seed = 0;
};
ExperimentResult run_cycle(const CycleRun& run);

struct TwoWalkerRun {
  int n_per_walker = 2;
  double theta = kDefaultTheta;
  double phi = kDefaultPhi;
  InteractionSpec::Mode mode = InteractionSpec::Mode::Full;
  std::uint64_t marked = 0;
  int steps = 1;
  std::string initial = "pairpos:0,0";  // pairpos:<x1>,<x2>
  std::optional<std::uint64_t> shots;
  std::uint64_t seed = 0;
};
ExperimentResult run_two_walkers(const TwoWalkerRun& run);

struct TorusRun {
  int n = 4;  // even
  double theta = kDefaultTheta;
  int steps = 1;
  Variant variant = Variant::Standard;
  std::string initial = "even-superposition";  // basis:<k> | even-superposition
  std::optional<std::uint64_t> shots;
  std::uint64_t seed = 0;
};
ExperimentResult run_torus(const TorusRun& run);

struct SearchRun {
  int n = 4;
  std::optional<int> steps;  // default optimal_steps(2^n)
  bool exact_reflection = true;
  std::optional<std::uint64_t> shots;
  std::uint64_t seed = 0;
};
ExperimentResult run_search(const SearchRun& run);

/// Preparation plus all steps of the corresponding run, not yet lowered.
Circuit cycle_circuit(const CycleRun& run);
Circuit two_walkers_circuit(const TwoWalkerRun& run);
Circuit torus_circuit(const TorusRun& run);
Circuit search_circuit(const SearchRun& run);

// ---------------------------------------------------------------------------
// Gate-count reports and QASM emission for the named builders.
// ---------------------------------------------------------------------------

/// perm | alt-perm | mcz | mcrz | search-step | cycle-step | torus-step
struct BuilderRequest {
  std::string builder = "perm";
  int n = 4;
  std::optional<double> theta;  // cycle/torus steps and mcrz angle
  Variant variant = Variant::Standard;
  bool exact_reflection = true;
};

/// The requested circuit, not yet lowered.
Circuit builder_circuit(const BuilderRequest& request);

struct GateCountReport {
  std::string builder;
  int n = 0;
  int cnot_count = 0;
  int depth = 0;
  std::uint64_t gate_count = 0;  // lowered total

  bool operator==(const GateCountReport&) const = default;
};

GateCountReport run_gatecount(const BuilderRequest& request);

std::string to_json(const GateCountReport& report);
std::string to_csv(const GateCountReport& report);

}  // namespace sqwalk::io
