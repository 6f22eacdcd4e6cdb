#include "sqwalk/experiments.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "sqwalk/simulator.hpp"

namespace sqwalk::io {

namespace {

using nlohmann::json;

const char* variant_name(Variant v) {
  return v == Variant::Standard ? "standard" : "alternative";
}

std::uint64_t parse_u64(const std::string& text) {
  std::size_t used = 0;
  std::uint64_t value = 0;
  try {
    value = std::stoull(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("expected an unsigned integer, got '" + text + "'");
  }
  if (used != text.size()) {
    throw std::invalid_argument("trailing characters in integer '" + text + "'");
  }
  return value;
}

/// "name:a,b" -> {name, {a, b}}; "name" -> {name, {}}.
std::pair<std::string, std::vector<std::uint64_t>> parse_initial_spec(
    const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) return {text, {}};
  std::vector<std::uint64_t> args;
  std::string rest = text.substr(colon + 1);
  std::size_t start = 0;
  while (true) {
    const auto comma = rest.find(',', start);
    args.push_back(parse_u64(rest.substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return {text.substr(0, colon), args};
}

/// Preparation circuit plus the repeated step of one experiment.
struct RunPieces {
  Circuit prep;
  Circuit step;
  int steps = 0;
};

Circuit compose(const RunPieces& pieces) {
  Circuit full = pieces.prep;
  for (int s = 0; s < pieces.steps; ++s) full.extend(pieces.step);
  return full;
}

struct Trajectory {
  std::vector<std::vector<double>> rows;
  std::optional<std::vector<std::uint64_t>> counts;
  int cnot_count = 0;
  int depth = 0;
};

Trajectory simulate(const RunPieces& pieces,
                    std::optional<std::uint64_t> shots, std::uint64_t seed,
                    Variant variant) {
  Trajectory out;
  StateVector state(pieces.prep.n_qubits());
  state.apply(pieces.prep);
  out.rows.push_back(measure_distribution(state));
  for (int s = 0; s < pieces.steps; ++s) {
    state.apply(pieces.step);
    out.rows.push_back(measure_distribution(state));
  }
  for (const auto& row : out.rows) {
    const double sum = std::accumulate(row.begin(), row.end(), 0.0);
    if (std::abs(sum - 1.0) > 1e-12) {
      throw std::runtime_error("probabilities drifted away from 1");
    }
  }
  const Circuit lowered =
      lower(compose(pieces), LoweringOptions{.variant = variant});
  out.cnot_count = lowered.cnot_count();
  out.depth = lowered.depth();
  if (shots) out.counts = sample(out.rows.back(), *shots, seed);
  return out;
}

void fill_common(ExperimentResult& result, Trajectory&& traj,
                 const std::optional<std::uint64_t>& shots,
                 std::uint64_t seed) {
  result.probabilities = std::move(traj.rows);
  result.counts = std::move(traj.counts);
  result.cnot_count = traj.cnot_count;
  result.depth = traj.depth;
  result.params.seed = seed;
  result.params.shots = shots;
}

}  // namespace

std::string to_json(const ExperimentResult& result) {
  json params = json::object();
  const ExperimentParams& p = result.params;
  if (p.n) params["n"] = *p.n;
  if (p.n_per_walker) params["n_per_walker"] = *p.n_per_walker;
  if (p.theta) params["theta"] = *p.theta;
  if (p.phi) params["phi"] = *p.phi;
  if (p.steps) params["steps"] = *p.steps;
  if (p.variant) params["variant"] = *p.variant;
  if (p.mode) params["mode"] = *p.mode;
  if (p.marked) params["marked"] = *p.marked;
  if (p.initial) params["initial"] = *p.initial;
  if (p.exact_reflection) params["exact_reflection"] = *p.exact_reflection;
  if (p.seed) params["seed"] = *p.seed;
  if (p.shots) params["shots"] = *p.shots;

  json j;
  j["experiment"] = result.experiment;
  j["params"] = params;
  j["probabilities"] = result.probabilities;
  if (result.counts) j["counts"] = *result.counts;
  j["cnot_count"] = result.cnot_count;
  j["depth"] = result.depth;
  if (result.p_success) j["p_success"] = *result.p_success;
  if (result.experiment == "torus" && result.params.n &&
      !result.probabilities.empty()) {
    const int side = 1 << (*result.params.n / 2);
    json coords = json::array();
    for (std::size_t v = 0; v < result.probabilities.back().size(); ++v) {
      coords.push_back({v / side, v % side});
    }
    j["coordinates"] = coords;
  }
  return j.dump(2);
}

ExperimentResult result_from_json(const std::string& text) {
  const json j = json::parse(text);
  ExperimentResult result;
  result.experiment = j.at("experiment").get<std::string>();
  const json& params = j.at("params");
  ExperimentParams& p = result.params;
  if (params.contains("n")) p.n = params["n"].get<int>();
  if (params.contains("n_per_walker")) p.n_per_walker = params["n_per_walker"].get<int>();
  if (params.contains("theta")) p.theta = params["theta"].get<double>();
  if (params.contains("phi")) p.phi = params["phi"].get<double>();
  if (params.contains("steps")) p.steps = params["steps"].get<int>();
  if (params.contains("variant")) p.variant = params["variant"].get<std::string>();
  if (params.contains("mode")) p.mode = params["mode"].get<std::string>();
  if (params.contains("marked")) p.marked = params["marked"].get<std::uint64_t>();
  if (params.contains("initial")) p.initial = params["initial"].get<std::string>();
  if (params.contains("exact_reflection")) p.exact_reflection = params["exact_reflection"].get<bool>();
  if (params.contains("seed")) p.seed = params["seed"].get<std::uint64_t>();
  if (params.contains("shots")) p.shots = params["shots"].get<std::uint64_t>();
  result.probabilities = j.at("probabilities").get<std::vector<std::vector<double>>>();
  if (j.contains("counts")) result.counts = j["counts"].get<std::vector<std::uint64_t>>();
  result.cnot_count = j.at("cnot_count").get<int>();
  result.depth = j.at("depth").get<int>();
  if (j.contains("p_success")) result.p_success = j["p_success"].get<double>();
  return result;
}

namespace {

std::string format_probability(double p) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", p);
  return buf;
}

}  // namespace

std::string to_csv(const ExperimentResult& result) {
  if (result.probabilities.empty()) {
    throw std::invalid_argument("result holds no distribution");
  }
  const std::vector<double>& last = result.probabilities.back();
  const bool torus = result.experiment == "torus" && result.params.n;
  const int side = torus ? 1 << (*result.params.n / 2) : 0;
  std::ostringstream out;
  out << "outcome";
  if (torus) out << ",row,col";
  out << ",probability";
  if (result.counts) out << ",count";
  out << '\n';
  for (std::size_t v = 0; v < last.size(); ++v) {
    out << v;
    if (torus) out << ',' << v / side << ',' << v % side;
    out << ',' << format_probability(last[v]);
    if (result.counts) out << ',' << (*result.counts)[v];
    out << '\n';
  }
  return out.str();
}

namespace {

RunPieces cycle_pieces(const CycleRun& run) {
  if (run.n < 2) throw std::invalid_argument("cycle walk needs n >= 2");
  if (run.steps < 0) throw std::invalid_argument("steps must be >= 0");
  const auto [kind, args] = parse_initial_spec(run.initial);
  Circuit prep(run.n);
  if (kind == "basis" && args.size() == 1) {
    prep = prep_basis(run.n, args[0]);
  } else if (kind == "pair" && args.size() == 2) {
    prep = prep_pair(run.n, args[0], args[1]);
  } else if (kind == "uniform" && args.empty()) {
    prep = prep_uniform(run.n);
  } else {
    throw std::invalid_argument(
        "cycle initial must be basis:<k>, pair:<a>,<b> or uniform");
  }
  const WalkSpec spec{Graph::Cycle, run.n, run.theta, run.variant, 1};
  return {std::move(prep), cycle_step(spec), run.steps};
}

}  // namespace

Circuit cycle_circuit(const CycleRun& run) { return compose(cycle_pieces(run)); }

ExperimentResult run_cycle(const CycleRun& run) {
  ExperimentResult result;
  result.experiment = "cycle";
  fill_common(result, simulate(cycle_pieces(run), run.shots, run.seed, run.variant),
              run.shots, run.seed);
  result.params.n = run.n;
  result.params.theta = run.theta;
  result.params.steps = run.steps;
  result.params.variant = variant_name(run.variant);
  result.params.initial = run.initial;
  return result;
}

namespace {

RunPieces two_walkers_pieces(const TwoWalkerRun& run) {
  if (run.n_per_walker < 2) {
    throw std::invalid_argument("two-walker run needs n_per_walker >= 2");
  }
  if (run.steps < 0) throw std::invalid_argument("steps must be >= 0");
  const auto [kind, args] = parse_initial_spec(run.initial);
  if (kind != "pairpos" || args.size() != 2) {
    throw std::invalid_argument("two-walker initial must be pairpos:<x1>,<x2>");
  }
  const std::uint64_t space = 1ull << run.n_per_walker;
  if (args[0] >= space || args[1] >= space) {
    throw std::invalid_argument("walker position outside the cycle");
  }
  InteractionSpec interaction;
  interaction.mode = run.mode;
  interaction.phi = run.phi;
  interaction.marked = run.marked;
  return {prep_basis(2 * run.n_per_walker, args[0] * space + args[1]),
          two_walker_step(run.n_per_walker, run.theta, interaction),
          run.steps};
}

}  // namespace

Circuit two_walkers_circuit(const TwoWalkerRun& run) {
  return compose(two_walkers_pieces(run));
}

ExperimentResult run_two_walkers(const TwoWalkerRun& run) {
  ExperimentResult result;
  result.experiment = "two-walkers";
  fill_common(result,
              simulate(two_walkers_pieces(run), run.shots, run.seed,
                       Variant::Standard),
              run.shots, run.seed);
  result.params.n_per_walker = run.n_per_walker;
  result.params.theta = run.theta;
  result.params.phi = run.phi;
  result.params.mode =
      run.mode == InteractionSpec::Mode::Full ? "full" : "marked";
  if (run.mode == InteractionSpec::Mode::Marked) {
    result.params.marked = run.marked;
  }
  result.params.steps = run.steps;
  result.params.initial = run.initial;
  return result;
}

namespace {

RunPieces torus_pieces(const TorusRun& run) {
  if (run.n < 2 || run.n % 2 != 0) {
    throw std::invalid_argument("torus walk needs an even qubit count");
  }
  if (run.steps < 0) throw std::invalid_argument("steps must be >= 0");
  const auto [kind, args] = parse_initial_spec(run.initial);
  Circuit prep(run.n);
  if (kind == "basis" && args.size() == 1) {
    prep = prep_basis(run.n, args[0]);
  } else if (kind == "even-superposition" && args.empty()) {
    prep = prep_even_superposition(run.n);
  } else {
    throw std::invalid_argument(
        "torus initial must be basis:<k> or even-superposition");
  }
  const WalkSpec spec{Graph::Torus, run.n, run.theta, run.variant, 1};
  return {std::move(prep), torus_step(spec), run.steps};
}

}  // namespace

Circuit torus_circuit(const TorusRun& run) { return compose(torus_pieces(run)); }

ExperimentResult run_torus(const TorusRun& run) {
  ExperimentResult result;
  result.experiment = "torus";
  fill_common(result, simulate(torus_pieces(run), run.shots, run.seed, run.variant),
              run.shots, run.seed);
  result.params.n = run.n;
  result.params.theta = run.theta;
  result.params.steps = run.steps;
  result.params.variant = variant_name(run.variant);
  result.params.initial = run.initial;
  return result;
}

namespace {

RunPieces search_pieces(const SearchRun& run) {
  if (run.n < 1) throw std::invalid_argument("search needs n >= 1");
  const int steps = run.steps ? *run.steps : optimal_steps(1ull << run.n);
  if (steps < 0) throw std::invalid_argument("steps must be >= 0");
  return {prep_uniform(run.n), search_iteration(run.n, run.exact_reflection),
          steps};
}

}  // namespace

Circuit search_circuit(const SearchRun& run) {
  return compose(search_pieces(run));
}

ExperimentResult run_search(const SearchRun& run) {
  const RunPieces pieces = search_pieces(run);
  ExperimentResult result;
  result.experiment = "search";
  fill_common(result, simulate(pieces, run.shots, run.seed, Variant::Standard),
              run.shots, run.seed);
  result.params.n = run.n;
  result.params.steps = pieces.steps;
  result.params.exact_reflection = run.exact_reflection;
  result.p_success = result.probabilities.back().front();
  return result;
}

Circuit builder_circuit(const BuilderRequest& request) {
  const std::string& b = request.builder;
  const int n = request.n;
  if (b == "perm") return increment_perm(n);
  if (b == "alt-perm") return alt_increment(n);
  if (b == "mcz" || b == "mcrz") {
    if (n < 2) throw std::invalid_argument(b + " builder needs n >= 2");
    Circuit circuit(n);
    std::vector<int> controls;
    for (int q = 0; q + 1 < n; ++q) controls.push_back(q);
    if (b == "mcz") {
      circuit.append(mcz(controls, n - 1));
    } else {
      circuit.append(
          mcrz(request.theta.value_or(std::numbers::pi), controls, n - 1));
    }
    return circuit;
  }
  if (b == "search-step") {
    return search_iteration(n, request.exact_reflection);
  }
  if (b == "cycle-step") {
    return cycle_step({Graph::Cycle, n, request.theta.value_or(kDefaultTheta),
                       request.variant, 1});
  }
  if (b == "torus-step") {
    return torus_step({Graph::Torus, n, request.theta.value_or(kDefaultTheta),
                       request.variant, 1});
  }
  throw std::invalid_argument("unknown builder: " + b);
}

GateCountReport run_gatecount(const BuilderRequest& request) {
  const Circuit lowered =
      lower(builder_circuit(request), LoweringOptions{.variant = request.variant});
  GateCountReport report;
  report.builder = request.builder;
  report.n = request.n;
  report.cnot_count = lowered.cnot_count();
  report.depth = lowered.depth();
  report.gate_count = lowered.size();
  return report;
}

std::string to_json(const GateCountReport& report) {
  json j;
  j["builder"] = report.builder;
  j["n"] = report.n;
  j["cnot_count"] = report.cnot_count;
  j["depth"] = report.depth;
  j["gate_count"] = report.gate_count;
  return j.dump(2);
}

std::string to_csv(const GateCountReport& report) {
  std::ostringstream out;
  out << "builder,n,cnot_count,depth,gate_count\n";
  out << report.builder << ',' << report.n << ',' << report.cnot_count << ','
      << report.depth << ',' << report.gate_count << '\n';
  return out.str();
}

}  // namespace sqwalk::io
