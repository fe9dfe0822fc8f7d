// Copyright 2026 The qdesk Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#include "qdesk/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <numeric>
#include <sstream>

#include "qdesk/algorithms.hpp"
#include "qdesk/anneal.hpp"
#include "qdesk/embed.hpp"
#include "qdesk/errors.hpp"
#include "qdesk/io.hpp"
#include "qdesk/parser.hpp"

namespace qdesk {

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ArgumentError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Problem load_problem(const std::string& path) { return parse_problem_json(read_text_file(path)); }

}  // namespace

std::string cmd_run(const RunOptions& options) {
  if (options.format != "counts" && options.format != "statevector") {
    throw ArgumentError("run --format must be counts or statevector");
  }
  const Circuit circuit = parse_circuit(read_text_file(options.circuit_path));
  const StateVector psi = simulate(circuit);
  if (options.format == "statevector") {
    std::string out;
    for (std::size_t j = 0; j < psi.size(); ++j) {
      if (std::abs(psi[j]) <= 1e-12) continue;
      out += basis_label(j, psi.num_qubits()) + " " + fmt(psi[j].real()) + " " + fmt(psi[j].imag()) + "\n";
    }
    return out;
  }
  const SampleSet counts = sample_counts(psi, options.shots, options.seed);
  Json meta;
  meta["command"] = "run";
  meta["circuit"] = options.circuit_path;
  meta["shots"] = options.shots;
  meta["seed"] = options.seed;
  meta["rng"] = "mt19937_64";
  return dump(sample_set_to_json(counts, meta));
}

std::string cmd_qaoa(const QaoaOptions& options) {
  const IsingModel model = load_problem(options.problem_path).as_ising();
  std::string target = options.target;
  if (target.empty()) {
    const auto ground = brute_force_solve(model);
    target.clear();
    for (int s : ground.configs.front()) target.push_back(s > 0 ? '0' : '1');
  }
  if (options.mode == "grid") {
    if (options.p != 1) throw ArgumentError("grid mode scans p = 1 only");
    const Landscape l = qaoa_landscape(model, periodic_grid(std::numbers::pi, options.beta_points),
                                       periodic_grid(2 * std::numbers::pi, options.gamma_points), target);
    std::ostringstream out;
    write_landscape_csv(out, l);
    return out.str();
  }
  if (options.mode != "optimize") throw ArgumentError("qaoa --mode must be grid or optimize");
  if (options.p < 1) throw ArgumentError("p must be at least 1");
  QaoaParams init;
  init.betas = options.init_betas;
  init.gammas = options.init_gammas;
  const auto p = static_cast<std::size_t>(options.p);
  if (init.betas.empty()) init.betas.assign(p, 2.4);
  if (init.gammas.empty()) init.gammas.assign(p, 0.6);
  if (init.betas.size() != p || init.gammas.size() != p) {
    throw ArgumentError("--beta and --gamma need exactly p values each");
  }
  const QaoaResult r = qaoa_optimize(model, init, options.max_evaluations, options.seed);
  Json j;
  j["betas"] = r.params.betas;
  j["gammas"] = r.params.gammas;
  j["energy"] = r.energy;
  j["success_probability"] = success_probability(simulate(build_qaoa_circuit(model, r.params)), target);
  j["converged"] = r.converged;
  j["evaluations"] = r.evaluations;
  Json meta;
  meta["command"] = "qaoa";
  meta["problem"] = options.problem_path;
  meta["p"] = options.p;
  meta["target"] = target;
  meta["max_evaluations"] = options.max_evaluations;
  meta["seed"] = options.seed;
  j["metadata"] = meta;
  return dump(j);
}

std::string cmd_anneal(const AnnealOptions& options) {
  const IsingModel model = load_problem(options.problem_path).as_ising();
  const bool is_file = options.schedule.find('/') != std::string::npos ||
                       options.schedule.find('.') != std::string::npos;
  Schedule schedule = Schedule::linear();
  if (is_file) {
    std::istringstream in(read_text_file(options.schedule));
    schedule = read_schedule_csv(in);
  } else {
    schedule = schedule_by_name(options.schedule);
  }
  Propagator prop;
  if (options.propagator == "eigen") {
    prop = Propagator::eigen;
  } else if (options.propagator == "split") {
    prop = Propagator::split_operator;
  } else if (options.propagator == "auto") {
    prop = model.num_variables() <= kEigenPropagatorMaxQubits ? Propagator::eigen : Propagator::split_operator;
  } else {
    throw ArgumentError("--propagator must be auto, eigen or split");
  }
  const StateVector psi = evolve_closed(model, schedule, options.t_max, options.steps, prop);
  const Eigen::VectorXd diag = problem_diagonal(model);

  std::vector<std::size_t> order(psi.size());
  std::iota(order.begin(), order.end(), 0);
  const auto probs = probabilities(psi);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return probs[a] > probs[b]; });
  Json top = Json::array();
  for (std::size_t k = 0; k < std::min<std::size_t>(8, order.size()); ++k) {
    const std::size_t j = order[k];
    Json row;
    row["state"] = basis_label(j, psi.num_qubits());
    row["probability"] = probs[j];
    row["energy"] = diag(static_cast<Eigen::Index>(j));
    top.push_back(row);
  }
  Json out;
  out["ground_probability"] = ground_subspace_probability(psi, model);
  out["ground_energy"] = diag.minCoeff();
  out["top"] = top;
  Json meta;
  meta["command"] = "anneal";
  meta["problem"] = options.problem_path;
  meta["schedule"] = options.schedule;
  meta["t_max"] = options.t_max;
  meta["steps"] = options.steps;
  meta["propagator"] = prop == Propagator::eigen ? "eigen" : "split";
  meta["state_labels"] = "bit 1 = spin +1, variable 0 first";
  meta["seed"] = options.seed;
  out["metadata"] = meta;
  return dump(out);
}

std::string cmd_solve(const SolveOptions& options) {
  const Problem problem = load_problem(options.problem_path);
  const bool qubo = problem.type == Problem::Type::qubo;
  SampleSet samples;
  samples.num_variables = problem.num_variables();
  samples.domain = qubo ? ValueDomain::binary : ValueDomain::spin;
  Json meta;
  meta["command"] = "solve";
  meta["problem"] = options.problem_path;
  meta["method"] = options.method;
  if (options.method == "brute") {
    const GroundStates g = qubo ? brute_force_solve(problem.qubo) : brute_force_solve(problem.ising);
    for (const auto& c : g.configs) {
      samples.rows.push_back({qubo ? bits_string(c) : bits_of_spins(c), g.energy, 1, 0.0});
    }
  } else if (options.method == "sa") {
    const IsingModel model = problem.as_ising();
    BetaRange betas = default_beta_range(model);
    if (options.beta_start) betas.start = *options.beta_start;
    if (options.beta_end) betas.end = *options.beta_end;
    samples = simulated_annealing(model, options.reads, options.sweeps, betas, options.seed);
    // SPIN bit '1' is s = +1, which is x = 1, so the strings carry over.
    if (qubo) samples.domain = ValueDomain::binary;
    meta["reads"] = options.reads;
    meta["sweeps"] = options.sweeps;
    meta["beta_start"] = betas.start;
    meta["beta_end"] = betas.end;
    meta["rng"] = "mt19937_64";
  } else {
    throw ArgumentError("solve --method must be brute or sa");
  }
  samples.normalize();
  meta["seed"] = options.seed;
  return dump(sample_set_to_json(samples, meta));
}

EmbedOutput cmd_embed(const EmbedOptions& options) {
  const IsingModel model = load_problem(options.problem_path).as_ising();
  HardwareGraph hw;
  if (!options.hardware_path.empty()) {
    std::istringstream in(read_text_file(options.hardware_path));
    hw = read_edge_list(in);
  } else {
    if (options.chimera.size() != 3) throw ArgumentError("--chimera needs three values m n t");
    hw = chimera_graph(options.chimera[0], options.chimera[1], options.chimera[2]);
  }
  const auto edges = model.edges();
  const Embedding emb = find_embedding(edges, model.num_variables(), hw, options.seed, options.tries);
  const auto violations = validate_embedding(edges, hw, emb);
  if (!violations.empty()) throw NoSolutionError("embedding failed validation: " + violations.front().message);
  const EmbeddedModel physical = embed_model(model, emb, hw, options.chain_strength);

  EmbedOutput out;
  out.embedding = embedding_json(emb);
  out.physical_problem = problem_json(physical.physical);
  Json combined;
  combined["embedding"] = Json::parse(out.embedding);
  combined["physical_problem"] = Json::parse(out.physical_problem);
  combined["chain_offset"] = physical.chain_offset;
  Json meta;
  meta["command"] = "embed";
  meta["problem"] = options.problem_path;
  meta["hardware"] = hw.layout;
  meta["chain_strength"] = options.chain_strength;
  meta["tries"] = options.tries;
  meta["seed"] = options.seed;
  combined["metadata"] = meta;
  out.combined = dump(combined);
  return out;
}

}  // namespace qdesk
