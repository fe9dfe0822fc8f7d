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

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "qdesk/cli.hpp"
#include "qdesk/errors.hpp"

namespace {

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw qdesk::ArgumentError("cannot write '" + path + "'");
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qdesk: state-vector circuits, QAOA, and annealing on the desk"};
  app.require_subcommand(1);
  std::string output;

  qdesk::RunOptions run;
  auto* run_cmd = app.add_subcommand("run", "simulate a .jq circuit");
  run_cmd->add_option("circuit", run.circuit_path, "circuit file")->required();
  run_cmd->add_option("--shots", run.shots, "measurement shots")->check(CLI::PositiveNumber);
  run_cmd->add_option("--seed", run.seed, "sampling seed");
  run_cmd->add_option("--format", run.format, "counts or statevector")
      ->check(CLI::IsMember({"counts", "statevector"}));
  run_cmd->add_option("--output,-o", output, "output file (default stdout)");

  qdesk::QaoaOptions qaoa;
  auto* qaoa_cmd = app.add_subcommand("qaoa", "QAOA landscape scan or optimization");
  qaoa_cmd->add_option("problem", qaoa.problem_path, "problem JSON")->required();
  qaoa_cmd->add_option("--mode", qaoa.mode, "grid or optimize")->check(CLI::IsMember({"grid", "optimize"}));
  qaoa_cmd->add_option("--p", qaoa.p, "QAOA order");
  qaoa_cmd->add_option("--beta-points", qaoa.beta_points, "grid points over beta in [0, pi)");
  qaoa_cmd->add_option("--gamma-points", qaoa.gamma_points, "grid points over gamma in [0, 2 pi)");
  qaoa_cmd->add_option("--target", qaoa.target, "solution bitstring q0..q(n-1)");
  qaoa_cmd->add_option("--beta", qaoa.init_betas, "initial betas (optimize)");
  qaoa_cmd->add_option("--gamma", qaoa.init_gammas, "initial gammas (optimize)");
  qaoa_cmd->add_option("--max-evals", qaoa.max_evaluations, "evaluation cap (optimize)");
  qaoa_cmd->add_option("--seed", qaoa.seed, "simplex seed");
  qaoa_cmd->add_option("--format", "csv for grid, json for optimize (informational)");
  qaoa_cmd->add_option("--output,-o", output, "output file (default stdout)");

  qdesk::AnnealOptions anneal;
  auto* anneal_cmd = app.add_subcommand("anneal", "closed-system annealing evolution");
  anneal_cmd->add_option("problem", anneal.problem_path, "problem JSON")->required();
  anneal_cmd->add_option("--schedule", anneal.schedule, "built-in name or s,A,B CSV file");
  anneal_cmd->add_option("--t-max", anneal.t_max, "total anneal time (hbar = 1)");
  anneal_cmd->add_option("--steps", anneal.steps, "time steps");
  anneal_cmd->add_option("--propagator", anneal.propagator, "auto, eigen or split");
  anneal_cmd->add_option("--seed", anneal.seed, "recorded in metadata");
  anneal_cmd->add_option("--format", "json (informational)");
  anneal_cmd->add_option("--output,-o", output, "output file (default stdout)");

  qdesk::SolveOptions solve;
  auto* solve_cmd = app.add_subcommand("solve", "brute force or simulated annealing");
  solve_cmd->add_option("problem", solve.problem_path, "problem JSON")->required();
  solve_cmd->add_option("--method", solve.method, "brute or sa")->check(CLI::IsMember({"brute", "sa"}));
  solve_cmd->add_option("--reads", solve.reads, "SA reads");
  solve_cmd->add_option("--sweeps", solve.sweeps, "SA sweeps per read");
  solve_cmd->add_option("--beta-start", solve.beta_start, "SA hot inverse temperature");
  solve_cmd->add_option("--beta-end", solve.beta_end, "SA cold inverse temperature");
  solve_cmd->add_option("--seed", solve.seed, "SA seed");
  solve_cmd->add_option("--format", "json (informational)");
  solve_cmd->add_option("--output,-o", output, "output file (default stdout)");

  qdesk::EmbedOptions embed;
  std::string physical_output;
  auto* embed_cmd = app.add_subcommand("embed", "embed a problem onto a Chimera or edge-list graph");
  embed_cmd->add_option("problem", embed.problem_path, "problem JSON")->required();
  embed_cmd->add_option("--chimera", embed.chimera, "m n t")->expected(3);
  embed_cmd->add_option("--hardware", embed.hardware_path, "edge-list file, one 'u v' per line");
  embed_cmd->add_option("--seed", embed.seed, "search seed");
  embed_cmd->add_option("--tries", embed.tries, "restarts");
  embed_cmd->add_option("--chain-strength", embed.chain_strength, "ferromagnetic chain coupling magnitude");
  embed_cmd->add_option("--format", "json (informational)");
  embed_cmd->add_option("--output,-o", output, "embedding JSON file (default: combined JSON on stdout)");
  embed_cmd->add_option("--physical-output", physical_output, "physical problem JSON file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : static_cast<int>(qdesk::ExitCode::usage);
  }

  try {
    if (*run_cmd) {
      write_output(output, qdesk::cmd_run(run));
    } else if (*qaoa_cmd) {
      write_output(output, qdesk::cmd_qaoa(qaoa));
    } else if (*anneal_cmd) {
      write_output(output, qdesk::cmd_anneal(anneal));
    } else if (*solve_cmd) {
      write_output(output, qdesk::cmd_solve(solve));
    } else if (*embed_cmd) {
      const auto out = qdesk::cmd_embed(embed);
      if (output.empty() && physical_output.empty()) {
        write_output("", out.combined);
      } else {
        if (!output.empty()) write_output(output, out.embedding);
        if (!physical_output.empty()) write_output(physical_output, out.physical_problem);
      }
    }
  } catch (const qdesk::Error& e) {
    std::cerr << "qdesk: " << e.what() << '\n';
    return static_cast<int>(e.code());
  } catch (const std::exception& e) {
    std::cerr << "qdesk: " << e.what() << '\n';
    return static_cast<int>(qdesk::ExitCode::failure);
  }
  return 0;
}
