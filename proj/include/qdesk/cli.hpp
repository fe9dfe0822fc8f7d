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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qdesk {

// Command bodies behind the qdesk tool. Each returns the text it would
// write; errors propagate as qdesk::Error with the process exit code.

struct RunOptions {
  std::string circuit_path;
  std::int64_t shots = 1024;
  std::uint64_t seed = 0;
  std::string format = "counts";  // counts | statevector
};

// counts: SampleSet JSON. statevector: "bitstring re im" per amplitude with
// modulus above 1e-12, q0 first.
std::string cmd_run(const RunOptions& options);

struct QaoaOptions {
  std::string problem_path;
  std::string mode = "grid";  // grid | optimize
  int p = 1;
  int beta_points = 64;
  int gamma_points = 128;
  std::string target;  // empty: first brute-force ground state
  std::vector<double> init_betas;
  std::vector<double> init_gammas;
  int max_evaluations = 2000;
  std::uint64_t seed = 0;
};

// grid: landscape CSV over beta in [0, pi), gamma in [0, 2 pi). optimize:
// {"betas", "gammas", "energy", "converged", "evaluations", "metadata"}.
std::string cmd_qaoa(const QaoaOptions& options);

struct AnnealOptions {
  std::string problem_path;
  std::string schedule = "linear";  // built-in name, or a path to an s,A,B CSV
  double t_max = 10.0;
  int steps = 1000;
  std::string propagator = "auto";  // auto | eigen | split
  std::uint64_t seed = 0;
};

// {"ground_probability", "ground_energy", "top": [8 most probable basis
// states with probability and energy], "metadata"}.
std::string cmd_anneal(const AnnealOptions& options);

struct SolveOptions {
  std::string problem_path;
  std::string method = "brute";  // brute | sa
  int reads = 100;
  int sweeps = 1000;
  std::optional<double> beta_start;
  std::optional<double> beta_end;
  std::uint64_t seed = 0;
};

// SampleSet JSON in the problem's domain (BINARY for QUBO, SPIN for Ising).
std::string cmd_solve(const SolveOptions& options);

struct EmbedOptions {
  std::string problem_path;
  std::vector<int> chimera{1, 1, 4};
  std::string hardware_path;  // edge list; overrides chimera when set
  std::uint64_t seed = 0;
  int tries = 16;
  double chain_strength = 2.0;
};

struct EmbedOutput {
  std::string embedding;         // embedding JSON
  std::string physical_problem;  // problem JSON over hardware nodes
  std::string combined;          // both plus metadata, for stdout
};

EmbedOutput cmd_embed(const EmbedOptions& options);

std::string read_text_file(const std::string& path);

}  // namespace qdesk
