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
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace qdesk {

// Spin conventions. Two different maps between bits and spins are in use
// and nothing converts between them implicitly:
//
//   context                         bit -> spin        used by
//   ------------------------------  -----------------  ---------------------------
//   annealing / QUBO <-> Ising      x = (1 + s) / 2    qubo_to_ising, SampleSet rows
//                                                      of SPIN domain, simulated
//                                                      annealing, anneal module
//   gate-based measurement          q = (1 - s) / 2    ising_expectation, QAOA
//
// So a QUBO bit x = 1 is spin +1, while a measured qubit q = 1 is spin -1.

using Edge = std::pair<int, int>;

// E(s) = sum_i h_i s_i + sum_{i<j} J_ij s_i s_j + offset, s_i in {-1, +1}.
class IsingModel {
 public:
  IsingModel() = default;
  explicit IsingModel(int num_variables, double offset = 0.0);

  int num_variables() const noexcept { return num_variables_; }
  const std::map<int, double>& h() const noexcept { return h_; }
  const std::map<Edge, double>& J() const noexcept { return J_; }
  double offset() const noexcept { return offset_; }

  double h(int i) const;
  double J(int i, int j) const;

  // Accumulate into a coefficient; (i, j) may be given in either order.
  void add_h(int i, double value);
  void add_J(int i, int j, double value);
  void set_h(int i, double value);
  void set_J(int i, int j, double value);
  void set_offset(double value) { offset_ = value; }
  void add_offset(double value) { offset_ += value; }

  // Drops coefficients that are exactly zero.
  void prune();

  // Edges with a nonzero coupling.
  std::vector<Edge> edges() const;

 private:
  void check_index(int i) const;

  int num_variables_ = 0;
  std::map<int, double> h_;
  std::map<Edge, double> J_;
  double offset_ = 0.0;
};

// C(x) = sum_{i<=j} Q_ij x_i x_j + offset, x_i in {0, 1}. Diagonal entries
// are the linear terms.
class QuboModel {
 public:
  QuboModel() = default;
  explicit QuboModel(int num_variables, double offset = 0.0);

  int num_variables() const noexcept { return num_variables_; }
  const std::map<Edge, double>& Q() const noexcept { return Q_; }
  double offset() const noexcept { return offset_; }
  double Q(int i, int j) const;

  void add_Q(int i, int j, double value);
  void set_Q(int i, int j, double value);
  void set_offset(double value) { offset_ = value; }
  void add_offset(double value) { offset_ += value; }
  void prune();

 private:
  void check_index(int i) const;

  int num_variables_ = 0;
  std::map<Edge, double> Q_;
  double offset_ = 0.0;
};

bool operator==(const IsingModel& a, const IsingModel& b);
bool operator==(const QuboModel& a, const QuboModel& b);

double energy(const IsingModel& model, std::span<const int> spins);
double energy(const QuboModel& model, std::span<const int> bits);

// Energy-exact conversions under x = (1 + s) / 2; offsets carry the constants.
IsingModel qubo_to_ising(const QuboModel& q);
QuboModel ising_to_qubo(const IsingModel& m);

// Spin configuration of the i-th basis index in annealing convention:
// bit i of `index` (variable 0 least significant) set means s_i = +1.
std::vector<int> spins_from_index(std::uint64_t index, int num_variables);

struct GroundStates {
  double energy = 0.0;
  std::vector<std::vector<int>> configs;  // each in the model's own domain
  int degeneracy() const { return static_cast<int>(configs.size()); }
};

inline constexpr int kBruteForceMaxVariables = 24;

// Exhaustive minimum over all 2^N configurations; every configuration within
// 1e-9 * max(1, |E_min|) of the minimum is reported. Configs are returned in
// ascending enumeration order (variable 0 least significant).
GroundStates brute_force_solve(const IsingModel& model, int max_vars = kBruteForceMaxVariables);
GroundStates brute_force_solve(const QuboModel& model, int max_vars = kBruteForceMaxVariables);

// All 2^N energies indexed as in spins_from_index; capped like brute force.
std::vector<double> energy_table(const IsingModel& model, int max_vars = kBruteForceMaxVariables);

struct Range {
  double min = 0.0;
  double max = 0.0;
};

struct Rescaled {
  IsingModel model;
  double factor = 1.0;
};

// Rescale factor r for hardware coefficient ranges; coefficients are divided
// by r only when r > 1. The offset is left untouched.
Rescaled rescale(const IsingModel& model, Range h_range, Range j_range);

// Adds lambda * (sum_i a_i x_i - c)^2 expanded with x_i^2 = x_i.
QuboModel add_equality_penalty(const QuboModel& q, const std::map<int, double>& coeffs, double c, double lambda);

enum class Relation { good, neutral, bad };

// J = -1 for good neighbours, +1 for bad, nothing for neutral. A prior
// placement of plant i in pot p (+1 or -1) with replant cost c adds
// h_i = -c * p, so leaving the plant where it is lowers the energy.
IsingModel build_garden_model(int num_plants, const std::map<Edge, Relation>& relations,
                              const std::map<int, int>& prior_placements = {}, double replant_cost = 0.0);

// Companion-planting table with leek = 0, celery = 1, peas = 2, corn = 3.
std::map<Edge, Relation> garden_relations();

// Renames variable i to mapping[i] in a model of `num_variables` variables.
IsingModel relabel(const IsingModel& model, const std::vector<int>& mapping, int num_variables);

}  // namespace qdesk
