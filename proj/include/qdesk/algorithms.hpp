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
#include <iosfwd>
#include <string>
#include <vector>

#include "qdesk/circuit.hpp"
#include "qdesk/ising.hpp"

namespace qdesk {

// QFT on `qubits` (qubits[0] most significant) of an existing circuit:
// |j> -> 2^{-N/2} sum_k exp(2 pi i j k / 2^N) |k>. Without swaps the output
// register comes out bit-reversed.
void append_qft(Circuit& circuit, const std::vector<int>& qubits, bool include_swaps);
void append_inverse_qft(Circuit& circuit, const std::vector<int>& qubits, bool include_swaps);

// Stand-alone QFT over qubits 0..N-1.
Circuit build_qft(int num_qubits, bool include_swaps);

inline constexpr int kAdderMaxBits = 6;

// |l>|j> -> |l>|(j + l) mod 2^m> on 2m qubits: register l is qubits 0..m-1,
// register j is qubits m..2m-1. Built from a swap-free QFT on j, controlled
// U(k) phases from l, and the inverse QFT.
Circuit build_draper_adder(int m);

struct QaoaParams {
  std::vector<double> betas;
  std::vector<double> gammas;

  int p() const { return static_cast<int>(betas.size()); }
};

// H on every qubit, then per layer k: Rz(2 gamma_k h_i), CNOT-Rz(2 gamma_k
// J_ij)-CNOT for each coupling, Rx(2 beta_k). Zero coefficients emit no
// gates. Qubit i carries variable i with q = (1 - s) / 2.
Circuit build_qaoa_circuit(const IsingModel& model, const QaoaParams& params);

double qaoa_energy(const IsingModel& model, const QaoaParams& params);

// |<target|psi>|^2 for a bitstring in q0...q(n-1) order.
double success_probability(const StateVector& state, const std::string& target);

// k * period / count for k = 0..count-1.
std::vector<double> periodic_grid(double period, int count);

struct Landscape {
  std::vector<double> beta_grid;
  std::vector<double> gamma_grid;
  std::vector<double> energy;               // row-major, beta outer
  std::vector<double> success_probability;  // same layout

  double energy_at(std::size_t bi, std::size_t gi) const { return energy[bi * gamma_grid.size() + gi]; }
  double success_at(std::size_t bi, std::size_t gi) const {
    return success_probability[bi * gamma_grid.size() + gi];
  }
};

Landscape qaoa_landscape(const IsingModel& model, const std::vector<double>& beta_grid,
                         const std::vector<double>& gamma_grid, const std::string& target);

struct GridPoint {
  double beta = 0.0;
  double gamma = 0.0;
  double value = 0.0;
};

// All grid points within `tol` of the extremum. The p = 1 landscape is
// symmetric under (beta, gamma) -> (pi - beta, 2 pi - gamma), so extrema on
// a symmetric grid come in pairs.
std::vector<GridPoint> energy_minima(const Landscape& landscape, double tol = 1e-12);
std::vector<GridPoint> success_maxima(const Landscape& landscape, double tol = 1e-12);

// Header "beta,gamma,energy,success_probability", row-major over the grid.
void write_landscape_csv(std::ostream& out, const Landscape& landscape);

struct QaoaResult {
  QaoaParams params;
  double energy = 0.0;
  int evaluations = 0;
  bool converged = false;
};

// Nelder-Mead on the exact state-vector energy over (beta_1..p, gamma_1..p).
QaoaResult qaoa_optimize(const IsingModel& model, const QaoaParams& init, int max_evaluations,
                         std::uint64_t seed);

// Angles from a discretized linear anneal with step dt: s_k = (k - 1/2) / p,
// gamma_k = s_k dt, beta_k = -(1 - s_k) dt. The minus sign matches the
// transverse-field sign of the annealing Hamiltonian.
QaoaParams annealing_warm_start(int p, double dt);

}  // namespace qdesk
