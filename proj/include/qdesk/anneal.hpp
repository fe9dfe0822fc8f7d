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

#include <Eigen/Dense>

#include "qdesk/ising.hpp"
#include "qdesk/sample_set.hpp"
#include "qdesk/state.hpp"

namespace qdesk {

// Basis convention for annealing states: qubit i is variable i, q0 most
// significant as everywhere else, and bit q_i = 1 means s_i = +1. Basis
// labels therefore read directly as QUBO bits.

struct SchedulePoint {
  double s = 0.0;
  double A = 0.0;
  double B = 0.0;
};

// H(s) = A(s) H_init + B(s) H_final with A, B piecewise linear in s. Values
// are energies with hbar = 1; no unit conversion is done.
class Schedule {
 public:
  explicit Schedule(std::vector<SchedulePoint> points);

  // A = 1 - s, B = s.
  static Schedule linear();

  const std::vector<SchedulePoint>& points() const noexcept { return points_; }
  double A(double s) const;
  double B(double s) const;
  // Slopes of the segment containing s (the right-hand segment at interior
  // breakpoints).
  double dA(double s) const;
  double dB(double s) const;

 private:
  std::size_t segment(double s) const;
  std::vector<SchedulePoint> points_;
};

// Built-in schedules by name; currently only "linear".
std::vector<std::string> builtin_schedules();
Schedule schedule_by_name(const std::string& name);

// CSV with header "s,A,B".
Schedule read_schedule_csv(std::istream& in);
void write_schedule_csv(std::ostream& out, const Schedule& schedule);

inline constexpr int kAnnealMaxQubits = 14;
inline constexpr int kSpectrumMaxQubits = 12;

// Energy of every basis state, indexed as the state vector.
Eigen::VectorXd problem_diagonal(const IsingModel& model);

// A(s) (-sum_i sigma^x_i) + B(s) (sum h_i sigma^z_i + sum J_ij sigma^z_i sigma^z_j).
Eigen::MatrixXd hamiltonian_at(const IsingModel& model, const Schedule& schedule, double s);

enum class Propagator {
  // exp(-i H dt) from a dense eigendecomposition of H at each step midpoint.
  eigen,
  // Symmetric split exp(-i B Hz dt/2) exp(-i A Hx dt) exp(-i B Hz dt/2),
  // O(N 2^N) per step.
  split_operator,
};

inline constexpr int kEigenPropagatorMaxQubits = 10;

// Starts in the ground state of H(0) and steps |psi> <- U_k |psi> with
// piecewise-constant H(s_k), s_k at step midpoints, dt = t_max / steps.
StateVector evolve_closed(const IsingModel& model, const Schedule& schedule, double t_max, int steps,
                          Propagator propagator = Propagator::eigen);

// Total probability on the classical ground configurations.
double ground_subspace_probability(const StateVector& state, const IsingModel& model);

struct SpectrumSample {
  double s = 0.0;
  std::vector<double> eigenvalues;  // lowest levels, ascending
  double gap = 0.0;
};

struct MinGap {
  double s = 0.0;
  double gap = 0.0;
  std::vector<SpectrumSample> samples;
};

// Dense eigensolve per grid point. When E1 - E0 < 1e-12 the gap is taken to
// the first level above the degenerate ground subspace.
MinGap min_gap(const IsingModel& model, const Schedule& schedule, const std::vector<double>& s_grid,
               int levels = 8);

struct AdiabaticEstimate {
  double value = 0.0;  // +inf when the gap closes on the grid
  double s = 0.0;      // grid point attaining the max
  bool finite = true;
};

// max over grid and excited levels n <= levels of
// |<E_n| dH/ds |E_0>| / (E_n - E_0)^2, with dH/ds = A' H_init + B' H_final.
// Levels degenerate with E_0 within 1e-12 count as ground; couplings at
// round-off level (symmetry-forbidden) are skipped.
AdiabaticEstimate adiabatic_time_estimate(const IsingModel& model, const Schedule& schedule,
                                          const std::vector<double>& s_grid, int levels = 8);

struct LandauZenerParams {
  double h_x = 1.0;
  double v = 1.0;
  double t_span = 20.0;
};

struct LandauZenerResult {
  double p_up = 0.0;
  double p_down = 0.0;
  // t_span >= 20 max(1, h_x) / sqrt(v)
  bool span_sufficient = true;
};

double landau_zener_min_span(double h_x, double v);

// Two-level sweep H(t) = -h_x sigma^x - v t sigma^z over [-t_span, t_span].
// The state starts in the lower level at -t_span (|down> up to
// O(h_x / (v t_span))) and populations are read in the instantaneous
// eigenbasis at +t_span: p_down is the upper level, which tends to |down>.
// Fourth-order Magnus stepping.
LandauZenerResult landau_zener_probability(const LandauZenerParams& params, int steps = 20000);

struct BetaRange {
  double start = 0.1;
  double end = 10.0;
};

// Hot end flips the stiffest spin with probability 1/2, cold end accepts the
// weakest uphill move with probability 1/1000.
BetaRange default_beta_range(const IsingModel& model);

// Single-spin Metropolis, random initial spins, random permutation order per
// sweep, beta interpolated geometrically from start to end. Rows are in the
// SPIN domain ('1' = +1) with energies, merged and sorted.
SampleSet simulated_annealing(const IsingModel& model, int reads, int sweeps, BetaRange betas, std::uint64_t seed);

}  // namespace qdesk
