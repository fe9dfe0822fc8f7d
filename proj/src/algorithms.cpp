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

#include "qdesk/algorithms.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>

#include "qdesk/errors.hpp"
#include "qdesk/optimize.hpp"

namespace qdesk {

namespace {

void check_register(const Circuit& circuit, const std::vector<int>& qubits) {
  if (qubits.empty()) throw ArgumentError("QFT needs at least one qubit");
  for (std::size_t a = 0; a < qubits.size(); ++a) {
    if (qubits[a] < 0 || qubits[a] >= circuit.num_qubits()) {
      throw IndexError("qubit index " + std::to_string(qubits[a]) + " out of range");
    }
    for (std::size_t b = a + 1; b < qubits.size(); ++b) {
      if (qubits[a] == qubits[b]) throw IndexError("duplicate qubit index " + std::to_string(qubits[a]));
    }
  }
}

void append_swaps(Circuit& circuit, const std::vector<int>& qubits) {
  for (std::size_t i = 0; i < qubits.size() / 2; ++i) circuit.swap(qubits[i], qubits[qubits.size() - 1 - i]);
}

}  // namespace

void append_qft(Circuit& circuit, const std::vector<int>& qubits, bool include_swaps) {
  check_register(circuit, qubits);
  const int n = static_cast<int>(qubits.size());
  for (int i = 0; i < n; ++i) {
    circuit.h(qubits[i]);
    for (int m = i + 1; m < n; ++m) circuit.cu(qubits[m], qubits[i], m - i + 1);
  }
  if (include_swaps) append_swaps(circuit, qubits);
}

void append_inverse_qft(Circuit& circuit, const std::vector<int>& qubits, bool include_swaps) {
  check_register(circuit, qubits);
  const int n = static_cast<int>(qubits.size());
  if (include_swaps) append_swaps(circuit, qubits);
  for (int i = n - 1; i >= 0; --i) {
    for (int m = n - 1; m > i; --m) circuit.cu(qubits[m], qubits[i], m - i + 1, true);
    circuit.h(qubits[i]);
  }
}

Circuit build_qft(int num_qubits, bool include_swaps) {
  Circuit c(num_qubits);
  std::vector<int> qubits(static_cast<std::size_t>(num_qubits));
  for (int i = 0; i < num_qubits; ++i) qubits[static_cast<std::size_t>(i)] = i;
  append_qft(c, qubits, include_swaps);
  return c;
}

Circuit build_draper_adder(int m) {
  if (m < 1 || m > kAdderMaxBits) {
    throw ArgumentError("adder register size must be in 1.." + std::to_string(kAdderMaxBits));
  }
  Circuit c(2 * m);
  std::vector<int> b(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) b[static_cast<std::size_t>(i)] = m + i;
  append_qft(c, b, false);
  c.barrier();
  // After the swap-free QFT, qubit b_i carries phase 2 pi j / 2^(m-i); bit r
  // of l (weight 2^(m-1-r)) adds 2 pi / 2^(r-i+1) there when r >= i.
  for (int i = 0; i < m; ++i) {
    for (int r = i; r < m; ++r) c.cu(r, m + i, r - i + 1);
  }
  c.barrier();
  append_inverse_qft(c, b, false);
  return c;
}

Circuit build_qaoa_circuit(const IsingModel& model, const QaoaParams& params) {
  const int n = model.num_variables();
  if (n < 1) throw ArgumentError("QAOA needs at least one variable");
  if (params.betas.size() != params.gammas.size() || params.betas.empty()) {
    throw ArgumentError("QAOA needs p >= 1 with as many betas as gammas");
  }
  Circuit c(n);
  for (int q = 0; q < n; ++q) c.h(q);
  for (int k = 0; k < params.p(); ++k) {
    const double gamma = params.gammas[static_cast<std::size_t>(k)];
    const double beta = params.betas[static_cast<std::size_t>(k)];
    for (const auto& [i, v] : model.h()) {
      if (v != 0.0) c.rz(2 * gamma * v, i);
    }
    for (const auto& [ij, v] : model.J()) {
      if (v == 0.0) continue;
      c.cnot(ij.first, ij.second);
      c.rz(2 * gamma * v, ij.second);
      c.cnot(ij.first, ij.second);
    }
    for (int q = 0; q < n; ++q) c.rx(2 * beta, q);
  }
  return c;
}

double qaoa_energy(const IsingModel& model, const QaoaParams& params) {
  return ising_expectation(simulate(build_qaoa_circuit(model, params)), model);
}

double success_probability(const StateVector& state, const std::string& target) {
  if (static_cast<int>(target.size()) != state.num_qubits()) {
    throw ArgumentError("target bitstring length " + std::to_string(target.size()) + " does not match " +
                        std::to_string(state.num_qubits()) + " qubits");
  }
  return std::norm(state[basis_index(target)]);
}

std::vector<double> periodic_grid(double period, int count) {
  if (count < 1) throw ArgumentError("grid needs at least one point");
  std::vector<double> g(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) g[static_cast<std::size_t>(k)] = period * k / count;
  return g;
}

Landscape qaoa_landscape(const IsingModel& model, const std::vector<double>& beta_grid,
                         const std::vector<double>& gamma_grid, const std::string& target) {
  if (static_cast<int>(target.size()) != model.num_variables()) {
    throw ArgumentError("target bitstring length must equal the number of variables");
  }
  Landscape out{beta_grid, gamma_grid, {}, {}};
  out.energy.reserve(beta_grid.size() * gamma_grid.size());
  out.success_probability.reserve(beta_grid.size() * gamma_grid.size());
  for (double beta : beta_grid) {
    for (double gamma : gamma_grid) {
      const StateVector psi = simulate(build_qaoa_circuit(model, {{beta}, {gamma}}));
      out.energy.push_back(ising_expectation(psi, model));
      out.success_probability.push_back(success_probability(psi, target));
    }
  }
  return out;
}

namespace {

std::vector<GridPoint> extrema(const Landscape& l, const std::vector<double>& values, double sign, double tol) {
  if (values.empty()) return {};
  double best = sign * values[0];
  for (double v : values) best = std::min(best, sign * v);
  std::vector<GridPoint> out;
  for (std::size_t bi = 0; bi < l.beta_grid.size(); ++bi) {
    for (std::size_t gi = 0; gi < l.gamma_grid.size(); ++gi) {
      const double v = values[bi * l.gamma_grid.size() + gi];
      if (sign * v - best <= tol) out.push_back({l.beta_grid[bi], l.gamma_grid[gi], v});
    }
  }
  return out;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::vector<GridPoint> energy_minima(const Landscape& landscape, double tol) {
  return extrema(landscape, landscape.energy, 1.0, tol);
}

std::vector<GridPoint> success_maxima(const Landscape& landscape, double tol) {
  return extrema(landscape, landscape.success_probability, -1.0, tol);
}

void write_landscape_csv(std::ostream& out, const Landscape& landscape) {
  out << "beta,gamma,energy,success_probability\n";
  for (std::size_t bi = 0; bi < landscape.beta_grid.size(); ++bi) {
    for (std::size_t gi = 0; gi < landscape.gamma_grid.size(); ++gi) {
      out << format_double(landscape.beta_grid[bi]) << ',' << format_double(landscape.gamma_grid[gi]) << ','
          << format_double(landscape.energy_at(bi, gi)) << ',' << format_double(landscape.success_at(bi, gi)) << '\n';
    }
  }
}

QaoaResult qaoa_optimize(const IsingModel& model, const QaoaParams& init, int max_evaluations, std::uint64_t seed) {
  const int p = init.p();
  if (p < 1 || init.gammas.size() != init.betas.size()) {
    throw ArgumentError("QAOA needs p >= 1 with as many betas as gammas");
  }
  std::vector<double> x0 = init.betas;
  x0.insert(x0.end(), init.gammas.begin(), init.gammas.end());
  auto unpack = [p](std::span<const double> x) {
    QaoaParams q;
    q.betas.assign(x.begin(), x.begin() + p);
    q.gammas.assign(x.begin() + p, x.end());
    return q;
  };
  NelderMeadOptions opts;
  opts.max_evaluations = max_evaluations;
  opts.seed = seed;
  const auto r = nelder_mead([&](std::span<const double> x) { return qaoa_energy(model, unpack(x)); }, x0, opts);
  return {unpack(r.x), r.value, r.evaluations, r.converged};
}

QaoaParams annealing_warm_start(int p, double dt) {
  if (p < 1) throw ArgumentError("QAOA needs p >= 1");
  QaoaParams q;
  for (int k = 1; k <= p; ++k) {
    const double s = (k - 0.5) / p;
    q.gammas.push_back(s * dt);
    q.betas.push_back(-(1.0 - s) * dt);
  }
  return q;
}

}  // namespace qdesk
