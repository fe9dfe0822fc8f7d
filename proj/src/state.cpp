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

#include "qdesk/state.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "qdesk/errors.hpp"
#include "qdesk/rng.hpp"

namespace qdesk {

namespace {

void check_qubits(std::span<const int> qubits, int expected, int num_qubits) {
  if (static_cast<int>(qubits.size()) != expected) {
    throw IndexError("gate acts on " + std::to_string(expected) + " qubit(s), got " + std::to_string(qubits.size()));
  }
  for (std::size_t a = 0; a < qubits.size(); ++a) {
    if (qubits[a] < 0 || qubits[a] >= num_qubits) {
      throw IndexError("qubit index " + std::to_string(qubits[a]) + " out of range for " +
                       std::to_string(num_qubits) + " qubits");
    }
    for (std::size_t b = a + 1; b < qubits.size(); ++b) {
      if (qubits[a] == qubits[b]) throw IndexError("duplicate qubit index " + std::to_string(qubits[a]));
    }
  }
}

void check_capacity(int num_qubits) {
  if (num_qubits < 1 || num_qubits > StateVector::kMaxQubits) {
    throw CapacityError("state vectors support 1 to " + std::to_string(StateVector::kMaxQubits) +
                        " qubits, requested " + std::to_string(num_qubits));
  }
}

}  // namespace

StateVector::StateVector(int num_qubits) {
  check_capacity(num_qubits);
  num_qubits_ = num_qubits;
  amplitudes_.assign(std::size_t{1} << num_qubits, Complex{0.0, 0.0});
  amplitudes_[0] = 1.0;
}

StateVector StateVector::from_amplitudes(std::vector<Complex> amplitudes) {
  const std::size_t n = amplitudes.size();
  if (n < 2 || (n & (n - 1)) != 0) {
    throw ArgumentError("amplitude count " + std::to_string(n) + " is not a power of two >= 2");
  }
  StateVector s;
  s.num_qubits_ = std::countr_zero(n);
  check_capacity(s.num_qubits_);
  s.amplitudes_ = std::move(amplitudes);
  const double norm = s.norm_squared();
  if (std::abs(norm - 1.0) > 1e-10) {
    throw ValidationError("state is not normalized: sum |psi_j|^2 = " + std::to_string(norm));
  }
  return s;
}

StateVector StateVector::basis(int num_qubits, std::uint64_t index) {
  StateVector s(num_qubits);
  if (index >= s.size()) throw IndexError("basis index out of range");
  s.amplitudes_[0] = 0.0;
  s.amplitudes_[index] = 1.0;
  return s;
}

double StateVector::norm_squared() const {
  double total = 0.0;
  for (const auto& a : amplitudes_) total += std::norm(a);
  return total;
}

void StateVector::apply(const GateOp& op) {
  if (op.barrier) return;
  apply(op.gate, op.qubits);
}

void StateVector::apply(const Gate& gate, std::span<const int> qubits) {
  check_qubits(qubits, gate.arity(), num_qubits_);
  if (auto form = controlled_form(gate)) {
    apply_controlled(*form, qubits);
  } else {
    apply_dense(matrix_of(gate), qubits);
  }
}

void StateVector::apply_controlled(const ControlledForm& form, std::span<const int> qubits) {
  std::size_t control_mask = 0;
  for (int c = 0; c < form.num_controls; ++c) control_mask |= std::size_t{1} << bit_of(qubits[c]);
  const std::size_t stride = std::size_t{1} << bit_of(qubits[form.num_controls]);
  const Complex u00 = form.base(0, 0), u01 = form.base(0, 1), u10 = form.base(1, 0), u11 = form.base(1, 1);
  const bool diagonal = u01 == Complex{} && u10 == Complex{};
  const std::size_t dim = amplitudes_.size();

  for (std::size_t block = 0; block < dim; block += 2 * stride) {
    for (std::size_t i0 = block; i0 < block + stride; ++i0) {
      if ((i0 & control_mask) != control_mask) continue;
      const std::size_t i1 = i0 | stride;
      if (diagonal) {
        amplitudes_[i0] *= u00;
        amplitudes_[i1] *= u11;
      } else {
        const Complex a0 = amplitudes_[i0], a1 = amplitudes_[i1];
        amplitudes_[i0] = u00 * a0 + u01 * a1;
        amplitudes_[i1] = u10 * a0 + u11 * a1;
      }
    }
  }
}

void StateVector::apply_dense(const Matrix& m, std::span<const int> qubits) {
  const int k = static_cast<int>(qubits.size());
  const std::size_t local = std::size_t{1} << k;
  // offsets[l] is the amplitude offset of local basis state l, where qubits[0]
  // is the most significant local bit.
  std::vector<std::size_t> offsets(local, 0);
  std::size_t mask = 0;
  for (std::size_t l = 0; l < local; ++l) {
    for (int q = 0; q < k; ++q) {
      if ((l >> (k - 1 - q)) & 1) offsets[l] |= std::size_t{1} << bit_of(qubits[q]);
    }
  }
  for (int q = 0; q < k; ++q) mask |= std::size_t{1} << bit_of(qubits[q]);

  std::vector<Complex> in(local);
  for (std::size_t base = 0; base < amplitudes_.size(); ++base) {
    if (base & mask) continue;
    for (std::size_t l = 0; l < local; ++l) in[l] = amplitudes_[base | offsets[l]];
    for (std::size_t r = 0; r < local; ++r) {
      Complex acc{};
      for (std::size_t c = 0; c < local; ++c) acc += m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) * in[c];
      amplitudes_[base | offsets[r]] = acc;
    }
  }
}

StateVector new_zero_state(int num_qubits) { return StateVector(num_qubits); }

void apply_gate(StateVector& state, const GateOp& op) { state.apply(op); }

std::vector<double> probabilities(const StateVector& state) {
  std::vector<double> p(state.size());
  std::transform(state.amplitudes().begin(), state.amplitudes().end(), p.begin(),
                 [](const Complex& a) { return std::norm(a); });
  return p;
}

Complex inner_product(const StateVector& a, const StateVector& b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw ArgumentError("inner product of states with " + std::to_string(a.num_qubits()) + " and " +
                        std::to_string(b.num_qubits()) + " qubits");
  }
  Complex total{};
  for (std::size_t j = 0; j < a.size(); ++j) total += std::conj(a[j]) * b[j];
  return total;
}

BlochVector bloch_vector(const StateVector& state) {
  if (state.num_qubits() != 1) throw ArgumentError("bloch_vector needs a single-qubit state");
  const Complex psi0 = state[0], psi1 = state[1];
  BlochVector out;
  const Complex cross = std::conj(psi0) * psi1;
  out.rx = 2 * cross.real();
  out.ry = 2 * cross.imag();
  out.rz = std::norm(psi0) - std::norm(psi1);
  out.theta = 2 * std::atan2(std::abs(psi1), std::abs(psi0));
  if (std::sin(out.theta) < 1e-12) {
    out.phi = 0.0;
  } else {
    double phi = std::arg(cross);
    if (phi < 0) phi += 2 * std::numbers::pi;
    if (phi >= 2 * std::numbers::pi) phi = 0.0;
    out.phi = phi;
  }
  return out;
}

SampleSet sample_counts(const StateVector& state, std::int64_t shots, std::uint64_t seed) {
  if (shots < 1) throw ArgumentError("shots must be at least 1");
  std::vector<double> cdf(state.size());
  double running = 0.0;
  for (std::size_t j = 0; j < state.size(); ++j) {
    running += std::norm(state[j]);
    cdf[j] = running;
  }
  Rng rng(seed);
  std::vector<std::int64_t> counts(state.size(), 0);
  for (std::int64_t s = 0; s < shots; ++s) {
    const double u = rng.uniform() * running;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    std::size_t j = static_cast<std::size_t>(it - cdf.begin());
    if (j >= state.size()) {
      j = state.size() - 1;
      while (j > 0 && std::norm(state[j]) == 0.0) --j;
    }
    ++counts[j];
  }
  SampleSet out;
  out.num_variables = state.num_qubits();
  out.domain = ValueDomain::binary;
  for (std::size_t j = 0; j < counts.size(); ++j) {
    if (counts[j] > 0) out.rows.push_back({basis_label(j, state.num_qubits()), std::nullopt, counts[j], 0.0});
  }
  return out;
}

double ising_expectation(const StateVector& state, const IsingModel& model) {
  const int n = state.num_qubits();
  for (const auto& [i, v] : model.h()) {
    if (i >= n) throw IndexError("model variable " + std::to_string(i) + " has no qubit");
  }
  for (const auto& [ij, v] : model.J()) {
    if (ij.second >= n) throw IndexError("model variable " + std::to_string(ij.second) + " has no qubit");
  }
  double total = 0.0;
  for (std::size_t j = 0; j < state.size(); ++j) {
    const double p = std::norm(state[j]);
    if (p == 0.0) continue;
    auto spin = [&](int q) { return (j >> state.bit_of(q)) & 1 ? -1.0 : 1.0; };
    double e = model.offset();
    for (const auto& [i, v] : model.h()) e += v * spin(i);
    for (const auto& [ij, v] : model.J()) e += v * spin(ij.first) * spin(ij.second);
    total += p * e;
  }
  return total;
}

std::string basis_label(std::uint64_t index, int num_qubits) {
  std::string s(static_cast<std::size_t>(num_qubits), '0');
  for (int q = 0; q < num_qubits; ++q) {
    if ((index >> (num_qubits - 1 - q)) & 1) s[q] = '1';
  }
  return s;
}

std::uint64_t basis_index(const std::string& bits) {
  std::uint64_t j = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw ArgumentError("bitstring may contain only '0' and '1'");
    j = (j << 1) | static_cast<std::uint64_t>(c == '1');
  }
  return j;
}

}  // namespace qdesk
