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

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "qdesk/gates.hpp"
#include "qdesk/ising.hpp"
#include "qdesk/sample_set.hpp"

namespace qdesk {

// Dense n-qubit pure state. Amplitude j belongs to |q0 q1 ... q(n-1)> with
// j = sum_i q_i 2^(n-1-i), so qubit 0 is the most significant bit.
class StateVector {
 public:
  // 2^30 amplitudes is 16 GiB; larger registers are rejected up front.
  static constexpr int kMaxQubits = 30;

  // |0...0>. Throws CapacityError outside [1, kMaxQubits].
  explicit StateVector(int num_qubits);

  // Takes ownership of amplitudes; the length must be a power of two and
  // the norm 1 within 1e-10.
  static StateVector from_amplitudes(std::vector<Complex> amplitudes);
  // Basis state |index>.
  static StateVector basis(int num_qubits, std::uint64_t index);

  int num_qubits() const noexcept { return num_qubits_; }
  std::size_t size() const noexcept { return amplitudes_.size(); }
  std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
  const Complex& operator[](std::size_t j) const { return amplitudes_[j]; }

  // Bit position of qubit q inside an amplitude index.
  int bit_of(int qubit) const noexcept { return num_qubits_ - 1 - qubit; }

  double norm_squared() const;

  // Applies a gate in place. Qubit indices must be distinct and in range.
  void apply(const GateOp& op);
  void apply(const Gate& gate, std::span<const int> qubits);

 private:
  StateVector() = default;
  void apply_controlled(const ControlledForm& form, std::span<const int> qubits);
  void apply_dense(const Matrix& m, std::span<const int> qubits);

  int num_qubits_ = 0;
  std::vector<Complex> amplitudes_;
};

StateVector new_zero_state(int num_qubits);
void apply_gate(StateVector& state, const GateOp& op);

std::vector<double> probabilities(const StateVector& state);

// Conjugate-linear in the first argument.
Complex inner_product(const StateVector& a, const StateVector& b);

struct BlochVector {
  double rx = 0.0, ry = 0.0, rz = 1.0;
  double theta = 0.0;  // [0, pi]
  double phi = 0.0;    // [0, 2 pi); 0 at the poles (sin theta < 1e-12)
};

BlochVector bloch_vector(const StateVector& state);

// Draws `shots` basis indices by inverse CDF over the cumulative
// probabilities; identical (state, shots, seed) give identical counts. Rows
// carry bitstrings q0...q(n-1) and are sorted by bitstring.
SampleSet sample_counts(const StateVector& state, std::int64_t shots, std::uint64_t seed);

// <psi| E(sigma^z) |psi> in the gate convention: qubit value 0 is spin +1.
double ising_expectation(const StateVector& state, const IsingModel& model);

// Bitstring q0...q(n-1) of a basis index.
std::string basis_label(std::uint64_t index, int num_qubits);
std::uint64_t basis_index(const std::string& bits);

}  // namespace qdesk
