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

#include <initializer_list>
#include <vector>

#include "qdesk/gates.hpp"
#include "qdesk/sample_set.hpp"
#include "qdesk/state.hpp"

namespace qdesk {

// Ordered gate sequence; ops run left to right.
class Circuit {
 public:
  explicit Circuit(int num_qubits);

  int num_qubits() const noexcept { return num_qubits_; }
  const std::vector<GateOp>& ops() const noexcept { return ops_; }
  bool measure_all() const noexcept { return measure_all_; }
  void set_measure_all(bool on) { measure_all_ = on; }

  // Validates arity, range, and distinctness before appending.
  Circuit& add(const Gate& gate, std::vector<int> qubits);
  Circuit& add(const GateOp& op);
  Circuit& barrier();

  // Appends all ops of `other`, which must have the same width.
  Circuit& append(const Circuit& other);

  Circuit& i(int q) { return add(Gate::make(GateKind::I), {q}); }
  Circuit& h(int q) { return add(Gate::make(GateKind::H), {q}); }
  Circuit& x(int q) { return add(Gate::make(GateKind::X), {q}); }
  Circuit& y(int q) { return add(Gate::make(GateKind::Y), {q}); }
  Circuit& z(int q) { return add(Gate::make(GateKind::Z), {q}); }
  Circuit& s(int q) { return add(Gate::make(GateKind::S), {q}); }
  Circuit& sdg(int q) { return add(Gate::make(GateKind::Sdg), {q}); }
  Circuit& t(int q) { return add(Gate::make(GateKind::T), {q}); }
  Circuit& tdg(int q) { return add(Gate::make(GateKind::Tdg), {q}); }
  Circuit& rx(double theta, int q) { return add(Gate::rx(theta), {q}); }
  Circuit& ry(double theta, int q) { return add(Gate::ry(theta), {q}); }
  Circuit& rz(double theta, int q) { return add(Gate::rz(theta), {q}); }
  Circuit& cnot(int control, int target) { return add(Gate::make(GateKind::CNOT), {control, target}); }
  Circuit& cz(int a, int b) { return add(Gate::make(GateKind::CZ), {a, b}); }
  Circuit& cu(int control, int target, int k, bool dagger = false) {
    return add(Gate::cu(k, dagger), {control, target});
  }
  Circuit& toffoli(int c1, int c2, int target) { return add(Gate::make(GateKind::Toffoli), {c1, c2, target}); }
  // Three CNOTs.
  Circuit& swap(int a, int b);

 private:
  int num_qubits_;
  std::vector<GateOp> ops_;
  bool measure_all_ = false;
};

// Same width, flag, and op sequence; angles compared within `tol`.
bool same_structure(const Circuit& a, const Circuit& b, double tol = 0.0);

Circuit compose(const Circuit& first, const Circuit& second);

StateVector simulate(const Circuit& circuit, const StateVector& initial);
StateVector simulate(const Circuit& circuit);

inline constexpr int kUnitaryMaxQubits = 12;

// Full 2^n x 2^n matrix, rightmost factor = first op. n <= 12.
Matrix to_unitary(const Circuit& circuit);

// Reversed op order with every gate replaced by its dagger.
Circuit inverse(const Circuit& circuit);

// Maps qubit i to n-1-i; converts between |q0...q(n-1)> and |q(n-1)...q0>
// conventions.
StateVector reverse_bit_ordering(const StateVector& state);
SampleSet reverse_bit_ordering(const SampleSet& samples);
Circuit reverse_bit_ordering(const Circuit& circuit);

}  // namespace qdesk
