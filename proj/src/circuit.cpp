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

#include "qdesk/circuit.hpp"

#include <algorithm>
#include <string>

#include "qdesk/errors.hpp"

namespace qdesk {

Circuit::Circuit(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits < 1) throw ArgumentError("a circuit needs at least one qubit");
}

Circuit& Circuit::add(const Gate& gate, std::vector<int> qubits) {
  GateOp op;
  op.gate = gate;
  op.qubits = std::move(qubits);
  return add(op);
}

Circuit& Circuit::add(const GateOp& op) {
  if (op.barrier) {
    ops_.push_back(barrier_op());
    return *this;
  }
  if (static_cast<int>(op.qubits.size()) != op.gate.arity()) {
    throw IndexError(std::string(name(op.gate.kind())) + " acts on " + std::to_string(op.gate.arity()) +
                     " qubit(s), got " + std::to_string(op.qubits.size()));
  }
  for (std::size_t a = 0; a < op.qubits.size(); ++a) {
    const int q = op.qubits[a];
    if (q < 0 || q >= num_qubits_) {
      throw IndexError("qubit index " + std::to_string(q) + " out of range for " + std::to_string(num_qubits_) +
                       " qubits");
    }
    for (std::size_t b = a + 1; b < op.qubits.size(); ++b) {
      if (op.qubits[b] == q) throw IndexError("duplicate qubit index " + std::to_string(q));
    }
  }
  ops_.push_back(op);
  return *this;
}

Circuit& Circuit::barrier() { return add(barrier_op()); }

Circuit& Circuit::append(const Circuit& other) {
  if (other.num_qubits() != num_qubits_) throw ArgumentError("cannot append circuits of different width");
  for (const auto& op : other.ops()) add(op);
  return *this;
}

Circuit& Circuit::swap(int a, int b) {
  cnot(a, b);
  cnot(b, a);
  return cnot(a, b);
}

bool same_structure(const Circuit& a, const Circuit& b, double tol) {
  if (a.num_qubits() != b.num_qubits() || a.measure_all() != b.measure_all() || a.ops().size() != b.ops().size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.ops().size(); ++i) {
    if (!same_op(a.ops()[i], b.ops()[i], tol)) return false;
  }
  return true;
}

Circuit compose(const Circuit& first, const Circuit& second) {
  Circuit out = first;
  out.append(second);
  out.set_measure_all(first.measure_all() || second.measure_all());
  return out;
}

StateVector simulate(const Circuit& circuit, const StateVector& initial) {
  if (initial.num_qubits() != circuit.num_qubits()) {
    throw ArgumentError("circuit has " + std::to_string(circuit.num_qubits()) + " qubits, state has " +
                        std::to_string(initial.num_qubits()));
  }
  StateVector state = initial;
  for (const auto& op : circuit.ops()) state.apply(op);
  return state;
}

StateVector simulate(const Circuit& circuit) { return simulate(circuit, StateVector(circuit.num_qubits())); }

Matrix to_unitary(const Circuit& circuit) {
  const int n = circuit.num_qubits();
  if (n > kUnitaryMaxQubits) {
    throw CapacityError("dense unitaries are capped at " + std::to_string(kUnitaryMaxQubits) + " qubits, circuit has " +
                        std::to_string(n));
  }
  // Column j is the circuit applied to basis state |j>. This equals the
  // reverse-order product of embedded gate matrices.
  const std::size_t dim = std::size_t{1} << n;
  Matrix u(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t j = 0; j < dim; ++j) {
    const StateVector out = simulate(circuit, StateVector::basis(n, j));
    for (std::size_t r = 0; r < dim; ++r) u(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(j)) = out[r];
  }
  return u;
}

Circuit inverse(const Circuit& circuit) {
  Circuit out(circuit.num_qubits());
  out.set_measure_all(circuit.measure_all());
  for (auto it = circuit.ops().rbegin(); it != circuit.ops().rend(); ++it) {
    if (it->barrier) {
      out.barrier();
    } else {
      out.add(dagger(it->gate), it->qubits);
    }
  }
  return out;
}

namespace {

std::uint64_t reverse_bits(std::uint64_t j, int n) {
  std::uint64_t r = 0;
  for (int b = 0; b < n; ++b) {
    if ((j >> b) & 1) r |= std::uint64_t{1} << (n - 1 - b);
  }
  return r;
}

}  // namespace

StateVector reverse_bit_ordering(const StateVector& state) {
  std::vector<Complex> out(state.size());
  for (std::size_t j = 0; j < state.size(); ++j) out[reverse_bits(j, state.num_qubits())] = state[j];
  return StateVector::from_amplitudes(std::move(out));
}

SampleSet reverse_bit_ordering(const SampleSet& samples) {
  SampleSet out = samples;
  for (auto& row : out.rows) std::reverse(row.bits.begin(), row.bits.end());
  return out;
}

Circuit reverse_bit_ordering(const Circuit& circuit) {
  const int n = circuit.num_qubits();
  Circuit out(n);
  out.set_measure_all(circuit.measure_all());
  for (const auto& op : circuit.ops()) {
    if (op.barrier) {
      out.barrier();
      continue;
    }
    std::vector<int> qs = op.qubits;
    for (int& q : qs) q = n - 1 - q;
    out.add(op.gate, std::move(qs));
  }
  return out;
}

}  // namespace qdesk
