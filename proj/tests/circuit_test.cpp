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

#include <gtest/gtest.h>

#include <cmath>

#include "qdesk/circuit.hpp"
#include "qdesk/errors.hpp"
#include "qdesk/parser.hpp"
#include "qdesk/state.hpp"
#include "test_util.hpp"

namespace qdesk {
namespace {

using testing::kPi;
using testing::max_abs_diff;

Eigen::VectorXcd vec(const StateVector& s) {
  Eigen::VectorXcd v(static_cast<Eigen::Index>(s.size()));
  for (std::size_t j = 0; j < s.size(); ++j) v(static_cast<Eigen::Index>(j)) = s[j];
  return v;
}

// Product of explicitly embedded gate matrices, last op leftmost.
Matrix product_of_ops(const Circuit& c) {
  const auto dim = Eigen::Index{1} << c.num_qubits();
  Matrix u = Matrix::Identity(dim, dim);
  for (const auto& op : c.ops()) {
    if (op.barrier) continue;
    u = testing::embed_matrix(matrix_of(op.gate), op.qubits, c.num_qubits()) * u;
  }
  return u;
}

Circuit htcnot() {
  Circuit c(2);
  c.h(0).t(0).h(0).cnot(0, 1);
  return c;
}

TEST(Simulate, EmptyCircuitIsIdentity) {
  Rng rng(1);
  const StateVector psi = testing::random_state(rng, 3);
  const StateVector out = simulate(Circuit(3), psi);
  for (std::size_t j = 0; j < psi.size(); ++j) EXPECT_EQ(out[j], psi[j]);
}

TEST(Simulate, HtHCnotState) {
  const StateVector out = simulate(htcnot());
  const Complex phase = out[0] / std::cos(kPi / 8);
  EXPECT_NEAR(std::abs(phase), 1.0, 1e-12);
  EXPECT_NEAR(std::abs(out[3] - phase * Complex(0, -std::sin(kPi / 8))), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(out[1]) + std::abs(out[2]), 0.0, 1e-12);
}

TEST(Simulate, TranspiledAdderFile) {
  const Circuit c = parse_circuit(testing::read_file_for_tests(testing::data_path("adder.jq")));
  const StateVector out = simulate(c);
  for (std::size_t j = 0; j < out.size(); ++j) {
    if (j == 0b1010 || j == 0b1011) {
      EXPECT_NEAR(std::abs(out[j]), 1 / std::sqrt(2.0), 1e-10);
    } else {
      EXPECT_LT(std::abs(out[j]), 1e-10);
    }
  }
}

TEST(Simulate, SizeMismatch) { EXPECT_THROW(simulate(Circuit(2), StateVector(3)), ArgumentError); }

TEST(Simulate, AgreesWithUnitary) {
  Rng rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(6));
    const Circuit c = testing::random_circuit(rng, n, 15);
    const StateVector psi = testing::random_state(rng, n);
    const Eigen::VectorXcd expect = to_unitary(c) * vec(psi);
    const Eigen::VectorXcd got = vec(simulate(c, psi));
    EXPECT_LT((expect - got).cwiseAbs().maxCoeff(), 1e-10);
  }
}

TEST(ToUnitary, EqualsReverseOrderProduct) {
  Rng rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(5));
    const Circuit c = testing::random_circuit(rng, n, 12);
    EXPECT_LT(max_abs_diff(to_unitary(c), product_of_ops(c)), 1e-12);
  }
}

TEST(ToUnitary, HthIsRxQuarterPi) {
  Circuit c(1);
  c.h(0).t(0).h(0);
  EXPECT_TRUE(equal_up_to_global_phase(to_unitary(c), rotation(Axis::x, kPi / 4), 1e-12));
}

TEST(ToUnitary, ZzPhaseBlock) {
  Rng rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const double gamma = rng.uniform() * 2 * kPi, J = rng.uniform() * 4 - 2;
    Circuit c(2);
    c.cnot(0, 1).rz(2 * gamma * J, 1).cnot(0, 1);
    // exp(-i gamma J sz x sz) is diagonal with phases by spin parity.
    Matrix expect = Matrix::Zero(4, 4);
    const double parity[] = {1, -1, -1, 1};
    for (int j = 0; j < 4; ++j) expect(j, j) = std::polar(1.0, -gamma * J * parity[j]);
    EXPECT_LT(max_abs_diff(to_unitary(c), expect), 1e-12);
  }
}

TEST(ToUnitary, SingleCnotExact) {
  Circuit c(2);
  c.cnot(0, 1);
  EXPECT_EQ(max_abs_diff(to_unitary(c), matrix_of(Gate::make(GateKind::CNOT))), 0.0);
}

TEST(ToUnitary, CapEnforced) { EXPECT_THROW(to_unitary(Circuit(kUnitaryMaxQubits + 1)), CapacityError); }

TEST(Inverse, Examples) {
  Circuit s(1);
  s.s(0);
  Circuit expect(1);
  expect.sdg(0);
  EXPECT_TRUE(same_structure(inverse(s), expect));

  Circuit c(2);
  c.cnot(0, 1).h(0);
  Circuit rev(2);
  rev.h(0).cnot(0, 1);
  EXPECT_TRUE(same_structure(inverse(c), rev));
}

TEST(Inverse, UnitaryProperty) {
  Rng rng(6);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(6));
    const Circuit c = testing::random_circuit(rng, n, 20);
    const auto dim = Eigen::Index{1} << n;
    EXPECT_LT(max_abs_diff(to_unitary(inverse(c)) * to_unitary(c), Matrix::Identity(dim, dim)), 1e-10);
    EXPECT_TRUE(same_structure(inverse(inverse(c)), c, 1e-12));
  }
}

TEST(ReverseBitOrdering, TwoQubitAmplitudes) {
  const StateVector s = StateVector::from_amplitudes({Complex(0.1), Complex(0.3), Complex(0.5), Complex(std::sqrt(0.65))});
  const StateVector r = reverse_bit_ordering(s);
  EXPECT_EQ(r[0], s[0]);
  EXPECT_EQ(r[1], s[2]);
  EXPECT_EQ(r[2], s[1]);
  EXPECT_EQ(r[3], s[3]);
}

TEST(ReverseBitOrdering, Involution) {
  Rng rng(7);
  const StateVector psi = testing::random_state(rng, 5);
  const StateVector twice = reverse_bit_ordering(reverse_bit_ordering(psi));
  for (std::size_t j = 0; j < psi.size(); ++j) EXPECT_EQ(twice[j], psi[j]);
}

TEST(ReverseBitOrdering, SampleKeys) {
  SampleSet s;
  s.num_variables = 3;
  s.rows.push_back({"110", std::nullopt, 5, 0.0});
  EXPECT_EQ(reverse_bit_ordering(s).rows[0].bits, "011");
}

TEST(ReverseBitOrdering, CircuitRelabelCommutesWithSimulation) {
  Rng rng(8);
  const Circuit c = testing::random_circuit(rng, 4, 20);
  const StateVector a = reverse_bit_ordering(simulate(c));
  const StateVector b = simulate(reverse_bit_ordering(c));
  for (std::size_t j = 0; j < a.size(); ++j) EXPECT_NEAR(std::abs(a[j] - b[j]), 0.0, 1e-12);
}

TEST(Properties, ComposeIsSequentialSimulation) {
  Rng rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(6));
    const Circuit c1 = testing::random_circuit(rng, n, 1 + static_cast<int>(rng.below(20)));
    const Circuit c2 = testing::random_circuit(rng, n, 1 + static_cast<int>(rng.below(20)));
    const StateVector psi = testing::random_state(rng, n);
    const Eigen::VectorXcd a = vec(simulate(compose(c1, c2), psi));
    const Eigen::VectorXcd b = vec(simulate(c2, simulate(c1, psi)));
    EXPECT_LT((a - b).cwiseAbs().maxCoeff(), 1e-10);
  }
}

TEST(Properties, Linearity) {
  Rng rng(10);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(5));
    const Circuit c = testing::random_circuit(rng, n, 15);
    const StateVector p1 = testing::random_state(rng, n), p2 = testing::random_state(rng, n);
    const Complex alpha(0.6, 0.2), beta(-0.3, 0.5);
    Eigen::VectorXcd mix = alpha * vec(p1) + beta * vec(p2);
    mix /= mix.norm();
    const double scale = 1.0 / (alpha * vec(p1) + beta * vec(p2)).norm();
    const StateVector m = StateVector::from_amplitudes(std::vector<Complex>(mix.data(), mix.data() + mix.size()));
    const Eigen::VectorXcd lhs = vec(simulate(c, m));
    const Eigen::VectorXcd rhs = scale * (alpha * vec(simulate(c, p1)) + beta * vec(simulate(c, p2)));
    EXPECT_LT((lhs - rhs).cwiseAbs().maxCoeff(), 1e-10);
  }
}

TEST(Properties, BarrierHasNoEffect) {
  Rng rng(11);
  const Circuit c = testing::random_circuit(rng, 3, 10);
  Circuit with(3);
  for (const auto& op : c.ops()) {
    with.barrier();
    with.add(op);
  }
  const StateVector a = simulate(c), b = simulate(with);
  for (std::size_t j = 0; j < a.size(); ++j) EXPECT_EQ(a[j], b[j]);
}

TEST(Circuit, AddValidates) {
  Circuit c(2);
  EXPECT_THROW(c.cnot(0, 0), IndexError);
  EXPECT_THROW(c.h(2), IndexError);
  EXPECT_THROW(c.add(Gate::make(GateKind::CNOT), {0}), IndexError);
  EXPECT_THROW(Circuit(0), ArgumentError);
  EXPECT_THROW(Circuit(2).append(Circuit(3)), ArgumentError);
}

TEST(Circuit, SwapExchangesQubits) {
  Circuit c(2);
  c.x(0).swap(0, 1);
  EXPECT_EQ(simulate(c)[0b01], Complex(1.0));
}

}  // namespace
}  // namespace qdesk
