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
#include <sstream>

#include "qdesk/algorithms.hpp"
#include "qdesk/errors.hpp"
#include "qdesk/optimize.hpp"
#include "qdesk/state.hpp"
#include "test_util.hpp"

namespace qdesk {
namespace {

using testing::kPi;
using testing::max_abs_diff;

Matrix dft(int n) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  Matrix f(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    for (Eigen::Index k = 0; k < dim; ++k) {
      f(j, k) = std::polar(1.0 / std::sqrt(static_cast<double>(dim)), 2 * kPi * static_cast<double>(j * k) / dim);
    }
  }
  return f;
}

Matrix bit_reversal(int n) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  Matrix p = Matrix::Zero(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    Eigen::Index r = 0;
    for (int b = 0; b < n; ++b) r |= ((j >> b) & 1) << (n - 1 - b);
    p(r, j) = 1.0;
  }
  return p;
}

TEST(Qft, SingleQubitIsHadamard) {
  const Circuit c = build_qft(1, true);
  ASSERT_EQ(c.ops().size(), 1u);
  EXPECT_EQ(c.ops()[0].gate.kind(), GateKind::H);
}

TEST(Qft, MatchesDft) {
  for (int n = 1; n <= 6; ++n) {
    EXPECT_LT(max_abs_diff(to_unitary(build_qft(n, true)), dft(n)), 1e-10) << n;
  }
}

TEST(Qft, SwapFreeIsBitReversed) {
  for (int n = 1; n <= 6; ++n) {
    const Matrix with = to_unitary(build_qft(n, true));
    const Matrix without = to_unitary(build_qft(n, false));
    EXPECT_LT(max_abs_diff(bit_reversal(n) * without, with), 1e-12) << n;
  }
}

TEST(Qft, TwoQubitsOnOne) {
  const StateVector out = simulate(build_qft(2, true), StateVector::basis(2, 1));
  const Complex expect[] = {0.5, Complex(0, 0.5), -0.5, Complex(0, -0.5)};
  for (int j = 0; j < 4; ++j) EXPECT_NEAR(std::abs(out[static_cast<std::size_t>(j)] - expect[j]), 0.0, 1e-12);
}

TEST(Qft, InverseUndoes) {
  for (int n = 1; n <= 5; ++n) {
    for (bool swaps : {true, false}) {
      Circuit c(n);
      std::vector<int> qs(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) qs[static_cast<std::size_t>(i)] = i;
      append_qft(c, qs, swaps);
      append_inverse_qft(c, qs, swaps);
      const Eigen::Index dim = Eigen::Index{1} << n;
      EXPECT_LT(max_abs_diff(to_unitary(c), Matrix::Identity(dim, dim)), 1e-10);
    }
  }
}

TEST(Qft, GateCountQuadratic) {
  const Circuit c = build_qft(6, false);
  EXPECT_EQ(c.ops().size(), 6u * 7u / 2u);
}

TEST(Qft, DuplicateQubitsRejected) {
  Circuit c(3);
  EXPECT_THROW(append_qft(c, {0, 1, 0}, true), IndexError);
  EXPECT_THROW(append_qft(c, {}, true), ArgumentError);
}

std::uint64_t pair_index(int m, std::uint64_t l, std::uint64_t j) { return (l << m) | j; }

TEST(Adder, BasisAndSuperpositionExamples) {
  const Circuit add = build_draper_adder(2);
  StateVector out = simulate(add, StateVector::basis(4, pair_index(2, 2, 1)));
  EXPECT_NEAR(std::abs(out[pair_index(2, 2, 3)]), 1.0, 1e-10);

  const double r = 1 / std::sqrt(2.0);
  std::vector<Complex> in(16, 0.0);
  in[pair_index(2, 2, 0)] = r;
  in[pair_index(2, 2, 1)] = r;
  out = simulate(add, StateVector::from_amplitudes(in));
  EXPECT_NEAR(std::abs(out[pair_index(2, 2, 2)] - r), 0.0, 1e-10);
  EXPECT_NEAR(std::abs(out[pair_index(2, 2, 3)] - r), 0.0, 1e-10);
}

TEST(Adder, SuperpositionExample) {
  std::vector<Complex> in(16, 0.0);
  const double a = 1 / std::sqrt(6.0);
  for (std::uint64_t l : {0u, 3u}) {
    for (std::uint64_t j : {1u, 2u, 3u}) in[pair_index(2, l, j)] = a;
  }
  const StateVector out = simulate(build_draper_adder(2), StateVector::from_amplitudes(in));
  std::vector<Complex> expect(16, 0.0);
  for (std::uint64_t j : {1u, 2u, 3u}) expect[pair_index(2, 0, j)] = a;
  for (std::uint64_t j : {0u, 1u, 2u}) expect[pair_index(2, 3, j)] = a;
  for (std::size_t k = 0; k < 16; ++k) EXPECT_NEAR(std::abs(out[k] - expect[k]), 0.0, 1e-10) << k;
}

TEST(Adder, ClassicalPermutation) {
  for (int m = 1; m <= 3; ++m) {
    const Matrix u = to_unitary(build_draper_adder(m));
    const std::uint64_t size = std::uint64_t{1} << m;
    Matrix expect = Matrix::Zero(u.rows(), u.cols());
    for (std::uint64_t l = 0; l < size; ++l) {
      for (std::uint64_t j = 0; j < size; ++j) {
        expect(static_cast<Eigen::Index>(pair_index(m, l, (j + l) % size)),
               static_cast<Eigen::Index>(pair_index(m, l, j))) = 1.0;
      }
    }
    EXPECT_LT(max_abs_diff(u, expect), 1e-10) << m;
  }
}

TEST(Adder, LargerRegisterSpotChecks) {
  Rng rng(12);
  for (int m = 4; m <= kAdderMaxBits; ++m) {
    const Circuit add = build_draper_adder(m);
    const std::uint64_t size = std::uint64_t{1} << m;
    for (int trial = 0; trial < 5; ++trial) {
      const std::uint64_t l = rng.below(size), j = rng.below(size);
      const StateVector out = simulate(add, StateVector::basis(2 * m, pair_index(m, l, j)));
      EXPECT_NEAR(std::abs(out[pair_index(m, l, (j + l) % size)]), 1.0, 1e-9);
    }
  }
}

TEST(Adder, RangeChecked) {
  EXPECT_THROW(build_draper_adder(0), ArgumentError);
  EXPECT_THROW(build_draper_adder(kAdderMaxBits + 1), ArgumentError);
}

TEST(Adder, SerializableGates) {
  for (const auto& op : build_draper_adder(3).ops()) {
    if (op.barrier) continue;
    const GateKind k = op.gate.kind();
    EXPECT_TRUE(k == GateKind::H || k == GateKind::CUk || k == GateKind::CUkdg);
  }
}

TEST(QaoaCircuit, ExampleModelStructure) {
  const double beta = 0.3, gamma = 0.8;
  const Circuit c = build_qaoa_circuit(testing::example_model(), {{beta}, {gamma}});
  Circuit expect(3);
  expect.h(0).h(1).h(2);
  expect.rz(2 * gamma * -1.0, 0).rz(2 * gamma * 0.5, 1).rz(2 * gamma * -0.5, 2);
  expect.cnot(0, 1).rz(2 * gamma * 0.5, 1).cnot(0, 1);
  expect.cnot(1, 2).rz(2 * gamma * 0.5, 2).cnot(1, 2);
  expect.rx(2 * beta, 0).rx(2 * beta, 1).rx(2 * beta, 2);
  EXPECT_TRUE(same_structure(c, expect, 1e-15));
}

TEST(QaoaCircuit, EmptyWeighting) {
  const Circuit c = build_qaoa_circuit(IsingModel(3), {{0.4}, {1.1}});
  ASSERT_EQ(c.ops().size(), 6u);
  for (int i = 0; i < 3; ++i) EXPECT_EQ(c.ops()[static_cast<std::size_t>(i)].gate.kind(), GateKind::H);
  for (int i = 3; i < 6; ++i) EXPECT_EQ(c.ops()[static_cast<std::size_t>(i)].gate.kind(), GateKind::Rx);
}

TEST(QaoaCircuit, DepthScalesWithP) {
  const IsingModel m = testing::example_model();
  const auto p1 = build_qaoa_circuit(m, {{0.1}, {0.2}}).ops().size();
  const auto p2 = build_qaoa_circuit(m, {{0.1, 0.3}, {0.2, 0.4}}).ops().size();
  EXPECT_EQ(p2 - 3, 2 * (p1 - 3));
  EXPECT_THROW(build_qaoa_circuit(m, {{0.1, 0.2}, {0.3}}), ArgumentError);
  EXPECT_THROW(build_qaoa_circuit(m, {{}, {}}), ArgumentError);
}

TEST(QaoaCircuit, PhaseSeparatorIsDiagonalIsingEvolution) {
  Rng rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    const IsingModel m = testing::random_ising(rng, 4);
    const double gamma = rng.uniform() * 2 * kPi;
    // beta = 0 leaves H layer + exp(-i gamma H_P) up to global phase.
    const StateVector out = simulate(build_qaoa_circuit(m, {{0.0}, {gamma}}));
    const Complex ref = out[0] / std::polar(0.25, -gamma * (energy(m, std::vector<int>(4, 1)) - m.offset()));
    for (std::uint64_t j = 0; j < 16; ++j) {
      std::vector<int> s(4);
      for (int q = 0; q < 4; ++q) s[static_cast<std::size_t>(q)] = ((j >> (3 - q)) & 1) ? -1 : 1;
      const Complex expect = ref * std::polar(0.25, -gamma * (energy(m, s) - m.offset()));
      EXPECT_NEAR(std::abs(out[j] - expect), 0.0, 1e-10);
    }
  }
}

TEST(QaoaEnergy, ReferencePoint) {
  const IsingModel m = testing::example_model();
  const StateVector psi = simulate(build_qaoa_circuit(m, {{2.5}, {0.7}}));
  EXPECT_NEAR(qaoa_energy(m, {{2.5}, {0.7}}), -1.69, 0.01);
  EXPECT_NEAR(success_probability(psi, "010"), 0.589, 0.001);
}

TEST(QaoaEnergy, SampledMeanAgrees) {
  const IsingModel m = testing::example_model();
  const StateVector psi = simulate(build_qaoa_circuit(m, {{2.5}, {0.7}}));
  const double exact = ising_expectation(psi, m);
  const std::int64_t shots = 100000;
  const SampleSet samples = sample_counts(psi, shots, 99);
  double sum = 0, sum2 = 0;
  for (const auto& row : samples.rows) {
    std::vector<int> s;
    for (char ch : row.bits) s.push_back(ch == '0' ? 1 : -1);
    const double e = energy(m, s);
    sum += e * static_cast<double>(row.occurrences);
    sum2 += e * e * static_cast<double>(row.occurrences);
  }
  const double mean = sum / shots;
  double var = 0;
  for (std::uint64_t j = 0; j < 8; ++j) {
    std::vector<int> s(3);
    for (int q = 0; q < 3; ++q) s[static_cast<std::size_t>(q)] = ((j >> (2 - q)) & 1) ? -1 : 1;
    var += std::norm(psi[j]) * std::pow(energy(m, s) - exact, 2);
  }
  EXPECT_LT(std::abs(mean - exact), 3 * std::sqrt(var / shots));
}

TEST(Landscape, GridShapeAndRange) {
  const Landscape l = qaoa_landscape(testing::example_model(), periodic_grid(kPi, 8), periodic_grid(2 * kPi, 16), "010");
  EXPECT_EQ(l.energy.size(), 128u);
  EXPECT_EQ(l.success_probability.size(), 128u);
  EXPECT_DOUBLE_EQ(l.beta_grid[1], kPi / 8);
  for (double p : l.success_probability) {
    EXPECT_GE(p, 0.0);
    EXPECT_LE(p, 1.0 + 1e-12);
  }
  EXPECT_NEAR(l.energy_at(3, 5), qaoa_energy(testing::example_model(), {{l.beta_grid[3]}, {l.gamma_grid[5]}}), 1e-12);
}

TEST(Landscape, Periodic) {
  const IsingModel m = testing::example_model();
  Rng rng(14);
  for (int trial = 0; trial < 10; ++trial) {
    const double b = rng.uniform() * kPi, g = rng.uniform() * 2 * kPi;
    const double e = qaoa_energy(m, {{b}, {g}});
    EXPECT_NEAR(qaoa_energy(m, {{b + 2 * kPi}, {g}}), e, 1e-10);
    EXPECT_NEAR(qaoa_energy(m, {{b}, {g + 2 * kPi}}), e, 1e-10);
    EXPECT_NEAR(qaoa_energy(m, {{b + kPi}, {g}}), e, 1e-10);
  }
}

TEST(Landscape, ExtremaLocation) {
  const Landscape l = qaoa_landscape(testing::example_model(), periodic_grid(kPi, 64), periodic_grid(2 * kPi, 128), "010");
  auto near = [](const std::vector<GridPoint>& pts, double b, double g) {
    for (const auto& p : pts) {
      if (std::abs(p.beta - b) <= 0.05 && std::abs(p.gamma - g) <= 0.05) return true;
    }
    return false;
  };
  const auto minima = energy_minima(l);
  const auto maxima = success_maxima(l);
  ASSERT_FALSE(minima.empty());
  ASSERT_FALSE(maxima.empty());
  EXPECT_TRUE(near(minima, 2.505, 0.681));
  EXPECT_TRUE(near(maxima, 2.524, 0.713));
  for (const auto& p : minima) EXPECT_NEAR(p.value, minima.front().value, 1e-12);
}

TEST(Landscape, CsvLayout) {
  const Landscape l = qaoa_landscape(testing::example_model(), periodic_grid(kPi, 2), periodic_grid(2 * kPi, 3), "010");
  std::ostringstream out;
  write_landscape_csv(out, l);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "beta,gamma,energy,success_probability");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 6);
}

TEST(NelderMead, FindsQuadraticMinimum) {
  const auto f = [](std::span<const double> x) { return std::pow(x[0] - 1, 2) + 10 * std::pow(x[1] + 2, 2); };
  const NelderMeadResult r = nelder_mead(f, {0.0, 0.0}, {.max_evaluations = 5000, .seed = 1});
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.x[0], 1.0, 1e-4);
  EXPECT_NEAR(r.x[1], -2.0, 1e-4);
}

TEST(NelderMead, BudgetCap) {
  int calls = 0;
  const auto f = [&](std::span<const double> x) {
    ++calls;
    return std::pow(x[0] - 3, 2) + std::pow(x[1], 2);
  };
  const NelderMeadResult r = nelder_mead(f, {0.0, 0.0}, {.max_evaluations = 7, .seed = 2});
  EXPECT_FALSE(r.converged);
  EXPECT_LE(r.evaluations, 7);
  EXPECT_EQ(calls, r.evaluations);
  EXPECT_LE(r.value, 9.0);
}

TEST(QaoaOptimize, StartNearOptimumConverges) {
  const IsingModel m = testing::example_model();
  const QaoaParams init{{2.4}, {0.6}};
  const QaoaResult r = qaoa_optimize(m, init, 2000, 5);
  EXPECT_TRUE(r.converged);
  EXPECT_LE(r.energy, -1.69);
  EXPECT_LE(r.energy, qaoa_energy(m, init));
  EXPECT_NEAR(r.params.betas[0], 2.505, 0.01);
  EXPECT_NEAR(r.params.gammas[0], 0.681, 0.01);
  EXPECT_NEAR(r.energy, qaoa_energy(m, r.params), 1e-12);
}

TEST(QaoaOptimize, DeterministicForSeed) {
  const IsingModel m = testing::example_model();
  const QaoaResult a = qaoa_optimize(m, {{1.0}, {1.0}}, 300, 17);
  const QaoaResult b = qaoa_optimize(m, {{1.0}, {1.0}}, 300, 17);
  EXPECT_EQ(a.energy, b.energy);
  EXPECT_EQ(a.params.betas, b.params.betas);
  EXPECT_EQ(a.evaluations, b.evaluations);
}

TEST(QaoaOptimize, CapExhaustedFlagsNotConverged) {
  const IsingModel m = testing::example_model();
  const QaoaParams init{{0.3}, {0.3}};
  const QaoaResult r = qaoa_optimize(m, init, 3, 1);
  EXPECT_FALSE(r.converged);
  EXPECT_LE(r.energy, qaoa_energy(m, init));
}

TEST(QaoaOptimize, DepthTwoWarmStartImproves) {
  const IsingModel m = testing::example_model();
  const QaoaResult p1 = qaoa_optimize(m, {{2.4}, {0.6}}, 2000, 5);
  const QaoaParams warm{{p1.params.betas[0], 0.0}, {p1.params.gammas[0], 0.0}};
  EXPECT_NEAR(qaoa_energy(m, warm), p1.energy, 1e-12);
  const QaoaResult p2 = qaoa_optimize(m, warm, 4000, 5);
  EXPECT_LT(p2.energy, p1.energy - 1e-6);
}

TEST(QaoaOptimize, SingleSpinSpectralBound) {
  IsingModel m(1);
  m.set_h(0, -1.0);
  const QaoaResult r = qaoa_optimize(m, {{0.3}, {0.2}}, 500, 3);
  EXPECT_GE(r.energy, -1.0 - 1e-12);
  EXPECT_NEAR(r.energy, -1.0, 1e-6);
}

TEST(WarmStart, LinearAnnealAngles) {
  const QaoaParams w = annealing_warm_start(4, 0.5);
  ASSERT_EQ(w.p(), 4);
  for (int k = 0; k < 4; ++k) {
    const double s = (k + 0.5) / 4;
    EXPECT_DOUBLE_EQ(w.gammas[static_cast<std::size_t>(k)], s * 0.5);
    EXPECT_DOUBLE_EQ(w.betas[static_cast<std::size_t>(k)], -(1 - s) * 0.5);
  }
}

TEST(WarmStart, DeepAnnealReachesGroundState) {
  const IsingModel m = testing::example_model();
  const QaoaParams w = annealing_warm_start(60, 0.4);
  const StateVector psi = simulate(build_qaoa_circuit(m, w));
  EXPECT_GT(success_probability(psi, "010"), 0.8);
}

}  // namespace
}  // namespace qdesk
