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

#include <array>
#include <complex>
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace qdesk {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Matrix2 = Eigen::Matrix2cd;

// The standard gate set plus the parameterized rotations and a few
// controlled gates used by the circuit identities. Two-qubit matrices are
// written in the (first qubit, second qubit) basis with the first qubit
// most significant, so CNOT = diag(I, X) with the control first.
enum class GateKind {
  I, H, X, Y, Z, S, Sdg, T, Tdg,
  U1, U2, U3,
  PlusX, MinusX, PlusY, MinusY,
  Rk, Rkdg,
  Rx, Ry, Rz,
  CNOT, CUk, CUkdg, CPhase, CZ, CS, CSdg,
  Toffoli,
  Custom1Q, Custom2Q,
};

std::string_view name(GateKind kind);
int arity(GateKind kind);

class Gate {
 public:
  // Parameterless kinds only (I, H, ..., CNOT, CZ, CS, CSdg, Toffoli).
  static Gate make(GateKind kind);

  static Gate u1(double lambda);
  static Gate u2(double phi, double lambda);
  static Gate u3(double theta, double phi, double lambda);
  static Gate rx(double theta);
  static Gate ry(double theta);
  static Gate rz(double theta);
  static Gate cphase(double lambda);
  // Phase 2*pi/2^k on |1>, or its dagger. k >= 0.
  static Gate rk(int k, bool dagger = false);
  // Controlled R(k), or its dagger. k >= 0.
  static Gate cu(int k, bool dagger = false);
  // Throws ValidationError unless the matrix is 2x2 or 4x4 and unitary
  // within 1e-12.
  static Gate custom(const Matrix& m);

  GateKind kind() const noexcept { return kind_; }
  int arity() const noexcept { return qdesk::arity(kind_); }
  std::span<const double> angles() const noexcept { return angles_; }
  int k() const noexcept { return k_; }
  const Matrix& custom_matrix() const;

  friend bool operator==(const Gate& a, const Gate& b);

 private:
  Gate(GateKind kind, std::vector<double> angles, int k) : kind_(kind), angles_(std::move(angles)), k_(k) {}

  GateKind kind_;
  std::vector<double> angles_;
  int k_ = 0;
  std::shared_ptr<const Matrix> custom_;
};

// Same kind and k, angles within tol, custom matrices within tol.
bool same_gate(const Gate& a, const Gate& b, double tol);

Matrix matrix_of(const Gate& gate);
Gate dagger(const Gate& gate);

// A gate that acts as `base` on the last qubit when all leading qubits are 1.
// Every kind except Custom2Q has this form.
struct ControlledForm {
  int num_controls = 0;
  Matrix2 base;
};
std::optional<ControlledForm> controlled_form(const Gate& gate);

struct GateOp {
  Gate gate = Gate::make(GateKind::I);
  std::vector<int> qubits;  // controls before targets
  bool barrier = false;     // a barrier has no qubits and no effect
};

GateOp barrier_op();
bool same_op(const GateOp& a, const GateOp& b, double tol);

enum class Axis { x, y, z };

// exp(-i theta sigma/2) about a coordinate axis.
Matrix2 rotation(Axis axis, double theta);

// U = exp(i global_phase) (cos(angle/2) I - i sin(angle/2) axis . sigma),
// with angle in [0, 2pi), global_phase in (-pi, pi], and the first nonzero
// axis component positive. The identity maps to angle 0, axis (0,0,1).
struct AxisAngle {
  std::array<double, 3> axis{0.0, 0.0, 1.0};
  double angle = 0.0;
  double global_phase = 0.0;
};

AxisAngle axis_angle_of(const Matrix& u);
Matrix2 matrix_of(const AxisAngle& aa);

bool is_unitary(const Matrix& m, double tol);

// True iff some unit-modulus c satisfies max|A - cB| <= tol. c is fixed by
// the first entry (row-major) where B has modulus above tol.
bool equal_up_to_global_phase(const Matrix& a, const Matrix& b, double tol);

Matrix kron(const Matrix& a, const Matrix& b);

}  // namespace qdesk
