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

#include "qdesk/gates.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qdesk/errors.hpp"

namespace qdesk {

namespace {

using std::numbers::pi;
constexpr double kInvSqrt2 = 0.70710678118654752440;
const Complex kI{0.0, 1.0};

// exp(sign * 2 pi i / 2^k), exact for the k where the value is representable.
Complex phase_power_of_two(int k, int sign) {
  switch (k) {
    case 0:
      return 1.0;
    case 1:
      return -1.0;
    case 2:
      return Complex{0.0, static_cast<double>(sign)};
    case 3:
      return Complex{kInvSqrt2, sign * kInvSqrt2};
    default:
      return std::polar(1.0, sign * 2.0 * pi / std::ldexp(1.0, k));
  }
}

Matrix diag2(Complex a, Complex b) {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

Matrix diag4(Complex last) {
  Matrix m = Matrix::Identity(4, 4);
  m(3, 3) = last;
  return m;
}

Matrix controlled(const Matrix& base, int controls) {
  const Eigen::Index dim = base.rows() << controls;
  Matrix m = Matrix::Identity(dim, dim);
  m.bottomRightCorner(base.rows(), base.cols()) = base;
  return m;
}

Matrix from2(Complex a, Complex b, Complex c, Complex d) {
  Matrix m(2, 2);
  m << a, b, c, d;
  return m;
}

void require_k(int k) {
  if (k < 0) throw ArgumentError("k must be non-negative, got " + std::to_string(k));
}

}  // namespace

std::string_view name(GateKind kind) {
  switch (kind) {
    case GateKind::I: return "I";
    case GateKind::H: return "H";
    case GateKind::X: return "X";
    case GateKind::Y: return "Y";
    case GateKind::Z: return "Z";
    case GateKind::S: return "S";
    case GateKind::Sdg: return "Sdg";
    case GateKind::T: return "T";
    case GateKind::Tdg: return "Tdg";
    case GateKind::U1: return "U1";
    case GateKind::U2: return "U2";
    case GateKind::U3: return "U3";
    case GateKind::PlusX: return "PlusX";
    case GateKind::MinusX: return "MinusX";
    case GateKind::PlusY: return "PlusY";
    case GateKind::MinusY: return "MinusY";
    case GateKind::Rk: return "Rk";
    case GateKind::Rkdg: return "Rkdg";
    case GateKind::Rx: return "Rx";
    case GateKind::Ry: return "Ry";
    case GateKind::Rz: return "Rz";
    case GateKind::CNOT: return "CNOT";
    case GateKind::CUk: return "CUk";
    case GateKind::CUkdg: return "CUkdg";
    case GateKind::CPhase: return "CPhase";
    case GateKind::CZ: return "CZ";
    case GateKind::CS: return "CS";
    case GateKind::CSdg: return "CSdg";
    case GateKind::Toffoli: return "Toffoli";
    case GateKind::Custom1Q: return "Custom1Q";
    case GateKind::Custom2Q: return "Custom2Q";
  }
  return "?";
}

int arity(GateKind kind) {
  switch (kind) {
    case GateKind::CNOT:
    case GateKind::CUk:
    case GateKind::CUkdg:
    case GateKind::CPhase:
    case GateKind::CZ:
    case GateKind::CS:
    case GateKind::CSdg:
    case GateKind::Custom2Q:
      return 2;
    case GateKind::Toffoli:
      return 3;
    default:
      return 1;
  }
}

Gate Gate::make(GateKind kind) {
  switch (kind) {
    case GateKind::U1:
    case GateKind::U2:
    case GateKind::U3:
    case GateKind::Rx:
    case GateKind::Ry:
    case GateKind::Rz:
    case GateKind::CPhase:
    case GateKind::Rk:
    case GateKind::Rkdg:
    case GateKind::CUk:
    case GateKind::CUkdg:
    case GateKind::Custom1Q:
    case GateKind::Custom2Q:
      throw ArgumentError(std::string("gate ") + std::string(name(kind)) + " needs parameters");
    default:
      return Gate(kind, {}, 0);
  }
}

Gate Gate::u1(double lambda) { return Gate(GateKind::U1, {lambda}, 0); }
Gate Gate::u2(double phi, double lambda) { return Gate(GateKind::U2, {phi, lambda}, 0); }
Gate Gate::u3(double theta, double phi, double lambda) { return Gate(GateKind::U3, {theta, phi, lambda}, 0); }
Gate Gate::rx(double theta) { return Gate(GateKind::Rx, {theta}, 0); }
Gate Gate::ry(double theta) { return Gate(GateKind::Ry, {theta}, 0); }
Gate Gate::rz(double theta) { return Gate(GateKind::Rz, {theta}, 0); }
Gate Gate::cphase(double lambda) { return Gate(GateKind::CPhase, {lambda}, 0); }

Gate Gate::rk(int k, bool dagger) {
  require_k(k);
  return Gate(dagger ? GateKind::Rkdg : GateKind::Rk, {}, k);
}

Gate Gate::cu(int k, bool dagger) {
  require_k(k);
  return Gate(dagger ? GateKind::CUkdg : GateKind::CUk, {}, k);
}

Gate Gate::custom(const Matrix& m) {
  GateKind kind;
  if (m.rows() == 2 && m.cols() == 2) {
    kind = GateKind::Custom1Q;
  } else if (m.rows() == 4 && m.cols() == 4) {
    kind = GateKind::Custom2Q;
  } else {
    throw ValidationError("custom gate must be 2x2 or 4x4");
  }
  if (!is_unitary(m, 1e-12)) throw ValidationError("custom gate matrix is not unitary within 1e-12");
  Gate g(kind, {}, 0);
  g.custom_ = std::make_shared<const Matrix>(m);
  return g;
}

const Matrix& Gate::custom_matrix() const {
  if (!custom_) throw ArgumentError("gate has no custom matrix");
  return *custom_;
}

bool operator==(const Gate& a, const Gate& b) {
  if (a.kind_ != b.kind_ || a.k_ != b.k_ || a.angles_ != b.angles_) return false;
  if (a.custom_ && b.custom_) return *a.custom_ == *b.custom_;
  return !a.custom_ && !b.custom_;
}

bool same_gate(const Gate& a, const Gate& b, double tol) {
  if (a.kind() != b.kind() || a.k() != b.k() || a.angles().size() != b.angles().size()) return false;
  for (std::size_t i = 0; i < a.angles().size(); ++i) {
    if (std::abs(a.angles()[i] - b.angles()[i]) > tol) return false;
  }
  if (a.kind() == GateKind::Custom1Q || a.kind() == GateKind::Custom2Q) {
    return (a.custom_matrix() - b.custom_matrix()).cwiseAbs().maxCoeff() <= tol;
  }
  return true;
}

Matrix matrix_of(const Gate& gate) {
  const auto angles = gate.angles();
  switch (gate.kind()) {
    case GateKind::I:
      return Matrix::Identity(2, 2);
    case GateKind::H:
      return from2(kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2);
    case GateKind::X:
      return from2(0.0, 1.0, 1.0, 0.0);
    case GateKind::Y:
      return from2(0.0, -kI, kI, 0.0);
    case GateKind::Z:
      return diag2(1.0, -1.0);
    case GateKind::S:
      return diag2(1.0, kI);
    case GateKind::Sdg:
      return diag2(1.0, -kI);
    case GateKind::T:
      return diag2(1.0, Complex{kInvSqrt2, kInvSqrt2});
    case GateKind::Tdg:
      return diag2(1.0, Complex{kInvSqrt2, -kInvSqrt2});
    case GateKind::U1:
      return diag2(1.0, std::polar(1.0, angles[0]));
    case GateKind::U2: {
      const double phi = angles[0], lambda = angles[1];
      return from2(kInvSqrt2, -kInvSqrt2 * std::polar(1.0, lambda), kInvSqrt2 * std::polar(1.0, phi),
                   kInvSqrt2 * std::polar(1.0, phi + lambda));
    }
    case GateKind::U3: {
      const double theta = angles[0], phi = angles[1], lambda = angles[2];
      const double c = std::cos(theta / 2), s = std::sin(theta / 2);
      return from2(c, -s * std::polar(1.0, lambda), s * std::polar(1.0, phi), c * std::polar(1.0, phi + lambda));
    }
    case GateKind::PlusX:
      return from2(kInvSqrt2, kI * kInvSqrt2, kI * kInvSqrt2, kInvSqrt2);
    case GateKind::MinusX:
      return from2(kInvSqrt2, -kI * kInvSqrt2, -kI * kInvSqrt2, kInvSqrt2);
    case GateKind::PlusY:
      return from2(kInvSqrt2, kInvSqrt2, -kInvSqrt2, kInvSqrt2);
    case GateKind::MinusY:
      return from2(kInvSqrt2, -kInvSqrt2, kInvSqrt2, kInvSqrt2);
    case GateKind::Rk:
      return diag2(1.0, phase_power_of_two(gate.k(), +1));
    case GateKind::Rkdg:
      return diag2(1.0, phase_power_of_two(gate.k(), -1));
    case GateKind::Rx:
      return rotation(Axis::x, angles[0]);
    case GateKind::Ry:
      return rotation(Axis::y, angles[0]);
    case GateKind::Rz:
      return rotation(Axis::z, angles[0]);
    case GateKind::CNOT:
      return controlled(from2(0.0, 1.0, 1.0, 0.0), 1);
    case GateKind::CUk:
      return diag4(phase_power_of_two(gate.k(), +1));
    case GateKind::CUkdg:
      return diag4(phase_power_of_two(gate.k(), -1));
    case GateKind::CPhase:
      return diag4(std::polar(1.0, angles[0]));
    case GateKind::CZ:
      return diag4(-1.0);
    case GateKind::CS:
      return diag4(kI);
    case GateKind::CSdg:
      return diag4(-kI);
    case GateKind::Toffoli:
      return controlled(from2(0.0, 1.0, 1.0, 0.0), 2);
    case GateKind::Custom1Q:
    case GateKind::Custom2Q:
      return gate.custom_matrix();
  }
  throw ArgumentError("unknown gate kind");
}

Gate dagger(const Gate& gate) {
  const auto a = gate.angles();
  switch (gate.kind()) {
    case GateKind::S: return Gate::make(GateKind::Sdg);
    case GateKind::Sdg: return Gate::make(GateKind::S);
    case GateKind::T: return Gate::make(GateKind::Tdg);
    case GateKind::Tdg: return Gate::make(GateKind::T);
    case GateKind::CS: return Gate::make(GateKind::CSdg);
    case GateKind::CSdg: return Gate::make(GateKind::CS);
    case GateKind::PlusX: return Gate::make(GateKind::MinusX);
    case GateKind::MinusX: return Gate::make(GateKind::PlusX);
    case GateKind::PlusY: return Gate::make(GateKind::MinusY);
    case GateKind::MinusY: return Gate::make(GateKind::PlusY);
    case GateKind::U1: return Gate::u1(-a[0]);
    // U2(phi, lambda)^dagger = U2(pi - lambda, pi - phi), entry by entry.
    case GateKind::U2: return Gate::u2(pi - a[1], pi - a[0]);
    case GateKind::U3: return Gate::u3(-a[0], -a[2], -a[1]);
    case GateKind::Rx: return Gate::rx(-a[0]);
    case GateKind::Ry: return Gate::ry(-a[0]);
    case GateKind::Rz: return Gate::rz(-a[0]);
    case GateKind::CPhase: return Gate::cphase(-a[0]);
    case GateKind::Rk: return Gate::rk(gate.k(), true);
    case GateKind::Rkdg: return Gate::rk(gate.k(), false);
    case GateKind::CUk: return Gate::cu(gate.k(), true);
    case GateKind::CUkdg: return Gate::cu(gate.k(), false);
    case GateKind::Custom1Q:
    case GateKind::Custom2Q:
      return Gate::custom(gate.custom_matrix().adjoint());
    default:
      return gate;  // Hermitian gates
  }
}

std::optional<ControlledForm> controlled_form(const Gate& gate) {
  switch (gate.kind()) {
    case GateKind::Custom2Q:
      return std::nullopt;
    case GateKind::CNOT:
      return ControlledForm{1, matrix_of(Gate::make(GateKind::X))};
    case GateKind::Toffoli:
      return ControlledForm{2, matrix_of(Gate::make(GateKind::X))};
    case GateKind::CUk:
    case GateKind::CUkdg:
    case GateKind::CPhase:
    case GateKind::CZ:
    case GateKind::CS:
    case GateKind::CSdg: {
      const Matrix m = matrix_of(gate);
      return ControlledForm{1, m.bottomRightCorner(2, 2)};
    }
    default:
      return ControlledForm{0, matrix_of(gate)};
  }
}

GateOp barrier_op() {
  GateOp op;
  op.barrier = true;
  return op;
}

bool same_op(const GateOp& a, const GateOp& b, double tol) {
  if (a.barrier || b.barrier) return a.barrier == b.barrier;
  return a.qubits == b.qubits && same_gate(a.gate, b.gate, tol);
}

Matrix2 rotation(Axis axis, double theta) {
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  Matrix2 m;
  switch (axis) {
    case Axis::x:
      m << c, Complex{0, -s}, Complex{0, -s}, c;
      break;
    case Axis::y:
      m << c, -s, s, c;
      break;
    case Axis::z:
      m << Complex{c, -s}, 0.0, 0.0, Complex{c, s};
      break;
  }
  return m;
}

AxisAngle axis_angle_of(const Matrix& u) {
  if (u.rows() != 2 || u.cols() != 2) throw ArgumentError("axis_angle_of expects a 2x2 matrix");
  if (!is_unitary(u, 1e-10)) throw ValidationError("axis_angle_of: matrix is not unitary within 1e-10");

  AxisAngle out;
  double alpha = std::arg(u.determinant()) / 2;
  const Matrix2 v = std::polar(1.0, -alpha) * u;
  // v = [[a, b], [-b*, a*]] with a = cos(t/2) - i sin(t/2) nz,
  // b = -sin(t/2) (ny + i nx).
  const Complex a = (v(0, 0) + std::conj(v(1, 1))) / 2.0;
  const Complex b = (v(0, 1) - std::conj(v(1, 0))) / 2.0;
  double nx = -b.imag(), ny = -b.real(), nz = -a.imag();
  const double s = std::sqrt(nx * nx + ny * ny + nz * nz);
  double theta = 2 * std::atan2(s, a.real());

  if (s < 1e-12) {
    out.axis = {0.0, 0.0, 1.0};
    out.angle = 0.0;
    if (a.real() < 0) alpha += pi;
  } else {
    nx /= s;
    ny /= s;
    nz /= s;
    const double first = std::abs(nx) > 1e-12 ? nx : (std::abs(ny) > 1e-12 ? ny : nz);
    if (first < 0) {
      // R_n(t) = e^{i pi} R_{-n}(2 pi - t)
      nx = -nx;
      ny = -ny;
      nz = -nz;
      theta = 2 * pi - theta;
      alpha += pi;
    }
    if (theta >= 2 * pi) {
      theta -= 2 * pi;
      alpha += pi;
    }
    out.axis = {nx, ny, nz};
    out.angle = theta;
  }
  alpha = std::remainder(alpha, 2 * pi);
  if (alpha <= -pi) alpha += 2 * pi;
  out.global_phase = alpha;
  return out;
}

Matrix2 matrix_of(const AxisAngle& aa) {
  const double c = std::cos(aa.angle / 2), s = std::sin(aa.angle / 2);
  const auto& n = aa.axis;
  Matrix2 m;
  m << Complex{c, -s * n[2]}, Complex{-s * n[1], -s * n[0]}, Complex{s * n[1], -s * n[0]}, Complex{c, s * n[2]};
  return std::polar(1.0, aa.global_phase) * m;
}

bool is_unitary(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  const Matrix p = m.adjoint() * m;
  return (p - Matrix::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff() <= tol;
}

bool equal_up_to_global_phase(const Matrix& a, const Matrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ArgumentError("equal_up_to_global_phase: shape mismatch");
  for (Eigen::Index i = 0; i < b.rows(); ++i) {
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
      if (std::abs(b(i, j)) <= tol) continue;
      if (std::abs(a(i, j)) <= tol) return false;
      const Complex ratio = a(i, j) / b(i, j);
      const Complex c = ratio / std::abs(ratio);
      return (a - c * b).cwiseAbs().maxCoeff() <= tol;
    }
  }
  return a.cwiseAbs().maxCoeff() <= tol;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

}  // namespace qdesk
