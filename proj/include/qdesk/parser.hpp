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

#include <string>
#include <string_view>

#include "qdesk/circuit.hpp"
#include "qdesk/errors.hpp"

namespace qdesk {

// Location-carrying error from the circuit text format. line and column are
// 1-based; column points at the first character of the offending token.
class ParseError : public Error {
 public:
  ParseError(int line, int column, std::string message, std::string token);

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }
  const std::string& token() const noexcept { return token_; }

 private:
  int line_;
  int column_;
  std::string message_;
  std::string token_;
};

// Thrown by serialize_circuit for ops the text format cannot express.
class UnsupportedGateError : public Error {
 public:
  UnsupportedGateError(std::size_t op_index, const std::string& what)
      : Error(ExitCode::input, what), op_index_(op_index) {}
  std::size_t op_index() const noexcept { return op_index_; }

 private:
  std::size_t op_index_;
};

// Line-oriented circuit text (".jq"):
//
//   # comment                      anywhere after '#'
//   QUBITS 4                       optional, before the first gate
//   H 0                            I H X Y Z S T  S+ T+  +X -X +Y -Y
//   R 2 3 / R 2 -3                 phase 2 pi / 2^k, negative k = dagger
//   U 0 1 2 / U 0 1 -2             controlled R(k)
//   U1 n l / U2 n p l / U3 n t p l
//   CNOT c t / TOFFOLI c1 c2 t
//   RX n a / RY n a / RZ n a       rotations exp(-i a sigma / 2)
//   CZ a b / CS a b / CS+ a b / CPHASE c t l
//   BARRIER / MEASURE
//
// Mnemonics are case-insensitive; SDG, TDG and CX are accepted as aliases.
// Angles are decimal literals or pi forms such as pi, -pi/2, 2*pi, 0.5*pi/3.
// Without a QUBITS header the width is the largest index plus one.
Circuit parse_circuit(std::string_view source);

// Inverse of parse_circuit on everything it can express. Emits a QUBITS
// header, uppercase mnemonics, and angles with 17 significant digits.
std::string serialize_circuit(const Circuit& circuit);

// Decimal or pi-scaled angle; throws ArgumentError on malformed input.
double parse_angle(std::string_view token);

}  // namespace qdesk
