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

#include "qdesk/parser.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <numbers>
#include <optional>
#include <sstream>
#include <vector>

namespace qdesk {

ParseError::ParseError(int line, int column, std::string message, std::string token)
    : Error(ExitCode::input, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message +
                                 (token.empty() ? std::string() : " (got '" + token + "')")),
      line_(line),
      column_(column),
      message_(std::move(message)),
      token_(std::move(token)) {}

namespace {

struct Token {
  std::string text;
  int column = 1;
};

std::string upper(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return out;
}

std::optional<double> parse_number(std::string_view s) {
  if (s.empty()) return std::nullopt;
  if (s.front() == '+') s.remove_prefix(1);
  double v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::optional<double> try_parse_angle(std::string_view tok) {
  if (auto v = parse_number(tok)) return v;
  const std::string u = upper(tok);
  const auto pos = u.find("PI");
  if (pos == std::string::npos) return std::nullopt;

  double coef = 1.0;
  std::string_view head = std::string_view(u).substr(0, pos);
  if (head == "-") {
    coef = -1.0;
  } else if (head == "+" || head.empty()) {
    coef = 1.0;
  } else {
    if (head.back() != '*') return std::nullopt;
    auto c = parse_number(head.substr(0, head.size() - 1));
    if (!c) return std::nullopt;
    coef = *c;
  }
  std::string_view tail = std::string_view(u).substr(pos + 2);
  double denom = 1.0;
  if (!tail.empty()) {
    if (tail.front() != '/') return std::nullopt;
    auto d = parse_number(tail.substr(1));
    if (!d || *d == 0.0) return std::nullopt;
    denom = *d;
  }
  return coef * std::numbers::pi / denom;
}

struct Spec {
  enum class Args { none, q1, q2, q3, rk, cuk, a1, a2, a3, qa1, q2a1 };
  Args args;
  std::optional<GateKind> kind;  // fixed kinds
};

struct LineParser {
  int line;
  const std::vector<Token>& toks;

  [[noreturn]] void fail(std::size_t i, const std::string& msg) const {
    if (i < toks.size()) throw ParseError(line, toks[i].column, msg, toks[i].text);
    const int col = toks.empty() ? 1 : toks.back().column + static_cast<int>(toks.back().text.size());
    throw ParseError(line, col, msg, "");
  }

  void expect_count(std::size_t n) const {
    if (toks.size() < n + 1) fail(toks.size(), "expected " + std::to_string(n) + " argument(s) after " + toks[0].text);
    if (toks.size() > n + 1) fail(n + 1, "unexpected extra argument");
  }

  int qubit(std::size_t i) const {
    const std::string& t = toks[i].text;
    long long v = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || ptr != t.data() + t.size()) fail(i, "expected integer qubit index");
    if (v < 0) fail(i, "qubit index must be non-negative");
    if (v > 1'000'000) fail(i, "qubit index too large");
    return static_cast<int>(v);
  }

  // Signed k; the dagger flag is the presence of a leading '-', so "-0" is
  // the dagger of R(0).
  std::pair<int, bool> signed_k(std::size_t i) const {
    std::string_view t = toks[i].text;
    bool dagger = false;
    if (!t.empty() && (t.front() == '-' || t.front() == '+')) {
      dagger = t.front() == '-';
      t.remove_prefix(1);
    }
    int v = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || t.front() == '-' || t.front() == '+' || ec != std::errc() || ptr != t.data() + t.size()) {
      fail(i, "expected integer k");
    }
    if (v > 1000) fail(i, "k too large");
    return {v, dagger};
  }

  double angle(std::size_t i) const {
    auto v = try_parse_angle(toks[i].text);
    if (!v) fail(i, "expected angle (decimal or pi form)");
    return *v;
  }
};

const std::vector<std::pair<std::string_view, Spec>>& mnemonics() {
  using A = Spec::Args;
  static const std::vector<std::pair<std::string_view, Spec>> table = {
      {"I", {A::q1, GateKind::I}},         {"H", {A::q1, GateKind::H}},          {"X", {A::q1, GateKind::X}},
      {"Y", {A::q1, GateKind::Y}},         {"Z", {A::q1, GateKind::Z}},          {"S", {A::q1, GateKind::S}},
      {"S+", {A::q1, GateKind::Sdg}},      {"SDG", {A::q1, GateKind::Sdg}},      {"T", {A::q1, GateKind::T}},
      {"T+", {A::q1, GateKind::Tdg}},      {"TDG", {A::q1, GateKind::Tdg}},      {"+X", {A::q1, GateKind::PlusX}},
      {"-X", {A::q1, GateKind::MinusX}},   {"+Y", {A::q1, GateKind::PlusY}},     {"-Y", {A::q1, GateKind::MinusY}},
      {"R", {A::rk, std::nullopt}},        {"U", {A::cuk, std::nullopt}},        {"U1", {A::a1, GateKind::U1}},
      {"U2", {A::a2, GateKind::U2}},       {"U3", {A::a3, GateKind::U3}},        {"RX", {A::qa1, GateKind::Rx}},
      {"RY", {A::qa1, GateKind::Ry}},      {"RZ", {A::qa1, GateKind::Rz}},       {"CNOT", {A::q2, GateKind::CNOT}},
      {"CX", {A::q2, GateKind::CNOT}},     {"CZ", {A::q2, GateKind::CZ}},        {"CS", {A::q2, GateKind::CS}},
      {"CS+", {A::q2, GateKind::CSdg}},    {"CPHASE", {A::q2a1, GateKind::CPhase}}, {"TOFFOLI", {A::q3, GateKind::Toffoli}},
  };
  return table;
}

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> toks;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (c == '#') break;
    if (c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f') {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && line[i] != '#' && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    toks.push_back({std::string(line.substr(start, i - start)), static_cast<int>(start) + 1});
  }
  return toks;
}

std::string format_angle(double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", a);
  return buf;
}

}  // namespace

double parse_angle(std::string_view token) {
  auto v = try_parse_angle(token);
  if (!v) throw ArgumentError("malformed angle '" + std::string(token) + "'");
  return *v;
}

Circuit parse_circuit(std::string_view source) {
  if (source.starts_with("\xEF\xBB\xBF")) source.remove_prefix(3);

  std::optional<int> header;
  bool measure = false;
  std::vector<GateOp> ops;
  int max_index = -1;
  bool any_statement = false;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= source.size()) {
    const std::size_t end = std::min(source.find('\n', pos), source.size());
    std::string_view line = source.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    const auto toks = tokenize(line);
    if (toks.empty()) {
      if (end == source.size()) break;
      continue;
    }
    LineParser lp{line_no, toks};
    const std::string mnem = upper(toks[0].text);

    if (mnem == "QUBITS") {
      if (header) lp.fail(0, "duplicate QUBITS header");
      if (any_statement) lp.fail(0, "QUBITS header must precede all gates");
      lp.expect_count(1);
      const int n = lp.qubit(1);
      if (n < 1) lp.fail(1, "QUBITS needs a positive count");
      header = n;
      continue;
    }
    any_statement = true;
    if (mnem == "BARRIER") {
      lp.expect_count(0);
      ops.push_back(barrier_op());
      continue;
    }
    if (mnem == "MEASURE") {
      lp.expect_count(0);
      measure = true;
      continue;
    }

    const auto& table = mnemonics();
    auto it = std::find_if(table.begin(), table.end(), [&](const auto& e) { return e.first == mnem; });
    if (it == table.end()) lp.fail(0, "unknown gate mnemonic");
    const Spec& spec = it->second;

    GateOp op;
    std::vector<std::size_t> qubit_tokens;
    using A = Spec::Args;
    switch (spec.args) {
      case A::q1:
        lp.expect_count(1);
        qubit_tokens = {1};
        op.gate = Gate::make(*spec.kind);
        break;
      case A::q2:
        lp.expect_count(2);
        qubit_tokens = {1, 2};
        op.gate = Gate::make(*spec.kind);
        break;
      case A::q3:
        lp.expect_count(3);
        qubit_tokens = {1, 2, 3};
        op.gate = Gate::make(*spec.kind);
        break;
      case A::rk: {
        lp.expect_count(2);
        qubit_tokens = {1};
        auto [k, dag] = lp.signed_k(2);
        op.gate = Gate::rk(k, dag);
        break;
      }
      case A::cuk: {
        lp.expect_count(3);
        qubit_tokens = {1, 2};
        auto [k, dag] = lp.signed_k(3);
        op.gate = Gate::cu(k, dag);
        break;
      }
      case A::a1:
      case A::qa1:
        lp.expect_count(2);
        qubit_tokens = {1};
        op.gate = *spec.kind == GateKind::U1   ? Gate::u1(lp.angle(2))
                  : *spec.kind == GateKind::Rx ? Gate::rx(lp.angle(2))
                  : *spec.kind == GateKind::Ry ? Gate::ry(lp.angle(2))
                                               : Gate::rz(lp.angle(2));
        break;
      case A::a2:
        lp.expect_count(3);
        qubit_tokens = {1};
        op.gate = Gate::u2(lp.angle(2), lp.angle(3));
        break;
      case A::a3:
        lp.expect_count(4);
        qubit_tokens = {1};
        op.gate = Gate::u3(lp.angle(2), lp.angle(3), lp.angle(4));
        break;
      case A::q2a1:
        lp.expect_count(3);
        qubit_tokens = {1, 2};
        op.gate = Gate::cphase(lp.angle(3));
        break;
      case A::none:
        lp.expect_count(0);
        break;
    }
    for (std::size_t ti : qubit_tokens) {
      const int q = lp.qubit(ti);
      if (header && q >= *header) {
        lp.fail(ti, "qubit index exceeds QUBITS " + std::to_string(*header));
      }
      if (std::find(op.qubits.begin(), op.qubits.end(), q) != op.qubits.end()) lp.fail(ti, "duplicate qubit index");
      op.qubits.push_back(q);
      max_index = std::max(max_index, q);
    }
    ops.push_back(std::move(op));
  }

  if (!header && max_index < 0) throw ParseError(1, 1, "empty circuit: no QUBITS header and no gates", "");
  Circuit circuit(header ? *header : max_index + 1);
  for (const auto& op : ops) circuit.add(op);
  circuit.set_measure_all(measure);
  return circuit;
}

std::string serialize_circuit(const Circuit& circuit) {
  std::ostringstream out;
  out << "QUBITS " << circuit.num_qubits() << '\n';
  const auto& ops = circuit.ops();
  for (std::size_t i = 0; i < ops.size(); ++i) {
    const GateOp& op = ops[i];
    if (op.barrier) {
      out << "BARRIER\n";
      continue;
    }
    const auto& q = op.qubits;
    const auto a = op.gate.angles();
    const int k = op.gate.k();
    switch (op.gate.kind()) {
      case GateKind::I: out << "I " << q[0]; break;
      case GateKind::H: out << "H " << q[0]; break;
      case GateKind::X: out << "X " << q[0]; break;
      case GateKind::Y: out << "Y " << q[0]; break;
      case GateKind::Z: out << "Z " << q[0]; break;
      case GateKind::S: out << "S " << q[0]; break;
      case GateKind::Sdg: out << "S+ " << q[0]; break;
      case GateKind::T: out << "T " << q[0]; break;
      case GateKind::Tdg: out << "T+ " << q[0]; break;
      case GateKind::PlusX: out << "+X " << q[0]; break;
      case GateKind::MinusX: out << "-X " << q[0]; break;
      case GateKind::PlusY: out << "+Y " << q[0]; break;
      case GateKind::MinusY: out << "-Y " << q[0]; break;
      case GateKind::Rk: out << "R " << q[0] << ' ' << k; break;
      case GateKind::Rkdg: out << "R " << q[0] << " -" << k; break;
      case GateKind::CUk: out << "U " << q[0] << ' ' << q[1] << ' ' << k; break;
      case GateKind::CUkdg: out << "U " << q[0] << ' ' << q[1] << " -" << k; break;
      case GateKind::U1: out << "U1 " << q[0] << ' ' << format_angle(a[0]); break;
      case GateKind::U2: out << "U2 " << q[0] << ' ' << format_angle(a[0]) << ' ' << format_angle(a[1]); break;
      case GateKind::U3:
        out << "U3 " << q[0] << ' ' << format_angle(a[0]) << ' ' << format_angle(a[1]) << ' ' << format_angle(a[2]);
        break;
      case GateKind::Rx: out << "RX " << q[0] << ' ' << format_angle(a[0]); break;
      case GateKind::Ry: out << "RY " << q[0] << ' ' << format_angle(a[0]); break;
      case GateKind::Rz: out << "RZ " << q[0] << ' ' << format_angle(a[0]); break;
      case GateKind::CNOT: out << "CNOT " << q[0] << ' ' << q[1]; break;
      case GateKind::CZ: out << "CZ " << q[0] << ' ' << q[1]; break;
      case GateKind::CS: out << "CS " << q[0] << ' ' << q[1]; break;
      case GateKind::CSdg: out << "CS+ " << q[0] << ' ' << q[1]; break;
      case GateKind::CPhase: out << "CPHASE " << q[0] << ' ' << q[1] << ' ' << format_angle(a[0]); break;
      case GateKind::Toffoli: out << "TOFFOLI " << q[0] << ' ' << q[1] << ' ' << q[2]; break;
      case GateKind::Custom1Q:
      case GateKind::Custom2Q:
        throw UnsupportedGateError(i, "op " + std::to_string(i) + " is a custom matrix gate, which has no text form");
    }
    out << '\n';
  }
  if (circuit.measure_all()) out << "MEASURE\n";
  return out.str();
}

}  // namespace qdesk
