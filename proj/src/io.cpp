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

#include "qdesk/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "qdesk/errors.hpp"

namespace qdesk {

namespace {

Json parse_text(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ValidationError(what + " is not valid JSON: " + e.what());
  }
}

[[noreturn]] void schema(const std::string& field, const std::string& msg) {
  throw ValidationError("field '" + field + "': " + msg);
}

int parse_index(std::string_view s, const std::string& field) {
  int v = -1;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || v < 0) {
    schema(field, "key '" + std::string(s) + "' is not a non-negative decimal index");
  }
  return v;
}

double number(const Json& j, const std::string& field) {
  if (!j.is_number()) schema(field, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) schema(field, "expected a finite number");
  return v;
}

}  // namespace

int Problem::num_variables() const { return type == Type::ising ? ising.num_variables() : qubo.num_variables(); }

IsingModel Problem::as_ising() const { return type == Type::ising ? ising : qubo_to_ising(qubo); }

Problem parse_problem_json(const std::string& text) {
  const Json j = parse_text(text, "problem file");
  if (!j.is_object()) schema("(root)", "expected an object");
  if (!j.contains("type") || !j["type"].is_string()) schema("type", "expected \"ising\" or \"qubo\"");
  const std::string type = j["type"].get<std::string>();
  if (type != "ising" && type != "qubo") schema("type", "expected \"ising\" or \"qubo\", got \"" + type + "\"");
  if (!j.contains("num_variables") || !j["num_variables"].is_number_integer() || j["num_variables"].get<long long>() < 0 ||
      j["num_variables"].get<long long>() > 1'000'000) {
    schema("num_variables", "expected a non-negative integer");
  }
  const int n = j["num_variables"].get<int>();
  const double offset = j.contains("offset") ? number(j["offset"], "offset") : 0.0;

  Problem p;
  p.type = type == "ising" ? Problem::Type::ising : Problem::Type::qubo;
  p.ising = IsingModel(n, offset);
  p.qubo = QuboModel(n, offset);

  if (j.contains("linear")) {
    if (!j["linear"].is_object()) schema("linear", "expected an object");
    for (const auto& [key, value] : j["linear"].items()) {
      const std::string field = "linear." + key;
      const int i = parse_index(key, field);
      if (i >= n) schema(field, "index " + std::to_string(i) + " >= num_variables " + std::to_string(n));
      const double v = number(value, field);
      if (p.type == Problem::Type::ising) {
        p.ising.add_h(i, v);
      } else {
        p.qubo.add_Q(i, i, v);
      }
    }
  }
  if (j.contains("quadratic")) {
    if (!j["quadratic"].is_object()) schema("quadratic", "expected an object");
    for (const auto& [key, value] : j["quadratic"].items()) {
      const std::string field = "quadratic." + key;
      const auto comma = key.find(',');
      if (comma == std::string::npos) schema(field, "key must be \"i,j\"");
      const int i = parse_index(std::string_view(key).substr(0, comma), field);
      const int k = parse_index(std::string_view(key).substr(comma + 1), field);
      if (i >= n || k >= n) schema(field, "index >= num_variables " + std::to_string(n));
      const double v = number(value, field);
      if (p.type == Problem::Type::ising) {
        if (!(i < k)) schema(field, "Ising couplings need i < j");
        p.ising.add_J(i, k, v);
      } else {
        if (!(i <= k)) schema(field, "QUBO entries need i <= j");
        p.qubo.add_Q(i, k, v);
      }
    }
  }
  return p;
}

std::string problem_json(const IsingModel& model) {
  Json j;
  j["type"] = "ising";
  j["num_variables"] = model.num_variables();
  j["linear"] = Json::object();
  for (const auto& [i, v] : model.h()) j["linear"][std::to_string(i)] = v;
  j["quadratic"] = Json::object();
  for (const auto& [ij, v] : model.J()) j["quadratic"][std::to_string(ij.first) + "," + std::to_string(ij.second)] = v;
  j["offset"] = model.offset();
  return dump(j);
}

std::string problem_json(const QuboModel& model) {
  Json j;
  j["type"] = "qubo";
  j["num_variables"] = model.num_variables();
  j["linear"] = Json::object();
  j["quadratic"] = Json::object();
  for (const auto& [ij, v] : model.Q()) {
    if (ij.first == ij.second) {
      j["linear"][std::to_string(ij.first)] = v;
    } else {
      j["quadratic"][std::to_string(ij.first) + "," + std::to_string(ij.second)] = v;
    }
  }
  j["offset"] = model.offset();
  return dump(j);
}

Embedding parse_embedding_json(const std::string& text) {
  const Json j = parse_text(text, "embedding file");
  if (!j.is_object() || !j.contains("chains") || !j["chains"].is_object()) schema("chains", "expected an object");
  Embedding emb;
  for (const auto& [key, value] : j["chains"].items()) {
    const std::string field = "chains." + key;
    const int var = parse_index(key, field);
    if (!value.is_array()) schema(field, "expected an array of node indices");
    std::vector<int> chain;
    for (const auto& node : value) {
      if (!node.is_number_integer() || node.get<long long>() < 0 || node.get<long long>() > 10'000'000) {
        schema(field, "node indices must be non-negative integers");
      }
      chain.push_back(node.get<int>());
    }
    std::sort(chain.begin(), chain.end());
    emb[var] = std::move(chain);
  }
  return emb;
}

std::string embedding_json(const Embedding& emb) {
  Json j;
  j["chains"] = Json::object();
  for (const auto& [var, chain] : emb) j["chains"][std::to_string(var)] = chain;
  return dump(j);
}

Json sample_set_to_json(const SampleSet& samples, const Json& metadata) {
  Json j;
  j["num_variables"] = samples.num_variables;
  j["domain"] = samples.domain == ValueDomain::spin ? "SPIN" : "BINARY";
  j["total_shots"] = samples.total_shots();
  j["rows"] = Json::array();
  for (const auto& row : samples.rows) {
    Json r;
    r["sample"] = row.bits;
    if (row.energy) r["energy"] = *row.energy;
    r["occurrences"] = row.occurrences;
    r["chain_break_fraction"] = row.chain_break_fraction;
    j["rows"].push_back(std::move(r));
  }
  j["metadata"] = metadata;
  return j;
}

SampleSet parse_sample_set_json(const std::string& text) {
  const Json j = parse_text(text, "sample set");
  if (!j.is_object()) schema("(root)", "expected an object");
  SampleSet s;
  if (!j.contains("num_variables") || !j["num_variables"].is_number_integer()) {
    schema("num_variables", "expected an integer");
  }
  s.num_variables = j["num_variables"].get<int>();
  if (!j.contains("domain") || !j["domain"].is_string()) schema("domain", "expected \"BINARY\" or \"SPIN\"");
  const auto domain = j["domain"].get<std::string>();
  if (domain != "BINARY" && domain != "SPIN") schema("domain", "expected \"BINARY\" or \"SPIN\"");
  s.domain = domain == "SPIN" ? ValueDomain::spin : ValueDomain::binary;
  if (!j.contains("rows") || !j["rows"].is_array()) schema("rows", "expected an array");
  for (std::size_t i = 0; i < j["rows"].size(); ++i) {
    const Json& r = j["rows"][i];
    const std::string field = "rows[" + std::to_string(i) + "]";
    if (!r.is_object() || !r.contains("sample") || !r["sample"].is_string()) schema(field + ".sample", "expected a bitstring");
    SampleRow row;
    row.bits = r["sample"].get<std::string>();
    if (static_cast<int>(row.bits.size()) != s.num_variables ||
        row.bits.find_first_not_of("01") != std::string::npos) {
      schema(field + ".sample", "expected " + std::to_string(s.num_variables) + " characters of 0/1");
    }
    if (r.contains("energy")) row.energy = number(r["energy"], field + ".energy");
    if (!r.contains("occurrences") || !r["occurrences"].is_number_integer() || r["occurrences"].get<long long>() < 1) {
      schema(field + ".occurrences", "expected a positive integer");
    }
    row.occurrences = r["occurrences"].get<std::int64_t>();
    if (r.contains("chain_break_fraction")) {
      row.chain_break_fraction = number(r["chain_break_fraction"], field + ".chain_break_fraction");
    }
    s.rows.push_back(std::move(row));
  }
  return s;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace qdesk
