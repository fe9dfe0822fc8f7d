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

#include "json.hpp"
#include "qdesk/embed.hpp"
#include "qdesk/ising.hpp"
#include "qdesk/sample_set.hpp"

namespace qdesk {

using Json = nlohmann::ordered_json;

// Problem file:
//   {"type": "ising" | "qubo", "num_variables": N,
//    "linear": {"i": v}, "quadratic": {"i,j": v}, "offset": v}
// Keys are decimal indices; "i,j" needs i < j for Ising and i <= j for QUBO.
// linear, quadratic and offset are optional. Other fields are ignored.
struct Problem {
  enum class Type { ising, qubo };
  Type type = Type::ising;
  IsingModel ising;  // set when type == ising
  QuboModel qubo;    // set when type == qubo

  int num_variables() const;
  // The Ising form, converted energy-exactly from a QUBO.
  IsingModel as_ising() const;
};

// Schema errors are ValidationErrors naming the offending field.
Problem parse_problem_json(const std::string& text);
std::string problem_json(const IsingModel& model);
std::string problem_json(const QuboModel& model);

// {"chains": {"0": [4, 7], ...}}
Embedding parse_embedding_json(const std::string& text);
std::string embedding_json(const Embedding& emb);

// {"num_variables": N, "domain": "BINARY" | "SPIN", "total_shots": S,
//  "rows": [{"sample": "011", "energy": e, "occurrences": k,
//            "chain_break_fraction": f}], "metadata": {...}}
// energy is omitted when absent.
Json sample_set_to_json(const SampleSet& samples, const Json& metadata = Json::object());
SampleSet parse_sample_set_json(const std::string& text);

// Two-space indented dump with a trailing newline.
std::string dump(const Json& j);

}  // namespace qdesk
