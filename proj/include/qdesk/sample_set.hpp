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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qdesk {

enum class ValueDomain { binary, spin };

struct SampleRow {
  std::string bits;  // one character per variable, variable 0 first
  std::optional<double> energy;
  std::int64_t occurrences = 1;
  double chain_break_fraction = 0.0;
};

// Aggregated measurement or solver output. For the SPIN domain each bit
// character encodes x = (1 + s) / 2, i.e. '1' is spin +1.
struct SampleSet {
  int num_variables = 0;
  ValueDomain domain = ValueDomain::binary;
  std::vector<SampleRow> rows;

  std::int64_t total_shots() const;
  // Occurrences of an exact bitstring, 0 when absent.
  std::int64_t count(const std::string& bits) const;

  // Merges duplicate bitstrings (occurrence-weighted chain-break fractions)
  // and sorts rows ascending by energy, then by bitstring.
  void normalize();
};

std::vector<int> spins_of(const std::string& bits);
std::string bits_of_spins(const std::vector<int>& spins);
std::vector<int> bits_of(const std::string& bits);
std::string bits_string(const std::vector<int>& bits);

}  // namespace qdesk
