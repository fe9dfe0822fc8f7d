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

#include "qdesk/sample_set.hpp"

#include <algorithm>
#include <map>

#include "qdesk/errors.hpp"

namespace qdesk {

std::int64_t SampleSet::total_shots() const {
  std::int64_t total = 0;
  for (const auto& r : rows) total += r.occurrences;
  return total;
}

std::int64_t SampleSet::count(const std::string& bits) const {
  for (const auto& r : rows) {
    if (r.bits == bits) return r.occurrences;
  }
  return 0;
}

void SampleSet::normalize() {
  std::map<std::string, SampleRow> merged;
  for (auto& r : rows) {
    auto [it, inserted] = merged.emplace(r.bits, r);
    if (!inserted) {
      SampleRow& m = it->second;
      const double total = static_cast<double>(m.occurrences + r.occurrences);
      m.chain_break_fraction =
          (m.chain_break_fraction * static_cast<double>(m.occurrences) +
           r.chain_break_fraction * static_cast<double>(r.occurrences)) /
          total;
      m.occurrences += r.occurrences;
    }
  }
  rows.clear();
  for (auto& [bits, r] : merged) rows.push_back(std::move(r));
  std::stable_sort(rows.begin(), rows.end(), [](const SampleRow& a, const SampleRow& b) {
    if (a.energy && b.energy && *a.energy != *b.energy) return *a.energy < *b.energy;
    return a.bits < b.bits;
  });
}

std::vector<int> spins_of(const std::string& bits) {
  std::vector<int> s;
  s.reserve(bits.size());
  for (char c : bits) {
    if (c != '0' && c != '1') throw ArgumentError("bitstring may contain only '0' and '1'");
    s.push_back(c == '1' ? 1 : -1);
  }
  return s;
}

std::string bits_of_spins(const std::vector<int>& spins) {
  std::string out;
  out.reserve(spins.size());
  for (int s : spins) out.push_back(s > 0 ? '1' : '0');
  return out;
}

std::vector<int> bits_of(const std::string& bits) {
  std::vector<int> x;
  x.reserve(bits.size());
  for (char c : bits) {
    if (c != '0' && c != '1') throw ArgumentError("bitstring may contain only '0' and '1'");
    x.push_back(c == '1');
  }
  return x;
}

std::string bits_string(const std::vector<int>& bits) {
  std::string out;
  out.reserve(bits.size());
  for (int b : bits) out.push_back(b ? '1' : '0');
  return out;
}

}  // namespace qdesk
