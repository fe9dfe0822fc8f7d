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

#include "qdesk/ising.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "qdesk/errors.hpp"

namespace qdesk {

namespace {

Edge ordered(int i, int j) { return i < j ? Edge{i, j} : Edge{j, i}; }

void check_range(int i, int n, const char* what) {
  if (i < 0 || i >= n) {
    throw IndexError(std::string(what) + " index " + std::to_string(i) + " out of range [0, " + std::to_string(n) +
                     ")");
  }
}

double degeneracy_tolerance(double e) { return 1e-9 * std::max(1.0, std::abs(e)); }

// Exhaustive scan in Gray-code order with incremental local fields. Returns
// indices (bit i set = spin +1) whose energy is near the minimum; callers
// re-evaluate them exactly.
std::vector<std::uint64_t> scan_minimum_candidates(const IsingModel& model) {
  const int n = model.num_variables();
  std::vector<std::vector<std::pair<int, double>>> adj(n);
  for (const auto& [e, v] : model.J()) {
    adj[e.first].emplace_back(e.second, v);
    adj[e.second].emplace_back(e.first, v);
  }
  std::vector<int> s(n, -1);
  std::vector<double> field(n);
  for (int i = 0; i < n; ++i) {
    double f = model.h(i);
    for (const auto& [j, v] : adj[i]) f += v * s[j];
    field[i] = f;
  }
  double e = energy(model, s);
  double scale = std::abs(model.offset());
  for (const auto& [i, v] : model.h()) scale += std::abs(v);
  for (const auto& [ij, v] : model.J()) scale += std::abs(v);
  const double slack = 1e-7 * std::max(1.0, scale);

  double best = e;
  std::vector<std::pair<std::uint64_t, double>> cands{{0, e}};
  std::uint64_t index = 0;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t t = 1; t < total; ++t) {
    const int b = std::countr_zero(t);
    e -= 2.0 * s[b] * field[b];
    s[b] = -s[b];
    for (const auto& [j, v] : adj[b]) field[j] += 2.0 * v * s[b];
    index ^= std::uint64_t{1} << b;
    if (e < best - slack) {
      best = e;
      std::erase_if(cands, [&](const auto& c) { return c.second > best + slack; });
      cands.emplace_back(index, e);
    } else if (e <= best + slack) {
      best = std::min(best, e);
      cands.emplace_back(index, e);
    }
  }
  std::vector<std::uint64_t> out;
  out.reserve(cands.size());
  for (const auto& c : cands) {
    if (c.second <= best + slack) out.push_back(c.first);
  }
  std::sort(out.begin(), out.end());
  return out;
}

void check_cap(int n, int max_vars) {
  if (n > max_vars) {
    throw CapacityError("brute force is capped at " + std::to_string(max_vars) + " variables, model has " +
                        std::to_string(n));
  }
}

}  // namespace

IsingModel::IsingModel(int num_variables, double offset) : num_variables_(num_variables), offset_(offset) {
  if (num_variables < 0) throw ArgumentError("num_variables must be non-negative");
}

void IsingModel::check_index(int i) const { check_range(i, num_variables_, "variable"); }

double IsingModel::h(int i) const {
  check_index(i);
  auto it = h_.find(i);
  return it == h_.end() ? 0.0 : it->second;
}

double IsingModel::J(int i, int j) const {
  check_index(i);
  check_index(j);
  auto it = J_.find(ordered(i, j));
  return it == J_.end() ? 0.0 : it->second;
}

void IsingModel::add_h(int i, double value) {
  check_index(i);
  h_[i] += value;
}

void IsingModel::add_J(int i, int j, double value) {
  check_index(i);
  check_index(j);
  if (i == j) throw IndexError("coupling needs two distinct variables, got (" + std::to_string(i) + ", " +
                               std::to_string(j) + ")");
  J_[ordered(i, j)] += value;
}

void IsingModel::set_h(int i, double value) {
  check_index(i);
  h_[i] = value;
}

void IsingModel::set_J(int i, int j, double value) {
  check_index(i);
  check_index(j);
  if (i == j) throw IndexError("coupling needs two distinct variables");
  J_[ordered(i, j)] = value;
}

void IsingModel::prune() {
  std::erase_if(h_, [](const auto& kv) { return kv.second == 0.0; });
  std::erase_if(J_, [](const auto& kv) { return kv.second == 0.0; });
}

std::vector<Edge> IsingModel::edges() const {
  std::vector<Edge> out;
  for (const auto& [e, v] : J_) {
    if (v != 0.0) out.push_back(e);
  }
  return out;
}

QuboModel::QuboModel(int num_variables, double offset) : num_variables_(num_variables), offset_(offset) {
  if (num_variables < 0) throw ArgumentError("num_variables must be non-negative");
}

void QuboModel::check_index(int i) const { check_range(i, num_variables_, "variable"); }

double QuboModel::Q(int i, int j) const {
  check_index(i);
  check_index(j);
  auto it = Q_.find(ordered(i, j));
  return it == Q_.end() ? 0.0 : it->second;
}

void QuboModel::add_Q(int i, int j, double value) {
  check_index(i);
  check_index(j);
  Q_[ordered(i, j)] += value;
}

void QuboModel::set_Q(int i, int j, double value) {
  check_index(i);
  check_index(j);
  Q_[ordered(i, j)] = value;
}

void QuboModel::prune() {
  std::erase_if(Q_, [](const auto& kv) { return kv.second == 0.0; });
}

bool operator==(const IsingModel& a, const IsingModel& b) {
  return a.num_variables() == b.num_variables() && a.h() == b.h() && a.J() == b.J() && a.offset() == b.offset();
}

bool operator==(const QuboModel& a, const QuboModel& b) {
  return a.num_variables() == b.num_variables() && a.Q() == b.Q() && a.offset() == b.offset();
}

double energy(const IsingModel& model, std::span<const int> spins) {
  if (static_cast<int>(spins.size()) != model.num_variables()) {
    throw ArgumentError("configuration has " + std::to_string(spins.size()) + " entries, model has " +
                        std::to_string(model.num_variables()) + " variables");
  }
  double e = model.offset();
  for (const auto& [i, v] : model.h()) e += v * spins[i];
  for (const auto& [ij, v] : model.J()) e += v * spins[ij.first] * spins[ij.second];
  return e;
}

double energy(const QuboModel& model, std::span<const int> bits) {
  if (static_cast<int>(bits.size()) != model.num_variables()) {
    throw ArgumentError("configuration has " + std::to_string(bits.size()) + " entries, model has " +
                        std::to_string(model.num_variables()) + " variables");
  }
  double e = model.offset();
  for (const auto& [ij, v] : model.Q()) {
    if (bits[ij.first] && bits[ij.second]) e += v;
  }
  return e;
}

IsingModel qubo_to_ising(const QuboModel& q) {
  IsingModel m(q.num_variables(), q.offset());
  for (const auto& [ij, v] : q.Q()) {
    const auto [i, j] = ij;
    if (i == j) {
      // a x = a/2 + (a/2) s
      m.add_h(i, v / 2);
      m.add_offset(v / 2);
    } else {
      // b x_i x_j = (b/4)(1 + s_i + s_j + s_i s_j)
      m.add_J(i, j, v / 4);
      m.add_h(i, v / 4);
      m.add_h(j, v / 4);
      m.add_offset(v / 4);
    }
  }
  m.prune();
  return m;
}

QuboModel ising_to_qubo(const IsingModel& m) {
  QuboModel q(m.num_variables(), m.offset());
  for (const auto& [i, v] : m.h()) {
    // h s = 2h x - h
    q.add_Q(i, i, 2 * v);
    q.add_offset(-v);
  }
  for (const auto& [ij, v] : m.J()) {
    // J s_i s_j = J (4 x_i x_j - 2 x_i - 2 x_j + 1)
    q.add_Q(ij.first, ij.second, 4 * v);
    q.add_Q(ij.first, ij.first, -2 * v);
    q.add_Q(ij.second, ij.second, -2 * v);
    q.add_offset(v);
  }
  q.prune();
  return q;
}

std::vector<int> spins_from_index(std::uint64_t index, int num_variables) {
  std::vector<int> s(num_variables);
  for (int i = 0; i < num_variables; ++i) s[i] = (index >> i) & 1 ? 1 : -1;
  return s;
}

GroundStates brute_force_solve(const IsingModel& model, int max_vars) {
  check_cap(model.num_variables(), max_vars);
  GroundStates out;
  std::vector<std::pair<std::vector<int>, double>> exact;
  for (std::uint64_t idx : scan_minimum_candidates(model)) {
    auto s = spins_from_index(idx, model.num_variables());
    const double e = energy(model, s);
    exact.emplace_back(std::move(s), e);
  }
  double best = exact.front().second;
  for (const auto& c : exact) best = std::min(best, c.second);
  for (auto& c : exact) {
    if (c.second <= best + degeneracy_tolerance(best)) out.configs.push_back(std::move(c.first));
  }
  out.energy = best;
  return out;
}

GroundStates brute_force_solve(const QuboModel& model, int max_vars) {
  check_cap(model.num_variables(), max_vars);
  const IsingModel spin = qubo_to_ising(model);
  GroundStates out;
  std::vector<std::pair<std::vector<int>, double>> exact;
  for (std::uint64_t idx : scan_minimum_candidates(spin)) {
    std::vector<int> x(model.num_variables());
    for (int i = 0; i < model.num_variables(); ++i) x[i] = (idx >> i) & 1;
    const double e = energy(model, x);
    exact.emplace_back(std::move(x), e);
  }
  double best = exact.front().second;
  for (const auto& c : exact) best = std::min(best, c.second);
  for (auto& c : exact) {
    if (c.second <= best + degeneracy_tolerance(best)) out.configs.push_back(std::move(c.first));
  }
  out.energy = best;
  return out;
}

std::vector<double> energy_table(const IsingModel& model, int max_vars) {
  check_cap(model.num_variables(), max_vars);
  const int n = model.num_variables();
  const std::uint64_t total = std::uint64_t{1} << n;
  std::vector<double> table(total, model.offset());
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    double e = model.offset();
    for (const auto& [i, v] : model.h()) e += (idx >> i) & 1 ? v : -v;
    for (const auto& [ij, v] : model.J()) {
      const bool same = ((idx >> ij.first) & 1) == ((idx >> ij.second) & 1);
      e += same ? v : -v;
    }
    table[idx] = e;
  }
  return table;
}

Rescaled rescale(const IsingModel& model, Range h_range, Range j_range) {
  if (!(h_range.min < 0 && 0 < h_range.max) || !(j_range.min < 0 && 0 < j_range.max)) {
    throw ArgumentError("rescale needs ranges with min < 0 < max");
  }
  double h_lo = 0, h_hi = 0, j_lo = 0, j_hi = 0;
  bool have_h = false, have_j = false;
  for (const auto& [i, v] : model.h()) {
    h_lo = have_h ? std::min(h_lo, v) : v;
    h_hi = have_h ? std::max(h_hi, v) : v;
    have_h = true;
  }
  for (const auto& [ij, v] : model.J()) {
    j_lo = have_j ? std::min(j_lo, v) : v;
    j_hi = have_j ? std::max(j_hi, v) : v;
    have_j = true;
  }
  double r = 0.0;
  if (have_h) {
    r = std::max({r, h_hi / h_range.max, h_lo / h_range.min});
  }
  if (have_j) {
    r = std::max({r, j_hi / j_range.max, j_lo / j_range.min});
  }
  Rescaled out{model, r};
  if (r > 1.0) {
    IsingModel scaled(model.num_variables(), model.offset());
    for (const auto& [i, v] : model.h()) scaled.set_h(i, v / r);
    for (const auto& [ij, v] : model.J()) scaled.set_J(ij.first, ij.second, v / r);
    out.model = std::move(scaled);
  }
  return out;
}

QuboModel add_equality_penalty(const QuboModel& q, const std::map<int, double>& coeffs, double c, double lambda) {
  if (coeffs.empty()) throw ArgumentError("equality constraint has no terms");
  if (lambda < 0) throw ArgumentError("penalty multiplier must be non-negative");
  for (const auto& [i, a] : coeffs) check_range(i, q.num_variables(), "constraint variable");
  QuboModel out = q;
  if (lambda == 0.0) return out;
  for (auto it = coeffs.begin(); it != coeffs.end(); ++it) {
    const auto [i, a] = *it;
    out.add_Q(i, i, lambda * (a * a - 2 * c * a));
    for (auto jt = std::next(it); jt != coeffs.end(); ++jt) out.add_Q(i, jt->first, 2 * lambda * a * jt->second);
  }
  out.add_offset(lambda * c * c);
  return out;
}

IsingModel build_garden_model(int num_plants, const std::map<Edge, Relation>& relations,
                              const std::map<int, int>& prior_placements, double replant_cost) {
  IsingModel m(num_plants);
  std::map<Edge, Relation> merged;
  for (const auto& [e, rel] : relations) {
    if (e.first == e.second) throw ArgumentError("a plant cannot neighbour itself");
    check_range(e.first, num_plants, "plant");
    check_range(e.second, num_plants, "plant");
    const Edge key = ordered(e.first, e.second);
    auto [it, inserted] = merged.emplace(key, rel);
    if (!inserted && it->second != rel) {
      throw ArgumentError("conflicting relations for plants " + std::to_string(key.first) + " and " +
                          std::to_string(key.second));
    }
  }
  for (const auto& [e, rel] : merged) {
    if (rel == Relation::good) m.set_J(e.first, e.second, -1.0);
    if (rel == Relation::bad) m.set_J(e.first, e.second, +1.0);
  }
  for (const auto& [plant, pot] : prior_placements) {
    check_range(plant, num_plants, "plant");
    if (pot != 1 && pot != -1) throw ArgumentError("pot labels are -1 and +1");
    if (replant_cost != 0.0) m.add_h(plant, -replant_cost * pot);
  }
  return m;
}

std::map<Edge, Relation> garden_relations() {
  constexpr int leek = 0, celery = 1, peas = 2, corn = 3;
  return {
      {{leek, celery}, Relation::good},  {{leek, peas}, Relation::bad},     {{leek, corn}, Relation::neutral},
      {{celery, peas}, Relation::neutral}, {{celery, corn}, Relation::bad}, {{peas, corn}, Relation::good},
  };
}

IsingModel relabel(const IsingModel& model, const std::vector<int>& mapping, int num_variables) {
  if (static_cast<int>(mapping.size()) != model.num_variables()) {
    throw ArgumentError("relabel mapping must cover every variable");
  }
  IsingModel out(num_variables, model.offset());
  for (const auto& [i, v] : model.h()) out.add_h(mapping[i], v);
  for (const auto& [ij, v] : model.J()) out.add_J(mapping[ij.first], mapping[ij.second], v);
  return out;
}

}  // namespace qdesk
