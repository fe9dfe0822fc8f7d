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

#include "qdesk/anneal.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>

#include "qdesk/errors.hpp"
#include "qdesk/rng.hpp"

namespace qdesk {

Schedule::Schedule(std::vector<SchedulePoint> points) : points_(std::move(points)) {
  if (points_.size() < 2) throw ValidationError("a schedule needs at least two points");
  if (points_.front().s != 0.0 || points_.back().s != 1.0) throw ValidationError("schedule must cover s = 0 and s = 1");
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const auto& p = points_[i];
    if (!std::isfinite(p.A) || !std::isfinite(p.B) || p.A < 0 || p.B < 0) {
      throw ValidationError("schedule values must be finite and non-negative (row " + std::to_string(i) + ")");
    }
    if (i > 0 && !(p.s > points_[i - 1].s)) throw ValidationError("schedule s values must be strictly increasing");
  }
  if (!(points_.front().A > points_.front().B)) throw ValidationError("schedule needs A(0) > B(0)");
  if (!(points_.back().B > points_.back().A)) throw ValidationError("schedule needs B(1) > A(1)");
}

Schedule Schedule::linear() { return Schedule({{0.0, 1.0, 0.0}, {1.0, 0.0, 1.0}}); }

std::size_t Schedule::segment(double s) const {
  if (!(s >= 0.0 && s <= 1.0)) throw ArgumentError("schedule parameter s must lie in [0, 1]");
  auto it = std::upper_bound(points_.begin(), points_.end(), s,
                             [](double v, const SchedulePoint& p) { return v < p.s; });
  std::size_t i = static_cast<std::size_t>(it - points_.begin());
  return std::min(i == 0 ? 0 : i - 1, points_.size() - 2);
}

double Schedule::A(double s) const {
  const auto i = segment(s);
  const auto &a = points_[i], &b = points_[i + 1];
  return a.A + (b.A - a.A) * (s - a.s) / (b.s - a.s);
}

double Schedule::B(double s) const {
  const auto i = segment(s);
  const auto &a = points_[i], &b = points_[i + 1];
  return a.B + (b.B - a.B) * (s - a.s) / (b.s - a.s);
}

double Schedule::dA(double s) const {
  const auto i = segment(s);
  return (points_[i + 1].A - points_[i].A) / (points_[i + 1].s - points_[i].s);
}

double Schedule::dB(double s) const {
  const auto i = segment(s);
  return (points_[i + 1].B - points_[i].B) / (points_[i + 1].s - points_[i].s);
}

std::vector<std::string> builtin_schedules() { return {"linear"}; }

Schedule schedule_by_name(const std::string& name) {
  if (name == "linear") return Schedule::linear();
  std::string list;
  for (const auto& n : builtin_schedules()) list += (list.empty() ? "" : ", ") + n;
  throw ArgumentError("unknown schedule '" + name + "'; built-in schedules: " + list);
}

Schedule read_schedule_csv(std::istream& in) {
  std::string line;
  int line_no = 0;
  bool header = false;
  std::vector<SchedulePoint> points;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    if (!header) {
      std::string compact;
      for (char c : line) {
        if (c != ' ' && c != '\t') compact += c;
      }
      if (compact != "s,A,B") throw ValidationError("schedule CSV must start with header 's,A,B'");
      header = true;
      continue;
    }
    std::istringstream row(line);
    SchedulePoint p;
    char c1 = 0, c2 = 0;
    if (!(row >> p.s >> c1 >> p.A >> c2 >> p.B) || c1 != ',' || c2 != ',') {
      throw ValidationError("schedule CSV line " + std::to_string(line_no) + " is not 's,A,B'");
    }
    std::string rest;
    if (row >> rest) throw ValidationError("schedule CSV line " + std::to_string(line_no) + " has extra fields");
    points.push_back(p);
  }
  if (!header) throw ValidationError("schedule CSV is empty");
  return Schedule(std::move(points));
}

void write_schedule_csv(std::ostream& out, const Schedule& schedule) {
  out << "s,A,B\n";
  const auto old = out.precision(17);
  for (const auto& p : schedule.points()) out << p.s << ',' << p.A << ',' << p.B << '\n';
  out.precision(old);
}

namespace {

void check_size(const IsingModel& model, int cap) {
  const int n = model.num_variables();
  if (n < 1) throw ArgumentError("annealing needs at least one variable");
  if (n > cap) {
    throw CapacityError("annealing routines are capped at " + std::to_string(cap) + " qubits, model has " +
                        std::to_string(n));
  }
}

Eigen::MatrixXd transverse_matrix(int n) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    for (int q = 0; q < n; ++q) h(j ^ (Eigen::Index{1} << q), j) = -1.0;
  }
  return h;
}

Eigen::MatrixXd schedule_hamiltonian(double a, double b, const Eigen::MatrixXd& h_init, const Eigen::VectorXd& diag) {
  Eigen::MatrixXd h = a * h_init;
  h.diagonal() += b * diag;
  return h;
}

// Lowest eigenvector of H(0); the uniform state when H(0) is pure transverse.
Eigen::VectorXcd initial_ground_state(const IsingModel& model, const Schedule& schedule, const Eigen::VectorXd& diag) {
  const int n = model.num_variables();
  const Eigen::Index dim = diag.size();
  if (schedule.B(0.0) == 0.0) {
    return Eigen::VectorXcd::Constant(dim, Complex{std::pow(2.0, -0.5 * n), 0.0});
  }
  check_size(model, kSpectrumMaxQubits);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(
      schedule_hamiltonian(schedule.A(0.0), schedule.B(0.0), transverse_matrix(n), diag));
  return es.eigenvectors().col(0).cast<Complex>();
}

}  // namespace

Eigen::VectorXd problem_diagonal(const IsingModel& model) {
  check_size(model, kAnnealMaxQubits);
  const int n = model.num_variables();
  const Eigen::Index dim = Eigen::Index{1} << n;
  Eigen::VectorXd d(dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    auto spin = [&](int i) { return (j >> (n - 1 - i)) & 1 ? 1.0 : -1.0; };
    double e = model.offset();
    for (const auto& [i, v] : model.h()) e += v * spin(i);
    for (const auto& [ij, v] : model.J()) e += v * spin(ij.first) * spin(ij.second);
    d(j) = e;
  }
  return d;
}

Eigen::MatrixXd hamiltonian_at(const IsingModel& model, const Schedule& schedule, double s) {
  check_size(model, kAnnealMaxQubits);
  return schedule_hamiltonian(schedule.A(s), schedule.B(s), transverse_matrix(model.num_variables()),
                              problem_diagonal(model));
}

StateVector evolve_closed(const IsingModel& model, const Schedule& schedule, double t_max, int steps,
                          Propagator propagator) {
  check_size(model, kAnnealMaxQubits);
  if (steps < 1) throw ArgumentError("evolution needs at least one step");
  if (!(t_max >= 0.0) || !std::isfinite(t_max)) throw ArgumentError("t_max must be finite and non-negative");
  const int n = model.num_variables();
  if (propagator == Propagator::eigen && n > kEigenPropagatorMaxQubits) {
    throw CapacityError("the eigen propagator is capped at " + std::to_string(kEigenPropagatorMaxQubits) +
                        " qubits; use the split-operator propagator");
  }
  const Eigen::VectorXd diag = problem_diagonal(model);
  Eigen::VectorXcd psi = initial_ground_state(model, schedule, diag);
  const double dt = t_max / steps;
  const Eigen::Index dim = diag.size();

  if (propagator == Propagator::eigen) {
    const Eigen::MatrixXd h_init = transverse_matrix(n);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    for (int k = 0; k < steps; ++k) {
      const double s = (k + 0.5) / steps;
      es.compute(schedule_hamiltonian(schedule.A(s), schedule.B(s), h_init, diag));
      const Eigen::MatrixXd& v = es.eigenvectors();
      Eigen::VectorXcd c = v.transpose() * psi;
      for (Eigen::Index l = 0; l < dim; ++l) c(l) *= std::polar(1.0, -es.eigenvalues()(l) * dt);
      psi = v * c;
    }
  } else {
    for (int k = 0; k < steps; ++k) {
      const double s = (k + 0.5) / steps;
      const double b = schedule.B(s), a = schedule.A(s);
      auto half_phase = [&] {
        for (Eigen::Index j = 0; j < dim; ++j) psi(j) *= std::polar(1.0, -0.5 * b * diag(j) * dt);
      };
      half_phase();
      // exp(+i a dt sigma^x) on every qubit
      const Complex c{std::cos(a * dt), 0.0}, is{0.0, std::sin(a * dt)};
      for (int q = 0; q < n; ++q) {
        const Eigen::Index stride = Eigen::Index{1} << q;
        for (Eigen::Index j = 0; j < dim; ++j) {
          if (j & stride) continue;
          const Complex x0 = psi(j), x1 = psi(j | stride);
          psi(j) = c * x0 + is * x1;
          psi(j | stride) = is * x0 + c * x1;
        }
      }
      half_phase();
    }
  }
  return StateVector::from_amplitudes(std::vector<Complex>(psi.data(), psi.data() + psi.size()));
}

double ground_subspace_probability(const StateVector& state, const IsingModel& model) {
  if (state.num_qubits() != model.num_variables()) throw ArgumentError("state and model sizes differ");
  const Eigen::VectorXd diag = problem_diagonal(model);
  const double e0 = diag.minCoeff();
  const double tol = 1e-9 * std::max(1.0, std::abs(e0));
  double p = 0.0;
  for (Eigen::Index j = 0; j < diag.size(); ++j) {
    if (diag(j) - e0 <= tol) p += std::norm(state[static_cast<std::size_t>(j)]);
  }
  return p;
}

namespace {

constexpr double kDegenerate = 1e-12;

double gap_above_ground(const Eigen::VectorXd& e) {
  for (Eigen::Index l = 1; l < e.size(); ++l) {
    if (e(l) - e(0) >= kDegenerate) return e(l) - e(0);
  }
  return 0.0;
}

}  // namespace

MinGap min_gap(const IsingModel& model, const Schedule& schedule, const std::vector<double>& s_grid, int levels) {
  check_size(model, kSpectrumMaxQubits);
  if (s_grid.empty()) throw ArgumentError("min_gap needs a non-empty s grid");
  const Eigen::MatrixXd h_init = transverse_matrix(model.num_variables());
  const Eigen::VectorXd diag = problem_diagonal(model);
  MinGap out;
  out.gap = std::numeric_limits<double>::infinity();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  for (double s : s_grid) {
    es.compute(schedule_hamiltonian(schedule.A(s), schedule.B(s), h_init, diag), Eigen::EigenvaluesOnly);
    const Eigen::VectorXd& e = es.eigenvalues();
    SpectrumSample sample;
    sample.s = s;
    const Eigen::Index keep = std::min<Eigen::Index>(e.size(), std::max(levels, 2));
    sample.eigenvalues.assign(e.data(), e.data() + keep);
    sample.gap = gap_above_ground(e);
    if (sample.gap < out.gap) {
      out.gap = sample.gap;
      out.s = s;
    }
    out.samples.push_back(std::move(sample));
  }
  return out;
}

AdiabaticEstimate adiabatic_time_estimate(const IsingModel& model, const Schedule& schedule,
                                          const std::vector<double>& s_grid, int levels) {
  check_size(model, kSpectrumMaxQubits);
  if (s_grid.empty()) throw ArgumentError("adiabatic_time_estimate needs a non-empty s grid");
  const Eigen::MatrixXd h_init = transverse_matrix(model.num_variables());
  const Eigen::VectorXd diag = problem_diagonal(model);
  AdiabaticEstimate out;
  out.s = s_grid.front();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  for (double s : s_grid) {
    es.compute(schedule_hamiltonian(schedule.A(s), schedule.B(s), h_init, diag));
    const Eigen::VectorXd& e = es.eigenvalues();
    const Eigen::MatrixXd& v = es.eigenvectors();
    Eigen::Index ground = 1;
    while (ground < e.size() && e(ground) - e(0) < kDegenerate) ++ground;
    if (ground == e.size()) {
      if (out.finite) out.s = s;
      out.finite = false;
      out.value = std::numeric_limits<double>::infinity();
      continue;
    }
    const Eigen::MatrixXd dh = schedule_hamiltonian(schedule.dA(s), schedule.dB(s), h_init, diag);
    const double noise = 1e-10 * (1.0 + dh.cwiseAbs().maxCoeff());
    const Eigen::Index last = std::min<Eigen::Index>(e.size(), levels + 1);
    for (Eigen::Index nlev = ground; nlev < last; ++nlev) {
      const Eigen::VectorXd dv = dh * v.col(nlev);
      for (Eigen::Index g = 0; g < ground; ++g) {
        const double coupling = std::abs(v.col(g).dot(dv));
        if (coupling <= noise) continue;
        const double gap = e(nlev) - e(0);
        const double term = coupling / (gap * gap);
        if (out.finite && term > out.value) {
          out.value = term;
          out.s = s;
        }
      }
    }
  }
  return out;
}

double landau_zener_min_span(double h_x, double v) { return 20.0 * std::max(1.0, h_x) / std::sqrt(v); }

LandauZenerResult landau_zener_probability(const LandauZenerParams& params, int steps) {
  const double hx = params.h_x, v = params.v, T = params.t_span;
  if (!(hx > 0) || !(v > 0) || !(T > 0)) throw ArgumentError("Landau-Zener parameters must be positive");
  if (steps < 1) throw ArgumentError("Landau-Zener integration needs at least one step");

  // Basis (|up>, |down>) with sigma^z |up> = |up>.
  auto eigvecs = [&](double t) {
    Eigen::Matrix2d h;
    h << -v * t, -hx, -hx, v * t;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(h);
    return Eigen::Matrix2d(es.eigenvectors());
  };

  Eigen::Vector2cd psi = eigvecs(-T).col(0).cast<Complex>();
  const double dt = 2.0 * T / steps;
  const Complex I{0.0, 1.0};
  for (int k = 0; k < steps; ++k) {
    const double tm = -T + (k + 0.5) * dt;
    // exp(-i n.sigma) with the second Magnus term in the sigma^y slot.
    const double nx = -hx * dt, ny = dt * dt * dt * hx * v / 6.0, nz = -v * tm * dt;
    const double r = std::sqrt(nx * nx + ny * ny + nz * nz);
    const double c = std::cos(r), sn = r > 0 ? std::sin(r) / r : 1.0;
    Eigen::Matrix2cd u;
    u << c - I * sn * nz, -I * sn * Complex{nx, -ny}, -I * sn * Complex{nx, ny}, c + I * sn * nz;
    psi = u * psi;
  }
  const Eigen::Matrix2d end = eigvecs(T);
  LandauZenerResult out;
  out.p_up = std::norm(end.col(0).cast<Complex>().dot(psi));
  out.p_down = std::norm(end.col(1).cast<Complex>().dot(psi));
  out.span_sufficient = T >= landau_zener_min_span(hx, v);
  return out;
}

BetaRange default_beta_range(const IsingModel& model) {
  const int n = model.num_variables();
  std::vector<double> stiffness(static_cast<std::size_t>(std::max(n, 0)), 0.0);
  double smallest = std::numeric_limits<double>::infinity();
  for (const auto& [i, v] : model.h()) {
    stiffness[static_cast<std::size_t>(i)] += std::abs(v);
    if (v != 0.0) smallest = std::min(smallest, std::abs(v));
  }
  for (const auto& [ij, v] : model.J()) {
    stiffness[static_cast<std::size_t>(ij.first)] += std::abs(v);
    stiffness[static_cast<std::size_t>(ij.second)] += std::abs(v);
    if (v != 0.0) smallest = std::min(smallest, std::abs(v));
  }
  const double largest = stiffness.empty() ? 0.0 : *std::max_element(stiffness.begin(), stiffness.end());
  if (largest == 0.0) return {0.1, 1.0};
  return {std::log(2.0) / (2.0 * largest), std::log(1000.0) / (2.0 * smallest)};
}

SampleSet simulated_annealing(const IsingModel& model, int reads, int sweeps, BetaRange betas, std::uint64_t seed) {
  if (reads < 1 || sweeps < 1) throw ArgumentError("reads and sweeps must be at least 1");
  if (!(betas.start > 0) || !(betas.end > 0)) throw ArgumentError("inverse temperatures must be positive");
  const int n = model.num_variables();
  if (n < 1) throw ArgumentError("simulated annealing needs at least one variable");

  std::vector<double> h(static_cast<std::size_t>(n), 0.0);
  for (const auto& [i, v] : model.h()) h[static_cast<std::size_t>(i)] = v;
  std::vector<std::vector<std::pair<int, double>>> adj(static_cast<std::size_t>(n));
  for (const auto& [ij, v] : model.J()) {
    if (v == 0.0) continue;
    adj[static_cast<std::size_t>(ij.first)].push_back({ij.second, v});
    adj[static_cast<std::size_t>(ij.second)].push_back({ij.first, v});
  }

  std::vector<double> schedule(static_cast<std::size_t>(sweeps));
  for (int k = 0; k < sweeps; ++k) {
    const double f = sweeps == 1 ? 1.0 : static_cast<double>(k) / (sweeps - 1);
    schedule[static_cast<std::size_t>(k)] = betas.start * std::pow(betas.end / betas.start, f);
  }

  SampleSet out;
  out.num_variables = n;
  out.domain = ValueDomain::spin;
  Rng master(seed);
  std::vector<int> spins(static_cast<std::size_t>(n));
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int r = 0; r < reads; ++r) {
    Rng rng(master.next());
    for (auto& s : spins) s = rng.coin() ? 1 : -1;
    for (double beta : schedule) {
      for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
      for (int i = n - 1; i > 0; --i) {
        std::swap(order[static_cast<std::size_t>(i)], order[rng.below(static_cast<std::uint64_t>(i) + 1)]);
      }
      for (int i : order) {
        const auto ui = static_cast<std::size_t>(i);
        double field = h[ui];
        for (const auto& [j, v] : adj[ui]) field += v * spins[static_cast<std::size_t>(j)];
        const double delta = -2.0 * spins[ui] * field;
        if (delta <= 0.0 || rng.uniform() < std::exp(-beta * delta)) spins[ui] = -spins[ui];
      }
    }
    out.rows.push_back({bits_of_spins(spins), energy(model, spins), 1, 0.0});
  }
  out.normalize();
  return out;
}

}  // namespace qdesk
