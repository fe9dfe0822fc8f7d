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

#include "qdesk/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qdesk/errors.hpp"
#include "qdesk/rng.hpp"

namespace qdesk {

namespace {

struct Budget {
  const Objective& f;
  int limit;
  int used = 0;

  bool exhausted() const { return used >= limit; }
  double operator()(const std::vector<double>& x) {
    ++used;
    return f(x);
  }
};

}  // namespace

NelderMeadResult nelder_mead(const Objective& f, std::vector<double> x0, const NelderMeadOptions& options) {
  if (options.max_evaluations < 1) throw ArgumentError("evaluation cap must be at least 1");
  if (x0.empty()) throw ArgumentError("nelder_mead needs at least one parameter");
  const std::size_t n = x0.size();
  Budget eval{f, options.max_evaluations};

  std::vector<std::vector<double>> simplex{x0};
  std::vector<double> values{eval(x0)};
  NelderMeadResult result;

  auto best_so_far = [&](bool converged) {
    const auto it = std::min_element(values.begin(), values.end());
    result.x = simplex[static_cast<std::size_t>(it - values.begin())];
    result.value = *it;
    result.evaluations = eval.used;
    result.converged = converged;
    return result;
  };

  Rng rng(options.seed);
  for (std::size_t i = 0; i < n; ++i) {
    if (eval.exhausted()) return best_so_far(false);
    std::vector<double> v = x0;
    v[i] += rng.coin() ? options.initial_step : -options.initial_step;
    values.push_back(eval(v));
    simplex.push_back(std::move(v));
  }

  std::vector<std::size_t> order(n + 1);
  for (;;) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    const std::size_t best = order.front(), worst = order.back(), second = order[n - 1];

    double diameter = 0.0;
    for (const auto& v : simplex) {
      for (std::size_t i = 0; i < n; ++i) diameter = std::max(diameter, std::abs(v[i] - simplex[best][i]));
    }
    if (values[worst] - values[best] <= options.ftol && diameter <= options.xtol) return best_so_far(true);
    if (eval.exhausted()) return best_so_far(false);

    std::vector<double> centroid(n, 0.0);
    for (std::size_t v = 0; v <= n; ++v) {
      if (v == worst) continue;
      for (std::size_t i = 0; i < n; ++i) centroid[i] += simplex[v][i] / static_cast<double>(n);
    }
    auto along = [&](double t) {
      std::vector<double> p(n);
      for (std::size_t i = 0; i < n; ++i) p[i] = centroid[i] + t * (simplex[worst][i] - centroid[i]);
      return p;
    };

    auto reflected = along(-1.0);
    const double fr = eval(reflected);
    if (fr < values[best]) {
      if (eval.exhausted()) {
        simplex[worst] = std::move(reflected);
        values[worst] = fr;
        continue;
      }
      auto expanded = along(-2.0);
      const double fe = eval(expanded);
      if (fe < fr) {
        simplex[worst] = std::move(expanded);
        values[worst] = fe;
      } else {
        simplex[worst] = std::move(reflected);
        values[worst] = fr;
      }
      continue;
    }
    if (fr < values[second]) {
      simplex[worst] = std::move(reflected);
      values[worst] = fr;
      continue;
    }
    if (eval.exhausted()) continue;
    const bool outside = fr < values[worst];
    auto contracted = along(outside ? -0.5 : 0.5);
    const double fc = eval(contracted);
    if (fc < std::min(fr, values[worst])) {
      simplex[worst] = std::move(contracted);
      values[worst] = fc;
      continue;
    }
    for (std::size_t v = 0; v <= n; ++v) {
      if (v == best) continue;
      if (eval.exhausted()) break;
      for (std::size_t i = 0; i < n; ++i) simplex[v][i] = simplex[best][i] + 0.5 * (simplex[v][i] - simplex[best][i]);
      values[v] = eval(simplex[v]);
    }
  }
}

}  // namespace qdesk
