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
#include <functional>
#include <span>
#include <vector>

namespace qdesk {

struct NelderMeadOptions {
  int max_evaluations = 2000;
  // Edge length of the starting simplex; the sign of each offset is drawn
  // from the seed.
  double initial_step = 0.1;
  double ftol = 1e-12;
  double xtol = 1e-9;
  std::uint64_t seed = 0;
};

struct NelderMeadResult {
  std::vector<double> x;
  double value = 0.0;
  int evaluations = 0;
  bool converged = false;
};

using Objective = std::function<double(std::span<const double>)>;

// Downhill simplex with the usual coefficients (reflect 1, expand 2,
// contract 1/2, shrink 1/2). The start point is evaluated first, so the
// returned value never exceeds f(x0). When the evaluation budget runs out
// the best point so far is returned with converged = false.
NelderMeadResult nelder_mead(const Objective& f, std::vector<double> x0, const NelderMeadOptions& options = {});

}  // namespace qdesk
