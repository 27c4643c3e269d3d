// Copyright 2026 The DPareto Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <utility>

namespace dpareto {

// A point in the minimization plane. In original units epsilon is the
// privacy loss (>= 0) and error is 1 - utility (in [0,1]); the Pareto
// machinery is agnostic to units and is also used on transformed values.
struct ObjectivePoint {
  double epsilon = 0.0;
  double error = 0.0;

  friend bool operator==(const ObjectivePoint&, const ObjectivePoint&) = default;
};

// GP-space transforms: t_eps = log(epsilon), t_err = logit(error).
// Clamps (epsilon to >= 1e-12, error to [1e-6, 1 - 1e-6]) make both total;
// each is strictly increasing on the unclamped region.
std::pair<double, double> transform_objectives(const ObjectivePoint& point);

// exp / logistic inverse; round-trips transform_objectives away from the
// clamp boundaries.
ObjectivePoint inverse_transform(double t_eps, double t_err);

}  // namespace dpareto
