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

#include "dpareto/objectives.hpp"

#include <algorithm>
#include <cmath>

#include "dpareto/math_util.hpp"

namespace dpareto {

namespace {
constexpr double kEpsilonFloor = 1e-12;
constexpr double kErrorMargin = 1e-6;
}  // namespace

std::pair<double, double> transform_objectives(const ObjectivePoint& point) {
  const double eps = std::max(point.epsilon, kEpsilonFloor);
  const double err = std::clamp(point.error, kErrorMargin, 1.0 - kErrorMargin);
  return {std::log(eps), logit(err)};
}

ObjectivePoint inverse_transform(double t_eps, double t_err) {
  return ObjectivePoint{std::exp(t_eps), logistic(t_err)};
}

}  // namespace dpareto
