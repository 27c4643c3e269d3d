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

#include <cmath>
#include <utility>
#include <vector>

#include "dpareto/pareto.hpp"
#include "dpareto/rng.hpp"

namespace dpareto::testing {

// Monte-Carlo estimate of the hypervolume, independent of the sweep: sample
// uniformly in [0, eps_max] x [0, err_max] and count dominated points.
// Returns (estimate, standard error).
inline std::pair<double, double> mc_hypervolume(const ParetoFront& front,
                                                const AntiIdealPoint& anti_ideal,
                                                int samples, RngEngine& engine) {
  const double box_area = anti_ideal.epsilon_max * anti_ideal.error_max;
  int hits = 0;
  for (int s = 0; s < samples; ++s) {
    const ObjectivePoint probe{engine.uniform() * anti_ideal.epsilon_max,
                               engine.uniform() * anti_ideal.error_max};
    for (const ObjectivePoint& p : front.points) {
      if (dominates(p, probe)) {
        ++hits;
        break;
      }
    }
  }
  const double fraction = static_cast<double>(hits) / samples;
  const double stderr_area =
      box_area * std::sqrt(std::max(fraction * (1.0 - fraction), 1e-12) / samples);
  return {box_area * fraction, stderr_area};
}

// Membership test for the PoI integration region: inside the anti-ideal box
// (extended to -inf below) and not dominated by any front point.
inline bool in_nondominated_region(const ObjectivePoint& v, const ParetoFront& front,
                                   const AntiIdealPoint& anti_ideal) {
  if (v.epsilon > anti_ideal.epsilon_max || v.error > anti_ideal.error_max) return false;
  for (const ObjectivePoint& p : front.points) {
    if (dominates(p, v)) return false;
  }
  return true;
}

// Random non-dominated front of at most max_points points inside the box.
inline ParetoFront random_front(int max_points, const AntiIdealPoint& anti_ideal,
                                RngEngine& engine) {
  std::vector<ObjectivePoint> points;
  const int count = 1 + static_cast<int>(engine.uniform_below(static_cast<std::uint64_t>(max_points)));
  points.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    points.push_back({engine.uniform() * anti_ideal.epsilon_max,
                      engine.uniform() * anti_ideal.error_max});
  }
  return pareto_front(std::move(points));
}

}  // namespace dpareto::testing
