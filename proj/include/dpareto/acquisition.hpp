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

#include <Eigen/Core>

#include "dpareto/domain.hpp"
#include "dpareto/gp.hpp"
#include "dpareto/pareto.hpp"
#include "dpareto/rng.hpp"

namespace dpareto::acq {

struct AcquisitionConfig {
  int candidate_count = 1000;
  int refine_top = 5;
  int refine_iters = 50;
  RngStream rng;
};

// Probability that the two objective posteriors at x land in the region not
// dominated by the front, integrated cell by cell with Gaussian CDFs. The
// front and anti-ideal point must live in the same (transformed) space the
// models were fitted in. Degenerate predictive deviations (s <= 1e-12)
// collapse to an indicator of the mean's cell membership.
double poi(const gp::SurrogateModel& model_epsilon, const gp::SurrogateModel& model_error,
           const Eigen::VectorXd& x, const ParetoFront& front,
           const AntiIdealPoint& anti_ideal);

// Hypervolume increment at the predictive mean times poi; zero whenever the
// mean vector is dominated. The increment is measured in original
// (epsilon, error) units by inverse-transforming the means, front, and
// anti-ideal point, so the acquisition weight matches the hypervolume the
// fronts are scored by; poi itself stays in the transformed space.
double hvpoi(const gp::SurrogateModel& model_epsilon, const gp::SurrogateModel& model_error,
             const Eigen::VectorXd& x, const ParetoFront& front,
             const AntiIdealPoint& anti_ideal);

struct AcquisitionResult {
  HyperparameterVector point;
  Eigen::VectorXd unit;  // normalized argmax location
  double value = 0.0;    // hvpoi at the argmax
  bool exploration_fallback = false;
};

// Evaluates hvpoi on candidate_count shifted-Halton points, pattern-search
// refines the refine_top best, and returns the denormalized argmax
// (deterministic given config.rng; ties break toward the earliest
// candidate). All-zero acquisition falls back to the max-poi candidate, and
// failing that to a uniform random point flagged as exploration.
AcquisitionResult maximize_acquisition(const gp::SurrogateModel& model_epsilon,
                                       const gp::SurrogateModel& model_error,
                                       const HyperparameterDomain& domain,
                                       const ParetoFront& front,
                                       const AntiIdealPoint& anti_ideal,
                                       const AcquisitionConfig& config);

}  // namespace dpareto::acq
