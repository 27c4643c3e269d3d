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

#include <memory>

#include "dpareto/dataset.hpp"
#include "dpareto/driver.hpp"
#include "dpareto/training.hpp"

namespace dpareto::problems {

// Search space for the sparse vector technique: answer bound C in [1, 30]
// (integer) and noise level b in [1e-2, 1e2] on a log scale.
HyperparameterDomain svt_domain();

// Search space for the gradient-perturbation trainers: epochs in [1, 64],
// lot size in [8, 512] (both integer), learning rate in [5e-4, 5e-2],
// noise variance in [0.1, 16], clipping norm in [0.1, 4] (log scales).
HyperparameterDomain training_domain();

// Search space for output-perturbed logistic regression: regularization in
// [1e-4, 1] and noise multiplier in [1e-1, 1e1], both log.
HyperparameterDomain output_perturbation_domain();

struct SvtOptions {
  int queries = 100;
  int positives = 10;
  int repetitions = 50;
  AntiIdealPoint anti_ideal{10.0, 1.0};
};

// SVT with its closed-form pure-DP oracle (delta = 0) and mean-F1 utility;
// the workload is drawn once from workload_rng and shared by all
// evaluations.
driver::Problem make_svt_problem(const SvtOptions& options, RngStream workload_rng);

enum class TrainerKind { kSgdLogistic, kSgdHinge, kAdamLogistic };

struct TrainingOptions {
  TrainerKind trainer = TrainerKind::kSgdLogistic;
  double delta = 1e-6;
  int repetitions = 50;
  AntiIdealPoint anti_ideal{10.0, 1.0};
};

// Gradient-perturbation training with the subsampled-Gaussian accountant as
// privacy oracle and mean test accuracy as utility.
driver::Problem make_training_problem(std::shared_ptr<const mech::Dataset> data,
                                      const TrainingOptions& options);

struct OutputPerturbationOptions {
  double delta = 1e-6;
  int repetitions = 50;
  AntiIdealPoint anti_ideal{10.0, 1.0};
};

// Output-perturbed logistic regression paired with the analytic Gaussian
// mechanism oracle at the 2/(n*gamma) sensitivity.
driver::Problem make_output_perturbation_problem(std::shared_ptr<const mech::Dataset> data,
                                                 const OutputPerturbationOptions& options);

}  // namespace dpareto::problems
