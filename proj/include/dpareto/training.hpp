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

#include <cstdint>
#include <functional>

#include <Eigen/Core>

#include "dpareto/dataset.hpp"
#include "dpareto/evaluation.hpp"
#include "dpareto/rng.hpp"

namespace dpareto::mech {

enum class LossKind { kLogistic, kHinge };

using ModelWeights = Eigen::VectorXd;

// Hyperparameters of the gradient-perturbation trainers. noise_variance is
// the sigma^2 knob: the per-step noise has standard deviation
// (2 * clipping_norm / lot_size) * sqrt(noise_variance) per coordinate.
struct TrainingHyperparams {
  std::int64_t epochs = 1;
  std::int64_t lot_size = 1;
  double learning_rate = 0.01;
  double noise_variance = 1.0;  // 0 is allowed as a noiseless test bypass
  double clipping_norm = 1.0;   // +inf disables clipping (test mode)
};

// Identity when ||v|| <= limit, otherwise rescales to norm exactly limit.
Eigen::VectorXd clip(Eigen::VectorXd v, double limit);

// Per-example gradient of the loss at w (hinge uses the zero-side
// subgradient on the margin boundary).
Eigen::VectorXd example_gradient(LossKind loss, const Eigen::VectorXd& x, double y,
                                 const Eigen::VectorXd& w);

// Mini-batched SGD with per-example clipping and spherical Gaussian noise.
// Runs epochs * floor(n/m) steps from w = 0. Step t derives its subset and
// noise from rng.child(t): the lot is a uniform m-subset (without
// replacement, fresh each step), then noise coordinates are drawn from the
// same engine. Deterministic given rng; throws TrainingError on non-finite
// state.
ModelWeights dp_sgd_train(const Dataset& data, const TrainingHyperparams& hp,
                          LossKind loss, RngStream rng);

// Same privatized gradients fed through Adam moment estimates
// (kappa = 1e-8, beta1 = 0.9, beta2 = 0.999, bias-corrected).
ModelWeights dp_adam_train(const Dataset& data, const TrainingHyperparams& hp,
                           LossKind loss, RngStream rng);

// L2-regularized logistic regression by projected SGD (batch size 1, 10
// epochs, projection radius 1/gamma_reg, step 1/(gamma_reg * t)), then a
// Gaussian output perturbation with standard deviation sigma times the
// 2/(n * gamma_reg) sensitivity. sigma == 0 skips the perturbation.
ModelWeights output_perturbed_logreg_train(const Dataset& data, double gamma_reg,
                                           double sigma, RngStream rng);

// 0/1 accuracy of sign(w.x) on the test split.
double test_accuracy(const Dataset& data, const ModelWeights& weights);

// Trains `repetitions` models on independent noise streams and reports the
// mean and per-run test accuracies.
UtilityOutcome accuracy_utility_oracle(
    const std::function<ModelWeights(const Dataset&, RngStream)>& trainer,
    const Dataset& data, int repetitions, RngStream rng);

}  // namespace dpareto::mech
