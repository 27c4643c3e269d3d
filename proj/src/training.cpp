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

#include "dpareto/training.hpp"

#include <cmath>
#include <string>

#include "dpareto/errors.hpp"
#include "dpareto/math_util.hpp"

namespace dpareto::mech {

namespace {

void validate_hyperparams(const Dataset& data, const TrainingHyperparams& hp) {
  const Eigen::Index n = data.n_train();
  if (n < 1) throw DomainError("training: empty training split");
  if (hp.epochs < 1) throw DomainError("training: epochs must be >= 1");
  if (hp.lot_size < 1 || hp.lot_size > n) {
    throw DomainError("training: need 1 <= lot_size <= n_train");
  }
  if (!(hp.learning_rate > 0.0)) throw DomainError("training: learning_rate must be > 0");
  if (!(hp.noise_variance >= 0.0)) throw DomainError("training: noise_variance must be >= 0");
  if (!(hp.clipping_norm > 0.0)) throw DomainError("training: clipping_norm must be > 0");
  const double sigma = std::sqrt(hp.noise_variance);
  if (sigma > 0.0 && !std::isfinite(2.0 * hp.clipping_norm * sigma)) {
    throw DomainError("training: infinite clipping_norm requires noise_variance == 0");
  }
}

// Privatized mini-batch gradient for one step: clipped per-example mean plus
// spherical Gaussian noise, both drawn from `engine` (subset first).
Eigen::VectorXd private_step_gradient(const Dataset& data, const TrainingHyperparams& hp,
                                      LossKind loss, const Eigen::VectorXd& w,
                                      RngEngine& engine) {
  const auto n = static_cast<int>(data.n_train());
  const auto m = static_cast<int>(hp.lot_size);
  const std::vector<int> lot = sample_indices(n, m, engine);

  Eigen::VectorXd sum = Eigen::VectorXd::Zero(w.size());
  for (int j : lot) {
    sum += clip(example_gradient(loss, data.features.row(j).transpose(), data.labels[j], w),
                hp.clipping_norm);
  }
  Eigen::VectorXd g = sum / static_cast<double>(m);

  const double sigma = std::sqrt(hp.noise_variance);
  if (sigma > 0.0) {
    const double noise_std = 2.0 * hp.clipping_norm * sigma / static_cast<double>(m);
    for (Eigen::Index c = 0; c < g.size(); ++c) g[c] += noise_std * engine.normal();
  }
  return g;
}

void check_finite(const Eigen::VectorXd& w, std::int64_t step) {
  if (!w.allFinite()) {
    throw TrainingError("training diverged: non-finite weights at step " +
                        std::to_string(step));
  }
}

}  // namespace

Eigen::VectorXd clip(Eigen::VectorXd v, double limit) {
  if (!(limit > 0.0)) throw DomainError("clip: limit must be > 0");
  const double norm = v.norm();
  if (norm > limit) v *= limit / norm;
  return v;
}

Eigen::VectorXd example_gradient(LossKind loss, const Eigen::VectorXd& x, double y,
                                 const Eigen::VectorXd& w) {
  const double margin = y * w.dot(x);
  switch (loss) {
    case LossKind::kLogistic:
      return (-y * logistic(-margin)) * x;
    case LossKind::kHinge:
      if (1.0 - margin > 0.0) return -y * x;
      return Eigen::VectorXd::Zero(x.size());
  }
  return Eigen::VectorXd::Zero(x.size());
}

ModelWeights dp_sgd_train(const Dataset& data, const TrainingHyperparams& hp,
                          LossKind loss, RngStream rng) {
  validate_hyperparams(data, hp);
  const std::int64_t steps_per_epoch = data.n_train() / hp.lot_size;
  Eigen::VectorXd w = Eigen::VectorXd::Zero(data.dims());
  std::int64_t step = 0;
  for (std::int64_t t = 0; t < hp.epochs; ++t) {
    for (std::int64_t k = 0; k < steps_per_epoch; ++k, ++step) {
      RngEngine engine = rng.child(static_cast<std::uint64_t>(step)).engine();
      w -= hp.learning_rate * private_step_gradient(data, hp, loss, w, engine);
      check_finite(w, step);
    }
  }
  return w;
}

ModelWeights dp_adam_train(const Dataset& data, const TrainingHyperparams& hp,
                           LossKind loss, RngStream rng) {
  validate_hyperparams(data, hp);
  constexpr double kKappa = 1e-8;
  constexpr double kBeta1 = 0.9;
  constexpr double kBeta2 = 0.999;

  const std::int64_t steps_per_epoch = data.n_train() / hp.lot_size;
  Eigen::VectorXd w = Eigen::VectorXd::Zero(data.dims());
  Eigen::VectorXd mu = Eigen::VectorXd::Zero(data.dims());
  Eigen::VectorXd nu = Eigen::VectorXd::Zero(data.dims());
  std::int64_t i = 0;
  for (std::int64_t t = 0; t < hp.epochs; ++t) {
    for (std::int64_t k = 0; k < steps_per_epoch; ++k) {
      RngEngine engine = rng.child(static_cast<std::uint64_t>(i)).engine();
      const Eigen::VectorXd g = private_step_gradient(data, hp, loss, w, engine);
      ++i;
      mu = kBeta1 * mu + (1.0 - kBeta1) * g;
      nu = kBeta2 * nu + (1.0 - kBeta2) * g.cwiseProduct(g);
      const double mu_correction = 1.0 - std::pow(kBeta1, static_cast<double>(i));
      const double nu_correction = 1.0 - std::pow(kBeta2, static_cast<double>(i));
      const Eigen::VectorXd mu_hat = mu / mu_correction;
      const Eigen::VectorXd nu_hat = nu / nu_correction;
      w -= hp.learning_rate *
           (mu_hat.array() / (nu_hat.array().sqrt() + kKappa)).matrix();
      check_finite(w, i);
    }
  }
  return w;
}

ModelWeights output_perturbed_logreg_train(const Dataset& data, double gamma_reg,
                                           double sigma, RngStream rng) {
  if (!(gamma_reg > 0.0)) throw DomainError("output perturbation: gamma_reg must be > 0");
  if (!(sigma >= 0.0)) throw DomainError("output perturbation: sigma must be >= 0");
  const Eigen::Index n = data.n_train();
  if (n < 1) throw DomainError("training: empty training split");

  constexpr int kEpochs = 10;
  const double radius = 1.0 / gamma_reg;
  Eigen::VectorXd w = Eigen::VectorXd::Zero(data.dims());
  std::int64_t t = 0;
  for (int epoch = 0; epoch < kEpochs; ++epoch) {
    RngEngine engine = rng.child(static_cast<std::uint64_t>(epoch)).engine();
    for (int j : random_permutation(static_cast<int>(n), engine)) {
      ++t;
      const double eta = 1.0 / (gamma_reg * static_cast<double>(t));
      const Eigen::VectorXd g =
          example_gradient(LossKind::kLogistic, data.features.row(j).transpose(),
                           data.labels[j], w) +
          gamma_reg * w;
      w -= eta * g;
      const double norm = w.norm();
      if (norm > radius) w *= radius / norm;
      check_finite(w, t);
    }
  }
  if (sigma > 0.0) {
    const double scale =
        sigma * 2.0 / (static_cast<double>(n) * gamma_reg);
    RngEngine engine = rng.child(static_cast<std::uint64_t>(kEpochs)).engine();
    for (Eigen::Index c = 0; c < w.size(); ++c) w[c] += scale * engine.normal();
  }
  return w;
}

double test_accuracy(const Dataset& data, const ModelWeights& weights) {
  const Eigen::Index n_test = data.n_test();
  if (n_test < 1) throw DomainError("test_accuracy: empty test split");
  Eigen::Index correct = 0;
  for (Eigen::Index i = data.train_count; i < data.n_total(); ++i) {
    const double score = weights.dot(data.features.row(i).transpose());
    const double predicted = score >= 0.0 ? 1.0 : -1.0;
    correct += predicted == data.labels[i];
  }
  return static_cast<double>(correct) / static_cast<double>(n_test);
}

UtilityOutcome accuracy_utility_oracle(
    const std::function<ModelWeights(const Dataset&, RngStream)>& trainer,
    const Dataset& data, int repetitions, RngStream rng) {
  if (repetitions < 1) throw DomainError("accuracy oracle: repetitions must be >= 1");
  UtilityOutcome outcome;
  outcome.per_run.reserve(static_cast<std::size_t>(repetitions));
  double sum = 0.0;
  for (int r = 0; r < repetitions; ++r) {
    const ModelWeights w = trainer(data, rng.child(static_cast<std::uint64_t>(r)));
    const double accuracy = test_accuracy(data, w);
    outcome.per_run.push_back(accuracy);
    sum += accuracy;
  }
  outcome.mean = sum / static_cast<double>(repetitions);
  return outcome;
}

}  // namespace dpareto::mech
