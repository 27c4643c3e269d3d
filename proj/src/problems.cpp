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

#include "dpareto/problems.hpp"

#include <cmath>

#include "dpareto/errors.hpp"
#include "dpareto/privacy.hpp"
#include "dpareto/svt.hpp"

namespace dpareto::problems {

HyperparameterDomain svt_domain() {
  return HyperparameterDomain({
      {"C", 1.0, 30.0, Scale::kLinear, true},
      {"b", 1e-2, 1e2, Scale::kLog, false},
  });
}

HyperparameterDomain training_domain() {
  return HyperparameterDomain({
      {"epochs", 1.0, 64.0, Scale::kLinear, true},
      {"lot_size", 8.0, 512.0, Scale::kLinear, true},
      {"learning_rate", 5e-4, 5e-2, Scale::kLog, false},
      {"noise_variance", 0.1, 16.0, Scale::kLog, false},
      {"clipping_norm", 0.1, 4.0, Scale::kLog, false},
  });
}

HyperparameterDomain output_perturbation_domain() {
  return HyperparameterDomain({
      {"gamma", 1e-4, 1.0, Scale::kLog, false},
      {"sigma", 1e-1, 1e1, Scale::kLog, false},
  });
}

driver::Problem make_svt_problem(const SvtOptions& options, RngStream workload_rng) {
  const auto workload = std::make_shared<const mech::QueryWorkload>(
      mech::make_svt_workload(options.queries, options.positives, workload_rng));

  driver::Problem problem;
  problem.domain = svt_domain();
  problem.delta = 0.0;
  problem.repetitions = options.repetitions;
  problem.anti_ideal = options.anti_ideal;
  const std::size_t c_index = problem.domain.index_of("C");
  const std::size_t b_index = problem.domain.index_of("b");
  problem.privacy_oracle = [c_index, b_index](const HyperparameterVector& lambda) {
    return privacy::svt_epsilon(lambda.values[b_index], lambda.values[c_index]);
  };
  problem.utility_oracle = [workload, c_index, b_index](const HyperparameterVector& lambda,
                                                        int repetitions, RngStream rng) {
    const int c = static_cast<int>(std::llround(lambda.values[c_index]));
    return mech::svt_utility_oracle(*workload, lambda.values[b_index], c, repetitions, rng);
  };
  return problem;
}

driver::Problem make_training_problem(std::shared_ptr<const mech::Dataset> data,
                                      const TrainingOptions& options) {
  if (!data) throw DomainError("make_training_problem: null dataset");
  if (data->n_test() < 1) throw ConfigError("training problem: dataset has no test split");

  driver::Problem problem;
  problem.domain = training_domain();
  problem.delta = options.delta;
  problem.repetitions = options.repetitions;
  problem.anti_ideal = options.anti_ideal;

  const std::size_t epochs_i = problem.domain.index_of("epochs");
  const std::size_t lot_i = problem.domain.index_of("lot_size");
  const std::size_t lr_i = problem.domain.index_of("learning_rate");
  const std::size_t var_i = problem.domain.index_of("noise_variance");
  const std::size_t clip_i = problem.domain.index_of("clipping_norm");
  if (problem.domain.dim(lot_i).high > static_cast<double>(data->n_train())) {
    throw ConfigError("training problem: lot_size upper bound exceeds training rows (" +
                      std::to_string(data->n_train()) + ")");
  }

  const std::int64_t n_train = data->n_train();
  const double delta = options.delta;
  problem.privacy_oracle = [epochs_i, lot_i, var_i, n_train,
                            delta](const HyperparameterVector& lambda) {
    const auto epochs = static_cast<std::int64_t>(std::llround(lambda.values[epochs_i]));
    const auto lot = static_cast<std::int64_t>(std::llround(lambda.values[lot_i]));
    // Alg. knob is the noise variance; the accountant wants the multiplier.
    const double multiplier = std::sqrt(lambda.values[var_i]);
    return privacy::dpsgd_privacy_oracle(lot, epochs, multiplier, n_train, delta);
  };

  const TrainerKind trainer = options.trainer;
  problem.utility_oracle = [data, trainer, epochs_i, lot_i, lr_i, var_i, clip_i](
                               const HyperparameterVector& lambda, int repetitions,
                               RngStream rng) {
    mech::TrainingHyperparams hp;
    hp.epochs = static_cast<std::int64_t>(std::llround(lambda.values[epochs_i]));
    hp.lot_size = static_cast<std::int64_t>(std::llround(lambda.values[lot_i]));
    hp.learning_rate = lambda.values[lr_i];
    hp.noise_variance = lambda.values[var_i];
    hp.clipping_norm = lambda.values[clip_i];
    auto train = [trainer, hp](const mech::Dataset& d, RngStream stream) {
      switch (trainer) {
        case TrainerKind::kSgdLogistic:
          return mech::dp_sgd_train(d, hp, mech::LossKind::kLogistic, stream);
        case TrainerKind::kSgdHinge:
          return mech::dp_sgd_train(d, hp, mech::LossKind::kHinge, stream);
        case TrainerKind::kAdamLogistic:
          return mech::dp_adam_train(d, hp, mech::LossKind::kLogistic, stream);
      }
      return mech::dp_sgd_train(d, hp, mech::LossKind::kLogistic, stream);
    };
    return mech::accuracy_utility_oracle(train, *data, repetitions, rng);
  };
  return problem;
}

driver::Problem make_output_perturbation_problem(std::shared_ptr<const mech::Dataset> data,
                                                 const OutputPerturbationOptions& options) {
  if (!data) throw DomainError("make_output_perturbation_problem: null dataset");
  if (data->n_test() < 1) throw ConfigError("training problem: dataset has no test split");

  driver::Problem problem;
  problem.domain = output_perturbation_domain();
  problem.delta = options.delta;
  problem.repetitions = options.repetitions;
  problem.anti_ideal = options.anti_ideal;

  const std::size_t gamma_i = problem.domain.index_of("gamma");
  const std::size_t sigma_i = problem.domain.index_of("sigma");
  const std::int64_t n_train = data->n_train();
  const double delta = options.delta;
  problem.privacy_oracle = [gamma_i, sigma_i, n_train, delta](const HyperparameterVector& lambda) {
    const double sensitivity =
        privacy::logreg_output_perturbation_sensitivity(n_train, lambda.values[gamma_i]);
    return privacy::gaussian_mechanism_epsilon(lambda.values[sigma_i] * sensitivity,
                                               sensitivity, delta);
  };
  problem.utility_oracle = [data, gamma_i, sigma_i](const HyperparameterVector& lambda,
                                                    int repetitions, RngStream rng) {
    const double gamma = lambda.values[gamma_i];
    const double sigma = lambda.values[sigma_i];
    auto train = [gamma, sigma](const mech::Dataset& d, RngStream stream) {
      return mech::output_perturbed_logreg_train(d, gamma, sigma, stream);
    };
    return mech::accuracy_utility_oracle(train, *data, repetitions, rng);
  };
  return problem;
}

}  // namespace dpareto::problems
