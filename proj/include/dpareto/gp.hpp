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
#include <utility>

#include <Eigen/Core>

namespace dpareto::gp {

// Matern 5/2 hyperparameters with per-dimension (ARD) lengthscales.
struct KernelParams {
  double signal_variance = 1.0;
  Eigen::VectorXd lengthscales;  // one per input dimension, all > 0
  double noise_variance = 1e-6;
};

// k(x, x') = sv * (1 + sqrt5 r + 5 r^2 / 3) exp(-sqrt5 r) with r the
// lengthscale-scaled Euclidean distance. k(x, x) = signal_variance.
double matern52(const Eigen::VectorXd& a, const Eigen::VectorXd& b,
                const KernelParams& params);

struct FitConfig {
  int multistarts = 8;
  int screen_iters = 10;  // optimizer iterations per start before picking one
  int max_iters = 100;    // polish budget for the best start
  std::uint64_t seed = 0;
  double noise_floor = 1e-6;
  double lengthscale_min = 1e-2;
  double lengthscale_max = 10.0;
  double signal_min = 1e-4;
  double signal_max = 1e4;
  double noise_max = 1.0;
};

// Exact GP regressor over normalized inputs. Targets are mean-centered
// internally; predictions add the mean back. Factorization applies jitter
// escalation 1e-10..1e-4 and throws NumericError beyond that.
class SurrogateModel {
 public:
  // Empty prior model: predicts (0, signal_variance) everywhere.
  explicit SurrogateModel(int dims, KernelParams params);

  // Factorizes K + noise*I at fixed hyperparameters.
  SurrogateModel(Eigen::MatrixXd inputs, Eigen::VectorXd targets, KernelParams params);

  int dims() const { return static_cast<int>(inputs_.cols()); }
  int size() const { return static_cast<int>(inputs_.rows()); }
  const KernelParams& params() const { return params_; }
  const Eigen::MatrixXd& inputs() const { return inputs_; }
  double jitter() const { return jitter_; }
  const Eigen::MatrixXd& cholesky_factor() const { return factor_; }

  // Posterior (mean, variance >= 0) of the latent function at x.
  std::pair<double, double> predict(const Eigen::VectorXd& x) const;

  // -1/2 y'a - sum log L_ii - n/2 log 2pi on the centered targets.
  double log_marginal_likelihood() const;

  // Gradient of the log marginal likelihood with respect to the log of
  // [signal_variance, lengthscale_1.., noise_variance], in that order.
  Eigen::VectorXd log_marginal_likelihood_gradient() const;

 private:
  void factorize();

  Eigen::MatrixXd inputs_;   // n x d
  Eigen::VectorXd targets_;  // raw targets
  double target_mean_ = 0.0;
  KernelParams params_;
  Eigen::MatrixXd kernel_;   // K without noise or jitter
  Eigen::MatrixXd factor_;   // lower Cholesky of K + (noise + jitter) I
  Eigen::VectorXd alpha_;    // (K + noise I)^{-1} (y - mean)
  double jitter_ = 0.0;
};

// Maximizes the log marginal likelihood over box-bounded log-parameters with
// a multi-start sign-based gradient ascent: every start runs screen_iters
// iterations, the best continues for max_iters. Deterministic in
// (inputs, targets, config.seed).
SurrogateModel fit(const Eigen::MatrixXd& inputs, const Eigen::VectorXd& targets,
                   const FitConfig& config);

}  // namespace dpareto::gp
