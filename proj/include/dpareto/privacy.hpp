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
#include <vector>

namespace dpareto::privacy {

// Pure-DP cost of the sparse vector technique run with total noise level b
// and answer bound C >= 1: (1 + (2C)^{1/3})(1 + (2C)^{2/3}) / b.
double svt_epsilon(double b, double C);

// The same guarantee split across the threshold and query noise budgets,
// eps1 = 1/b1 and eps2 = 2C/b2 with b1 = b/(1 + (2C)^{1/3}), b2 = b - b1.
// The pair sums to svt_epsilon(b, C) exactly.
std::pair<double, double> svt_epsilon_decomposed(double b, double C);

// delta(epsilon) for the Gaussian mechanism with the given noise standard
// deviation and L2 sensitivity (the analytic characterization,
// arXiv:1805.06530): Phi(s/2o - eo/s) - e^eps Phi(-s/2o - eo/s).
double gaussian_mechanism_delta(double epsilon, double sigma, double sensitivity);

// Smallest epsilon >= 0 such that the mechanism is (epsilon, delta)-DP,
// by bisection to 1e-9 absolute. Returns 0 when delta(0) <= delta already;
// throws NumericError if no bracket exists below epsilon = 1e6.
double gaussian_mechanism_epsilon(double sigma, double sensitivity, double delta);

// Renyi divergence of order alpha for the Gaussian mechanism at unit
// sensitivity: alpha / (2 sigma^2).
double rdp_gaussian(double order, double noise_multiplier);

// Amplification-by-subsampling bound (sampling without replacement) for the
// Gaussian mechanism at integer order >= 2 and sampling fraction gamma.
// Accumulated in log space so large orders do not overflow.
double rdp_subsampled_gaussian(int order, double noise_multiplier, double gamma);

// Renyi-DP guarantee as a map order -> epsilon_RDP(order).
struct RdpCurve {
  std::vector<double> orders;
  std::vector<double> values;
};

// RDP composes additively: values scale by the step count.
RdpCurve compose_rdp(RdpCurve per_step, std::int64_t steps);

struct DpGuarantee {
  double epsilon = 0.0;
  double delta = 0.0;
  double best_order = 0.0;  // order attaining the minimum, for diagnostics
};

// Standard conversion: epsilon = min_alpha eps_RDP(alpha) + log(1/delta)/(alpha-1).
DpGuarantee rdp_to_dp(const RdpCurve& curve, double delta);

// End-to-end accountant for mini-batched gradient perturbation: per-step
// subsampled Gaussian at gamma = lot_size/dataset_size with the given noise
// multiplier (the 2L/m scaling of the noise cancels against the replace-one
// sensitivity of the clipped mean), composed over epochs * ceil(n/m) steps
// on the integer order grid {2..256}, converted at delta. At gamma == 1 the
// per-step mechanism is exactly the full-batch Gaussian, so the unamplified
// curve is used there.
double dpsgd_privacy_oracle(std::int64_t lot_size, std::int64_t epochs,
                            double noise_multiplier, std::int64_t dataset_size,
                            double delta);

// L2 sensitivity stand-in for output-perturbed L2-regularized logistic
// regression with unit-norm features: 2 / (n * gamma_reg).
double logreg_output_perturbation_sensitivity(std::int64_t n, double gamma_reg);

}  // namespace dpareto::privacy
