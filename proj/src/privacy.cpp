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

#include "dpareto/privacy.hpp"

#include <cmath>
#include <string>

#include "dpareto/errors.hpp"
#include "dpareto/math_util.hpp"

namespace dpareto::privacy {

namespace {

constexpr int kMinOrder = 2;
constexpr int kMaxOrder = 256;
constexpr double kEpsilonBracketCap = 1e6;
constexpr double kBisectionTolerance = 1e-9;

double log_binomial(int n, int k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

}  // namespace

double svt_epsilon(double b, double C) {
  if (!(b > 0.0)) throw DomainError("svt_epsilon: b must be > 0");
  if (!(C >= 1.0)) throw DomainError("svt_epsilon: C must be >= 1");
  const double cbrt_2c = std::cbrt(2.0 * C);
  return (1.0 + cbrt_2c) * (1.0 + cbrt_2c * cbrt_2c) / b;
}

std::pair<double, double> svt_epsilon_decomposed(double b, double C) {
  if (!(b > 0.0)) throw DomainError("svt_epsilon_decomposed: b must be > 0");
  if (!(C >= 1.0)) throw DomainError("svt_epsilon_decomposed: C must be >= 1");
  const double b1 = b / (1.0 + std::cbrt(2.0 * C));
  const double b2 = b - b1;
  return {1.0 / b1, 2.0 * C / b2};
}

double gaussian_mechanism_delta(double epsilon, double sigma, double sensitivity) {
  if (!(sigma > 0.0)) throw DomainError("gaussian mechanism: sigma must be > 0");
  if (!(sensitivity > 0.0)) throw DomainError("gaussian mechanism: sensitivity must be > 0");
  const double a = sensitivity / (2.0 * sigma);
  const double b = epsilon * sigma / sensitivity;
  // e^eps * Phi(-a-b); through log space only when e^eps could overflow
  // (there the product underflows to 0 anyway).
  const double second = epsilon < 700.0 ? std::exp(epsilon) * norm_cdf(-a - b)
                                        : std::exp(epsilon + log_norm_cdf(-a - b));
  return norm_cdf(a - b) - second;
}

double gaussian_mechanism_epsilon(double sigma, double sensitivity, double delta) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw DomainError("gaussian mechanism: delta must lie in (0, 1)");
  }
  if (gaussian_mechanism_delta(0.0, sigma, sensitivity) <= delta) return 0.0;

  double hi = 1.0;
  while (gaussian_mechanism_delta(hi, sigma, sensitivity) > delta) {
    hi *= 2.0;
    if (hi > kEpsilonBracketCap) {
      throw NumericError("gaussian mechanism: no epsilon below 1e6 satisfies delta");
    }
  }
  double lo = hi == 1.0 ? 0.0 : hi * 0.5;
  // delta(epsilon) is decreasing; shrink until well inside the tolerance so
  // the forward evaluation round-trips at 1e-9.
  while (hi - lo > kBisectionTolerance * 1e-3) {
    const double mid = 0.5 * (lo + hi);
    if (gaussian_mechanism_delta(mid, sigma, sensitivity) > delta) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return hi;
}

double rdp_gaussian(double order, double noise_multiplier) {
  if (!(order > 1.0)) throw DomainError("rdp_gaussian: order must be > 1");
  if (!(noise_multiplier > 0.0)) throw DomainError("rdp_gaussian: noise multiplier must be > 0");
  return order / (2.0 * noise_multiplier * noise_multiplier);
}

double rdp_subsampled_gaussian(int order, double noise_multiplier, double gamma) {
  if (order < 2) throw DomainError("rdp_subsampled_gaussian: order must be an integer >= 2");
  if (!(noise_multiplier > 0.0)) {
    throw DomainError("rdp_subsampled_gaussian: noise multiplier must be > 0");
  }
  if (!(gamma >= 0.0 && gamma <= 1.0)) {
    throw DomainError("rdp_subsampled_gaussian: gamma must lie in [0, 1]");
  }
  if (gamma == 0.0) return 0.0;

  const double log_gamma = std::log(gamma);
  const double eps2 = rdp_gaussian(2.0, noise_multiplier);
  // j = 2 term uses min{4(e^{eps2} - 1), 2 e^{eps2}}; for j >= 3 only the
  // 2 e^{(j-1) eps_j} branch stays finite for Gaussian noise.
  const double log_j2 = std::min(std::log(4.0) + log_expm1(eps2), std::log(2.0) + eps2);

  std::vector<double> log_terms;
  log_terms.reserve(static_cast<std::size_t>(order));
  log_terms.push_back(0.0);  // the leading 1
  log_terms.push_back(log_binomial(order, 2) + 2.0 * log_gamma + log_j2);
  for (int j = 3; j <= order; ++j) {
    const double eps_j = rdp_gaussian(static_cast<double>(j), noise_multiplier);
    log_terms.push_back(log_binomial(order, j) + j * log_gamma + std::log(2.0) +
                        (j - 1.0) * eps_j);
  }
  const double total = logsumexp(log_terms);
  return total / (order - 1.0);
}

RdpCurve compose_rdp(RdpCurve per_step, std::int64_t steps) {
  if (steps < 1) throw DomainError("compose_rdp: steps must be >= 1");
  for (double& v : per_step.values) v *= static_cast<double>(steps);
  return per_step;
}

DpGuarantee rdp_to_dp(const RdpCurve& curve, double delta) {
  if (curve.orders.empty() || curve.orders.size() != curve.values.size()) {
    throw DomainError("rdp_to_dp: curve must be non-empty and consistent");
  }
  if (!(delta > 0.0 && delta < 1.0)) throw DomainError("rdp_to_dp: delta must lie in (0, 1)");
  const double log_inv_delta = std::log(1.0 / delta);
  DpGuarantee best{kInf, delta, 0.0};
  for (std::size_t i = 0; i < curve.orders.size(); ++i) {
    const double order = curve.orders[i];
    const double epsilon = curve.values[i] + log_inv_delta / (order - 1.0);
    if (epsilon < best.epsilon) {
      best.epsilon = epsilon;
      best.best_order = order;
    }
  }
  return best;
}

double dpsgd_privacy_oracle(std::int64_t lot_size, std::int64_t epochs,
                            double noise_multiplier, std::int64_t dataset_size,
                            double delta) {
  if (lot_size < 1 || lot_size > dataset_size) {
    throw DomainError("dpsgd accountant: need 1 <= lot_size <= dataset_size");
  }
  if (epochs < 1) throw DomainError("dpsgd accountant: epochs must be >= 1");
  if (!(noise_multiplier > 0.0)) {
    throw DomainError("dpsgd accountant: noise multiplier must be > 0");
  }
  const double gamma = static_cast<double>(lot_size) / static_cast<double>(dataset_size);
  const std::int64_t steps_per_epoch = (dataset_size + lot_size - 1) / lot_size;
  const std::int64_t steps = epochs * steps_per_epoch;

  RdpCurve per_step;
  per_step.orders.reserve(kMaxOrder - kMinOrder + 1);
  per_step.values.reserve(kMaxOrder - kMinOrder + 1);
  for (int order = kMinOrder; order <= kMaxOrder; ++order) {
    per_step.orders.push_back(static_cast<double>(order));
    const double value = gamma < 1.0
                             ? rdp_subsampled_gaussian(order, noise_multiplier, gamma)
                             : rdp_gaussian(static_cast<double>(order), noise_multiplier);
    per_step.values.push_back(value);
  }
  return rdp_to_dp(compose_rdp(std::move(per_step), steps), delta).epsilon;
}

double logreg_output_perturbation_sensitivity(std::int64_t n, double gamma_reg) {
  if (n < 1) throw DomainError("sensitivity: n must be >= 1");
  if (!(gamma_reg > 0.0)) throw DomainError("sensitivity: gamma_reg must be > 0");
  return 2.0 / (static_cast<double>(n) * gamma_reg);
}

}  // namespace dpareto::privacy
