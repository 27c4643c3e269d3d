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

#include "dpareto/gp.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include <Eigen/Cholesky>

#include "dpareto/errors.hpp"
#include "dpareto/math_util.hpp"
#include "dpareto/rng.hpp"

namespace dpareto::gp {

namespace {

constexpr double kSqrt5 = 2.23606797749978969641;
constexpr double kLog2Pi = 1.83787706640934548356;
constexpr double kJitterStart = 1e-10;
constexpr double kJitterMax = 1e-4;

double scaled_squared_distance(const Eigen::VectorXd& a, const Eigen::VectorXd& b,
                               const Eigen::VectorXd& lengthscales) {
  double r2 = 0.0;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    const double d = (a[i] - b[i]) / lengthscales[i];
    r2 += d * d;
  }
  return r2;
}

void validate_params(Eigen::Index dims, const KernelParams& params) {
  if (params.lengthscales.size() != dims) {
    throw DomainError("kernel: lengthscale count does not match input dimension");
  }
  if (!(params.signal_variance > 0.0)) throw DomainError("kernel: signal_variance must be > 0");
  for (Eigen::Index i = 0; i < params.lengthscales.size(); ++i) {
    if (!(params.lengthscales[i] > 0.0)) throw DomainError("kernel: lengthscales must be > 0");
  }
  if (!(params.noise_variance >= 0.0)) throw DomainError("kernel: noise_variance must be >= 0");
}

}  // namespace

double matern52(const Eigen::VectorXd& a, const Eigen::VectorXd& b,
                const KernelParams& params) {
  validate_params(a.size(), params);
  if (a.size() != b.size()) throw DomainError("kernel: input dimensions differ");
  const double r2 = scaled_squared_distance(a, b, params.lengthscales);
  const double r = std::sqrt(r2);
  return params.signal_variance * (1.0 + kSqrt5 * r + (5.0 / 3.0) * r2) *
         std::exp(-kSqrt5 * r);
}

SurrogateModel::SurrogateModel(int dims, KernelParams params)
    : inputs_(0, dims), targets_(0), params_(std::move(params)) {
  validate_params(dims, params_);
}

SurrogateModel::SurrogateModel(Eigen::MatrixXd inputs, Eigen::VectorXd targets,
                               KernelParams params)
    : inputs_(std::move(inputs)), targets_(std::move(targets)), params_(std::move(params)) {
  if (inputs_.rows() != targets_.size()) {
    throw DomainError("surrogate: inputs and targets disagree in length");
  }
  if (inputs_.rows() < 1) throw DomainError("surrogate: need at least one observation");
  if (!targets_.allFinite() || !inputs_.allFinite()) {
    throw DomainError("surrogate: non-finite inputs or targets");
  }
  validate_params(inputs_.cols(), params_);
  factorize();
}

void SurrogateModel::factorize() {
  const Eigen::Index n = inputs_.rows();
  target_mean_ = targets_.mean();

  kernel_.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    kernel_(i, i) = params_.signal_variance;
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double k = matern52(inputs_.row(i).transpose(), inputs_.row(j).transpose(), params_);
      kernel_(i, j) = k;
      kernel_(j, i) = k;
    }
  }

  Eigen::LLT<Eigen::MatrixXd> llt;
  jitter_ = 0.0;
  double try_jitter = 0.0;
  while (true) {
    Eigen::MatrixXd gram = kernel_;
    gram.diagonal().array() += params_.noise_variance + try_jitter;
    llt.compute(gram);
    if (llt.info() == Eigen::Success) {
      jitter_ = try_jitter;
      break;
    }
    if (try_jitter == 0.0) {
      try_jitter = kJitterStart;
    } else if (try_jitter < kJitterMax) {
      try_jitter = std::min(try_jitter * 10.0, kJitterMax);
    } else {
      throw NumericError("surrogate: Cholesky failed at maximum jitter 1e-4");
    }
  }
  factor_ = llt.matrixL();
  alpha_ = llt.solve(targets_ - Eigen::VectorXd::Constant(n, target_mean_));
}

std::pair<double, double> SurrogateModel::predict(const Eigen::VectorXd& x) const {
  if (x.size() != inputs_.cols()) throw DomainError("predict: dimension mismatch");
  const Eigen::Index n = inputs_.rows();
  if (n == 0) return {target_mean_, params_.signal_variance};

  Eigen::VectorXd k_star(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    k_star[i] = matern52(inputs_.row(i).transpose(), x, params_);
  }
  const double mean = target_mean_ + k_star.dot(alpha_);
  const Eigen::VectorXd v = factor_.triangularView<Eigen::Lower>().solve(k_star);
  const double variance = params_.signal_variance - v.squaredNorm();
  return {mean, std::max(variance, 0.0)};
}

double SurrogateModel::log_marginal_likelihood() const {
  const Eigen::Index n = inputs_.rows();
  if (n == 0) return 0.0;
  const Eigen::VectorXd centered = targets_ - Eigen::VectorXd::Constant(n, target_mean_);
  const double fit_term = -0.5 * centered.dot(alpha_);
  const double log_det = factor_.diagonal().array().log().sum();
  return fit_term - log_det - 0.5 * static_cast<double>(n) * kLog2Pi;
}

Eigen::VectorXd SurrogateModel::log_marginal_likelihood_gradient() const {
  const Eigen::Index n = inputs_.rows();
  const Eigen::Index d = inputs_.cols();
  Eigen::VectorXd grad = Eigen::VectorXd::Zero(d + 2);
  if (n == 0) return grad;

  // W = alpha alpha' - K^{-1}; each gradient is 1/2 tr(W dK/dtheta).
  Eigen::MatrixXd w = Eigen::MatrixXd::Identity(n, n);
  factor_.triangularView<Eigen::Lower>().solveInPlace(w);
  factor_.transpose().triangularView<Eigen::Upper>().solveInPlace(w);
  w = alpha_ * alpha_.transpose() - w;

  // d/dlog(sv): the noise-free kernel matrix itself.
  grad[0] = 0.5 * (w.array() * kernel_.array()).sum();

  // d/dlog(l_i): sv * 5/3 (1 + sqrt5 r) exp(-sqrt5 r) * (delta_i / l_i)^2,
  // accumulated over the strict upper triangle (W is symmetric).
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double r2 = scaled_squared_distance(inputs_.row(i).transpose(),
                                                inputs_.row(j).transpose(),
                                                params_.lengthscales);
      const double r = std::sqrt(r2);
      const double common = params_.signal_variance * (5.0 / 3.0) *
                            (1.0 + kSqrt5 * r) * std::exp(-kSqrt5 * r);
      const double weight = 2.0 * w(i, j);
      for (Eigen::Index c = 0; c < d; ++c) {
        const double scaled = (inputs_(i, c) - inputs_(j, c)) / params_.lengthscales[c];
        grad[1 + c] += 0.5 * weight * common * scaled * scaled;
      }
    }
  }

  // d/dlog(noise): noise * I.
  grad[d + 1] = 0.5 * params_.noise_variance * w.trace();
  return grad;
}

namespace {

struct LogBounds {
  Eigen::VectorXd lower;
  Eigen::VectorXd upper;
};

LogBounds make_bounds(Eigen::Index d, const FitConfig& cfg) {
  LogBounds bounds;
  bounds.lower.resize(d + 2);
  bounds.upper.resize(d + 2);
  bounds.lower[0] = std::log(cfg.signal_min);
  bounds.upper[0] = std::log(cfg.signal_max);
  for (Eigen::Index i = 0; i < d; ++i) {
    bounds.lower[1 + i] = std::log(cfg.lengthscale_min);
    bounds.upper[1 + i] = std::log(cfg.lengthscale_max);
  }
  bounds.lower[d + 1] = std::log(cfg.noise_floor);
  bounds.upper[d + 1] = std::log(cfg.noise_max);
  return bounds;
}

KernelParams params_from_log(const Eigen::VectorXd& theta, Eigen::Index d) {
  KernelParams params;
  params.signal_variance = std::exp(theta[0]);
  params.lengthscales = theta.segment(1, d).array().exp().matrix();
  params.noise_variance = std::exp(theta[d + 1]);
  return params;
}

// Sign-based adaptive-step ascent (iRprop-) projected onto the bounds.
// Tracks the best iterate visited; a Cholesky breakdown just rejects the
// iterate and shrinks all steps.
struct AscentState {
  Eigen::VectorXd theta;
  double best_value = -kInf;
  Eigen::VectorXd best_theta;
};

AscentState rprop_ascend(const Eigen::MatrixXd& x, const Eigen::VectorXd& y,
                         Eigen::VectorXd theta, const LogBounds& bounds, int iterations) {
  const Eigen::Index d = x.cols();
  const Eigen::Index p = theta.size();
  Eigen::VectorXd step = Eigen::VectorXd::Constant(p, 0.1);
  Eigen::VectorXd previous_grad = Eigen::VectorXd::Zero(p);

  AscentState state;
  state.theta = theta;
  state.best_theta = theta;

  for (int it = 0; it < iterations; ++it) {
    double value = -kInf;
    Eigen::VectorXd grad = Eigen::VectorXd::Zero(p);
    try {
      SurrogateModel model(x, y, params_from_log(theta, d));
      value = model.log_marginal_likelihood();
      grad = model.log_marginal_likelihood_gradient();
    } catch (const NumericError&) {
      theta = state.best_theta;
      step *= 0.5;
      previous_grad.setZero();
      continue;
    }
    if (value > state.best_value) {
      state.best_value = value;
      state.best_theta = theta;
    }

    double max_step = 0.0;
    for (Eigen::Index i = 0; i < p; ++i) {
      const double sign_product = grad[i] * previous_grad[i];
      if (sign_product > 0.0) {
        step[i] = std::min(step[i] * 1.2, 0.5);
      } else if (sign_product < 0.0) {
        step[i] = std::max(step[i] * 0.5, 1e-6);
        grad[i] = 0.0;
      }
      if (grad[i] > 0.0) {
        theta[i] += step[i];
      } else if (grad[i] < 0.0) {
        theta[i] -= step[i];
      }
      theta[i] = std::clamp(theta[i], bounds.lower[i], bounds.upper[i]);
      previous_grad[i] = grad[i];
      if (grad[i] != 0.0) max_step = std::max(max_step, step[i]);
    }
    if (max_step > 0.0 && max_step <= 1e-6) break;
  }
  state.theta = state.best_theta;
  return state;
}

}  // namespace

SurrogateModel fit(const Eigen::MatrixXd& inputs, const Eigen::VectorXd& targets,
                   const FitConfig& config) {
  if (inputs.rows() < 1) throw DomainError("fit: need at least one observation");
  if (inputs.rows() != targets.size()) throw DomainError("fit: inputs/targets mismatch");
  if (!targets.allFinite()) throw DomainError("fit: non-finite targets");
  if (!inputs.allFinite()) throw DomainError("fit: non-finite inputs");

  const Eigen::Index d = inputs.cols();
  const Eigen::Index n = inputs.rows();
  const LogBounds bounds = make_bounds(d, config);

  const double variance =
      n > 1 ? (targets.array() - targets.mean()).square().sum() / static_cast<double>(n - 1)
            : 1.0;
  const double sv0 = std::clamp(std::max(variance, 1e-3), config.signal_min, config.signal_max);

  std::vector<Eigen::VectorXd> starts;
  {
    Eigen::VectorXd theta(d + 2);
    theta[0] = std::log(sv0);
    for (Eigen::Index i = 0; i < d; ++i) theta[1 + i] = std::log(0.5);
    theta[d + 1] = std::log(std::clamp(0.05 * sv0, config.noise_floor, config.noise_max));
    starts.push_back(theta);
  }
  RngEngine engine = RngStream{config.seed, 0xf17}.engine();
  auto log_uniform = [&engine](double lo, double hi) {
    return std::log(lo) + engine.uniform() * (std::log(hi) - std::log(lo));
  };
  while (static_cast<int>(starts.size()) < std::max(config.multistarts, 1)) {
    Eigen::VectorXd theta(d + 2);
    theta[0] = std::clamp(log_uniform(0.1 * sv0, 10.0 * sv0),
                          bounds.lower[0], bounds.upper[0]);
    for (Eigen::Index i = 0; i < d; ++i) {
      theta[1 + i] = std::clamp(log_uniform(0.03, 3.0), bounds.lower[1], bounds.upper[1]);
    }
    theta[d + 1] = std::clamp(log_uniform(config.noise_floor, 0.2),
                              bounds.lower[d + 1], bounds.upper[d + 1]);
    starts.push_back(theta);
  }

  AscentState best;
  for (const Eigen::VectorXd& start : starts) {
    AscentState state = rprop_ascend(inputs, targets, start, bounds, config.screen_iters);
    if (state.best_value > best.best_value) best = state;
  }
  if (!std::isfinite(best.best_value)) {
    throw NumericError("fit: every start failed to factorize");
  }
  AscentState polished =
      rprop_ascend(inputs, targets, best.best_theta, bounds, config.max_iters);
  if (polished.best_value < best.best_value) polished = best;

  return SurrogateModel(inputs, targets, params_from_log(polished.best_theta, d));
}

}  // namespace dpareto::gp
