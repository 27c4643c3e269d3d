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

#include "dpareto/stats.hpp"

#include <cmath>

#include "dpareto/errors.hpp"
#include "dpareto/math_util.hpp"

namespace dpareto::stats {

namespace {

// Continued fraction for the regularized incomplete beta (modified Lentz).
double beta_continued_fraction(double a, double b, double x) {
  constexpr int kMaxIterations = 300;
  constexpr double kTiny = 1e-30;
  constexpr double kEps = 3e-15;

  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::abs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIterations; ++m) {
    const int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < kEps) break;
  }
  return h;
}

}  // namespace

double reg_incomplete_beta(double a, double b, double x) {
  if (!(a > 0.0 && b > 0.0)) throw DomainError("incomplete beta: a, b must be > 0");
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("incomplete beta: x must lie in [0, 1]");
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  const double log_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                           a * std::log(x) + b * std::log1p(-x);
  const double front = std::exp(log_front);
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return front * beta_continued_fraction(a, b, x) / a;
  }
  return 1.0 - front * beta_continued_fraction(b, a, 1.0 - x) / b;
}

double student_t_cdf(double t, int dof) {
  if (dof < 1) throw DomainError("student t: dof must be >= 1");
  const double nu = static_cast<double>(dof);
  const double x = nu / (nu + t * t);
  const double tail = 0.5 * reg_incomplete_beta(0.5 * nu, 0.5, x);
  return t >= 0.0 ? 1.0 - tail : tail;
}

double student_t_quantile(double p, int dof) {
  if (!(p > 0.0 && p < 1.0)) throw DomainError("student t: p must lie in (0, 1)");
  if (p == 0.5) return 0.0;
  const bool upper = p > 0.5;
  const double target = upper ? p : 1.0 - p;
  double lo = 0.0;
  double hi = 1.0;
  while (student_t_cdf(hi, dof) < target) {
    hi *= 2.0;
    if (hi > 1e12) throw NumericError("student t: quantile bracket overflow");
  }
  for (int i = 0; i < 200 && hi - lo > 1e-12 * std::max(1.0, hi); ++i) {
    const double mid = 0.5 * (lo + hi);
    if (student_t_cdf(mid, dof) < target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double q = 0.5 * (lo + hi);
  return upper ? q : -q;
}

HvComparison one_sample_t(std::span<const double> differences) {
  const auto n = static_cast<int>(differences.size());
  if (n < 2) throw DomainError("one_sample_t: need at least 2 values");

  double mean = 0.0;
  for (double d : differences) mean += d;
  mean /= n;
  double ss = 0.0;
  for (double d : differences) ss += (d - mean) * (d - mean);
  const double stddev = std::sqrt(ss / (n - 1));

  HvComparison comparison;
  comparison.mean_diff = mean;
  comparison.dof = n - 1;
  if (stddev == 0.0) {
    comparison.degenerate = true;
    comparison.ci_low = mean;
    comparison.ci_high = mean;
    return comparison;
  }
  const double standard_error = stddev / std::sqrt(static_cast<double>(n));
  comparison.t_stat = mean / standard_error;
  const double q95 = student_t_quantile(0.975, comparison.dof);
  comparison.ci_low = mean - q95 * standard_error;
  comparison.ci_high = mean + q95 * standard_error;
  comparison.significant_p001 =
      std::abs(comparison.t_stat) > student_t_quantile(0.9995, comparison.dof);
  return comparison;
}

HvComparison compare_hv(const driver::RunResult& bo,
                        std::span<const driver::RunResult> random_chunks,
                        const AntiIdealPoint& anti_ideal) {
  if (random_chunks.size() < 2) {
    throw DomainError("compare_hv: need at least 2 random chunks");
  }
  auto run_hypervolume = [&anti_ideal](const driver::RunResult& run) {
    std::vector<ObjectivePoint> points;
    points.reserve(run.evaluations.size());
    for (const Evaluation& evaluation : run.evaluations) points.push_back(evaluation.objectives);
    return hypervolume(pareto_front(std::move(points)), anti_ideal);
  };
  const double bo_hv = run_hypervolume(bo);
  std::vector<double> differences;
  differences.reserve(random_chunks.size());
  for (const driver::RunResult& chunk : random_chunks) {
    differences.push_back(bo_hv - run_hypervolume(chunk));
  }
  return one_sample_t(differences);
}

}  // namespace dpareto::stats
