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

#include <span>

#include "dpareto/driver.hpp"
#include "dpareto/pareto.hpp"

namespace dpareto::stats {

// Regularized incomplete beta function I_x(a, b) (continued fraction).
double reg_incomplete_beta(double a, double b, double x);

// Student-t CDF and upper quantile for dof >= 1.
double student_t_cdf(double t, int dof);
double student_t_quantile(double p, int dof);

struct HvComparison {
  double mean_diff = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  double t_stat = 0.0;
  int dof = 0;
  bool significant_p001 = false;  // two-sided p < 0.001
  bool degenerate = false;        // zero sample variance; t reported as 0
};

// One-sample t statistics of the given differences against mean zero, with
// a two-sided 95% confidence interval.
HvComparison one_sample_t(std::span<const double> differences);

// Hypervolume differences HV(bo) - HV(random_i) per random chunk, then
// one_sample_t over them. Needs at least two chunks.
HvComparison compare_hv(const driver::RunResult& bo,
                        std::span<const driver::RunResult> random_chunks,
                        const AntiIdealPoint& anti_ideal);

}  // namespace dpareto::stats
