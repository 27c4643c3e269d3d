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
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dpareto/acquisition.hpp"
#include "dpareto/domain.hpp"
#include "dpareto/evaluation.hpp"
#include "dpareto/pareto.hpp"
#include "dpareto/rng.hpp"

namespace dpareto::driver {

using PrivacyOracle = std::function<double(const HyperparameterVector&)>;
using UtilityOracle =
    std::function<UtilityOutcome(const HyperparameterVector&, int repetitions, RngStream)>;

// Everything that defines one trade-off problem: the search space and the
// two oracles, plus the fixed delta, reference point, and repeat count.
struct Problem {
  HyperparameterDomain domain;
  PrivacyOracle privacy_oracle;
  UtilityOracle utility_oracle;
  double delta = 0.0;
  AntiIdealPoint anti_ideal{10.0, 1.0};
  int repetitions = 50;
};

// Per-dimension sampler for the random-search baseline. Samples are
// rejection-resampled into [accept_lo, accept_hi] and rounded afterwards
// when int_valued.
struct DimSampler {
  enum class Kind { kDomainUniform, kUniform, kNormal, kShiftedExponential };
  Kind kind = Kind::kDomainUniform;
  double a = 0.0;  // uniform low / normal mean / exponential rate
  double b = 0.0;  // uniform high / normal stddev / exponential shift
  bool int_valued = false;
  double accept_lo = 0.0;
  double accept_hi = 0.0;
};

struct SamplingDistribution {
  std::vector<DimSampler> dims;

  // Uniform in each dimension's normalized scale (log-uniform on log dims),
  // accepting the whole domain box.
  static SamplingDistribution uniform_over(const HyperparameterDomain& domain);
};

struct RunResult {
  std::vector<Evaluation> evaluations;
  ParetoFront front;                              // original (epsilon, error) units
  std::vector<std::pair<int, double>> hv_trajectory;  // 1-based index, prefix HV
  std::vector<std::string> notes;                 // skips, fallbacks, retries
};

// Streams evaluations out as they complete and replays a prior log.
// An evaluation's randomness depends only on (seed, evaluation index), so
// records consumed from `resume` leave every later draw unchanged.
struct RunHooks {
  const std::vector<Evaluation>* resume = nullptr;
  std::function<void(const Evaluation&, int index, bool resumed)> on_evaluation;
};

// The main Bayesian-optimization loop: k0 seed points uniform in normalized
// space, then k rounds of {fit one GP per transformed objective, maximize
// HVPoI against the transformed anti-ideal, evaluate, append}. A failed
// oracle evaluation is retried once, then skipped with a note (the
// iteration is still consumed).
RunResult dpareto_run(const Problem& problem, int k0, int k,
                      const acq::AcquisitionConfig& acquisition, RngStream rng,
                      const RunHooks& hooks = {});

// Budget independent draws from the sampling distribution, evaluated and
// logged exactly like BO points.
RunResult random_search_run(const Problem& problem, const SamplingDistribution& sampling,
                            int budget, RngStream rng, const RunHooks& hooks = {});

// Full factorial sweep, log-spaced on log dims, integer values deduplicated,
// evaluated in lexicographic order.
RunResult grid_search_run(const Problem& problem, int points_per_dim, RngStream rng,
                          const RunHooks& hooks = {});

// Prefix hypervolumes after each evaluation; non-decreasing.
std::vector<std::pair<int, double>> hv_trajectory(std::span<const Evaluation> evaluations,
                                                  const AntiIdealPoint& anti_ideal);

struct VariabilityFronts {
  ParetoFront best;   // epsilon vs 1 - max per-run utility
  ParetoFront mean;   // epsilon vs 1 - mean utility
  ParetoFront worst;  // epsilon vs 1 - min per-run utility
};

// Requires non-empty per-run utilities on every evaluation.
VariabilityFronts variability_fronts(std::span<const Evaluation> evaluations);

}  // namespace dpareto::driver
