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

#include "dpareto/driver.hpp"

#include <chrono>
#include <cmath>
#include <optional>

#include "dpareto/errors.hpp"
#include "dpareto/gp.hpp"
#include "dpareto/math_util.hpp"
#include "dpareto/objectives.hpp"

namespace dpareto::driver {

namespace {

// Stream tags; evaluation i always draws from child(kEvalTag).child(i) so a
// run is a pure function of (config, seed) at every index.
constexpr std::uint64_t kSeedPointTag = 1;
constexpr std::uint64_t kEvalTag = 2;
constexpr std::uint64_t kAcquisitionTag = 3;
constexpr std::uint64_t kFitTag = 4;
constexpr std::uint64_t kSampleTag = 5;

constexpr std::uint64_t kMaxRejections = 1000000;

Evaluation evaluate_once(const Problem& problem, const HyperparameterVector& lambda,
                         Method method, std::uint64_t seed, RngStream stream) {
  const auto start = std::chrono::steady_clock::now();
  Evaluation evaluation;
  evaluation.point = lambda;
  evaluation.method = method;
  evaluation.seed = seed;
  evaluation.objectives.epsilon = problem.privacy_oracle(lambda);
  UtilityOutcome utility = problem.utility_oracle(lambda, problem.repetitions, stream);
  evaluation.objectives.error = 1.0 - utility.mean;
  evaluation.per_run_utilities = std::move(utility.per_run);
  evaluation.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return evaluation;
}

// Retry once on failure, then skip with a note.
std::optional<Evaluation> evaluate_with_retry(const Problem& problem,
                                              const HyperparameterVector& lambda,
                                              Method method, std::uint64_t seed,
                                              RngStream stream,
                                              std::vector<std::string>& notes, int index) {
  for (int attempt = 0; attempt < 2; ++attempt) {
    try {
      return evaluate_once(problem, lambda, method, seed,
                           stream.child(static_cast<std::uint64_t>(attempt)));
    } catch (const std::exception& e) {
      notes.push_back("evaluation " + std::to_string(index) + " attempt " +
                      std::to_string(attempt + 1) + " failed: " + e.what());
    }
  }
  notes.push_back("evaluation " + std::to_string(index) + " skipped after retry");
  return std::nullopt;
}

// Either replays the resume log or computes the point and evaluates it.
struct EvaluationCollector {
  const Problem& problem;
  const RunHooks& hooks;
  RunResult& result;
  Method method;
  std::uint64_t seed;

  bool take_resumed(int index) {
    if (hooks.resume == nullptr ||
        static_cast<std::size_t>(index) >= hooks.resume->size()) {
      return false;
    }
    const Evaluation& evaluation = (*hooks.resume)[static_cast<std::size_t>(index)];
    result.evaluations.push_back(evaluation);
    if (hooks.on_evaluation) hooks.on_evaluation(evaluation, index, true);
    return true;
  }

  void evaluate(const HyperparameterVector& lambda, RngStream stream, int index) {
    auto evaluation = evaluate_with_retry(problem, lambda, method, seed, stream,
                                          result.notes, index);
    if (evaluation.has_value()) {
      result.evaluations.push_back(std::move(*evaluation));
      if (hooks.on_evaluation) {
        hooks.on_evaluation(result.evaluations.back(), index, false);
      }
    }
  }
};

void finalize(RunResult& result, const Problem& problem) {
  std::vector<ObjectivePoint> points;
  points.reserve(result.evaluations.size());
  for (const Evaluation& evaluation : result.evaluations) {
    points.push_back(evaluation.objectives);
  }
  result.front = pareto_front(std::move(points));
  result.hv_trajectory = hv_trajectory(result.evaluations, problem.anti_ideal);
}

double sample_dimension(const DimSampler& sampler, const Dimension& dim,
                        const HyperparameterDomain& domain, std::size_t dim_index,
                        RngEngine& engine) {
  std::uint64_t rejections = 0;
  while (true) {
    double value = 0.0;
    switch (sampler.kind) {
      case DimSampler::Kind::kDomainUniform: {
        Eigen::VectorXd unit = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(domain.size()));
        unit[static_cast<Eigen::Index>(dim_index)] = engine.uniform();
        value = domain.denormalize(unit).values[dim_index];
        break;
      }
      case DimSampler::Kind::kUniform:
        value = sampler.a + engine.uniform() * (sampler.b - sampler.a);
        break;
      case DimSampler::Kind::kNormal:
        value = sampler.a + sampler.b * engine.normal();
        break;
      case DimSampler::Kind::kShiftedExponential:
        value = engine.exponential(sampler.a) + sampler.b;
        break;
    }
    if (value >= sampler.accept_lo && value <= sampler.accept_hi) {
      if (sampler.int_valued) value = round_half_even(value);
      return std::clamp(value, dim.low, dim.high);
    }
    if (++rejections > kMaxRejections) {
      throw ConfigError("random search: dimension '" + dim.name +
                        "' exceeded 1e6 consecutive rejections");
    }
  }
}

}  // namespace

SamplingDistribution SamplingDistribution::uniform_over(const HyperparameterDomain& domain) {
  SamplingDistribution sampling;
  sampling.dims.reserve(domain.size());
  for (const Dimension& dim : domain.dims()) {
    DimSampler sampler;
    sampler.kind = DimSampler::Kind::kDomainUniform;
    sampler.int_valued = dim.integral;
    sampler.accept_lo = dim.low;
    sampler.accept_hi = dim.high;
    sampling.dims.push_back(sampler);
  }
  return sampling;
}

RunResult dpareto_run(const Problem& problem, int k0, int k,
                      const acq::AcquisitionConfig& acquisition, RngStream rng,
                      const RunHooks& hooks) {
  if (k0 < 2) throw DomainError("dpareto_run: k0 must be >= 2");
  if (k < 0) throw DomainError("dpareto_run: k must be >= 0");
  const auto d = static_cast<Eigen::Index>(problem.domain.size());
  if (d < 1) throw DomainError("dpareto_run: empty domain");

  RunResult result;
  EvaluationCollector collector{problem, hooks, result, Method::kBo, rng.seed};

  // Latin-hypercube seed points: marginally uniform on the normalized cube
  // but stratified per axis, so small k0 cannot leave whole bands unseen.
  std::vector<std::vector<int>> strata(static_cast<std::size_t>(d));
  {
    RngEngine engine = rng.child(kSeedPointTag).engine();
    for (auto& axis : strata) axis = random_permutation(k0, engine);
  }
  for (int i = 0; i < k0; ++i) {
    if (collector.take_resumed(i)) continue;
    RngEngine engine = rng.child(kSeedPointTag).child(static_cast<std::uint64_t>(i)).engine();
    Eigen::VectorXd unit(d);
    for (Eigen::Index c = 0; c < d; ++c) {
      unit[c] = (strata[static_cast<std::size_t>(c)][static_cast<std::size_t>(i)] +
                 engine.uniform()) /
                static_cast<double>(k0);
    }
    collector.evaluate(problem.domain.denormalize(unit),
                       rng.child(kEvalTag).child(static_cast<std::uint64_t>(i)), i);
  }

  const auto [anti_eps_t, anti_err_t] = transform_objectives(
      ObjectivePoint{problem.anti_ideal.epsilon_max, problem.anti_ideal.error_max});
  const AntiIdealPoint anti_transformed{anti_eps_t, anti_err_t};

  for (int j = 0; j < k; ++j) {
    const int index = k0 + j;
    if (collector.take_resumed(index)) continue;

    const auto n = static_cast<Eigen::Index>(result.evaluations.size());
    if (n < 2) throw NumericError("dpareto_run: too few seed evaluations survived");
    Eigen::MatrixXd inputs(n, d);
    Eigen::VectorXd target_eps(n);
    Eigen::VectorXd target_err(n);
    std::vector<ObjectivePoint> transformed(static_cast<std::size_t>(n));
    for (Eigen::Index row = 0; row < n; ++row) {
      const Evaluation& evaluation = result.evaluations[static_cast<std::size_t>(row)];
      inputs.row(row) = problem.domain.normalize(evaluation.point).transpose();
      const auto [t_eps, t_err] = transform_objectives(evaluation.objectives);
      target_eps[row] = t_eps;
      target_err[row] = t_err;
      transformed[static_cast<std::size_t>(row)] = ObjectivePoint{t_eps, t_err};
    }

    gp::FitConfig fit_config;
    const RngStream fit_stream = rng.child(kFitTag).child(static_cast<std::uint64_t>(index));
    fit_config.seed = fit_stream.child(0).stream_id;
    const gp::SurrogateModel model_eps = gp::fit(inputs, target_eps, fit_config);
    fit_config.seed = fit_stream.child(1).stream_id;
    const gp::SurrogateModel model_err = gp::fit(inputs, target_err, fit_config);

    // The acquisition front is built from the posterior means at the
    // evaluated inputs, not the raw observations: with noisy utilities the
    // raw front is inflated by lucky draws, which drives the improvement
    // probability to zero everywhere and stalls the search.
    for (Eigen::Index row = 0; row < n; ++row) {
      transformed[static_cast<std::size_t>(row)] =
          ObjectivePoint{model_eps.predict(inputs.row(row).transpose()).first,
                         model_err.predict(inputs.row(row).transpose()).first};
    }

    acq::AcquisitionConfig step_acquisition = acquisition;
    step_acquisition.rng = rng.child(kAcquisitionTag).child(static_cast<std::uint64_t>(index));
    const acq::AcquisitionResult proposal =
        acq::maximize_acquisition(model_eps, model_err, problem.domain,
                                  pareto_front(transformed), anti_transformed,
                                  step_acquisition);
    if (proposal.exploration_fallback) {
      result.notes.push_back("iteration " + std::to_string(index) +
                             ": flat acquisition, explored uniformly");
    }
    collector.evaluate(proposal.point,
                       rng.child(kEvalTag).child(static_cast<std::uint64_t>(index)), index);
  }

  finalize(result, problem);
  return result;
}

RunResult random_search_run(const Problem& problem, const SamplingDistribution& sampling,
                            int budget, RngStream rng, const RunHooks& hooks) {
  if (budget < 1) throw DomainError("random_search_run: budget must be >= 1");
  if (sampling.dims.size() != problem.domain.size()) {
    throw ConfigError("random search: sampler count does not match domain dimensions");
  }
  for (std::size_t c = 0; c < sampling.dims.size(); ++c) {
    const DimSampler& sampler = sampling.dims[c];
    if (sampler.kind != DimSampler::Kind::kDomainUniform &&
        !(sampler.accept_lo < sampler.accept_hi)) {
      throw ConfigError("random search: accept range must be non-empty for dimension '" +
                        problem.domain.dim(c).name + "'");
    }
  }

  RunResult result;
  EvaluationCollector collector{problem, hooks, result, Method::kRandom, rng.seed};
  for (int i = 0; i < budget; ++i) {
    if (collector.take_resumed(i)) continue;
    RngEngine engine = rng.child(kSampleTag).child(static_cast<std::uint64_t>(i)).engine();
    HyperparameterVector lambda;
    lambda.values.resize(problem.domain.size());
    for (std::size_t c = 0; c < problem.domain.size(); ++c) {
      lambda.values[c] =
          sample_dimension(sampling.dims[c], problem.domain.dim(c), problem.domain, c, engine);
    }
    collector.evaluate(lambda, rng.child(kEvalTag).child(static_cast<std::uint64_t>(i)), i);
  }
  finalize(result, problem);
  return result;
}

RunResult grid_search_run(const Problem& problem, int points_per_dim, RngStream rng,
                          const RunHooks& hooks) {
  if (points_per_dim < 2) throw DomainError("grid_search_run: points_per_dim must be >= 2");
  const std::size_t d = problem.domain.size();

  std::vector<std::vector<double>> axes(d);
  for (std::size_t c = 0; c < d; ++c) {
    const Dimension& dim = problem.domain.dim(c);
    std::vector<double>& axis = axes[c];
    for (int g = 0; g < points_per_dim; ++g) {
      const double t = static_cast<double>(g) / (points_per_dim - 1);
      double value;
      if (dim.scale == Scale::kLog) {
        value = std::exp(std::log(dim.low) + t * (std::log(dim.high) - std::log(dim.low)));
      } else {
        value = dim.low + t * (dim.high - dim.low);
      }
      if (dim.integral) value = round_half_even(value);
      value = std::clamp(value, dim.low, dim.high);
      if (axis.empty() || axis.back() != value) axis.push_back(value);
    }
  }

  RunResult result;
  EvaluationCollector collector{problem, hooks, result, Method::kGrid, rng.seed};
  std::vector<std::size_t> cursor(d, 0);
  int index = 0;
  while (true) {
    if (!collector.take_resumed(index)) {
      HyperparameterVector lambda;
      lambda.values.resize(d);
      for (std::size_t c = 0; c < d; ++c) lambda.values[c] = axes[c][cursor[c]];
      collector.evaluate(lambda, rng.child(kEvalTag).child(static_cast<std::uint64_t>(index)),
                         index);
    }
    ++index;
    // Odometer: last dimension varies fastest (lexicographic order).
    std::size_t c = d;
    while (c > 0) {
      --c;
      if (++cursor[c] < axes[c].size()) break;
      cursor[c] = 0;
      if (c == 0) {
        finalize(result, problem);
        return result;
      }
    }
  }
}

std::vector<std::pair<int, double>> hv_trajectory(std::span<const Evaluation> evaluations,
                                                  const AntiIdealPoint& anti_ideal) {
  std::vector<std::pair<int, double>> trajectory;
  trajectory.reserve(evaluations.size());
  ParetoFront front;
  int index = 0;
  for (const Evaluation& evaluation : evaluations) {
    std::vector<ObjectivePoint> points = front.points;
    points.push_back(evaluation.objectives);
    front = pareto_front(std::move(points));
    trajectory.emplace_back(++index, hypervolume(front, anti_ideal));
  }
  return trajectory;
}

VariabilityFronts variability_fronts(std::span<const Evaluation> evaluations) {
  std::vector<ObjectivePoint> best, mean, worst;
  best.reserve(evaluations.size());
  mean.reserve(evaluations.size());
  worst.reserve(evaluations.size());
  for (const Evaluation& evaluation : evaluations) {
    if (evaluation.per_run_utilities.empty()) {
      throw DomainError("variability_fronts: evaluation lacks per-run utilities");
    }
    double best_utility = evaluation.per_run_utilities.front();
    double worst_utility = best_utility;
    for (double u : evaluation.per_run_utilities) {
      best_utility = std::max(best_utility, u);
      worst_utility = std::min(worst_utility, u);
    }
    best.push_back({evaluation.objectives.epsilon, 1.0 - best_utility});
    mean.push_back(evaluation.objectives);
    worst.push_back({evaluation.objectives.epsilon, 1.0 - worst_utility});
  }
  return VariabilityFronts{pareto_front(std::move(best)), pareto_front(std::move(mean)),
                           pareto_front(std::move(worst))};
}

}  // namespace dpareto::driver
