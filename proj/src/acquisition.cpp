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

#include "dpareto/acquisition.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "dpareto/errors.hpp"
#include "dpareto/math_util.hpp"
#include "dpareto/objectives.hpp"

namespace dpareto::acq {

namespace {

constexpr double kDegenerateStd = 1e-12;

// Gaussian mass of (lower, upper]; lower may be -inf.
double interval_mass(double lower, double upper, double mean, double stddev) {
  if (stddev <= kDegenerateStd) {
    return (mean > lower && mean <= upper) ? 1.0 : 0.0;
  }
  const double hi = norm_cdf((upper - mean) / stddev);
  const double lo = std::isfinite(lower) ? norm_cdf((lower - mean) / stddev) : 0.0;
  return std::max(0.0, hi - lo);
}

double poi_over_cells(const std::vector<Cell>& cells, double mean_eps, double std_eps,
                      double mean_err, double std_err) {
  double total = 0.0;
  for (const Cell& cell : cells) {
    const double mass_eps = interval_mass(cell.lower[0], cell.upper[0], mean_eps, std_eps);
    if (mass_eps == 0.0) continue;
    total += mass_eps * interval_mass(cell.lower[1], cell.upper[1], mean_err, std_err);
  }
  return std::clamp(total, 0.0, 1.0);
}

// Shared per-call geometry so candidate sweeps do not rebuild the cells.
// PoI integrates in the transformed space the models live in; the
// hypervolume weight is taken in original (epsilon, error) units so the
// acquisition chases the same area the front is scored by. The log
// transform would otherwise over-weight the small-epsilon corner.
struct AcquisitionContext {
  const gp::SurrogateModel& model_epsilon;
  const gp::SurrogateModel& model_error;
  std::vector<Cell> cells;
  ParetoFront front_original;
  AntiIdealPoint anti_original;

  AcquisitionContext(const gp::SurrogateModel& m_eps, const gp::SurrogateModel& m_err,
                     const ParetoFront& f, const AntiIdealPoint& anti)
      : model_epsilon(m_eps), model_error(m_err), cells(nondominated_cells(f, anti)) {
    front_original.points.reserve(f.points.size());
    for (const ObjectivePoint& p : f.points) {
      front_original.points.push_back(inverse_transform(p.epsilon, p.error));
    }
    const ObjectivePoint anti_point = inverse_transform(anti.epsilon_max, anti.error_max);
    anti_original = AntiIdealPoint{anti_point.epsilon, anti_point.error};
  }

  double poi_at(const Eigen::VectorXd& x) const {
    const auto [mean_eps, var_eps] = model_epsilon.predict(x);
    const auto [mean_err, var_err] = model_error.predict(x);
    return poi_over_cells(cells, mean_eps, std::sqrt(var_eps), mean_err, std::sqrt(var_err));
  }

  double hvpoi_at(const Eigen::VectorXd& x) const {
    const auto [mean_eps, var_eps] = model_epsilon.predict(x);
    const auto [mean_err, var_err] = model_error.predict(x);
    const double increment = hv_increment(
        front_original, inverse_transform(mean_eps, mean_err), anti_original);
    if (increment <= 0.0) return 0.0;
    return increment * poi_over_cells(cells, mean_eps, std::sqrt(var_eps), mean_err,
                                      std::sqrt(var_err));
  }
};

double halton(std::uint64_t index, int base) {
  double f = 1.0;
  double r = 0.0;
  while (index > 0) {
    f /= base;
    r += f * static_cast<double>(index % static_cast<std::uint64_t>(base));
    index /= static_cast<std::uint64_t>(base);
  }
  return r;
}

constexpr int kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29};

}  // namespace

double poi(const gp::SurrogateModel& model_epsilon, const gp::SurrogateModel& model_error,
           const Eigen::VectorXd& x, const ParetoFront& front,
           const AntiIdealPoint& anti_ideal) {
  return AcquisitionContext(model_epsilon, model_error, front, anti_ideal).poi_at(x);
}

double hvpoi(const gp::SurrogateModel& model_epsilon, const gp::SurrogateModel& model_error,
             const Eigen::VectorXd& x, const ParetoFront& front,
             const AntiIdealPoint& anti_ideal) {
  return AcquisitionContext(model_epsilon, model_error, front, anti_ideal).hvpoi_at(x);
}

AcquisitionResult maximize_acquisition(const gp::SurrogateModel& model_epsilon,
                                       const gp::SurrogateModel& model_error,
                                       const HyperparameterDomain& domain,
                                       const ParetoFront& front,
                                       const AntiIdealPoint& anti_ideal,
                                       const AcquisitionConfig& config) {
  const int d = static_cast<int>(domain.size());
  if (d < 1) throw DomainError("maximize_acquisition: empty domain");
  if (config.candidate_count < 1 || config.refine_top < 1 ||
      config.refine_top > config.candidate_count || config.refine_iters < 0) {
    throw DomainError("maximize_acquisition: invalid acquisition config");
  }
  if (d > static_cast<int>(std::size(kPrimes))) {
    throw DomainError("maximize_acquisition: more than 10 dimensions unsupported");
  }

  const AcquisitionContext context(model_epsilon, model_error, front, anti_ideal);

  // Cranley-Patterson rotation of a Halton set keeps the sweep
  // low-discrepancy yet seed-dependent.
  RngEngine shift_engine = config.rng.child(0).engine();
  Eigen::VectorXd shift(d);
  for (int c = 0; c < d; ++c) shift[c] = shift_engine.uniform();

  std::vector<Eigen::VectorXd> candidates;
  candidates.reserve(static_cast<std::size_t>(config.candidate_count));
  std::vector<double> values(static_cast<std::size_t>(config.candidate_count));
  Eigen::VectorXd best_unit;
  double best_value = -1.0;
  for (int k = 0; k < config.candidate_count; ++k) {
    Eigen::VectorXd u(d);
    for (int c = 0; c < d; ++c) {
      double coordinate = halton(static_cast<std::uint64_t>(k) + 1, kPrimes[c]) + shift[c];
      coordinate -= std::floor(coordinate);
      u[c] = coordinate;
    }
    const double value = context.hvpoi_at(u);
    values[static_cast<std::size_t>(k)] = value;
    if (value > best_value) {
      best_value = value;
      best_unit = u;
    }
    candidates.push_back(std::move(u));
  }

  if (best_value > 0.0) {
    std::vector<int> order(candidates.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(), [&values](int a, int b) {
      return values[static_cast<std::size_t>(a)] > values[static_cast<std::size_t>(b)];
    });

    const int top = std::min(config.refine_top, static_cast<int>(order.size()));
    for (int rank = 0; rank < top; ++rank) {
      Eigen::VectorXd u = candidates[static_cast<std::size_t>(order[rank])];
      double value = values[static_cast<std::size_t>(order[rank])];
      double step = 0.1;
      for (int it = 0; it < config.refine_iters; ++it) {
        bool improved = false;
        Eigen::VectorXd best_probe = u;
        double best_probe_value = value;
        for (int c = 0; c < d; ++c) {
          for (const double direction : {1.0, -1.0}) {
            Eigen::VectorXd probe = u;
            probe[c] = std::clamp(probe[c] + direction * step, 0.0, 1.0);
            const double probe_value = context.hvpoi_at(probe);
            if (probe_value > best_probe_value) {
              best_probe_value = probe_value;
              best_probe = probe;
              improved = true;
            }
          }
        }
        if (improved) {
          u = best_probe;
          value = best_probe_value;
        } else {
          step *= 0.5;
          if (step < 1e-4) break;
        }
      }
      if (value > best_value) {
        best_value = value;
        best_unit = u;
      }
    }
    return AcquisitionResult{domain.denormalize(best_unit), best_unit, best_value, false};
  }

  // Acquisition is flat zero: fall back to the candidate with maximal poi.
  double best_poi = 0.0;
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    const double p = context.poi_at(candidates[k]);
    if (p > best_poi) {
      best_poi = p;
      best_unit = candidates[k];
    }
  }
  if (best_poi > 0.0) {
    return AcquisitionResult{domain.denormalize(best_unit), best_unit, 0.0, false};
  }

  // Still flat: explore uniformly at random.
  RngEngine fallback_engine = config.rng.child(1).engine();
  Eigen::VectorXd u(d);
  for (int c = 0; c < d; ++c) u[c] = fallback_engine.uniform();
  return AcquisitionResult{domain.denormalize(u), u, 0.0, true};
}

}  // namespace dpareto::acq
