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

#include "dpareto/svt.hpp"

#include <cmath>

#include "dpareto/errors.hpp"

namespace dpareto::mech {

QueryWorkload make_svt_workload(int m, int positives, RngStream rng) {
  if (m < 0 || positives < 0 || positives > m) {
    throw DomainError("make_svt_workload: need 0 <= positives <= m");
  }
  QueryWorkload workload;
  workload.truth.assign(static_cast<std::size_t>(m), 0);
  workload.positives = positives;
  if (positives > 0) {
    RngEngine engine = rng.engine();
    for (int i : sample_indices(m, positives, engine)) {
      workload.truth[static_cast<std::size_t>(i)] = 1;
    }
  }
  return workload;
}

std::vector<std::uint8_t> run_svt(const QueryWorkload& workload, double b, int C,
                                  std::span<const int> order, RngStream rng) {
  if (!(b > 0.0)) throw DomainError("run_svt: b must be > 0");
  if (C < 1) throw DomainError("run_svt: C must be >= 1");
  if (order.size() != workload.truth.size()) {
    throw DomainError("run_svt: order must be a permutation of the query indices");
  }

  const double b1 = b / (1.0 + std::cbrt(2.0 * C));
  const double b2 = b - b1;
  RngEngine engine = rng.engine();
  const double rho = engine.laplace(b1);

  std::vector<std::uint8_t> answers(workload.truth.size(), 0);
  int marked = 0;
  for (int index : order) {
    const double nu = engine.laplace(b2);
    if (workload.truth[static_cast<std::size_t>(index)] + nu >= 0.5 + rho) {
      answers[static_cast<std::size_t>(index)] = 1;
      if (++marked >= C) break;
    }
  }
  return answers;
}

double f1_score(std::span<const std::uint8_t> truth, std::span<const std::uint8_t> pred) {
  if (truth.size() != pred.size()) throw DomainError("f1_score: length mismatch");
  long tp = 0, fp = 0, fn = 0;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    const bool t = truth[i] != 0;
    const bool p = pred[i] != 0;
    tp += t && p;
    fp += !t && p;
    fn += t && !p;
  }
  if (tp == 0) return 0.0;
  const double precision = static_cast<double>(tp) / static_cast<double>(tp + fp);
  const double recall = static_cast<double>(tp) / static_cast<double>(tp + fn);
  return 2.0 * precision * recall / (precision + recall);
}

UtilityOutcome svt_utility_oracle(const QueryWorkload& workload, double b, int C,
                                  int repetitions, RngStream rng) {
  if (repetitions < 1) throw DomainError("svt_utility_oracle: repetitions must be >= 1");
  UtilityOutcome outcome;
  outcome.per_run.reserve(static_cast<std::size_t>(repetitions));
  double sum = 0.0;
  for (int r = 0; r < repetitions; ++r) {
    RngStream run = rng.child(static_cast<std::uint64_t>(r));
    RngEngine order_engine = run.child(0).engine();
    const std::vector<int> order = random_permutation(workload.size(), order_engine);
    const auto answers = run_svt(workload, b, C, order, run.child(1));
    const double f1 = f1_score(workload.truth, answers);
    outcome.per_run.push_back(f1);
    sum += f1;
  }
  outcome.mean = sum / static_cast<double>(repetitions);
  return outcome;
}

}  // namespace dpareto::mech
