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
#include <span>
#include <vector>

#include "dpareto/evaluation.hpp"
#include "dpareto/rng.hpp"

namespace dpareto::mech {

// A batch of binary queries with sensitivity 1 and threshold 1/2; `truth`
// holds the exact answers q_i(z).
struct QueryWorkload {
  std::vector<std::uint8_t> truth;
  int positives = 0;

  int size() const { return static_cast<int>(truth.size()); }
};

// Uniformly random placement of exactly `positives` ones among m queries.
QueryWorkload make_svt_workload(int m, int positives, RngStream rng);

// Sparse vector technique with total noise level b and answer bound C.
// One threshold draw rho ~ Lap(b1) and fresh nu ~ Lap(b2) per query; queries
// are visited in `order` but answers land in their original index positions.
// Halts after C marks; never marks more than C queries.
std::vector<std::uint8_t> run_svt(const QueryWorkload& workload, double b, int C,
                                  std::span<const int> order, RngStream rng);

// Harmonic mean of precision and recall; 0 whenever the prediction contains
// no true positives.
double f1_score(std::span<const std::uint8_t> truth, std::span<const std::uint8_t> pred);

// Mean F1 over `repetitions` runs, each with a fresh uniform random query
// order and fresh noise.
UtilityOutcome svt_utility_oracle(const QueryWorkload& workload, double b, int C,
                                  int repetitions, RngStream rng);

}  // namespace dpareto::mech
