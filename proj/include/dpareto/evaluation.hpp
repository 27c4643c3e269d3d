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
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dpareto/domain.hpp"
#include "dpareto/objectives.hpp"

namespace dpareto {

enum class Method { kBo, kRandom, kGrid, kManual };

std::string_view to_string(Method method);
Method method_from_string(std::string_view name);

// Mean utility and the individual run values behind it.
struct UtilityOutcome {
  double mean = 0.0;
  std::vector<double> per_run;
};

// One oracle evaluation: the hyperparameter point, its objectives, the
// per-run utilities behind the error coordinate, and provenance.
struct Evaluation {
  HyperparameterVector point;
  ObjectivePoint objectives;
  std::vector<double> per_run_utilities;
  std::uint64_t seed = 0;
  Method method = Method::kManual;
  double wall_time_s = 0.0;
};

// Appends one JSON object per line. Field order is fixed
// (method, seed, lambda, epsilon, error, per_run_utilities, wall_time_s)
// and numbers carry 17 significant digits so parsing round-trips exactly.
// Enforces error == 1 - mean(per_run_utilities) (1e-12) before writing.
void append_evaluation_jsonl(std::ostream& out, const Evaluation& evaluation,
                             std::span<const std::string> dimension_names);

// Parses a whole evaluation log. When a domain is given, lambda values are
// ordered by its dimension names and validated; otherwise points are left
// empty (analysis needs only objectives and per-run utilities).
// Malformed lines raise ConfigError naming the 1-based line number.
std::vector<Evaluation> read_evaluation_log(std::istream& in,
                                            const HyperparameterDomain* domain);

}  // namespace dpareto
