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

#include "dpareto/evaluation.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include "dpareto/errors.hpp"
#include "dpareto/math_util.hpp"

namespace dpareto {

namespace {

double mean_of(std::span<const double> values) {
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

void check_mean_consistency(const Evaluation& evaluation) {
  if (evaluation.per_run_utilities.empty()) return;
  const double mean = mean_of(evaluation.per_run_utilities);
  if (std::abs(evaluation.objectives.error - (1.0 - mean)) > 1e-12) {
    throw std::logic_error("evaluation error is inconsistent with mean per-run utility");
  }
}

}  // namespace

std::string_view to_string(Method method) {
  switch (method) {
    case Method::kBo:
      return "bo";
    case Method::kRandom:
      return "random";
    case Method::kGrid:
      return "grid";
    case Method::kManual:
      return "manual";
  }
  return "manual";
}

Method method_from_string(std::string_view name) {
  if (name == "bo") return Method::kBo;
  if (name == "random") return Method::kRandom;
  if (name == "grid") return Method::kGrid;
  if (name == "manual") return Method::kManual;
  throw ConfigError("unknown method '" + std::string(name) + "'");
}

void append_evaluation_jsonl(std::ostream& out, const Evaluation& evaluation,
                             std::span<const std::string> dimension_names) {
  if (evaluation.point.values.size() != dimension_names.size()) {
    throw DomainError("evaluation point size does not match dimension names");
  }
  check_mean_consistency(evaluation);

  // Hand-assembled so the field order and numeric precision are fixed; names
  // go through nlohmann for escaping.
  out << "{\"method\":" << nlohmann::json(std::string(to_string(evaluation.method))).dump()
      << ",\"seed\":" << evaluation.seed << ",\"lambda\":{";
  for (std::size_t i = 0; i < dimension_names.size(); ++i) {
    if (i) out << ',';
    out << nlohmann::json(dimension_names[i]).dump() << ':'
        << format_double(evaluation.point.values[i]);
  }
  out << "},\"epsilon\":" << format_double(evaluation.objectives.epsilon)
      << ",\"error\":" << format_double(evaluation.objectives.error)
      << ",\"per_run_utilities\":[";
  for (std::size_t i = 0; i < evaluation.per_run_utilities.size(); ++i) {
    if (i) out << ',';
    out << format_double(evaluation.per_run_utilities[i]);
  }
  out << "],\"wall_time_s\":" << format_double(evaluation.wall_time_s) << "}\n";
}

std::vector<Evaluation> read_evaluation_log(std::istream& in,
                                            const HyperparameterDomain* domain) {
  std::vector<Evaluation> evaluations;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    nlohmann::json record;
    try {
      record = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError("evaluation log line " + std::to_string(line_number) +
                        ": " + e.what());
    }
    try {
      Evaluation evaluation;
      evaluation.method = method_from_string(record.at("method").get<std::string>());
      evaluation.seed = record.at("seed").get<std::uint64_t>();
      evaluation.objectives.epsilon = record.at("epsilon").get<double>();
      evaluation.objectives.error = record.at("error").get<double>();
      evaluation.per_run_utilities = record.at("per_run_utilities").get<std::vector<double>>();
      evaluation.wall_time_s = record.at("wall_time_s").get<double>();
      if (domain != nullptr) {
        const auto& lambda = record.at("lambda");
        evaluation.point.values.reserve(domain->size());
        for (const auto& dim : domain->dims()) {
          if (!lambda.contains(dim.name)) {
            throw ConfigError("missing lambda entry '" + dim.name + "'");
          }
          evaluation.point.values.push_back(lambda.at(dim.name).get<double>());
        }
        domain->validate(evaluation.point);
      }
      check_mean_consistency(evaluation);
      evaluations.push_back(std::move(evaluation));
    } catch (const ConfigError&) {
      throw;
    } catch (const std::exception& e) {
      throw ConfigError("evaluation log line " + std::to_string(line_number) +
                        ": " + e.what());
    }
  }
  return evaluations;
}

}  // namespace dpareto
