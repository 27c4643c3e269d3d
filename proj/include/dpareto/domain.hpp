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

#include <string>
#include <vector>

#include <Eigen/Core>

namespace dpareto {

enum class Scale { kLinear, kLog };

struct Dimension {
  std::string name;
  double low = 0.0;
  double high = 1.0;
  Scale scale = Scale::kLinear;
  bool integral = false;
};

// A hyperparameter setting, values in the order of the owning domain.
struct HyperparameterVector {
  std::vector<double> values;
};

// Box-constrained search space with per-dimension scale and integrality.
// Integral dimensions are relaxed to continuous for modeling; rounding to
// the nearest integer (ties to even) happens in denormalize(), so the
// rounded value is what gets evaluated and logged.
class HyperparameterDomain {
 public:
  HyperparameterDomain() = default;
  explicit HyperparameterDomain(std::vector<Dimension> dims);

  std::size_t size() const { return dims_.size(); }
  const Dimension& dim(std::size_t i) const { return dims_[i]; }
  const std::vector<Dimension>& dims() const { return dims_; }

  // Index of the named dimension; throws DomainError if absent.
  std::size_t index_of(const std::string& name) const;

  // Throws DomainError if any coordinate violates its dimension bounds.
  void validate(const HyperparameterVector& point) const;

  // Maps a valid point onto [0,1]^d; log-scaled dimensions map through log.
  Eigen::VectorXd normalize(const HyperparameterVector& point) const;

  // Inverse of normalize up to integral rounding; each u_i must be in [0,1].
  HyperparameterVector denormalize(const Eigen::VectorXd& unit) const;

 private:
  std::vector<Dimension> dims_;
};

}  // namespace dpareto
