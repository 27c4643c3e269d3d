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

#include "dpareto/domain.hpp"

#include <cmath>

#include "dpareto/errors.hpp"
#include "dpareto/math_util.hpp"

namespace dpareto {

HyperparameterDomain::HyperparameterDomain(std::vector<Dimension> dims)
    : dims_(std::move(dims)) {
  for (auto& d : dims_) {
    if (d.name.empty()) throw DomainError("dimension name must be non-empty");
    if (d.integral) {
      d.low = round_half_even(d.low);
      d.high = round_half_even(d.high);
    }
    if (!(d.low < d.high)) {
      throw DomainError("dimension '" + d.name + "': low must be < high");
    }
    if (d.scale == Scale::kLog && !(d.low > 0.0)) {
      throw DomainError("dimension '" + d.name + "': log scale requires low > 0");
    }
  }
}

std::size_t HyperparameterDomain::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    if (dims_[i].name == name) return i;
  }
  throw DomainError("no dimension named '" + name + "'");
}

void HyperparameterDomain::validate(const HyperparameterVector& point) const {
  if (point.values.size() != dims_.size()) {
    throw DomainError("point has " + std::to_string(point.values.size()) +
                      " coordinates, domain has " + std::to_string(dims_.size()));
  }
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    const double v = point.values[i];
    const Dimension& d = dims_[i];
    if (!(v >= d.low && v <= d.high)) {
      throw DomainError("dimension '" + d.name + "': value " + format_double(v) +
                        " outside [" + format_double(d.low) + ", " +
                        format_double(d.high) + "]");
    }
  }
}

Eigen::VectorXd HyperparameterDomain::normalize(const HyperparameterVector& point) const {
  validate(point);
  Eigen::VectorXd unit(static_cast<Eigen::Index>(dims_.size()));
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    const Dimension& d = dims_[i];
    const double v = point.values[i];
    double u;
    if (d.scale == Scale::kLog) {
      u = (std::log(v) - std::log(d.low)) / (std::log(d.high) - std::log(d.low));
    } else {
      u = (v - d.low) / (d.high - d.low);
    }
    unit[static_cast<Eigen::Index>(i)] = std::clamp(u, 0.0, 1.0);
  }
  return unit;
}

HyperparameterVector HyperparameterDomain::denormalize(const Eigen::VectorXd& unit) const {
  if (static_cast<std::size_t>(unit.size()) != dims_.size()) {
    throw DomainError("unit vector size mismatch");
  }
  HyperparameterVector point;
  point.values.resize(dims_.size());
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    const double u = unit[static_cast<Eigen::Index>(i)];
    if (!(u >= 0.0 && u <= 1.0)) {
      throw DomainError("dimension '" + dims_[i].name + "': unit coordinate " +
                        format_double(u) + " outside [0, 1]");
    }
    const Dimension& d = dims_[i];
    double v;
    if (d.scale == Scale::kLog) {
      v = std::exp(std::log(d.low) + u * (std::log(d.high) - std::log(d.low)));
    } else {
      v = d.low + u * (d.high - d.low);
    }
    if (d.integral) v = round_half_even(v);
    point.values[i] = std::clamp(v, d.low, d.high);
  }
  return point;
}

}  // namespace dpareto
