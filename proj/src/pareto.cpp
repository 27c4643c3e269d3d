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

#include "dpareto/pareto.hpp"

#include <algorithm>
#include <ostream>

#include "dpareto/math_util.hpp"

namespace dpareto {

bool dominates(const ObjectivePoint& u, const ObjectivePoint& v) {
  return u.epsilon <= v.epsilon && u.error <= v.error;
}

ParetoFront pareto_front(std::vector<ObjectivePoint> points) {
  std::sort(points.begin(), points.end(), [](const ObjectivePoint& a, const ObjectivePoint& b) {
    if (a.epsilon != b.epsilon) return a.epsilon < b.epsilon;
    return a.error < b.error;
  });
  points.erase(std::unique(points.begin(), points.end()), points.end());

  // After the sort every earlier point has epsilon <= current, so a point
  // survives iff its error is strictly below everything seen so far.
  ParetoFront front;
  double min_error = kInf;
  for (const ObjectivePoint& p : points) {
    if (p.error < min_error) {
      front.points.push_back(p);
      min_error = p.error;
    }
  }
  return front;
}

double hypervolume(const ParetoFront& front, const AntiIdealPoint& anti_ideal) {
  double area = 0.0;
  double previous_error = anti_ideal.error_max;
  for (const ObjectivePoint& p : front.points) {
    if (p.epsilon > anti_ideal.epsilon_max || p.error > anti_ideal.error_max) continue;
    if (p.error >= previous_error) continue;
    area += (anti_ideal.epsilon_max - p.epsilon) * (previous_error - p.error);
    previous_error = p.error;
  }
  return area;
}

double hv_increment(const ParetoFront& front, const ObjectivePoint& v,
                    const AntiIdealPoint& anti_ideal) {
  std::vector<ObjectivePoint> extended = front.points;
  extended.push_back(v);
  const double grown = hypervolume(pareto_front(std::move(extended)), anti_ideal);
  return std::max(0.0, grown - hypervolume(front, anti_ideal));
}

std::vector<Cell> nondominated_cells(const ParetoFront& front,
                                     const AntiIdealPoint& anti_ideal) {
  // Front points outside the box cannot dominate anything inside it.
  std::vector<ObjectivePoint> clipped;
  clipped.reserve(front.points.size());
  for (const ObjectivePoint& p : front.points) {
    if (p.epsilon <= anti_ideal.epsilon_max && p.error <= anti_ideal.error_max) {
      clipped.push_back(p);
    }
  }

  std::vector<Cell> cells;
  cells.reserve(clipped.size() + 1);
  double left_epsilon = -kInf;
  double error_ceiling = anti_ideal.error_max;
  for (const ObjectivePoint& p : clipped) {
    if (p.epsilon > left_epsilon && error_ceiling > -kInf) {
      cells.push_back(Cell{{left_epsilon, -kInf}, {p.epsilon, error_ceiling}});
    }
    left_epsilon = p.epsilon;
    error_ceiling = p.error;
  }
  if (anti_ideal.epsilon_max > left_epsilon) {
    cells.push_back(Cell{{left_epsilon, -kInf}, {anti_ideal.epsilon_max, error_ceiling}});
  }
  return cells;
}

void write_front_csv(std::ostream& out, const ParetoFront& front) {
  out << "epsilon,error\n";
  for (const ObjectivePoint& p : front.points) {
    out << format_double(p.epsilon) << ',' << format_double(p.error) << '\n';
  }
}

}  // namespace dpareto
