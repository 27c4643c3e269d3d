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

#include <array>
#include <iosfwd>
#include <span>
#include <vector>

#include "dpareto/objectives.hpp"

namespace dpareto {

// Reference point dominated by every front point of interest; objective
// points outside its box contribute zero hypervolume.
struct AntiIdealPoint {
  double epsilon_max = 10.0;
  double error_max = 1.0;
};

// Non-dominated subset of a point set, sorted by epsilon ascending (which
// implies error strictly descending). Build via pareto_front().
struct ParetoFront {
  std::vector<ObjectivePoint> points;

  bool empty() const { return points.empty(); }
  std::size_t size() const { return points.size(); }
};

// Axis-aligned box, lower-open conceptually; lower edges may be -inf.
struct Cell {
  std::array<double, 2> lower;
  std::array<double, 2> upper;
};

// u dominates v iff u is <= v in both coordinates (reflexive).
bool dominates(const ObjectivePoint& u, const ObjectivePoint& v);

// Exact duplicates collapse first; the result is the set of points not
// dominated by any distinct other. Order-invariant and idempotent.
ParetoFront pareto_front(std::vector<ObjectivePoint> points);

// Exact area dominated by the front inside the anti-ideal box, via a
// left-to-right sweep. Points outside the box are clipped out.
double hypervolume(const ParetoFront& front, const AntiIdealPoint& anti_ideal);

// hypervolume(front + {v}) - hypervolume(front); zero iff v is dominated or
// lies outside the anti-ideal box. Never negative.
double hv_increment(const ParetoFront& front, const ObjectivePoint& v,
                    const AntiIdealPoint& anti_ideal);

// Interior-disjoint cells covering exactly the region not dominated by the
// front and bounded above by the anti-ideal point; lower edges extend to
// -inf. A front of n in-box points yields n+1 cells (degenerate slivers on
// the box edge are dropped).
std::vector<Cell> nondominated_cells(const ParetoFront& front,
                                     const AntiIdealPoint& anti_ideal);

// CSV export, header "epsilon,error", epsilon ascending.
void write_front_csv(std::ostream& out, const ParetoFront& front);

}  // namespace dpareto
