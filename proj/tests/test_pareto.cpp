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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "dpareto/math_util.hpp"
#include "dpareto/pareto.hpp"
#include "dpareto/rng.hpp"
#include "test_util.hpp"

using namespace dpareto;

namespace {

// Quadratic-time reference for the front, straight from the definition.
std::vector<ObjectivePoint> brute_force_front(std::vector<ObjectivePoint> points) {
  std::sort(points.begin(), points.end(), [](const ObjectivePoint& a, const ObjectivePoint& b) {
    if (a.epsilon != b.epsilon) return a.epsilon < b.epsilon;
    return a.error < b.error;
  });
  points.erase(std::unique(points.begin(), points.end()), points.end());
  std::vector<ObjectivePoint> front;
  for (const auto& candidate : points) {
    bool dominated = false;
    for (const auto& other : points) {
      if (!(other == candidate) && dominates(other, candidate)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) front.push_back(candidate);
  }
  return front;
}

}  // namespace

TEST_CASE("dominance follows the componentwise definition") {
  CHECK(dominates({1.0, 0.1}, {2.0, 0.2}));
  CHECK_FALSE(dominates({1.0, 0.3}, {3.0, 0.1}));
  CHECK(dominates({1.0, 0.1}, {1.0, 0.1}));  // <= is reflexive
}

TEST_CASE("pareto_front matches examples") {
  CHECK(pareto_front({}).points.empty());

  const auto front = pareto_front({{1, 3}, {2, 2}, {3, 1}, {2.5, 2.5}});
  REQUIRE(front.size() == 3);
  CHECK(front.points[0] == ObjectivePoint{1, 3});
  CHECK(front.points[1] == ObjectivePoint{2, 2});
  CHECK(front.points[2] == ObjectivePoint{3, 1});

  const auto collapsed = pareto_front({{1, 1}, {1, 1}});
  REQUIRE(collapsed.size() == 1);
  CHECK(collapsed.points[0] == ObjectivePoint{1, 1});
}

TEST_CASE("pareto_front ties in one coordinate keep only the dominating point") {
  const auto front = pareto_front({{1.0, 0.3}, {1.0, 0.5}, {2.0, 0.3}});
  REQUIRE(front.size() == 1);
  CHECK(front.points[0] == ObjectivePoint{1.0, 0.3});
}

TEST_CASE("pareto_front agrees with brute force and is order-invariant") {
  RngEngine engine = RngStream{21, 0}.engine();
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<ObjectivePoint> points;
    const int n = 1 + static_cast<int>(engine.uniform_below(40));
    for (int i = 0; i < n; ++i) {
      points.push_back({engine.uniform() * 4.0, engine.uniform() * 4.0});
    }
    if (n > 3) {  // inject duplicates
      points.push_back(points[0]);
      points.push_back(points[1]);
    }
    const auto reference = brute_force_front(points);
    const auto front = pareto_front(points);
    CHECK(front.points == reference);

    // permutation invariance and idempotence
    std::vector<ObjectivePoint> shuffled = points;
    for (std::size_t i = shuffled.size(); i > 1; --i) {
      std::swap(shuffled[i - 1], shuffled[engine.uniform_below(i)]);
    }
    CHECK(pareto_front(shuffled).points == front.points);
    CHECK(pareto_front(front.points).points == front.points);

    // front invariant: epsilon ascending, error strictly descending
    for (std::size_t i = 1; i < front.points.size(); ++i) {
      CHECK(front.points[i].epsilon > front.points[i - 1].epsilon);
      CHECK(front.points[i].error < front.points[i - 1].error);
    }
  }
}

TEST_CASE("hypervolume matches hand values") {
  const AntiIdealPoint anti{10.0, 1.0};
  CHECK(hypervolume(pareto_front({{1.0, 0.5}}), anti) == doctest::Approx(4.5));
  CHECK(hypervolume(pareto_front({{2.0, 0.4}, {5.0, 0.1}}), anti) == doctest::Approx(6.3));
  CHECK(hypervolume(ParetoFront{}, anti) == 0.0);
}

TEST_CASE("points outside the anti-ideal box contribute nothing") {
  const AntiIdealPoint anti{10.0, 1.0};
  const auto front = pareto_front({{12.0, 0.05}, {2.0, 0.4}});
  CHECK(hypervolume(front, anti) == doctest::Approx(8.0 * 0.6));
}

TEST_CASE("hypervolume sweep agrees with Monte Carlo on random fronts") {
  const AntiIdealPoint anti{10.0, 1.0};
  RngEngine engine = RngStream{22, 0}.engine();
  for (int trial = 0; trial < 20; ++trial) {
    const ParetoFront front = testing::random_front(50, anti, engine);
    const double exact = hypervolume(front, anti);
    const auto [estimate, standard_error] = testing::mc_hypervolume(front, anti, 200000, engine);
    CHECK(std::abs(exact - estimate) <= 3.0 * standard_error + 1e-9);
  }
}

TEST_CASE("hv_increment matches definition and is never negative") {
  const AntiIdealPoint anti{10.0, 1.0};
  const auto front = pareto_front({{2.0, 0.4}});
  CHECK(hv_increment(front, {3.0, 0.5}, anti) == 0.0);            // dominated
  CHECK(hv_increment(front, {1.0, 0.5}, anti) == doctest::Approx(0.5));
  CHECK(hv_increment(ParetoFront{}, {1.0, 0.5}, anti) == doctest::Approx(4.5));
  CHECK(hv_increment(front, {11.0, 0.01}, anti) == 0.0);          // outside box

  RngEngine engine = RngStream{23, 0}.engine();
  for (int trial = 0; trial < 200; ++trial) {
    const ParetoFront f = testing::random_front(20, anti, engine);
    const ObjectivePoint v{engine.uniform() * 12.0, engine.uniform() * 1.2};
    const double inc = hv_increment(f, v, anti);
    CHECK(inc >= 0.0);
    // monotonicity: adding the point never decreases hypervolume
    auto extended = f.points;
    extended.push_back(v);
    CHECK(hypervolume(pareto_front(extended), anti) >= hypervolume(f, anti) - 1e-12);
  }
}

TEST_CASE("nondominated_cells covers the staircase complement") {
  const AntiIdealPoint anti{10.0, 1.0};

  const auto empty_cells = nondominated_cells(ParetoFront{}, anti);
  REQUIRE(empty_cells.size() == 1);
  CHECK(empty_cells[0].lower[0] == -kInf);
  CHECK(empty_cells[0].lower[1] == -kInf);
  CHECK(empty_cells[0].upper[0] == 10.0);
  CHECK(empty_cells[0].upper[1] == 1.0);

  const auto one = nondominated_cells(pareto_front({{2.0, 0.4}}), anti);
  REQUIRE(one.size() == 2);
  CHECK(one[0].upper[0] == 2.0);
  CHECK(one[0].upper[1] == 1.0);
  CHECK(one[1].lower[0] == 2.0);
  CHECK(one[1].upper[0] == 10.0);
  CHECK(one[1].upper[1] == 0.4);

  CHECK(nondominated_cells(pareto_front({{2.0, 0.4}, {5.0, 0.1}}), anti).size() == 3);
}

TEST_CASE("cell membership equals the non-dominated predicate") {
  const AntiIdealPoint anti{10.0, 1.0};
  RngEngine engine = RngStream{24, 0}.engine();
  for (int trial = 0; trial < 10; ++trial) {
    const ParetoFront front = testing::random_front(12, anti, engine);
    const auto cells = nondominated_cells(front, anti);
    CHECK(cells.size() == front.size() + 1);
    for (int s = 0; s < 100000; ++s) {
      const ObjectivePoint probe{engine.uniform() * 12.0 - 1.0,
                                 engine.uniform() * 1.4 - 0.2};
      int containing = 0;
      for (const Cell& cell : cells) {
        if (probe.epsilon > cell.lower[0] && probe.epsilon <= cell.upper[0] &&
            probe.error > cell.lower[1] && probe.error <= cell.upper[1]) {
          ++containing;
        }
      }
      CHECK(containing <= 1);  // interior-disjoint
      const bool expected = testing::in_nondominated_region(probe, front, anti);
      if (containing != (expected ? 1 : 0)) {
        // Boundary points may disagree by the open/closed convention; both
        // sides are measure zero, anything off-boundary must match.
        bool on_boundary = probe.epsilon == anti.epsilon_max || probe.error == anti.error_max;
        for (const ObjectivePoint& p : front.points) {
          on_boundary = on_boundary || probe.epsilon == p.epsilon || probe.error == p.error;
        }
        CHECK(on_boundary);
      }
    }
  }
}

TEST_CASE("cell union area equals box minus dominated area") {
  const AntiIdealPoint anti{10.0, 1.0};
  RngEngine engine = RngStream{25, 0}.engine();
  for (int trial = 0; trial < 20; ++trial) {
    const ParetoFront front = testing::random_front(30, anti, engine);
    const auto cells = nondominated_cells(front, anti);
    // Probe box = the anti-ideal box clipped at 0 on both axes.
    double cell_area = 0.0;
    for (const Cell& cell : cells) {
      const double w = std::min(cell.upper[0], anti.epsilon_max) - std::max(cell.lower[0], 0.0);
      const double h = std::min(cell.upper[1], anti.error_max) - std::max(cell.lower[1], 0.0);
      if (w > 0 && h > 0) cell_area += w * h;
    }
    const double dominated = hypervolume(front, anti);
    CHECK(cell_area + dominated ==
          doctest::Approx(anti.epsilon_max * anti.error_max).epsilon(1e-9));
  }
}

TEST_CASE("front csv export") {
  std::ostringstream out;
  write_front_csv(out, pareto_front({{2.0, 0.4}, {1.0, 0.5}}));
  CHECK(out.str() == "epsilon,error\n1,0.5\n2,0.40000000000000002\n");
}
