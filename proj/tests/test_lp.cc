// Copyright 2026 The robustpoa Authors.
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

#include <cstring>
#include <random>

#include "doctest.h"
#include "lp_reference.h"
#include "robustpoa/errors.h"
#include "robustpoa/lp.h"

namespace robustpoa {
namespace {

TEST_CASE("lp examples") {
  LinearProgram bounded;
  bounded.num_vars = 1;
  bounded.objective = {1.0};
  bounded.ge_constraints = {{{-1.0}, -1.0}};  // x <= 1
  const LpSolution s = lp_solve(bounded);
  CHECK(s.status == LpStatus::kOptimal);
  CHECK(s.value == doctest::Approx(1.0));
  CHECK(s.point == std::vector<double>{1.0});

  LinearProgram infeasible;
  infeasible.num_vars = 1;
  infeasible.objective = {1.0};
  infeasible.ge_constraints = {{{1.0}, 2.0}, {{-1.0}, -1.0}};
  CHECK(lp_solve(infeasible).status == LpStatus::kInfeasible);

  LinearProgram via_eq;
  via_eq.num_vars = 1;
  via_eq.objective = {1.0};
  via_eq.ge_constraints = {{{1.0}, 2.0}};
  via_eq.eq_constraints = {{{1.0}, 1.0}};
  CHECK(lp_solve(via_eq).status == LpStatus::kInfeasible);

  LinearProgram unbounded;
  unbounded.num_vars = 1;
  unbounded.objective = {1.0};
  CHECK(lp_solve(unbounded).status == LpStatus::kUnbounded);
}

TEST_CASE("lp validation") {
  LinearProgram lp;
  CHECK_THROWS_AS(lp_solve(lp), ValidationError);
  lp.num_vars = 2;
  lp.objective = {1.0};
  CHECK_THROWS_AS(lp_solve(lp), ValidationError);
  lp.objective = {1.0, 0.0};
  lp.ge_constraints = {{{1.0}, 0.0}};
  CHECK_THROWS_AS(lp_solve(lp), ValidationError);
  lp.ge_constraints = {{{1.0, INFINITY}, 0.0}};
  CHECK_THROWS_AS(lp_solve(lp), ValidationError);
}

TEST_CASE("Beale's cycling example terminates under Bland's rule") {
  // max 3/4 x0 - 20 x1 + 1/2 x2 - 6 x3
  //   1/4 x0 -  8 x1 -     x2 + 9 x3 <= 0
  //   1/2 x0 - 12 x1 - 1/2 x2 + 3 x3 <= 0
  //                        x2        <= 1
  LinearProgram lp;
  lp.num_vars = 4;
  lp.objective = {0.75, -20.0, 0.5, -6.0};
  lp.ge_constraints = {{{-0.25, 8.0, 1.0, -9.0}, 0.0},
                       {{-0.5, 12.0, 0.5, -3.0}, 0.0},
                       {{0.0, 0.0, -1.0, 0.0}, -1.0}};
  const LpSolution s = lp_solve(lp);
  REQUIRE(s.status == LpStatus::kOptimal);
  CHECK(s.value == doctest::Approx(1.25).epsilon(1e-12));
}

TEST_CASE("redundant equality rows are tolerated") {
  LinearProgram lp;
  lp.num_vars = 2;
  lp.objective = {1.0, 2.0};
  lp.eq_constraints = {{{1.0, 1.0}, 1.0}, {{2.0, 2.0}, 2.0}};
  const LpSolution s = lp_solve(lp);
  REQUIRE(s.status == LpStatus::kOptimal);
  CHECK(s.value == doctest::Approx(2.0));
}

TEST_CASE("iteration cap raises NumericalFailure") {
  LinearProgram lp;
  lp.num_vars = 3;
  lp.objective = {1.0, 1.0, 1.0};
  lp.ge_constraints = {{{-1.0, -1.0, -1.0}, -1.0}};
  LpOptions tight;
  tight.iteration_cap = 0;
  CHECK_THROWS_AS(lp_solve(lp, tight), NumericalFailure);
}

TEST_CASE("property: random LPs agree with vertex enumeration") {
  std::mt19937_64 rng(2024);
  int optimal = 0, infeasible = 0, unbounded = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const LinearProgram lp = testing::RandomSmallLp(rng);
    const LpSolution got = lp_solve(lp);
    const testing::ReferenceResult want = testing::SolveByVertexEnumeration(lp);
    INFO("trial " << trial);
    REQUIRE(got.status == want.status);
    switch (got.status) {
      case LpStatus::kOptimal:
        ++optimal;
        CHECK(got.value == doctest::Approx(want.value).epsilon(1e-6).scale(1.0));
        CHECK(testing::MaxViolation(lp, got.point) <= 1e-8);
        break;
      case LpStatus::kInfeasible:
        ++infeasible;
        break;
      case LpStatus::kUnbounded:
        ++unbounded;
        break;
    }
  }
  // The generator must exercise every outcome.
  CHECK(optimal > 100);
  CHECK(infeasible > 5);
  CHECK(unbounded > 5);
}

TEST_CASE("property: solves are bitwise deterministic") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    const LinearProgram lp = testing::RandomSmallLp(rng);
    const LpSolution a = lp_solve(lp);
    const LpSolution b = lp_solve(lp);
    CHECK(a.status == b.status);
    CHECK(std::memcmp(&a.value, &b.value, sizeof(double)) == 0);
    REQUIRE(a.point.size() == b.point.size());
    if (!a.point.empty()) {
      CHECK(std::memcmp(a.point.data(), b.point.data(), a.point.size() * sizeof(double)) == 0);
    }
    CHECK(a.pivots == b.pivots);
  }
}

}  // namespace
}  // namespace robustpoa
