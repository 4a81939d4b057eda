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

// Small dense linear-program solver.
//
//   maximize    c . x
//   subject to  E x  = e      (eq_constraints)
//               G x >= g      (ge_constraints)
//               x >= 0
//
// Two-phase tableau simplex with Bland's rule. Free variables are the
// caller's business (split them into a difference of two nonnegatives).

#ifndef ROBUSTPOA_LP_H_
#define ROBUSTPOA_LP_H_

#include <cstdint>
#include <string_view>
#include <vector>

namespace robustpoa {

struct LinearConstraint {
  std::vector<double> row;
  double rhs = 0.0;
};

struct LinearProgram {
  int num_vars = 0;
  std::vector<double> objective;  // maximized
  std::vector<LinearConstraint> eq_constraints;
  std::vector<LinearConstraint> ge_constraints;

  // Throws ValidationError unless num_vars > 0 and every row (and the
  // objective) has num_vars finite entries.
  void Validate() const;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

std::string_view ToString(LpStatus status);

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  double value = 0.0;         // objective . point, when optimal
  std::vector<double> point;  // when optimal
  std::int64_t pivots = 0;
};

struct LpOptions {
  double pivot_tolerance = 1e-10;
  double feasibility_tolerance = 1e-8;
  std::int64_t iteration_cap = 1'000'000;
};

// Global optimum or the Infeasible / Unbounded status. Deterministic: the
// same program always yields a bitwise-identical solution. Throws
// NumericalFailure when the iteration cap is reached.
LpSolution lp_solve(const LinearProgram& lp, const LpOptions& options = {});

}  // namespace robustpoa

#endif  // ROBUSTPOA_LP_H_
