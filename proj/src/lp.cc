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

#include "robustpoa/lp.h"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>

#include "robustpoa/errors.h"

namespace robustpoa {

std::string_view ToString(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal:
      return "optimal";
    case LpStatus::kInfeasible:
      return "infeasible";
    case LpStatus::kUnbounded:
      return "unbounded";
  }
  return "unknown";
}

void LinearProgram::Validate() const {
  if (num_vars <= 0) throw ValidationError("lp: num_vars must be positive");
  const auto n = static_cast<std::size_t>(num_vars);
  auto check = [n](const std::vector<double>& row, const char* what) {
    if (row.size() != n) {
      throw ValidationError(std::string("lp: ") + what +
                            " length must equal num_vars");
    }
    for (double v : row) {
      if (!std::isfinite(v)) {
        throw ValidationError(std::string("lp: ") + what +
                              " has a non-finite entry");
      }
    }
  };
  check(objective, "objective");
  for (const auto& c : eq_constraints) {
    check(c.row, "equality row");
    if (!std::isfinite(c.rhs)) throw ValidationError("lp: non-finite rhs");
  }
  for (const auto& c : ge_constraints) {
    check(c.row, "inequality row");
    if (!std::isfinite(c.rhs)) throw ValidationError("lp: non-finite rhs");
  }
}

namespace {

// Dense tableau in canonical form with respect to `basis`. Row `rows` is the
// objective row holding z_j = c_B . B^-1 A_j - c_j; column `cols` is the
// right-hand side.
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_((rows + 1) * (cols + 1), 0.0),
        basis_(rows, 0) {}

  double& at(std::size_t i, std::size_t j) { return data_[i * (cols_ + 1) + j]; }
  double at(std::size_t i, std::size_t j) const {
    return data_[i * (cols_ + 1) + j];
  }
  double& rhs(std::size_t i) { return at(i, cols_); }
  double& z(std::size_t j) { return at(rows_, j); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::vector<std::size_t>& basis() { return basis_; }

  // Rebuilds the objective row for cost vector `cost` (size cols).
  void SetObjective(const std::vector<double>& cost) {
    for (std::size_t j = 0; j <= cols_; ++j) {
      double s = j < cols_ ? -cost[j] : 0.0;
      for (std::size_t i = 0; i < rows_; ++i) {
        const double cb = cost[basis_[i]];
        if (cb != 0.0) s += cb * at(i, j);
      }
      z(j) = s;
    }
  }

  void Pivot(std::size_t pr, std::size_t pc) {
    const std::size_t width = cols_ + 1;
    double* prow = &data_[pr * width];
    const double inv = 1.0 / prow[pc];
    for (std::size_t j = 0; j < width; ++j) prow[j] *= inv;
    prow[pc] = 1.0;
    for (std::size_t i = 0; i <= rows_; ++i) {
      if (i == pr) continue;
      double* row = &data_[i * width];
      const double f = row[pc];
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < width; ++j) {
        if (prow[j] != 0.0) row[j] -= f * prow[j];
      }
      row[pc] = 0.0;
    }
    basis_[pr] = pc;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> data_;
  std::vector<std::size_t> basis_;
};

enum class PhaseResult { kOptimal, kUnbounded };

// Maximizes the objective currently loaded in the tableau. Entering column:
// the lowest-index allowed column with negative z_j. Leaving row: minimum
// ratio, ties broken by the lowest basic variable index (Bland).
PhaseResult RunSimplex(Tableau& t, const std::vector<char>& allowed,
                       const LpOptions& options, std::int64_t& pivots) {
  const double opt_tol = options.pivot_tolerance;
  while (true) {
    std::size_t enter = t.cols();
    for (std::size_t j = 0; j < t.cols(); ++j) {
      if (allowed[j] && t.z(j) < -opt_tol) {
        enter = j;
        break;
      }
    }
    if (enter == t.cols()) return PhaseResult::kOptimal;

    std::size_t leave = t.rows();
    double best = 0.0;
    for (std::size_t i = 0; i < t.rows(); ++i) {
      const double a = t.at(i, enter);
      if (a <= options.pivot_tolerance) continue;
      const double ratio = std::max(t.rhs(i), 0.0) / a;
      if (leave == t.rows()) {
        leave = i;
        best = ratio;
        continue;
      }
      const double slack = 1e-12 * std::max(1.0, std::abs(best));
      if (ratio < best - slack ||
          (ratio <= best + slack && t.basis()[i] < t.basis()[leave])) {
        leave = i;
        best = std::min(best, ratio);
      }
    }
    if (leave == t.rows()) return PhaseResult::kUnbounded;

    if (++pivots > options.iteration_cap) {
      throw NumericalFailure("lp: simplex iteration cap reached");
    }
    t.Pivot(leave, enter);
  }
}

}  // namespace

LpSolution lp_solve(const LinearProgram& lp, const LpOptions& options) {
  lp.Validate();
  const std::size_t nv = static_cast<std::size_t>(lp.num_vars);
  const std::size_t n_eq = lp.eq_constraints.size();
  const std::size_t n_ge = lp.ge_constraints.size();
  const std::size_t m = n_eq + n_ge;

  // Column layout: [structural | surplus (one per ge row) | artificials].
  // A ge row with nonpositive rhs is negated so its surplus column starts in
  // the basis; every other row gets an artificial.
  std::vector<char> needs_artificial(m, 1);
  std::size_t n_art = 0;
  for (std::size_t k = 0; k < n_ge; ++k) {
    if (lp.ge_constraints[k].rhs <= 0.0) needs_artificial[n_eq + k] = 0;
  }
  for (char c : needs_artificial) n_art += c ? 1 : 0;

  const std::size_t surplus0 = nv;
  const std::size_t art0 = nv + n_ge;
  const std::size_t cols = art0 + n_art;
  Tableau t(m, cols);

  double rhs_scale = 1.0;
  std::size_t next_art = art0;
  for (std::size_t i = 0; i < m; ++i) {
    const bool is_eq = i < n_eq;
    const LinearConstraint& c =
        is_eq ? lp.eq_constraints[i] : lp.ge_constraints[i - n_eq];
    double sign = 1.0;
    if (is_eq) {
      if (c.rhs < 0.0) sign = -1.0;
    } else if (!needs_artificial[i]) {
      sign = -1.0;
    }
    for (std::size_t j = 0; j < nv; ++j) t.at(i, j) = sign * c.row[j];
    if (!is_eq) t.at(i, surplus0 + (i - n_eq)) = -sign;
    t.rhs(i) = sign * c.rhs;
    rhs_scale = std::max(rhs_scale, std::abs(c.rhs));
    if (needs_artificial[i]) {
      t.at(i, next_art) = 1.0;
      t.basis()[i] = next_art++;
    } else {
      t.basis()[i] = surplus0 + (i - n_eq);
    }
  }

  LpSolution solution;
  std::vector<char> allowed(cols, 1);

  // Phase 1: maximize -(sum of artificials).
  if (n_art > 0) {
    std::vector<double> cost(cols, 0.0);
    for (std::size_t j = art0; j < cols; ++j) cost[j] = -1.0;
    t.SetObjective(cost);
    RunSimplex(t, allowed, options, solution.pivots);
    const double infeasibility = -t.z(cols);
    if (infeasibility > options.feasibility_tolerance * rhs_scale) {
      solution.status = LpStatus::kInfeasible;
      return solution;
    }
    // Pivot zero-level artificials out of the basis where possible. A row
    // with no usable structural entry is redundant and stays inert.
    for (std::size_t i = 0; i < m; ++i) {
      if (t.basis()[i] < art0) continue;
      for (std::size_t j = 0; j < art0; ++j) {
        if (std::abs(t.at(i, j)) > options.pivot_tolerance) {
          t.Pivot(i, j);
          ++solution.pivots;
          break;
        }
      }
    }
    for (std::size_t j = art0; j < cols; ++j) allowed[j] = 0;
  }

  // Phase 2.
  std::vector<double> cost(cols, 0.0);
  for (std::size_t j = 0; j < nv; ++j) cost[j] = lp.objective[j];
  t.SetObjective(cost);
  if (RunSimplex(t, allowed, options, solution.pivots) ==
      PhaseResult::kUnbounded) {
    solution.status = LpStatus::kUnbounded;
    return solution;
  }

  solution.status = LpStatus::kOptimal;
  solution.point.assign(nv, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t b = t.basis()[i];
    if (b < nv) solution.point[b] = std::max(t.rhs(i), 0.0);
  }
  double value = 0.0;
  for (std::size_t j = 0; j < nv; ++j) value += lp.objective[j] * solution.point[j];
  solution.value = value;
  return solution;
}

}  // namespace robustpoa
