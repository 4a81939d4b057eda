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

#include "robustpoa/poa_lp.h"

#include <cmath>
#include <cstddef>
#include <string>

#include "robustpoa/errors.h"

namespace robustpoa {

std::string_view ToString(PoaMethod method) {
  switch (method) {
    case PoaMethod::kPrimalLp:
      return "PrimalLP";
    case PoaMethod::kDualLp:
      return "DualLP";
    case PoaMethod::kClosedForm:
      return "ClosedForm";
  }
  return "unknown";
}

std::string_view ToString(DesignProvenance provenance) {
  switch (provenance) {
    case DesignProvenance::kDesignLp:
      return "DesignLP";
    case DesignProvenance::kSetCoverRecursion:
      return "SetCoverRecursion";
    case DesignProvenance::kSetCoverLimit:
      return "SetCoverLimit";
  }
  return "unknown";
}

std::vector<TripleIndex> enumerate_triples(int n) {
  if (n < 1) throw ValidationError("triples: n must be at least 1");
  std::vector<TripleIndex> out;
  for (int a = 0; a <= n; ++a) {
    for (int x = 0; a + x <= n; ++x) {
      for (int b = 0; a + x + b <= n; ++b) {
        if (a + x + b >= 1) out.push_back({a, x, b});
      }
    }
  }
  return out;
}

LinearProgram build_primal_lp(const BasisPair& basis, UncertaintyLevel delta) {
  const int n = basis.n();
  const double amp = delta.amplification();
  const auto triples = enumerate_triples(n);
  const std::size_t nv = triples.size();

  LinearProgram lp;
  lp.num_vars = static_cast<int>(nv);
  lp.objective.resize(nv);
  LinearConstraint nash{std::vector<double>(nv), 0.0};
  LinearConstraint norm{std::vector<double>(nv), 1.0};
  for (std::size_t k = 0; k < nv; ++k) {
    const auto [a, x, b] = triples[k];
    lp.objective[k] = basis.w(b + x);
    // b > 0 implies a + x + 1 <= n, so u is never read past n.
    nash.row[k] = amp * a * basis.u(a + x) - b * basis.u_or_zero(a + x + 1);
    norm.row[k] = basis.w(a + x);
  }
  lp.ge_constraints.push_back(std::move(nash));
  lp.eq_constraints.push_back(std::move(norm));
  return lp;
}

PoaReport poa_class(const BasisPair& basis, UncertaintyLevel delta) {
  const LinearProgram lp = build_primal_lp(basis, delta);
  const LpSolution sol = lp_solve(lp);

  PoaReport report;
  report.method = PoaMethod::kPrimalLp;
  PrimalCertificate cert;
  switch (sol.status) {
    case LpStatus::kInfeasible:
      throw DegenerateClass("poa: normalization w(a+x) theta = 1 infeasible");
    case LpStatus::kUnbounded:
      cert.unbounded = true;
      report.poa = 0.0;
      break;
    case LpStatus::kOptimal: {
      const auto triples = enumerate_triples(basis.n());
      for (std::size_t k = 0; k < triples.size(); ++k) {
        if (sol.point[k] != 0.0) cert.theta.emplace_back(triples[k], sol.point[k]);
      }
      cert.value = sol.value;
      if (!(sol.value > 0.0)) {
        throw DegenerateClass("poa: primal optimum is not positive");
      }
      report.poa = 1.0 / sol.value;
      break;
    }
  }
  report.certificate = std::move(cert);
  return report;
}

LinearProgram build_lagrange_dual_lp(const BasisPair& basis,
                                     UncertaintyLevel delta) {
  const int n = basis.n();
  const double amp = delta.amplification();
  LinearProgram lp;
  lp.num_vars = 3;
  lp.objective = {0.0, -1.0, 1.0};
  for (const auto& [a, x, b] : enumerate_triples(n)) {
    // mu w(a+x) - lambda [B a u(a+x) - b u(a+x+1)] >= w(b+x)
    const double bracket =
        amp * a * basis.u(a + x) - b * basis.u_or_zero(a + x + 1);
    const double wn = basis.w(a + x);
    lp.ge_constraints.push_back({{-bracket, wn, -wn}, basis.w(b + x)});
  }
  return lp;
}

PoaReport poa_class_dual(const BasisPair& basis, UncertaintyLevel delta) {
  const LpSolution sol = lp_solve(build_lagrange_dual_lp(basis, delta));
  PoaReport report;
  report.method = PoaMethod::kDualLp;
  DualCertificate cert;
  if (sol.status == LpStatus::kInfeasible) {
    // Dual infeasible <=> primal unbounded: the guarantee is vacuous.
    report.poa = 0.0;
  } else if (sol.status == LpStatus::kUnbounded) {
    throw DegenerateClass("poa: dual program unbounded");
  } else {
    cert.lambda = sol.point[0];
    cert.mu = sol.point[1] - sol.point[2];
    report.poa = 1.0 / cert.mu;
  }
  report.certificate = cert;
  return report;
}

std::vector<double> NormalizeWelfare(std::span<const double> w) {
  // BasisPair performs the validation; u is a placeholder that always passes.
  std::vector<double> u(w.size(), 1.0);
  if (!u.empty()) u[0] = 0.0;
  const BasisPair basis(std::vector<double>(w.begin(), w.end()), std::move(u));
  return {basis.w_values().begin(), basis.w_values().end()};
}

LinearProgram build_design_lp(std::span<const double> w_in,
                              UncertaintyLevel delta) {
  const std::vector<double> w = NormalizeWelfare(w_in);
  const int n = static_cast<int>(w.size()) - 1;
  const double amp = delta.amplification();
  const std::size_t nv = 2 * static_cast<std::size_t>(n) + 2;
  const std::size_t mu_col = 2 * static_cast<std::size_t>(n);
  auto u_col = [](int k) { return 2 * static_cast<std::size_t>(k - 1); };

  LinearProgram lp;
  lp.num_vars = static_cast<int>(nv);
  lp.objective.assign(nv, 0.0);
  lp.objective[mu_col] = -1.0;
  lp.objective[mu_col + 1] = 1.0;

  for (const auto& [a, x, b] : enumerate_triples(n)) {
    // mu w(a+x) - B a u(a+x) + b u(a+x+1) >= w(b+x)
    std::vector<double> row(nv, 0.0);
    auto add_u = [&](int k, double coef) {
      if (k < 1 || k > n || coef == 0.0) return;
      row[u_col(k)] += coef;
      row[u_col(k) + 1] -= coef;
    };
    add_u(a + x, -amp * a);
    add_u(a + x + 1, static_cast<double>(b));
    row[mu_col] = w[static_cast<std::size_t>(a + x)];
    row[mu_col + 1] = -w[static_cast<std::size_t>(a + x)];
    lp.ge_constraints.push_back({std::move(row), w[static_cast<std::size_t>(b + x)]});
  }

  std::vector<double> unit(nv, 0.0);
  unit[u_col(1)] = 1.0;
  unit[u_col(1) + 1] = -1.0;
  lp.eq_constraints.push_back({std::move(unit), 1.0});
  return lp;
}

DesignResult optimal_design(std::span<const double> w, UncertaintyLevel delta) {
  const LinearProgram lp = build_design_lp(w, delta);
  const LpSolution sol = lp_solve(lp);
  if (sol.status != LpStatus::kOptimal) {
    throw NumericalFailure(std::string("design: program reported ") +
                           std::string(ToString(sol.status)));
  }
  const int n = static_cast<int>(w.size()) - 1;
  DesignResult result;
  result.design.provenance = DesignProvenance::kDesignLp;
  result.design.u.assign(static_cast<std::size_t>(n) + 1, 0.0);
  for (int k = 1; k <= n; ++k) {
    const auto c = 2 * static_cast<std::size_t>(k - 1);
    result.design.u[static_cast<std::size_t>(k)] = sol.point[c] - sol.point[c + 1];
  }
  result.design.u[1] = 1.0;
  const auto mu_col = 2 * static_cast<std::size_t>(n);
  const double mu = sol.point[mu_col] - sol.point[mu_col + 1];
  result.report.method = PoaMethod::kDualLp;
  result.report.poa = 1.0 / mu;
  result.report.certificate = DualCertificate{1.0, mu};
  return result;
}

}  // namespace robustpoa
