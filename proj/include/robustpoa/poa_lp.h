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

// Price of anarchy of a class of games with delta-bounded valuations, and
// the utility design that maximizes it, both as linear programs.
//
// Each resource of a worst-case game is summarized by a triple (a, x, b):
// the number of agents selecting it only at equilibrium (a), at both the
// equilibrium and the optimum (x), and only at the optimum (b). theta(a,x,b)
// is the total true value of the resources sharing a triple. With
// B = (1 + delta) / (1 - delta) the class PoA is 1 / V* where
//
//   V* = max  sum w(b+x) theta
//        s.t. sum [B a u(a+x) - b u(a+x+1)] theta >= 0
//             sum w(a+x) theta = 1,  theta >= 0.
//
// The optimal design solves
//
//   min_{u, mu} mu  s.t.  w(b+x) - mu w(a+x) + B a u(a+x) - b u(a+x+1) <= 0
//                         for every triple,  u(1) = 1
//
// and guarantees PoA = 1 / mu*.

#ifndef ROBUSTPOA_POA_LP_H_
#define ROBUSTPOA_POA_LP_H_

#include <compare>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "robustpoa/game.h"
#include "robustpoa/lp.h"
#include "robustpoa/uncertainty.h"

namespace robustpoa {

struct TripleIndex {
  int a = 0;
  int x = 0;
  int b = 0;

  friend auto operator<=>(const TripleIndex&, const TripleIndex&) = default;
};

// All triples with 1 <= a + x + b <= n in lexicographic order;
// C(n+3, 3) - 1 of them. Throws ValidationError for n < 1.
std::vector<TripleIndex> enumerate_triples(int n);

enum class PoaMethod { kPrimalLp, kDualLp, kClosedForm };
std::string_view ToString(PoaMethod method);

struct PrimalCertificate {
  double value = 0.0;  // V*
  bool unbounded = false;
  std::vector<std::pair<TripleIndex, double>> theta;  // nonzero entries
};

struct DualCertificate {
  double lambda = 0.0;
  double mu = 0.0;
};

struct ClosedFormCertificate {
  std::string id;
};

using PoaCertificate =
    std::variant<PrimalCertificate, DualCertificate, ClosedFormCertificate>;

struct PoaReport {
  double poa = 0.0;
  PoaMethod method = PoaMethod::kPrimalLp;
  PoaCertificate certificate;
};

enum class DesignProvenance { kDesignLp, kSetCoverRecursion, kSetCoverLimit };
std::string_view ToString(DesignProvenance provenance);

// A utility curve u[0..n] with u[0] = 0 and u[1] = 1.
struct UtilityDesign {
  std::vector<double> u;
  DesignProvenance provenance = DesignProvenance::kDesignLp;

  int n() const { return static_cast<int>(u.size()) - 1; }
};

// Theorem-style primal program: one variable per triple (in
// enumerate_triples order), one ge row, one eq row.
LinearProgram build_primal_lp(const BasisPair& basis, UncertaintyLevel delta);

// PoA of the class of games sharing `basis` with uncertainty at most delta,
// from the primal program. An unbounded program yields PoA 0.
PoaReport poa_class(const BasisPair& basis, UncertaintyLevel delta);

// The Lagrange dual of the primal program:
//   min_{lambda >= 0, mu} mu
//   s.t. mu w(a+x) >= w(b+x) + lambda [B a u(a+x) - b u(a+x+1)].
// Variables are ordered (lambda, mu+, mu-); the objective maximizes -mu.
LinearProgram build_lagrange_dual_lp(const BasisPair& basis,
                                     UncertaintyLevel delta);

// Same PoA as poa_class, certified by the dual pair (lambda, mu).
PoaReport poa_class_dual(const BasisPair& basis, UncertaintyLevel delta);

// Welfare curve w[0..n], validated with BasisPair's welfare rules and
// rescaled so w[1] = 1.
std::vector<double> NormalizeWelfare(std::span<const double> w);

// Design program. Variables are ordered
//   (u1+, u1-, u2+, u2-, ..., un+, un-, mu+, mu-)
// with one ge row per triple (the <= constraint negated) followed by the
// eq row u(1) = 1. The objective maximizes -mu.
LinearProgram build_design_lp(std::span<const double> w,
                              UncertaintyLevel delta);

struct DesignResult {
  UtilityDesign design;
  PoaReport report;  // DualLp certificate with lambda = 1, mu = mu*
};

// Utility curve maximizing the class PoA for welfare `w` at level delta.
// Throws NumericalFailure when the program cannot be solved.
DesignResult optimal_design(std::span<const double> w, UncertaintyLevel delta);

}  // namespace robustpoa

#endif  // ROBUSTPOA_POA_LP_H_
