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

// Reference implementations written independently of the library, plus
// random instance generators shared by the test binaries.

#ifndef ROBUSTPOA_TESTS_TEST_SUPPORT_H_
#define ROBUSTPOA_TESTS_TEST_SUPPORT_H_

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "robustpoa/game.h"

namespace robustpoa::testing {

// Set covering class PoA for utility u[0..n] evaluated straight from the
// three-term expression, with no shared code.
inline double Prop2Reference(const std::vector<double>& u, double delta) {
  const double b = (1.0 + delta) / (1.0 - delta);
  const int n = static_cast<int>(u.size()) - 1;
  double worst = 0.0;
  for (int j = 1; j < n; ++j) {
    const double a = b * (j + 1) * u[j + 1];
    const double c = b * j * u[j + 1] + 1.0;
    const double d = b * j * u[j] - u[j + 1] + 1.0;
    worst = std::max(worst, std::max(a, std::max(c, d)));
  }
  return 1.0 / worst;
}

// Welfare of the two designated allocations of the tight set covering
// instance, from group sizes |R_0| = 1 and |R_k| = (n-1) (n-1)! / (n-k)!.
// The equilibrium covers R_0..R_{n-1}; the optimum covers every group.
struct TightWelfare {
  double equilibrium = 0.0;
  double optimum = 0.0;
  long resources = 0;
};

inline TightWelfare TightWelfareReference(int n, double delta) {
  const double b = (1.0 + delta) / (1.0 - delta);
  TightWelfare out{1.0, 1.0, 1};
  for (int k = 1; k <= n; ++k) {
    // (n-1)!/(n-k)! = (n-1)(n-2)...(n-k+1)
    long size = n - 1;
    for (int f = n - 1; f > n - k; --f) size *= f;
    const double value = std::pow(b, k) * static_cast<double>(size);
    if (k < n) out.equilibrium += value;
    out.optimum += value;
    out.resources += size;
  }
  return out;
}

inline double Uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline int UniformInt(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Random game with basis.n() players, 1..max_resources resources,
// 1..max_actions actions per player and valuations within `delta` of truth.
inline GameInstance RandomGame(std::mt19937_64& rng, int max_resources,
                               int max_actions, double delta, BasisPair basis) {
  const int n = basis.n();
  const int m = UniformInt(rng, 1, max_resources);
  std::vector<double> values(m);
  for (double& v : values) v = Uniform(rng, 0.5, 3.0);
  std::vector<std::vector<ResourceSet>> actions(n);
  for (auto& set : actions) {
    const int count = UniformInt(rng, 1, max_actions);
    for (int c = 0; c < count; ++c) {
      ResourceSet s;
      for (int r = 0; r < m; ++r) {
        if (UniformInt(rng, 0, 1)) s.push_back(r);
      }
      set.push_back(s);
    }
  }
  std::vector<std::vector<double>> valuations(n, values);
  for (auto& row : valuations) {
    for (int r = 0; r < m; ++r) row[r] *= 1.0 + Uniform(rng, -delta, delta);
  }
  return GameInstance(values, actions, valuations, std::move(basis));
}

inline BasisPair RandomSetCoverBasis(std::mt19937_64& rng, int n) {
  std::vector<double> u(n + 1, 0.0);
  u[1] = 1.0;
  for (int k = 2; k <= n; ++k) u[k] = Uniform(rng, 0.0, 1.0);
  return BasisPair::SetCovering(u);
}

}  // namespace robustpoa::testing

#endif  // ROBUSTPOA_TESTS_TEST_SUPPORT_H_
