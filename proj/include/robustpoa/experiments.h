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

// Seeded sweeps behind the two figures: designs tuned to one uncertainty
// level evaluated at another.

#ifndef ROBUSTPOA_EXPERIMENTS_H_
#define ROBUSTPOA_EXPERIMENTS_H_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace robustpoa {

inline constexpr std::uint64_t kDefaultSeed = 20260101;

// printf("%.12g"), the number format of every CSV this library writes.
std::string format_real(double v);

// Concave nondecreasing welfare w[0..n] with w[0] = 0, w[1] = 1: n increments
// drawn uniformly from (0, 1], sorted in decreasing order, summed, and
// rescaled by the first increment.
std::vector<double> sample_concave_welfare(int n, std::mt19937_64& rng);

// Grid {0, step, 2 step, ...} with `points` entries.
std::vector<double> delta_grid(int points, double step);

struct Fig1Options {
  std::uint64_t seed = kDefaultSeed;
  int count = 30;
  int n = 10;
  double delta_true = 0.3;
  int grid_points = 20;  // 0, 0.05, ..., 0.95
  double grid_step = 0.05;
};

struct Fig1Row {
  int w_id = 0;
  double delta = 0.0;
  double poa = 0.0;
};

// For each sampled w and grid level delta: the design LP optimum u*_delta,
// evaluated by the class PoA program at options.delta_true. Rows come out
// ordered by w_id, then delta.
std::vector<Fig1Row> run_fig1(const Fig1Options& options);
std::string fig1_csv(const std::vector<Fig1Row>& rows);

// Grid level maximizing the PoA, per w_id (first maximizer on ties).
std::vector<double> fig1_argmax(const std::vector<Fig1Row>& rows);

struct Fig2Row {
  double delta_true = 0.0;
  double delta_design = 0.0;
  double poa = 0.0;
};

// mismatch_poa over delta_design in {0, 0.01, ..., 0.99} for each entry of
// delta_true_list.
std::vector<Fig2Row> run_fig2(const std::vector<double>& delta_true_list,
                              int grid_points = 100, double grid_step = 0.01);
std::string fig2_csv(const std::vector<Fig2Row>& rows);

}  // namespace robustpoa

#endif  // ROBUSTPOA_EXPERIMENTS_H_
