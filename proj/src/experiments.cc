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

#include "robustpoa/experiments.h"

#include <algorithm>
#include <cstdio>
#include <functional>

#include "robustpoa/errors.h"
#include "robustpoa/poa_lp.h"
#include "robustpoa/set_cover.h"

namespace robustpoa {

std::string format_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::vector<double> sample_concave_welfare(int n, std::mt19937_64& rng) {
  if (n < 1) throw ValidationError("sampler: n must be at least 1");
  std::vector<double> inc(static_cast<std::size_t>(n));
  for (double& v : inc) {
    // 53 random bits mapped onto (0, 1].
    v = static_cast<double>((rng() >> 11) + 1) * 0x1.0p-53;
  }
  std::sort(inc.begin(), inc.end(), std::greater<>());
  std::vector<double> w(static_cast<std::size_t>(n) + 1, 0.0);
  for (std::size_t k = 0; k < inc.size(); ++k) w[k + 1] = w[k] + inc[k] / inc[0];
  return w;
}

std::vector<double> delta_grid(int points, double step) {
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(std::max(points, 0)));
  for (int i = 0; i < points; ++i) grid.push_back(i * step);
  return grid;
}

std::vector<Fig1Row> run_fig1(const Fig1Options& options) {
  if (options.count < 0) throw ValidationError("fig1: count must be nonnegative");
  const UncertaintyLevel delta_true(options.delta_true);
  const std::vector<double> grid = delta_grid(options.grid_points, options.grid_step);
  std::mt19937_64 rng(options.seed);
  std::vector<Fig1Row> rows;
  for (int id = 0; id < options.count; ++id) {
    const std::vector<double> w = sample_concave_welfare(options.n, rng);
    for (double d : grid) {
      const DesignResult design = optimal_design(w, UncertaintyLevel(d));
      const PoaReport report =
          poa_class(BasisPair(w, design.design.u), delta_true);
      rows.push_back({id, d, report.poa});
    }
  }
  return rows;
}

std::string fig1_csv(const std::vector<Fig1Row>& rows) {
  std::string out = "w_id,delta,poa\n";
  for (const auto& r : rows) {
    out += std::to_string(r.w_id) + "," + format_real(r.delta) + "," +
           format_real(r.poa) + "\n";
  }
  return out;
}

std::vector<double> fig1_argmax(const std::vector<Fig1Row>& rows) {
  std::vector<double> best_delta;
  std::vector<double> best_poa;
  for (const auto& r : rows) {
    const auto id = static_cast<std::size_t>(r.w_id);
    if (id >= best_delta.size()) {
      best_delta.resize(id + 1, 0.0);
      best_poa.resize(id + 1, -1.0);
    }
    if (r.poa > best_poa[id]) {
      best_poa[id] = r.poa;
      best_delta[id] = r.delta;
    }
  }
  return best_delta;
}

std::vector<Fig2Row> run_fig2(const std::vector<double>& delta_true_list,
                              int grid_points, double grid_step) {
  std::vector<Fig2Row> rows;
  const std::vector<double> grid = delta_grid(grid_points, grid_step);
  for (double dt : delta_true_list) {
    const UncertaintyLevel truth(dt);
    for (double dd : grid) {
      rows.push_back({dt, dd, mismatch_poa(UncertaintyLevel(dd), truth).poa});
    }
  }
  return rows;
}

std::string fig2_csv(const std::vector<Fig2Row>& rows) {
  std::string out = "delta_true,delta_design,poa\n";
  for (const auto& r : rows) {
    out += format_real(r.delta_true) + "," + format_real(r.delta_design) + "," +
           format_real(r.poa) + "\n";
  }
  return out;
}

}  // namespace robustpoa
