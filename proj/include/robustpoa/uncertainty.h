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

#ifndef ROBUSTPOA_UNCERTAINTY_H_
#define ROBUSTPOA_UNCERTAINTY_H_

namespace robustpoa {

// Maximum relative deviation of any agent's valuation from the true resource
// value. Always in [0, 1).
class UncertaintyLevel {
 public:
  // Throws ValidationError unless 0 <= delta < 1.
  explicit UncertaintyLevel(double delta);

  double delta() const { return delta_; }

  // (1 + delta) / (1 - delta): the worst-case ratio between an overvalued
  // and an undervalued estimate of the same resource.
  double amplification() const { return (1.0 + delta_) / (1.0 - delta_); }

  friend bool operator==(const UncertaintyLevel&,
                         const UncertaintyLevel&) = default;

 private:
  double delta_;
};

}  // namespace robustpoa

#endif  // ROBUSTPOA_UNCERTAINTY_H_
