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

#ifndef ROBUSTPOA_ERRORS_H_
#define ROBUSTPOA_ERRORS_H_

#include <stdexcept>
#include <string>

namespace robustpoa {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An input violates a documented invariant (bad basis, delta out of range,
// malformed game, ...). The message names the violated invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A requested construction is larger than the supported size.
class SizeExceeded : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Exhaustive enumeration would exceed the configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// The LP engine failed to converge (iteration cap reached).
class NumericalFailure : public Error {
 public:
  using Error::Error;
};

// The PoA program of a class has no feasible point.
class DegenerateClass : public Error {
 public:
  using Error::Error;
};

}  // namespace robustpoa

#endif  // ROBUSTPOA_ERRORS_H_
