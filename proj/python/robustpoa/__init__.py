# Copyright 2026 The robustpoa Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Price-of-anarchy bounds and utility design under bounded valuation noise."""

from robustpoa._core import (
    BudgetExceeded,
    DegenerateClass,
    Error,
    NumericalFailure,
    SizeExceeded,
    ValidationError,
    analyze_game,
    finite_design_closed_form,
    mismatch_poa,
    optimal_design,
    optimal_design_finite,
    optimal_design_limit,
    optimal_poa_finite,
    optimal_poa_limit,
    poa_class,
    poa_of_game,
    setcover_poa,
    worstcase_game,
)

__all__ = [
    "BudgetExceeded",
    "DegenerateClass",
    "Error",
    "NumericalFailure",
    "SizeExceeded",
    "ValidationError",
    "analyze_game",
    "finite_design_closed_form",
    "mismatch_poa",
    "optimal_design",
    "optimal_design_finite",
    "optimal_design_limit",
    "optimal_poa_finite",
    "optimal_poa_limit",
    "poa_class",
    "poa_of_game",
    "setcover_poa",
    "worstcase_game",
]
