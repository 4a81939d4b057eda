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

import json
import math

import pytest

import robustpoa as rp


def test_limit_value_complete_information():
    assert rp.optimal_poa_limit(0.0) == pytest.approx(1 - math.exp(-1), abs=1e-12)


def test_three_methods_agree_on_set_covering():
    u = [0.0, 1.0, 3 / 7, 2 / 7]
    w = [0.0, 1.0, 1.0, 1.0]
    for method in ("primal", "dual", "closed"):
        assert rp.poa_class(w, u, 0.0, method) == pytest.approx(7 / 11, abs=1e-9)


def test_hand_evaluated_closed_form():
    # n = 2, B = 3: max{6 * 0.5, 3 * 0.5 + 1, 3 - 0.5 + 1} = 3.5.
    assert rp.setcover_poa([0.0, 1.0, 0.5], 0.5, 2) == pytest.approx(2 / 7)


def test_design_lp_at_least_as_good_as_any_design():
    w = [0.0, 1.0, 1.0, 1.0]
    u, poa = rp.optimal_design(w, 0.2)
    assert u[1] == 1.0
    assert rp.poa_class(w, u, 0.2) == pytest.approx(poa, abs=1e-9)
    for other in ([0.0, 1.0, 0.5, 1 / 3], [0.0, 1.0, 0.0, 0.0]):
        assert rp.poa_class(w, other, 0.2) <= poa + 1e-9


def test_finite_design_matches_closed_form():
    u, _ = rp.optimal_design_finite(5, 0.2)
    assert u == pytest.approx(rp.finite_design_closed_form(5, 0.2), rel=1e-12)


def test_mismatch_regimes():
    assert rp.mismatch_poa(0.1, 0.3)["regime"] == "Underestimate"
    assert rp.mismatch_poa(0.3, 0.1)["regime"] == "Overestimate"
    matched = rp.mismatch_poa(0.3, 0.3)["poa"]
    assert matched == pytest.approx(rp.optimal_poa_limit(0.3), abs=1e-12)


def test_worstcase_game_round_trip():
    text = rp.worstcase_game(3, 0.0)
    game = json.loads(text)
    assert len(game["actions"]) == 3
    report = rp.analyze_game(text)
    assert [0, 0, 0] in report["equilibria"]
    assert rp.poa_of_game(text) == pytest.approx(rp.optimal_poa_finite(3, 0.0), abs=1e-9)


def test_errors_map_to_exception_hierarchy():
    with pytest.raises(rp.ValidationError):
        rp.optimal_poa_limit(1.0)
    with pytest.raises(rp.SizeExceeded):
        rp.worstcase_game(9, 0.0)
    with pytest.raises(rp.ValidationError):
        rp.analyze_game("{not json")
    assert issubclass(rp.SizeExceeded, rp.ValidationError)
    assert issubclass(rp.ValidationError, rp.Error)
