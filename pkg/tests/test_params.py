# File: tests/test_params.py
#  Copyright (c) 2025 SpanSim contributors.
#  SpanSim is an open-source spanner simulation toolkit licensed under MIT.
#  All rights reserved where applicable.
#
#

import pytest
from pydantic import ValidationError

from src.sampler import (Params, auto_h, ceil_budget, derive_budgets,
                         flip_center, trend_budget_scale, trial_stream)


def test_level_zero_budgets_for_sixteen_nodes():
    budgets = derive_budgets(Params(n=16, k=1, h=4, c=1), 0)
    assert budgets.trial_count == 8
    assert budgets.center_prob == pytest.approx(0.3969, abs=1e-4)
    assert budgets.neighbor_threshold == 11
    # 16^(1/3 + 1/4) * 4^3 = 322.54
    assert budgets.samples_per_trial == 323


def test_level_one_center_probability():
    budgets = derive_budgets(Params(n=256, k=1, h=8, c=1), 1)
    assert budgets.center_prob == pytest.approx(0.0248, abs=1e-4)


def test_center_probability_below_one():
    p = Params(n=2, k=3, h=1, c=4)
    assert all(0 < p.center_prob(j) < 1 for j in range(p.k + 1))


def test_budget_scale_only_touches_samples():
    full = derive_budgets(Params(n=16, k=1, h=4, c=1), 0)
    half = derive_budgets(Params(n=16, k=1, h=4, c=1, budget_scale=0.5), 0)
    assert half.samples_per_trial == 162
    assert half.neighbor_threshold == full.neighbor_threshold
    assert half.center_prob == full.center_prob
    assert not Params(n=16, k=1, h=4, c=1, budget_scale=0.5).faithful


def test_trend_scale_keeps_four_samples_per_unit_growth():
    scale = trend_budget_scale(64, 4)
    p = Params(n=64, k=1, h=6, c=4, budget_scale=scale)
    # 64^(1/3 + 1/6) = 8 and 64^(2/3 + 1/6) = 32
    assert derive_budgets(p, 0).samples_per_trial == 32
    assert derive_budgets(p, 1).samples_per_trial == 128
    assert derive_budgets(p, 0).neighbor_threshold == derive_budgets(Params(n=64, k=1, h=6, c=4), 0).neighbor_threshold


def test_level_out_of_range():
    with pytest.raises(ValueError):
        derive_budgets(Params(n=16, k=1, h=4, c=1), 2)


def test_ceilings_absorb_float_noise():
    assert ceil_budget(64 ** (1 / 3)) == 4
    assert ceil_budget(10.08) == 11
    assert ceil_budget(-3.0) == 0


@pytest.mark.parametrize("n, h", [(1, 1), (2, 1), (16, 4), (17, 5), (1024, 10)])
def test_auto_h(n, h):
    assert auto_h(n) == h


def test_derived_fields():
    p = Params(n=64, k=2, h=6, c=4)
    assert p.delta == pytest.approx(1 / 7)
    assert p.epsilon == pytest.approx(1 / 6)
    assert p.stretch_bound == 17
    assert p.p_hat(-1) == 1.0
    assert p.p_hat(1) == pytest.approx(p.center_prob(0) * p.center_prob(1))


@pytest.mark.parametrize("field, value", [("h", 0), ("k", 0), ("c", 0.0), ("n", 0)])
def test_parameter_ranges(field, value):
    args = dict(n=16, k=1, h=4, c=4)
    args[field] = value
    with pytest.raises(ValidationError):
        Params(**args)


def test_streams_are_keyed():
    first = trial_stream(7, 0, 3, 0).integers(0, 1 << 30, size=5).tolist()
    assert first == trial_stream(7, 0, 3, 0).integers(0, 1 << 30, size=5).tolist()
    assert first != trial_stream(7, 0, 4, 0).integers(0, 1 << 30, size=5).tolist()
    assert first != trial_stream(7, 1, 3, 0).integers(0, 1 << 30, size=5).tolist()


def test_center_flip_extremes():
    assert flip_center(0, 0, 5, 1.0)
    assert not flip_center(0, 0, 5, 0.0)
