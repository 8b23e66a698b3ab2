# File: src/sampler/params.py
#  Copyright (c) 2025 SpanSim contributors.
#  SpanSim is an open-source spanner simulation toolkit licensed under MIT.
#  All rights reserved where applicable.
#
#

import math

from src.sampler.dataclass import LevelBudgets, Params

# float powers like 64 ** (1/3) land a hair below the integer they denote
_CEIL_SLACK = 1e-9
# samples per trial, over n^(2^j delta + epsilon), in the trend budget mode
TREND_SAMPLES = 4


def ceil_budget(value: float) -> int:
    return max(0, math.ceil(value - _CEIL_SLACK))


def auto_h(n: int) -> int:
    """Default trial parameter: ceil(log2 n), at least 1."""
    return max(1, math.ceil(math.log2(n))) if n > 1 else 1


def trend_budget_scale(n: int, c: float) -> float:
    """
    Budget scale that leaves ``TREND_SAMPLES * n^(2^j delta + epsilon)`` samples
    per trial at every level, dropping the c^2 log^3 n factor.
    """
    log_n = math.log2(n) if n > 1 else 1.0
    return TREND_SAMPLES / (c**2 * log_n**3)


def derive_budgets(p: Params, j: int) -> LevelBudgets:
    """Trial count, per-trial sample budget, heavy threshold and p_j for level ``j``."""
    if not 0 <= j <= p.k:
        raise ValueError(f"level {j} outside 0..{p.k}")

    growth = 2**j * p.delta
    log_n = p.log_n
    samples = p.budget_scale * p.c**2 * p.n ** (growth + p.epsilon) * log_n**3
    threshold = p.c * p.n**growth * log_n

    return LevelBudgets(
        level=j,
        trial_count=2 * p.h,
        samples_per_trial=ceil_budget(samples),
        neighbor_threshold=ceil_budget(threshold),
        center_prob=p.center_prob(j),
    )
