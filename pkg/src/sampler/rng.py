# File: src/sampler/rng.py
#  Copyright (c) 2025 SpanSim contributors.
#  SpanSim is an open-source spanner simulation toolkit licensed under MIT.
#  All rights reserved where applicable.
#
#

"""
Named random streams.

Every random decision is drawn from a generator keyed by
``(seed, level, host, purpose, index)``, so the outcome does not depend on
the order in which nodes are processed, nor on whether a run is
centralized or simulated message by message.
"""

import numpy as np

TRIAL = 0
CENTER = 1


def stream(seed: int, level: int, host: int, purpose: int, index: int = 0) -> np.random.Generator:
    return np.random.default_rng([seed, level, host, purpose, index])


def trial_stream(seed: int, level: int, host: int, trial: int) -> np.random.Generator:
    return stream(seed, level, host, TRIAL, trial)


def center_stream(seed: int, level: int, host: int) -> np.random.Generator:
    return stream(seed, level, host, CENTER)


def flip_center(seed: int, level: int, host: int, prob: float) -> bool:
    return bool(center_stream(seed, level, host).random() < prob)
