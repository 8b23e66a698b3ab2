# File: src/helpers/functions.py
#  Copyright (c) 2025 SpanSim contributors.
#  SpanSim is an open-source spanner simulation toolkit licensed under MIT.
#  All rights reserved where applicable.
#
#

import os
import time
from datetime import timedelta
from typing import List, Optional, Union

import humanize
import psutil

from src.sampler import auto_h, trend_budget_scale

TREND = "trend"


def get_readable_time(seconds: float) -> str:
    """Return a human-readable duration."""
    return humanize.naturaldelta(timedelta(seconds=seconds), minimum_unit="milliseconds")


def get_readable_bytes(size: int) -> str:
    """Return a human readable size from bytes."""
    return humanize.naturalsize(size, binary=True)


def process_memory() -> int:
    return psutil.Process(os.getpid()).memory_info().rss


def usage_line(started: float) -> str:
    return (
        f"elapsed {get_readable_time(time.time() - started)},"
        f" memory {get_readable_bytes(process_memory())}"
    )


def parse_int_list(value: Union[str, int, List[int]]) -> List[int]:
    """``"256,512"`` -> ``[256, 512]``; lists and scalars pass through."""
    if isinstance(value, list):
        return [int(v) for v in value]
    if isinstance(value, int):
        return [value]
    return [int(part) for part in value.replace(" ", "").split(",") if part]


def parse_float_list(value: str) -> List[float]:
    return [float(part) for part in value.replace(" ", "").split(",") if part]


def resolve_h(value: Optional[str], n: int) -> int:
    """``auto`` (or nothing) means ceil(log2 n)."""
    if value is None or str(value).lower() == "auto":
        return auto_h(n)
    return int(value)


def resolve_alpha(value: Optional[str], k: int) -> int:
    """``auto`` (or nothing) means the stretch bound 2 * 3^k - 1."""
    if value is None or str(value).lower() == "auto":
        return 2 * 3**k - 1
    return int(value)


def resolve_budget_scale(value: Union[str, float, None], n: int, c: float) -> float:
    """``trend`` picks the per-n scale of :func:`trend_budget_scale`; anything else is a plain factor."""
    if value is None:
        return 1.0
    if str(value).lower() == TREND:
        return trend_budget_scale(n, c)
    return float(value)


def parse_budget_scales(value: str) -> List[Union[float, str]]:
    return [
        TREND if part.lower() == TREND else float(part)
        for part in value.replace(" ", "").split(",")
        if part
    ]
