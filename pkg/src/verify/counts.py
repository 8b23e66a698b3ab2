# File: src/verify/counts.py
#  Copyright (c) 2025 SpanSim contributors.
#  SpanSim is an open-source spanner simulation toolkit licensed under MIT.
#  All rights reserved where applicable.
#
#

import math
from typing import List, Optional

from src.localsim import (Counters, message_bound, predicted_rounds,
                          round_bound)
from src.logging import LOGGER
from src.sampler import Params, SpannerResult
from src.verify.dataclass import (CountsReport, EdgeCountCheck,
                                  HeavyClusteringReport, NodeCountCheck,
                                  ProtocolCheck)

logger = LOGGER(__name__)

# below this many expected nodes the concentration bound is not checked hard
CONCENTRATION_FLOOR = 16


def budget_bound(result: SpannerResult, p: Params) -> int:
    """Worst case |S|: every trial of every node accepting one edge per sample."""
    return sum(2 * p.h * stats.nodes * stats.samples_per_trial for stats in result.levels)


def edge_formula(p: Params) -> float:
    return p.k * p.h * p.n ** (1 + p.delta) * p.log_n**3


def check_edges(result: SpannerResult, p: Params) -> EdgeCountCheck:
    formula = edge_formula(p)
    return EdgeCountCheck(
        size=result.size,
        budget_bound=budget_bound(result, p),
        formula=formula,
        ratio=result.size / formula if formula > 0 else 0.0,
    )


def check_node_counts(result: SpannerResult, p: Params) -> List[NodeCountCheck]:
    """n_j against [n p̂_{j-1} / 2, 3 n p̂_{j-1} / 2]; level 0 holds trivially."""
    floor = CONCENTRATION_FLOOR * p.log_n
    checks = []
    for stats in result.levels:
        expected = p.n * p.p_hat(stats.level - 1)
        checks.append(
            NodeCountCheck(
                level=stats.level,
                nodes=stats.nodes,
                lower=expected / 2,
                upper=3 * expected / 2,
                hard=stats.nodes * p.center_prob(stats.level) >= floor,
            )
        )
    return checks


def check_protocol(p: Params, counters: Counters) -> ProtocolCheck:
    return ProtocolCheck(
        messages=counters.total_messages,
        message_bound=message_bound(p),
        rounds=counters.rounds_elapsed,
        round_bound=round_bound(p),
        predicted_rounds=predicted_rounds(p),
    )


def check_counts(result: SpannerResult, p: Params, counters: Optional[Counters] = None) -> CountsReport:
    report = CountsReport(
        edges=check_edges(result, p),
        nodes=check_node_counts(result, p),
        protocol=None if counters is None else check_protocol(p, counters),
    )
    for check in report.nodes:
        if not check.within:
            message = (
                f"level {check.level}: n_j={check.nodes} outside"
                f" [{math.floor(check.lower)}, {math.ceil(check.upper)}]"
            )
            if check.hard:
                logger.warning(message)
            else:
                logger.info(message + " (soft)")
    if report.protocol is not None and not report.protocol.ok:
        logger.warning(f"protocol bounds exceeded: {report.protocol}")
    return report


def heavy_clustering(result: SpannerResult) -> HeavyClusteringReport:
    """Heavy nodes below the last level and how many of them found a center."""
    clustering_levels = result.levels[:-1]
    return HeavyClusteringReport(
        heavy=sum(stats.heavy for stats in clustering_levels),
        clustered=sum(stats.heavy_clustered for stats in clustering_levels),
        stranded=sum(1 for event in result.failures if event.kind == "heavy_unclustered"),
    )
