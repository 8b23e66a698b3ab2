# File: src/verify/report.py
#  Copyright (c) 2025 SpanSim contributors.
#  SpanSim is an open-source spanner simulation toolkit licensed under MIT.
#  All rights reserved where applicable.
#
#

from typing import Optional

from src.graph import MultiGraph
from src.localsim import Counters
from src.logging import LOGGER
from src.sampler import ClusterAssignment, Params, SpannerResult
from src.verify.counts import check_counts, heavy_clustering
from src.verify.dataclass import VerificationReport
from src.verify.oracles import (SpannerDistances, check_cluster_diameters,
                                check_partition, check_stretch,
                                measure_stretch)

logger = LOGGER(__name__)


def verify_run(
    g: MultiGraph,
    result: SpannerResult,
    assignment: ClusterAssignment,
    p: Params,
    counters: Optional[Counters] = None,
    all_pairs: bool = False,
) -> VerificationReport:
    """Run every check against one finished construction."""
    distances = SpannerDistances(g, result.spanner_edges)
    report = VerificationReport(
        stretch=check_stretch(g, result.spanner_edges, result.stretch_bound, all_pairs, distances),
        diameters=check_cluster_diameters(g, result.spanner_edges, assignment),
        partition=check_partition(assignment, g.node_count),
        counts=check_counts(result, p, counters),
        heavy=heavy_clustering(result),
        failures=result.failures,
        max_stretch=measure_stretch(g, result.spanner_edges, distances),
    )

    verdict = "passed" if report.passed else f"FAILED with {report.violation_count} violations"
    logger.info(
        f"Verification {verdict}: max stretch {report.max_stretch} (bound {result.stretch_bound}),"
        f" {report.diameters.clusters_checked} clusters, edge ratio {report.counts.edges.ratio:.4f}"
    )
    if report.failures:
        logger.warning(f"{len(report.failures)} whp events recorded during the run")
    return report
