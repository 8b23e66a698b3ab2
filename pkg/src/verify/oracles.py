# File: src/verify/oracles.py
#  Copyright (c) 2025 SpanSim contributors.
#  SpanSim is an open-source spanner simulation toolkit licensed under MIT.
#  All rights reserved where applicable.
#
#

"""
Exact BFS oracles over G and H = (V, S).

Distances in H are served by ``SpannerDistances``, which keeps the most
recent BFS sweeps in an LRU cache. Edge checks only need each source's
G-neighbours, so their sweeps stop as soon as those are settled.
"""

import math
from collections import defaultdict
from typing import Dict, Iterable, List, Mapping, Optional, Sequence

from cachetools import LRUCache

from src import config
from src.graph import (Distance, EmptyGraphError, MultiGraph, bfs_distances,
                       diameter, induced_subgraph, spanning_subgraph)
from src.logging import LOGGER
from src.sampler import ClusterAssignment
from src.verify.dataclass import (ClusterDiameter, DiameterCheck,
                                  PartitionCheck, StretchCheck,
                                  StretchViolation)

logger = LOGGER(__name__)


def _finite(distance: Distance) -> Optional[int]:
    return None if math.isinf(distance) else int(distance)


class SpannerDistances:
    def __init__(self, g: MultiGraph, spanner_edge_ids: Iterable[int], cache_size: Optional[int] = None):
        self.g = g
        self.h = spanning_subgraph(g, spanner_edge_ids)
        self._cache: LRUCache = LRUCache(maxsize=cache_size or config.BFS_CACHE_SIZE)

    def from_source(self, source: int, cutoff: Optional[int] = None) -> List[Distance]:
        key = (source, cutoff)
        distances = self._cache.get(key)
        if distances is None:
            distances = bfs_distances(self.h, source, cutoff=cutoff)
            self._cache[key] = distances
        return distances

    def between(self, u: int, v: int, cutoff: Optional[int] = None) -> Distance:
        return self.from_source(u, cutoff)[v]

    def to_neighbours(self, source: int) -> List[Distance]:
        """H-distances from ``source``, exact for its G-neighbours; farther nodes may read as unreachable."""
        key = (source, "neighbours")
        distances = self._cache.get(key)
        if distances is None:
            distances = bfs_distances(self.h, source, targets=self.g.adjacency[source])
            self._cache[key] = distances
        return distances


def _adjacent_pairs(g: MultiGraph) -> Dict[int, List[tuple]]:
    """source -> [(edge_id, target)], each edge listed once at its lower endpoint."""
    by_source: Dict[int, List[tuple]] = defaultdict(list)
    for edge_id, u, v in g.edges:
        low, high = min(u, v), max(u, v)
        by_source[low].append((edge_id, high))
    return by_source


def check_stretch(
    g: MultiGraph,
    spanner_edge_ids: Iterable[int],
    bound: int,
    all_pairs: bool = False,
    distances: Optional[SpannerDistances] = None,
) -> StretchCheck:
    """
    Every G-edge must have its endpoints within ``bound`` hops in H.

    With ``all_pairs`` every connected pair is checked instead, against
    ``bound * dist_G``.
    """
    distances = distances or SpannerDistances(g, spanner_edge_ids)
    if all_pairs:
        return _check_all_pairs(g, distances, bound)

    report = StretchCheck(bound=bound)
    for source, links in sorted(_adjacent_pairs(g).items()):
        reach = distances.to_neighbours(source)
        for edge_id, target in links:
            report.pairs_checked += 1
            if reach[target] <= bound:
                continue
            exact = _finite(reach[target])
            report.violations.append(
                StretchViolation(edge_id=edge_id, u=source, v=target, distance=exact, allowed=bound)
            )

    if report.violations:
        logger.warning(f"stretch check: {len(report.violations)} G-edges exceed {bound} hops in H")
    return report


def _check_all_pairs(g: MultiGraph, distances: SpannerDistances, bound: int) -> StretchCheck:
    report = StretchCheck(bound=bound, all_pairs=True)
    for source in g.nodes():
        in_g = bfs_distances(g, source)
        in_h = distances.from_source(source)
        for target in range(source + 1, g.node_count):
            if math.isinf(in_g[target]):
                continue
            report.pairs_checked += 1
            allowed = bound * int(in_g[target])
            if in_h[target] > allowed:
                report.violations.append(
                    StretchViolation(edge_id=None, u=source, v=target, distance=_finite(in_h[target]), allowed=allowed)
                )
    return report


def measure_stretch(
    g: MultiGraph,
    spanner_edge_ids: Iterable[int],
    distances: Optional[SpannerDistances] = None,
) -> Optional[int]:
    """Largest H-distance between G-adjacent nodes; None if some pair is cut apart."""
    distances = distances or SpannerDistances(g, spanner_edge_ids)
    worst = 0
    for source, links in _adjacent_pairs(g).items():
        reach = distances.to_neighbours(source)
        for _, target in links:
            if math.isinf(reach[target]):
                return None
            worst = max(worst, int(reach[target]))
    return worst


def check_cluster_diameters(
    g: MultiGraph,
    spanner_edge_ids: Iterable[int],
    assignment: ClusterAssignment,
) -> DiameterCheck:
    """Each C_j(v) must induce a connected subgraph of H with diameter at most 3^j - 1."""
    h = spanning_subgraph(g, spanner_edge_ids)
    report = DiameterCheck()
    for level in assignment.levels:
        bound = 3**level.level - 1
        for host in level.hosts:
            members = assignment.members(level.level, host)
            measured: Distance = 0
            if len(members) > 1:
                try:
                    measured = diameter(induced_subgraph(h, members)[0])
                except EmptyGraphError:
                    measured = math.inf
            entry = ClusterDiameter(
                level=level.level,
                host=host,
                size=len(members),
                diameter=_finite(measured),
                bound=bound,
            )
            report.clusters_checked += 1
            if entry.diameter is not None:
                report.largest = max(report.largest, entry.diameter)
            if not entry.ok:
                report.violations.append(entry)

    if report.violations:
        logger.warning(f"cluster diameter check: {len(report.violations)} clusters over their bound")
    return report


def check_partition(assignment: ClusterAssignment, n: int) -> PartitionCheck:
    """The final clusters C(v) must cover every original node exactly once."""
    seen = [0] * n
    clusters = assignment.final_clusters()
    for _, _, members in clusters:
        for node in members:
            if 0 <= node < n:
                seen[node] += 1
    offenders = [node for node, count in enumerate(seen) if count != 1]
    return PartitionCheck(valid=not offenders, clusters=len(clusters), offenders=offenders)


def completeness_misses(
    g: MultiGraph,
    received: Mapping[int, Sequence[int]],
    t: int,
) -> List[tuple]:
    """``(receiver, origin)`` pairs within G-distance ``t`` whose payload never arrived."""
    misses = []
    for node in g.nodes():
        got = set(received.get(node, ()))
        reach = bfs_distances(g, node, cutoff=t)
        misses.extend((node, origin) for origin, d in enumerate(reach) if d <= t and origin not in got)
    return misses
