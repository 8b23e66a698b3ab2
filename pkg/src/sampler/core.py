# File: src/sampler/core.py
#  Copyright (c) 2025 SpanSim contributors.
#  SpanSim is an open-source spanner simulation toolkit licensed under MIT.
#  All rights reserved where applicable.
#
#

from typing import Dict, List, Optional, Tuple

from src.graph import ClusterTree, MultiGraph, cluster_graph
from src.logging import LOGGER
from src.sampler.dataclass import (ClusterAssignment, LevelBudgets, LevelClusters,
                                   LevelStats, Params, SpannerResult, WhpEvent)
from src.sampler.level import (Classification, Clustering, LevelState,
                               explore, second_step)
from src.sampler.params import derive_budgets

logger = LOGGER(__name__)


def tree_bound(level: int) -> int:
    """Height allowed for cluster trees entering ``level``."""
    return 3**level - 1


def grow_trees(
    g: MultiGraph,
    state: LevelState,
    clustering: Clustering,
    trees: Dict[int, ClusterTree],
    owner: Dict[int, int],
) -> Dict[int, ClusterTree]:
    """
    Trees of the next level: every satellite tree is re-rooted at its end of
    the accepted edge and hung below the center-side end of that edge.
    """
    hosts = state.hosts
    grown = {hosts[u]: trees[hosts[u]] for u in clustering.centers}
    for v, (u, edge_id) in sorted(clustering.joined.items()):
        center_host, satellite_host = hosts[u], hosts[v]
        x, y = g.endpoints(edge_id)
        attach, anchor = (x, y) if owner[x] == satellite_host else (y, x)
        grown[center_host] = grown[center_host].graft(trees[satellite_host], attach, anchor, edge_id)

    bound = tree_bound(state.level + 1)
    for tree in grown.values():
        tree.require_height(bound)
    return grown


def level_stats(
    state: LevelState, budgets: LevelBudgets, clustering: Optional[Clustering] = None
) -> LevelStats:
    stats = LevelStats(
        level=state.level,
        nodes=state.graph.node_count,
        edges=state.graph.edge_count,
        spanner_edges=len(state.accepted_edges()),
        light=state.count(Classification.LIGHT),
        heavy=state.count(Classification.HEAVY),
        failed=state.count(Classification.FAILED),
        samples_per_trial=budgets.samples_per_trial,
        neighbor_threshold=budgets.neighbor_threshold,
        center_prob=budgets.center_prob,
    )
    if clustering is None:
        stats.unclustered = state.graph.node_count
        return stats

    heavy = {p.node for p in state.progress if p.classification is Classification.HEAVY}
    stats.centers = len(clustering.centers)
    stats.satellites = len(clustering.joined)
    stats.unclustered = len(clustering.unclustered)
    stats.heavy_clustered = len(heavy - set(clustering.unclustered))
    return stats


def sampler(g: MultiGraph, p: Params) -> Tuple[SpannerResult, ClusterAssignment]:
    """
    Centralized construction over levels ``0..k``.

    Level ``j < k`` runs the trials and clusters G_j into G_{j+1}; the last
    level only runs the trials and retires everything left.
    """
    if g.node_count != p.n:
        raise ValueError(f"params are for n={p.n} but the graph has {g.node_count} nodes")

    graph = g
    hosts: List[int] = list(g.nodes())
    trees: Dict[int, ClusterTree] = {v: ClusterTree.singleton(v) for v in hosts}
    owner: Dict[int, int] = {v: v for v in hosts}

    level_edges: List[List[int]] = []
    stats: List[LevelStats] = []
    failures: List[WhpEvent] = []
    levels: List[LevelClusters] = []
    retired_at: Dict[int, int] = {}

    for j in range(p.k + 1):
        budgets = derive_budgets(p, j)
        state = LevelState(j, graph, hosts)
        explore(state, budgets, p.seed)
        level_edges.append(state.accepted_edges())

        snapshot = LevelClusters(
            level=j,
            hosts=list(hosts),
            members={h: trees[h].nodes() for h in hosts},
            trees={h: dict(trees[h].parent) for h in hosts},
        )

        if j == p.k:
            snapshot.unclustered = list(hosts)
            retired_at.update({h: j for h in hosts})
            stats.append(level_stats(state, budgets))
            failures.extend(state.failures)
            levels.append(snapshot)
            log_level(stats[-1])
            break

        clustering = second_step(state, p)
        failures.extend(state.failures)
        snapshot.centers = [hosts[u] for u in clustering.centers]
        snapshot.joined = {hosts[v]: hosts[u] for v, (u, _) in clustering.joined.items()}
        snapshot.unclustered = [hosts[v] for v in clustering.unclustered]
        retired_at.update({h: j for h in snapshot.unclustered})
        levels.append(snapshot)
        stats.append(level_stats(state, budgets, clustering))
        log_level(stats[-1])

        trees = grow_trees(g, state, clustering, trees, owner)
        hosts = list(snapshot.centers)
        owner = {x: h for h in hosts for x in trees[h].nodes()}
        graph, _ = cluster_graph(graph, clustering.partition)

    spanner_edges = sorted({e for edges in level_edges for e in edges})
    result = SpannerResult(
        spanner_edges=spanner_edges,
        level_edges=level_edges,
        stretch_bound=p.stretch_bound,
        levels=stats,
        failures=failures,
        faithful=p.faithful,
    )
    logger.info(
        f"Sampler finished: |S|={result.size} of m={g.edge_count},"
        f" stretch bound {result.stretch_bound}, {len(failures)} whp failures"
    )
    return result, ClusterAssignment(levels=levels, retired_at=retired_at)


def log_level(stats: LevelStats) -> None:
    logger.info(
        f"level {stats.level}: n_j={stats.nodes} m_j={stats.edges} |F|={stats.spanner_edges}"
        f" light={stats.light} heavy={stats.heavy} failed={stats.failed}"
        f" centers={stats.centers} satellites={stats.satellites} unclustered={stats.unclustered}"
    )

