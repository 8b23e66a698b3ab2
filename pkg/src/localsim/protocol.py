# File: src/localsim/protocol.py
#  Copyright (c) 2025 SpanSim contributors.
#  SpanSim is an open-source spanner simulation toolkit licensed under MIT.
#  All rights reserved where applicable.
#
#

"""
The construction run message by message on the original graph.

Each virtual node of level j is simulated by the cluster it stands for and
lives at the root of the cluster tree (its host). All clusters follow one
fixed schedule, known to every node, with R_j = 3^j - 1:

    setup      2 R_j            broadcast + convergecast of member reports
    trials     2h * 2(2R_j+1)   one query/reply window per trial
    centers    2(2R_j+1)        center check over every accepted edge   (j < k)
    join       2R_j + 1         join requests and retire notices        (j < k)
    reroot     R_j              new parent pointers / retired flag      (j < k)
"""

from collections import Counter
from typing import Any, Dict, FrozenSet, List, Optional, Tuple

from src.graph import ClusterTree, MultiGraph
from src.localsim.courier import Courier
from src.localsim.dataclass import Counters, NodeMemory, Probe
from src.localsim.engine import Engine, ProtocolViolation
from src.localsim.sessions import broadcast, broadcast_convergecast
from src.logging import LOGGER
from src.sampler import (Classification, ClusterAssignment, LevelBudgets,
                         LevelClusters, LevelStats, NodeProgress, Params,
                         SpannerResult, WhpEvent, absorb, derive_budgets,
                         draw_queries, flip_center, note_stranded,
                         pick_center, settle, trial_stream)
from src.sampler.core import log_level

logger = LOGGER(__name__)

ROUND_CONSTANT = 32
MESSAGE_CONSTANT = 64
TREE_CONSTANT = 16

RETIRED = "retired"


def level_radius(j: int) -> int:
    return 3**j - 1


def level_schedule(p: Params, j: int) -> Dict[str, int]:
    radius = level_radius(j)
    hop = 2 * radius + 1
    schedule = {"setup": 2 * radius, "trials": 2 * p.h * 2 * hop}
    if j < p.k:
        schedule.update(centers=2 * hop, join=hop, reroot=radius)
    return schedule


def predicted_rounds(p: Params) -> int:
    return sum(sum(level_schedule(p, j).values()) for j in range(p.k + 1))


def round_bound(p: Params) -> float:
    return ROUND_CONSTANT * 3**p.k * p.h


def message_bound(p: Params) -> float:
    return (
        MESSAGE_CONSTANT * p.k * p.h * p.n ** (1 + p.delta + p.epsilon) * p.log_n**3
        + TREE_CONSTANT * p.k * p.n
    )


class RootState:
    """What the root of one cluster knows about its virtual node."""

    __slots__ = ("host", "tree", "progress", "boundary", "endpoint", "is_center", "choice")

    def __init__(self, tree: ClusterTree, boundary: FrozenSet[int], endpoint: Dict[int, int], dead: FrozenSet[int]):
        self.host = tree.root
        self.tree = tree
        self.boundary = boundary
        self.endpoint = endpoint
        self.progress = NodeProgress(tree.root, tree.root, boundary - dead)
        self.is_center = False
        # (center host, accepted edge, far endpoint of that edge)
        self.choice: Optional[Tuple[int, int, int]] = None

    def route(self, edge_id: int) -> List[int]:
        return [*self.tree.route_from_root(self.endpoint[edge_id]), edge_id]

    @property
    def retiring(self) -> bool:
        return not self.is_center and self.choice is None


def _merge(left: Dict[int, Any], right: Dict[int, Any]) -> Dict[int, Any]:
    return {**left, **right}


class DistributedSampler:
    def __init__(self, engine: Engine, p: Params):
        if engine.graph.node_count != p.n:
            raise ValueError(f"params are for n={p.n} but the graph has {engine.graph.node_count} nodes")
        self.engine = engine
        self.p = p
        self.graph: MultiGraph = engine.graph
        self.memory = [NodeMemory(x) for x in self.graph.nodes()]
        self.trees: Dict[int, ClusterTree] = {x: ClusterTree.singleton(x) for x in self.graph.nodes()}
        self.roots: Dict[int, RootState] = {}
        self.failures: List[WhpEvent] = []
        self.adoptions: List[Tuple[int, int, int]] = []
        self.stale_probes = 0

    # answers at the node where a probe stops
    def _answer(self, node: int, probe: Probe) -> Any:
        memory = self.memory[node]
        if probe.kind == "query":
            if memory.retired:
                return RETIRED
            return node, self._root(node).boundary
        if probe.kind == "center":
            return node, self._root(node).is_center, probe.landing
        if probe.kind == "join":
            attach = self.graph.other_end(probe.edge_id, node)
            self.adoptions.append((node, attach, probe.edge_id))
            return None
        if probe.kind == "retire":
            if not memory.retired:
                memory.dead.update(probe.body)
            return None
        raise ProtocolViolation(f"unknown probe kind {probe.kind!r}")

    def _root(self, node: int) -> RootState:
        root = self.roots.get(node)
        if root is None or self.memory[node].host != node:
            raise ProtocolViolation(f"probe stopped at {node}, which roots no active cluster")
        return root

    def _setup(self, j: int) -> None:
        radius = level_radius(j)
        incident = self.graph.incident_edges
        memory = self.memory

        with self.engine.phase(j, "setup"):
            reports = broadcast_convergecast(
                self.engine,
                self.trees,
                {host: ("setup", j) for host in self.trees},
                lambda x, _: {x: (incident(x), frozenset(memory[x].dead))},
                _merge,
                radius,
            )

        self.roots = {}
        for host in sorted(reports):
            seen: Counter = Counter()
            endpoint: Dict[int, int] = {}
            dead: set = set()
            for member, (edge_ids, member_dead) in reports[host].items():
                seen.update(edge_ids)
                endpoint.update((e, member) for e in edge_ids)
                dead.update(member_dead)
            boundary = frozenset(e for e, count in seen.items() if count == 1)
            self.roots[host] = RootState(
                self.trees[host],
                boundary,
                {e: endpoint[e] for e in boundary},
                frozenset(dead),
            )

    def _trials(self, j: int, budgets: LevelBudgets) -> None:
        window = 2 * (2 * level_radius(j) + 1)
        for slot in range(budgets.trial_count):
            with self.engine.phase(j, "trials"):
                courier = Courier(self.engine, self.memory, self._answer)
                hits: Dict[int, List[int]] = {}
                for host, root in self.roots.items():
                    if not root.progress.wants_trial(budgets):
                        continue
                    rng = trial_stream(self.p.seed, j, host, root.progress.trials)
                    hits[host] = draw_queries(root.progress.unexplored, budgets.samples_per_trial, rng)
                    for edge_id in hits[host]:
                        courier.launch(host, "query", edge_id, root.route(edge_id))
                replies = courier.run(window, f"level {j} trial {slot}")

            for host, edge_ids in hits.items():
                self._absorb_replies(j, self.roots[host], edge_ids, replies.get(host, {}))

        for host in sorted(self.roots):
            settle(self.roots[host].progress, budgets, self.failures)

    def _absorb_replies(self, j: int, root: RootState, edge_ids: List[int], got: Dict[int, Any]) -> None:
        progress = root.progress
        answers = {}
        for edge_id in edge_ids:
            if edge_id not in got:
                raise ProtocolViolation(f"level {j}: no reply for edge {edge_id} queried by {root.host}")
            body = got[edge_id]
            if body == RETIRED:
                self.stale_probes += 1
                logger.warning(f"level {j}: host {root.host} probed edge {edge_id} into a retired cluster")
                answers[edge_id] = None
                continue
            neighbour, far_boundary = body
            answers[edge_id] = (neighbour, frozenset(progress.unexplored & far_boundary))
        absorb(progress, answers)

    def _centers(self, j: int, budgets: LevelBudgets) -> None:
        prob = self.p.center_prob(j)
        window = 2 * (2 * level_radius(j) + 1)
        with self.engine.phase(j, "centers"):
            courier = Courier(self.engine, self.memory, self._answer)
            for host, root in self.roots.items():
                root.is_center = flip_center(self.p.seed, j, host, prob)
            for host, root in self.roots.items():
                if root.is_center:
                    continue
                for edge_id in root.progress.query_edges():
                    courier.launch(host, "center", edge_id, root.route(edge_id))
            replies = courier.run(window, f"level {j} center check")

        for host in sorted(self.roots):
            root = self.roots[host]
            if root.is_center:
                continue
            landings = {
                neighbour: landing
                for neighbour, is_center, landing in replies.get(host, {}).values()
                if is_center
            }
            choice = pick_center(root.progress, landings)
            if choice is None:
                note_stranded(root.progress, budgets, self.failures)
            else:
                center, edge_id = choice
                root.choice = (center, edge_id, landings[center])

    def _join(self, j: int) -> None:
        self.adoptions = []
        with self.engine.phase(j, "join"):
            courier = Courier(self.engine, self.memory, self._answer)
            for host, root in self.roots.items():
                if root.choice is not None:
                    _, edge_id, _ = root.choice
                    courier.launch(host, "join", edge_id, root.route(edge_id), climb=False, body=host)
                elif root.retiring:
                    for edge_id in root.progress.query_edges():
                        courier.launch(host, "retire", edge_id, root.route(edge_id), climb=False, body=root.boundary)
            courier.run(2 * level_radius(j) + 1, f"level {j} joins")

    def _reroot(self, j: int) -> Dict[int, ClusterTree]:
        """Tell every member of a satellite or retiring cluster what changed; return the next trees."""
        payloads: Dict[int, Any] = {}
        for host, root in self.roots.items():
            if root.choice is not None:
                center, edge_id, anchor = root.choice
                attach = root.endpoint[edge_id]
                parent = dict(root.tree.rerooted(attach).parent)
                parent[attach] = (anchor, edge_id)
                payloads[host] = ("reroot", center, parent)
            elif root.retiring:
                payloads[host] = ("retire", j)

        with self.engine.phase(j, "reroot"):
            received = broadcast(
                self.engine,
                {host: self.trees[host] for host in payloads},
                payloads,
                level_radius(j),
            )
        for node, payload in received.items():
            memory = self.memory[node]
            if payload[0] == "reroot":
                _, center, parent = payload
                memory.host = center
                memory.parent = parent.get(node)
            else:
                memory.retired_at = j

        grown: Dict[int, ClusterTree] = {}
        for host in sorted(self.roots):
            root = self.roots[host]
            if root.is_center:
                grown.setdefault(host, self.trees[host])
            elif root.choice is not None:
                center, edge_id, anchor = root.choice
                base = grown.setdefault(center, self.trees[center])
                grown[center] = base.graft(self.trees[host], root.endpoint[edge_id], anchor, edge_id)

        expected = sorted(
            (anchor, root.endpoint[edge_id], edge_id)
            for root in self.roots.values()
            if root.choice is not None
            for _, edge_id, anchor in [root.choice]
        )
        if sorted(self.adoptions) != expected:
            raise ProtocolViolation(f"level {j}: join requests and adoptions disagree")

        bound = level_radius(j + 1)
        for host, tree in grown.items():
            if tree.height > bound:
                raise ProtocolViolation(f"level {j + 1}: tree of {host} has height {tree.height} > {bound}")
            for node in tree.nodes():
                if self.memory[node].parent != tree.parent.get(node):
                    raise ProtocolViolation(f"level {j + 1}: node {node} holds a stale parent pointer")
        return grown

    def _live_edges(self) -> int:
        owner = {x: host for host in self.roots for x in self.trees[host].nodes()}
        live = set()
        for host, root in self.roots.items():
            for edge_id in root.boundary:
                if owner.get(self.graph.other_end(edge_id, root.endpoint[edge_id])) is not None:
                    live.add(edge_id)
        return len(live)

    def _stats(self, j: int, budgets: LevelBudgets, last: bool) -> LevelStats:
        roots = self.roots.values()
        stats = LevelStats(
            level=j,
            nodes=len(self.roots),
            edges=self._live_edges(),
            spanner_edges=sum(root.progress.queried for root in roots),
            light=sum(1 for r in roots if r.progress.classification is Classification.LIGHT),
            heavy=sum(1 for r in roots if r.progress.classification is Classification.HEAVY),
            failed=sum(1 for r in roots if r.progress.classification is Classification.FAILED),
            samples_per_trial=budgets.samples_per_trial,
            neighbor_threshold=budgets.neighbor_threshold,
            center_prob=budgets.center_prob,
        )
        if last:
            stats.unclustered = len(self.roots)
            return stats
        stats.centers = sum(1 for r in roots if r.is_center)
        stats.satellites = sum(1 for r in roots if r.choice is not None)
        stats.unclustered = sum(1 for r in roots if r.retiring)
        stats.heavy_clustered = sum(
            1 for r in roots if r.progress.classification is Classification.HEAVY and not r.retiring
        )
        return stats

    def run(self) -> Tuple[SpannerResult, ClusterAssignment]:
        p = self.p
        start_round = self.engine.round
        level_edges: List[List[int]] = []
        stats: List[LevelStats] = []
        levels: List[LevelClusters] = []
        retired_at: Dict[int, int] = {}

        for j in range(p.k + 1):
            budgets = derive_budgets(p, j)
            self._setup(j)
            self._trials(j, budgets)
            last = j == p.k
            hosts = sorted(self.roots)
            snapshot = LevelClusters(
                level=j,
                hosts=hosts,
                members={h: self.trees[h].nodes() for h in hosts},
                trees={h: dict(self.trees[h].parent) for h in hosts},
            )
            level_edges.append(sorted(e for h in hosts for e in self.roots[h].progress.query_edges()))

            if not last:
                self._centers(j, budgets)
                self._join(j)
                snapshot.centers = [h for h in hosts if self.roots[h].is_center]
                snapshot.joined = {h: self.roots[h].choice[0] for h in hosts if self.roots[h].choice}
            snapshot.unclustered = [h for h in hosts if last or self.roots[h].retiring]
            retired_at.update({h: j for h in snapshot.unclustered})

            stats.append(self._stats(j, budgets, last))
            levels.append(snapshot)
            log_level(stats[-1])
            if last:
                break
            self.trees = self._reroot(j)

        elapsed = self.engine.round - start_round
        if elapsed != predicted_rounds(p):
            raise ProtocolViolation(f"schedule drift: {elapsed} rounds, expected {predicted_rounds(p)}")

        result = SpannerResult(
            spanner_edges=sorted({e for edges in level_edges for e in edges}),
            level_edges=level_edges,
            stretch_bound=p.stretch_bound,
            levels=stats,
            failures=self.failures,
            faithful=p.faithful,
        )
        counters = self.engine.counters
        logger.info(
            f"Distributed sampler finished: |S|={result.size}, {counters.rounds_elapsed} rounds,"
            f" {counters.total_messages} messages, {self.stale_probes} stale probes"
        )
        return result, ClusterAssignment(levels=levels, retired_at=retired_at)


def run_distributed_sampler(engine: Engine, p: Params) -> Tuple[SpannerResult, ClusterAssignment, Counters]:
    result, assignment = DistributedSampler(engine, p).run()
    return result, assignment, engine.counters

