# File: src/sampler/level.py
#  Copyright (c) 2025 SpanSim contributors.
#  SpanSim is an open-source spanner simulation toolkit licensed under MIT.
#  All rights reserved where applicable.
#
#

"""
One level of the construction: the sampling trials of every virtual node,
their light/heavy classification and the center-based second step.

Virtual nodes are addressed by their index in the level graph; ``hosts``
maps each index to the original node hosting it, which also keys the
random streams.
"""

from enum import Enum
from typing import (Container, Dict, FrozenSet, Iterable, List, Mapping,
                    NamedTuple, Optional, Sequence, Set, Tuple)

import numpy as np

from src.graph import MultiGraph, Partition, edges_between
from src.logging import LOGGER
from src.sampler.dataclass import LevelBudgets, Params, WhpEvent
from src.sampler.params import derive_budgets
from src.sampler.rng import flip_center, trial_stream

logger = LOGGER(__name__)

# (neighbour, edges shared with it) or None when the far side already retired
Answer = Optional[Tuple[int, FrozenSet[int]]]


class Classification(str, Enum):
    LIGHT = "light"
    HEAVY = "heavy"
    FAILED = "failed"


class ClassificationFailure(RuntimeError):
    """A node ran out of trials while neither light nor heavy."""

    def __init__(self, level: int, host: int, queried: int, threshold: int):
        super().__init__(
            f"level {level}: node hosted at {host} queried {queried} neighbours,"
            f" below threshold {threshold}, with edges left unexplored"
        )
        self.level = level
        self.host = host
        self.queried = queried
        self.threshold = threshold

    def as_event(self) -> WhpEvent:
        return WhpEvent(
            kind="classification_failure",
            level=self.level,
            host=self.host,
            queried=self.queried,
            threshold=self.threshold,
        )


class NodeProgress:
    """
    Trial state of one virtual node.

    ``unexplored`` is X_v, ``accepted`` maps every queried neighbour to the
    single query edge kept for it (F_v).
    """

    __slots__ = ("node", "host", "unexplored", "accepted", "trials", "classification")

    def __init__(self, node: int, host: int, edge_ids: Iterable[int]):
        self.node = node
        self.host = host
        self.unexplored: Set[int] = set(edge_ids)
        self.accepted: Dict[int, int] = {}
        self.trials = 0
        self.classification: Optional[Classification] = None

    @property
    def queried(self) -> int:
        return len(self.accepted)

    def query_edges(self) -> List[int]:
        return sorted(self.accepted.values())

    def discard(self, edge_ids: Iterable[int]) -> None:
        self.unexplored.difference_update(edge_ids)

    def wants_trial(self, budgets: LevelBudgets) -> bool:
        return (
            self.trials < budgets.trial_count
            and self.queried < budgets.neighbor_threshold
            and bool(self.unexplored)
        )

    def __repr__(self) -> str:
        return (
            f"NodeProgress(node={self.node}, host={self.host}, unexplored={len(self.unexplored)},"
            f" queried={self.queried}, trials={self.trials})"
        )


class LevelState:
    """G_j together with the trial state of each of its nodes."""

    def __init__(self, level: int, graph: MultiGraph, hosts: Sequence[int]):
        if len(hosts) != graph.node_count:
            raise ValueError(f"{len(hosts)} hosts for {graph.node_count} nodes")
        self.level = level
        self.graph = graph
        self.hosts: List[int] = list(hosts)
        self.progress: List[NodeProgress] = [
            NodeProgress(v, hosts[v], graph.incident_edges(v)) for v in graph.nodes()
        ]
        self.failures: List[WhpEvent] = []

    def accepted_edges(self) -> List[int]:
        """F^(j): every accepted query edge of the level."""
        return sorted(e for node in self.progress for e in node.accepted.values())

    def count(self, classification: Classification) -> int:
        return sum(1 for node in self.progress if node.classification is classification)


def draw_queries(unexplored: Iterable[int], samples: int, rng: np.random.Generator) -> List[int]:
    """
    Distinct edges hit by ``samples`` uniform draws with replacement.

    When the budget covers the whole pool every edge is returned without
    drawing.
    """
    pool = sorted(unexplored)
    if samples >= len(pool):
        return pool
    picks = rng.integers(0, len(pool), size=samples)
    return sorted({pool[i] for i in picks.tolist()})


def absorb(progress: NodeProgress, answers: Mapping[int, Answer]) -> Dict[int, int]:
    """
    Fold the answers to one trial's queries into ``progress``.

    The lowest hit edge to each new neighbour is accepted and every edge to
    that neighbour leaves X_v. Edges answered ``None`` are simply dropped.
    Returns the newly accepted ``neighbour -> edge`` pairs.
    """
    fresh: Dict[int, int] = {}
    for edge_id in sorted(answers):
        answer = answers[edge_id]
        if answer is None:
            progress.discard((edge_id,))
            continue
        neighbour, shared = answer
        if neighbour not in fresh and neighbour not in progress.accepted:
            fresh[neighbour] = edge_id
        progress.discard(shared)
        progress.discard((edge_id,))

    progress.accepted.update(fresh)
    progress.trials += 1
    return fresh


def run_trial(state: LevelState, v: int, budgets: LevelBudgets, seed: int) -> Dict[int, int]:
    progress = state.progress[v]
    rng = trial_stream(seed, state.level, progress.host, progress.trials)
    hits = draw_queries(progress.unexplored, budgets.samples_per_trial, rng)

    graph = state.graph
    answers: Dict[int, Answer] = {}
    for edge_id in hits:
        neighbour = graph.other_end(edge_id, v)
        answers[edge_id] = (neighbour, edges_between(graph, v, neighbour))

    fresh = absorb(progress, answers)
    logger.debug(
        f"level {state.level} host {progress.host} trial {progress.trials}:"
        f" {len(hits)} hit edges, {len(fresh)} new neighbours, {len(progress.unexplored)} left"
    )
    return fresh


def classify(progress: NodeProgress, threshold: int, level: int) -> Classification:
    if not progress.unexplored:
        return Classification.LIGHT
    if progress.queried >= threshold:
        return Classification.HEAVY
    raise ClassificationFailure(level, progress.host, progress.queried, threshold)


def settle(
    progress: NodeProgress, budgets: LevelBudgets, failures: List[WhpEvent]
) -> Classification:
    """Classify once trials are over, recording a failure instead of raising it."""
    try:
        progress.classification = classify(progress, budgets.neighbor_threshold, budgets.level)
    except ClassificationFailure as failure:
        logger.warning(str(failure))
        failures.append(failure.as_event())
        progress.classification = Classification.FAILED
    return progress.classification


def explore(state: LevelState, budgets: LevelBudgets, seed: int) -> None:
    """First step: trials for every node, then classification."""
    for progress in state.progress:
        while progress.wants_trial(budgets):
            run_trial(state, progress.node, budgets, seed)
        settle(progress, budgets, state.failures)


class Clustering(NamedTuple):
    partition: Partition
    centers: List[int]
    # satellite -> (center, accepted edge to it)
    joined: Dict[int, Tuple[int, int]]
    unclustered: List[int]


def draw_centers(state: LevelState, p: Params) -> List[int]:
    prob = p.center_prob(state.level)
    return [v for v in state.graph.nodes() if flip_center(p.seed, state.level, state.hosts[v], prob)]


def pick_center(progress: NodeProgress, centers: Container[int]) -> Optional[Tuple[int, int]]:
    """Queried center with the lowest id, with the edge that reached it."""
    for neighbour in sorted(progress.accepted):
        if neighbour in centers:
            return neighbour, progress.accepted[neighbour]
    return None


def note_stranded(progress: NodeProgress, budgets: LevelBudgets, failures: List[WhpEvent]) -> None:
    """A node left unclustered; only a heavy one counts as a failure."""
    if progress.classification is not Classification.HEAVY:
        return
    logger.warning(
        f"level {budgets.level}: heavy node hosted at {progress.host}"
        f" queried {progress.queried} neighbours and found no center"
    )
    failures.append(
        WhpEvent(
            kind="heavy_unclustered",
            level=budgets.level,
            host=progress.host,
            queried=progress.queried,
            threshold=budgets.neighbor_threshold,
        )
    )


def second_step(state: LevelState, p: Params, centers: Optional[Iterable[int]] = None) -> Clustering:
    """
    Mark centers and attach every other node to a queried center.

    Nodes that reach no center stay unclustered.
    """
    budgets = derive_budgets(p, state.level)
    center_set = set(draw_centers(state, p) if centers is None else centers)

    joined: Dict[int, Tuple[int, int]] = {}
    unclustered: List[int] = []
    for progress in state.progress:
        v = progress.node
        if v in center_set:
            continue
        choice = pick_center(progress, center_set)
        if choice is not None:
            joined[v] = choice
        else:
            unclustered.append(v)
            note_stranded(progress, budgets, state.failures)

    center_list = sorted(center_set)
    groups: Dict[int, List[int]] = {u: [u] for u in center_list}
    for v, (u, _) in joined.items():
        groups[u].append(v)
    partition = Partition(state.graph.node_count, [groups[u] for u in center_list])
    return Clustering(partition, center_list, joined, unclustered)
