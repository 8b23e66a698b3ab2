# File: src/localsim/sessions.py
#  Copyright (c) 2025 SpanSim contributors.
#  SpanSim is an open-source spanner simulation toolkit licensed under MIT.
#  All rights reserved where applicable.
#
#

"""
Broadcast and convergecast over node-disjoint cluster trees.

All trees of a forest run in the same rounds. Each session is given a
round budget; trees shallower than the budget finish early and idle.
"""

from typing import Any, Callable, Dict, List, Mapping, Optional, Tuple, TypeVar

from src.graph import ClusterTree
from src.localsim.dataclass import Envelope
from src.localsim.engine import Engine, ProtocolViolation

V = TypeVar("V")

Forest = Mapping[int, ClusterTree]


def forest_height(forest: Forest) -> int:
    return max((tree.height for tree in forest.values()), default=0)


def _check_budget(forest: Forest, rounds: int) -> None:
    for root, tree in forest.items():
        if tree.height > rounds:
            raise ProtocolViolation(f"tree rooted at {root} has height {tree.height}, session budget is {rounds}")


def broadcast(
    engine: Engine,
    forest: Forest,
    payloads: Mapping[int, Any],
    rounds: Optional[int] = None,
) -> Dict[int, Any]:
    """
    Push each root's payload down its tree.

    Returns ``node -> payload`` for every node of every tree, roots included.
    """
    rounds = forest_height(forest) if rounds is None else rounds
    _check_budget(forest, rounds)

    kids = {root: tree.children() for root, tree in forest.items()}
    received: Dict[int, Any] = {}

    def fan_out(root: int, node: int, payload: Any) -> None:
        for _, edge_id in kids[root][node]:
            engine.send(node, edge_id, (root, payload))

    for root in sorted(forest):
        received[root] = payloads[root]
        fan_out(root, root, payloads[root])

    def on_delivery(envelope: Envelope) -> None:
        root, payload = envelope.payload
        received[envelope.receiver] = payload
        fan_out(root, envelope.receiver, payload)

    engine.run(rounds, on_delivery)
    engine.require_quiet("broadcast")
    return received


def convergecast(
    engine: Engine,
    forest: Forest,
    values: Mapping[int, V],
    combine: Callable[[V, V], V],
    rounds: Optional[int] = None,
) -> Dict[int, V]:
    """
    Fold every node's value into its root, one message per tree edge.

    A node reports to its parent as soon as all of its children have.
    """
    rounds = forest_height(forest) if rounds is None else rounds
    _check_budget(forest, rounds)

    parent: Dict[int, Tuple[int, int]] = {}
    waiting: Dict[int, int] = {}
    folded: Dict[int, V] = {}
    roots = set(forest)
    for tree in forest.values():
        parent.update(tree.parent)
        for node, links in tree.children().items():
            waiting[node] = len(links)
            folded[node] = values[node]

    def report(node: int) -> None:
        _, edge_id = parent[node]
        engine.send(node, edge_id, folded[node])

    for node in sorted(waiting):
        if waiting[node] == 0 and node not in roots:
            report(node)

    def on_delivery(envelope: Envelope) -> None:
        node = envelope.receiver
        folded[node] = combine(folded[node], envelope.payload)
        waiting[node] -= 1
        if waiting[node] == 0 and node not in roots:
            report(node)

    engine.run(rounds, on_delivery)
    engine.require_quiet("convergecast")

    unfinished = [root for root in roots if waiting[root]]
    if unfinished:
        raise ProtocolViolation(f"convergecast did not reach roots {sorted(unfinished)[:5]}")
    return {root: folded[root] for root in forest}


def broadcast_convergecast(
    engine: Engine,
    forest: Forest,
    payloads: Mapping[int, Any],
    respond: Callable[[int, Any], V],
    combine: Callable[[V, V], V],
    rounds: Optional[int] = None,
) -> Dict[int, V]:
    """
    Broadcast each root's payload, let every node answer it, and fold the
    answers back into the root. Costs two messages per tree edge and
    ``2 * rounds`` rounds.
    """
    rounds = forest_height(forest) if rounds is None else rounds
    received = broadcast(engine, forest, payloads, rounds)
    answers = {node: respond(node, payload) for node, payload in received.items()}
    return convergecast(engine, forest, answers, combine, rounds)


def tree_edges(forest: Forest) -> List[int]:
    return sorted(e for tree in forest.values() for e in tree.edge_ids())
