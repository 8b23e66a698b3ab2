# File: src/broadcast/flooding.py
#  Copyright (c) 2025 SpanSim contributors.
#  SpanSim is an open-source spanner simulation toolkit licensed under MIT.
#  All rights reserved where applicable.
#
#

from typing import Dict, Set

from src.broadcast.dataclass import BroadcastInstance, BroadcastOutcome
from src.graph import MultiGraph, spanning_subgraph
from src.localsim import Engine, Envelope
from src.logging import LOGGER
from src.verify import completeness_misses

logger = LOGGER(__name__)

# flooding is not part of any construction level
FLOOD_LEVEL = -1


def t_local_broadcast(engine: Engine, inst: BroadcastInstance, meter_payloads: bool = False) -> BroadcastOutcome:
    """
    Flood every node's payload for ``alpha * t`` rounds over the engine's graph.

    Every round a node forwards the payloads it learnt in the previous round
    over each incident edge, never sending the same origin twice in the same
    direction. Payloads travelling together on an edge form one message;
    ``meter_payloads`` sends them as separate envelopes so the payload
    counter sees each one.
    """
    graph = engine.graph
    known: Dict[int, Dict[int, bytes]] = {v: {v: inst.payload(v)} for v in graph.nodes()}
    fresh: Dict[int, Set[int]] = {v: {v} for v in graph.nodes()}
    sent: Dict[tuple, Set[int]] = {}
    start_messages = engine.counters.total_messages
    start_payloads = engine.counters.total_payloads

    with engine.phase(FLOOD_LEVEL, "flood"):
        for _ in range(inst.flood_rounds):
            for node in graph.nodes():
                if not fresh[node]:
                    continue
                for edge_id in graph.incident_edges(node):
                    already = sent.setdefault((node, edge_id), set())
                    origins = sorted(fresh[node] - already)
                    if not origins:
                        continue
                    already.update(origins)
                    if meter_payloads:
                        for origin in origins:
                            engine.send(node, edge_id, {origin: known[node][origin]})
                    else:
                        engine.send(node, edge_id, {origin: known[node][origin] for origin in origins})

            fresh = {v: set() for v in graph.nodes()}
            engine.step_round()
            for envelope in engine.receive():
                _take(envelope, known, fresh)
        engine.require_quiet("flooding")

    received = {v: sorted(known[v]) for v in graph.nodes()}
    outcome = BroadcastOutcome(
        t=inst.t,
        alpha=inst.alpha,
        rounds=inst.flood_rounds,
        messages=engine.counters.total_messages - start_messages,
        payloads=engine.counters.total_payloads - start_payloads,
        received=received,
        counters=engine.counters.model_copy(deep=True),
    )
    logger.info(
        f"t-local broadcast t={inst.t} alpha={inst.alpha}: {outcome.rounds} rounds,"
        f" {outcome.messages} messages, {outcome.payloads} payload deliveries"
    )
    return outcome


def _take(envelope: Envelope, known: Dict[int, Dict[int, bytes]], fresh: Dict[int, Set[int]]) -> None:
    mine = known[envelope.receiver]
    for origin, payload in envelope.payload.items():
        if origin not in mine:
            mine[origin] = payload
            fresh[envelope.receiver].add(origin)


def broadcast_over_spanner(
    g: MultiGraph,
    inst: BroadcastInstance,
    meter_payloads: bool = False,
) -> BroadcastOutcome:
    """Flood over H = (V, S) and check completeness against BFS in G."""
    h = spanning_subgraph(g, inst.spanner_edges)
    outcome = t_local_broadcast(Engine(h), inst, meter_payloads)
    outcome.missing = completeness_misses(g, outcome.received, inst.t)
    if outcome.missing:
        logger.warning(f"t-local broadcast incomplete: {len(outcome.missing)} (receiver, origin) pairs missed")
    return outcome
