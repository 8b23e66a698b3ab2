# File: src/localsim/engine.py
#  Copyright (c) 2025 SpanSim contributors.
#  SpanSim is an open-source spanner simulation toolkit licensed under MIT.
#  All rights reserved where applicable.
#
#

"""
Round-synchronous message passing over a multigraph.

Everything sent during round r is delivered at once when the round closes,
in ``(receiver, edge_id, direction)`` order. Nodes may only talk over their
own incident edges.
"""

from contextlib import contextmanager
from typing import Any, Callable, Iterator, List, Tuple

from src.graph import GraphError, MultiGraph
from src.localsim.dataclass import PHASES, Counters, Envelope
from src.logging import LOGGER

logger = LOGGER(__name__)


class ProtocolViolation(RuntimeError):
    """The simulated protocol broke a rule of the model; the run is void."""


class Engine:
    def __init__(self, graph: MultiGraph):
        self.graph = graph
        self.round = 0
        self.counters = Counters()
        self.level = 0
        self.phase_name = "idle"
        self._outbox: List[Envelope] = []
        self._inbox: List[Envelope] = []

    def send(self, sender: int, edge_id: int, payload: Any) -> None:
        try:
            receiver = self.graph.other_end(edge_id, sender)
        except GraphError as exc:
            raise ProtocolViolation(f"round {self.round}: node {sender} cannot send over edge {edge_id}: {exc}") from None
        self._outbox.append(Envelope(sender, receiver, edge_id, payload))

    @property
    def in_flight(self) -> int:
        return len(self._outbox) + len(self._inbox)

    def step_round(self) -> int:
        """Close the current round: deliver every queued send and return the message count."""
        pending = sorted(self._outbox, key=lambda env: (env.receiver, env.edge_id, env.direction))
        self._outbox = []
        self._inbox.extend(pending)

        messages = len({(env.edge_id, env.direction) for env in pending})
        self.counters.record(self.level, self.phase_name, messages, len(pending))
        self.round += 1
        return messages

    def receive(self) -> List[Envelope]:
        delivered, self._inbox = self._inbox, []
        return delivered

    def run(self, rounds: int, handler: Callable[[Envelope], None]) -> None:
        """Step ``rounds`` rounds, handing every delivery to ``handler``."""
        for _ in range(rounds):
            self.step_round()
            for envelope in self.receive():
                handler(envelope)

    def idle(self, rounds: int) -> None:
        if self.in_flight:
            raise ProtocolViolation(f"round {self.round}: idling with {self.in_flight} messages in flight")
        for _ in range(rounds):
            self.step_round()

    def require_quiet(self, what: str) -> None:
        if self.in_flight:
            raise ProtocolViolation(
                f"round {self.round}: {self.in_flight} messages still in flight after {what}"
            )

    @contextmanager
    def phase(self, level: int, name: str) -> Iterator["Engine"]:
        """Attribute every round stepped inside the block to ``(level, name)``."""
        if name not in PHASES:
            raise ProtocolViolation(f"unknown phase {name!r}, expected one of {', '.join(PHASES)}")
        before: Tuple[int, str] = (self.level, self.phase_name)
        start_round, start_messages = self.round, self.counters.total_messages
        self.level, self.phase_name = level, name
        try:
            yield self
        finally:
            self.level, self.phase_name = before
            logger.debug(
                f"level {level} {name}: {self.round - start_round} rounds,"
                f" {self.counters.total_messages - start_messages} messages"
            )

    def __repr__(self) -> str:
        return f"Engine({self.graph!r}, round={self.round}, messages={self.counters.total_messages})"
