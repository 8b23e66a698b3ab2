# File: src/localsim/dataclass.py
#  Copyright (c) 2025 SpanSim contributors.
#  SpanSim is an open-source spanner simulation toolkit licensed under MIT.
#  All rights reserved where applicable.
#
#

from typing import Any, Dict, List, NamedTuple, Optional, Set, Tuple

from pydantic import BaseModel

PHASES = ("setup", "trials", "centers", "join", "reroot", "flood")


class Envelope(NamedTuple):
    sender: int
    receiver: int
    edge_id: int
    payload: Any

    @property
    def direction(self) -> int:
        """0 when travelling from the lower to the higher endpoint."""
        return 0 if self.sender < self.receiver else 1


class PhaseCount(BaseModel):
    level: int
    phase: str
    messages: int = 0
    payloads: int = 0
    rounds: int = 0


class Counters(BaseModel):
    """
    Message and round meters of one engine.

    A message is one activation of an edge in one direction during one
    round, however many payloads it bundles; ``total_payloads`` counts the
    bundled payloads separately.
    """

    total_messages: int = 0
    total_payloads: int = 0
    rounds_elapsed: int = 0
    breakdown: List[PhaseCount] = []

    def record(self, level: int, phase: str, messages: int, payloads: int) -> None:
        self.total_messages += messages
        self.total_payloads += payloads
        self.rounds_elapsed += 1

        if not self.breakdown or (self.breakdown[-1].level, self.breakdown[-1].phase) != (level, phase):
            self.breakdown.append(PhaseCount(level=level, phase=phase))
        entry = self.breakdown[-1]
        entry.messages += messages
        entry.payloads += payloads
        entry.rounds += 1

    def by_level(self) -> Dict[int, Tuple[int, int]]:
        """level -> (messages, rounds)."""
        totals: Dict[int, Tuple[int, int]] = {}
        for entry in self.breakdown:
            messages, rounds = totals.get(entry.level, (0, 0))
            totals[entry.level] = (messages + entry.messages, rounds + entry.rounds)
        return totals

    def by_phase(self) -> Dict[str, Tuple[int, int]]:
        """phase -> (messages, rounds)."""
        totals: Dict[str, Tuple[int, int]] = {}
        for entry in self.breakdown:
            messages, rounds = totals.get(entry.phase, (0, 0))
            totals[entry.phase] = (messages + entry.messages, rounds + entry.rounds)
        return totals

    def combined(self, other: "Counters") -> "Counters":
        return Counters(
            total_messages=self.total_messages + other.total_messages,
            total_payloads=self.total_payloads + other.total_payloads,
            rounds_elapsed=self.rounds_elapsed + other.rounds_elapsed,
            breakdown=[*self.breakdown, *other.breakdown],
        )


class NodeMemory:
    """What one original node remembers between phases."""

    __slots__ = ("node", "host", "parent", "dead", "retired_at")

    def __init__(self, node: int):
        self.node = node
        self.host = node
        self.parent: Optional[Tuple[int, int]] = None
        self.dead: Set[int] = set()
        self.retired_at: Optional[int] = None

    @property
    def retired(self) -> bool:
        return self.retired_at is not None


class Probe(NamedTuple):
    """
    A source-routed request on behalf of a virtual node.

    ``route`` is the edge sequence still to walk down the sender's tree,
    ending with the probed edge itself; once it is used up the probe climbs
    parent pointers to the far root unless ``climb`` is off.
    """

    kind: str
    origin: int
    edge_id: int
    route: Tuple[int, ...]
    trail: Tuple[int, ...] = ()
    climb: bool = True
    landing: int = -1
    body: Any = None


class Reply(NamedTuple):
    kind: str
    origin: int
    edge_id: int
    trail: Tuple[int, ...]
    body: Any
