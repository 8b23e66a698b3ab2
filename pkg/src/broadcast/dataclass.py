# File: src/broadcast/dataclass.py
#  Copyright (c) 2025 SpanSim contributors.
#  SpanSim is an open-source spanner simulation toolkit licensed under MIT.
#  All rights reserved where applicable.
#
#

from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, Field, model_validator

from src.localsim import Counters


class BroadcastInstance(BaseModel):
    """
    One t-local broadcast: every node owns an opaque payload that must reach
    all nodes within G-distance ``t``, flooded for ``alpha * t`` rounds over
    the spanner edges.
    """

    t: int = Field(ge=0)
    alpha: int = Field(ge=1)
    spanner_edges: List[int]
    messages: Dict[int, bytes] = {}

    @property
    def flood_rounds(self) -> int:
        return self.alpha * self.t

    def payload(self, node: int) -> bytes:
        return self.messages.get(node, str(node).encode())


class BroadcastOutcome(BaseModel):
    t: int
    alpha: int
    rounds: int
    messages: int
    payloads: int
    # node -> origins whose payload arrived (own origin included)
    received: Dict[int, List[int]]
    # (receiver, origin) pairs within distance t that never arrived
    missing: List[Tuple[int, int]] = []
    counters: Counters

    @property
    def complete(self) -> bool:
        return not self.missing


class PredictedComplexity(BaseModel):
    """Formula evaluations of the asymptotic bounds, not measurements."""

    gamma: int
    t: int
    n: int
    messages: float
    rounds: float
    label: str = "formula evaluation"


class SpannerBuild(BaseModel):
    name: str
    spanner_edges: List[int]
    alpha: int
    counters: Optional[Counters] = None
    failures: int = 0


class MessageReducedOutcome(BaseModel):
    gamma: int
    t: int
    spanner: SpannerBuild
    flood: BroadcastOutcome
    construction: Counters
    total: Counters
    predicted: PredictedComplexity

    @model_validator(mode="after")
    def totals_add_up(self) -> "MessageReducedOutcome":
        expected = self.construction.total_messages + self.flood.counters.total_messages
        if self.total.total_messages != expected:
            raise ValueError(f"total messages {self.total.total_messages} != {expected}")
        return self
