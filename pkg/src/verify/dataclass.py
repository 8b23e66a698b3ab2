# File: src/verify/dataclass.py
#  Copyright (c) 2025 SpanSim contributors.
#  SpanSim is an open-source spanner simulation toolkit licensed under MIT.
#  All rights reserved where applicable.
#
#

from typing import List, Optional

from pydantic import BaseModel, computed_field

from src.sampler import WhpEvent


class StretchViolation(BaseModel):
    # None for a non-adjacent pair found by the all-pairs check
    edge_id: Optional[int]
    u: int
    v: int
    # None when u and v are disconnected in H
    distance: Optional[int]
    allowed: int


class StretchCheck(BaseModel):
    bound: int
    all_pairs: bool = False
    pairs_checked: int = 0
    violations: List[StretchViolation] = []


class ClusterDiameter(BaseModel):
    level: int
    host: int
    size: int
    # None when the cluster is disconnected in H
    diameter: Optional[int]
    bound: int

    @property
    def ok(self) -> bool:
        return self.diameter is not None and self.diameter <= self.bound


class DiameterCheck(BaseModel):
    clusters_checked: int = 0
    largest: int = 0
    violations: List[ClusterDiameter] = []


class PartitionCheck(BaseModel):
    valid: bool
    clusters: int
    offenders: List[int] = []


class EdgeCountCheck(BaseModel):
    size: int
    budget_bound: int
    # k h n^(1+delta) log2(n)^3
    formula: float
    ratio: float

    @property
    def within_budget(self) -> bool:
        return self.size <= self.budget_bound


class NodeCountCheck(BaseModel):
    level: int
    nodes: int
    lower: float
    upper: float
    hard: bool

    @property
    def within(self) -> bool:
        return self.lower <= self.nodes <= self.upper


class ProtocolCheck(BaseModel):
    messages: int
    message_bound: float
    rounds: int
    round_bound: float
    predicted_rounds: int

    @property
    def ok(self) -> bool:
        return (
            self.messages <= self.message_bound
            and self.rounds <= self.round_bound
            and self.rounds == self.predicted_rounds
        )


class CountsReport(BaseModel):
    edges: EdgeCountCheck
    nodes: List[NodeCountCheck]
    protocol: Optional[ProtocolCheck] = None

    @property
    def hard_node_misses(self) -> List[NodeCountCheck]:
        return [check for check in self.nodes if check.hard and not check.within]

    @property
    def ok(self) -> bool:
        return (
            self.edges.within_budget
            and not self.hard_node_misses
            and (self.protocol is None or self.protocol.ok)
        )


class HeavyClusteringReport(BaseModel):
    heavy: int
    clustered: int
    stranded: int

    @property
    def fraction(self) -> float:
        return 1.0 if self.heavy == 0 else self.clustered / self.heavy


class VerificationReport(BaseModel):
    stretch: StretchCheck
    diameters: DiameterCheck
    partition: PartitionCheck
    counts: CountsReport
    heavy: HeavyClusteringReport
    failures: List[WhpEvent] = []
    max_stretch: Optional[int] = None

    @computed_field
    @property
    def passed(self) -> bool:
        return (
            not self.stretch.violations
            and not self.diameters.violations
            and self.partition.valid
            and self.counts.ok
        )

    def summary(self) -> dict:
        return {
            "passed": self.passed,
            "stretch_violations": len(self.stretch.violations),
            "diameter_violations": len(self.diameters.violations),
            "partition_valid": self.partition.valid,
            "edge_budget_ok": self.counts.edges.within_budget,
            "edge_ratio": self.counts.edges.ratio,
            "node_count_misses": len(self.counts.hard_node_misses),
            "protocol_ok": None if self.counts.protocol is None else self.counts.protocol.ok,
            "whp_failures": len(self.failures),
        }

    @property
    def violation_count(self) -> int:
        return (
            len(self.stretch.violations)
            + len(self.diameters.violations)
            + len(self.partition.offenders)
            + (0 if self.counts.edges.within_budget else 1)
            + len(self.counts.hard_node_misses)
            + (0 if self.counts.protocol is None or self.counts.protocol.ok else 1)
        )
