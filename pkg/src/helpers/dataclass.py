# File: src/helpers/dataclass.py
#  Copyright (c) 2025 SpanSim contributors.
#  SpanSim is an open-source spanner simulation toolkit licensed under MIT.
#  All rights reserved where applicable.
#
#

from typing import Any, Dict, List, Literal, Optional, Union

from pydantic import BaseModel, Field

from src.localsim import Counters
from src.sampler import LevelStats, Params, WhpEvent

Mode = Literal["centralized", "distributed"]

SWEEP_COLUMNS = (
    "n", "m", "k", "h", "c", "budget_scale", "mode",
    "|S|", "messages", "rounds", "max_stretch", "violations", "failures",
)


class RecordMismatchError(ValueError):
    """A run record was produced for a different graph."""


class GraphDescriptor(BaseModel):
    model: Optional[str] = None
    n: int
    m: int
    seed: Optional[int] = None
    source: Optional[str] = None
    digest: str


class RunResults(BaseModel):
    size: int
    stretch_bound: int
    max_stretch: Optional[int]
    counters: Optional[Counters] = None
    levels: List[LevelStats]
    failures: List[WhpEvent] = []
    verification: Dict[str, Any]
    faithful: bool = True
    wall_time: Optional[float] = None
    spanner_edges: List[int]


class RunRecord(BaseModel):
    """One finished run, self-describing enough to be repeated from its own fields."""

    params: Params
    graph: GraphDescriptor
    mode: Mode
    results: RunResults

    @property
    def passed(self) -> bool:
        return bool(self.results.verification.get("passed"))

    def require_graph(self, digest: str) -> None:
        if self.graph.digest != digest:
            raise RecordMismatchError(
                f"record was made for graph {self.graph.digest[:12]}, this graph is {digest[:12]}"
            )


class SweepJob(BaseModel):
    """One cell of a sweep grid; picklable so it can cross process boundaries."""

    model: str
    n: int
    graph_seed: int
    p: Optional[float] = None
    rows: Optional[int] = None
    cols: Optional[int] = None
    clique: Optional[int] = None
    k: int
    h: Optional[int] = None
    c: float
    budget_scale: Union[float, Literal["trend"]] = 1.0
    mode: Mode = "centralized"
    seed: int = 0

    @property
    def sort_key(self) -> tuple:
        scale = -1.0 if self.budget_scale == "trend" else self.budget_scale
        return (self.n, self.graph_seed, self.k, self.h or 0, self.c, scale, self.mode, self.seed)


class SweepRow(BaseModel):
    n: int
    m: int
    k: int
    h: int
    c: float
    budget_scale: float
    mode: Mode
    size: int = Field(alias="|S|")
    messages: int
    rounds: int
    max_stretch: Optional[int]
    violations: int
    failures: int

    model_config = {"populate_by_name": True}

    def as_csv(self) -> List[Any]:
        values = self.model_dump(by_alias=True)
        return ["" if values[column] is None else values[column] for column in SWEEP_COLUMNS]
