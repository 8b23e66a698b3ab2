# File: src/sampler/dataclass.py
#  Copyright (c) 2025 SpanSim contributors.
#  SpanSim is an open-source spanner simulation toolkit licensed under MIT.
#  All rights reserved where applicable.
#
#

import math
from typing import Dict, List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, computed_field, model_validator

from src.graph.trees import ClusterTree
from src.logging import LOGGER

logger = LOGGER(__name__)


class Params(BaseModel):
    """
    Run configuration of one spanner construction.

    ``delta`` and ``epsilon`` are derived from ``k`` and ``h`` and echoed in
    dumps; they are ignored when a dump is loaded back.
    """

    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=1)
    k: int = Field(ge=1)
    h: int = Field(ge=1)
    c: float = Field(gt=0)
    seed: int = Field(default=0, ge=0)
    budget_scale: float = Field(default=1.0, gt=0)
    # test hook: forces p_j at every level
    center_prob_override: Optional[float] = Field(default=None, ge=0.0, le=1.0)

    @computed_field
    @property
    def delta(self) -> float:
        return 1.0 / (2 ** (self.k + 1) - 1)

    @computed_field
    @property
    def epsilon(self) -> float:
        return 1.0 / self.h

    @property
    def log_n(self) -> float:
        return math.log2(self.n)

    @property
    def stretch_bound(self) -> int:
        return 2 * 3**self.k - 1

    @property
    def faithful(self) -> bool:
        return self.budget_scale == 1.0 and self.center_prob_override is None

    def center_prob(self, j: int) -> float:
        if self.center_prob_override is not None:
            return self.center_prob_override
        return self.n ** (-(2**j) * self.delta)

    def p_hat(self, j: int) -> float:
        """Product of the center probabilities of levels ``0..j`` (1 for j < 0)."""
        product = 1.0
        for level in range(j + 1):
            product *= self.center_prob(level)
        return product

    @model_validator(mode="after")
    def warn_outside_theorem_range(self) -> "Params":
        if self.n >= 4 and self.k > math.log2(math.log2(self.n)):
            logger.warning(f"k={self.k} exceeds log2(log2(n))={math.log2(math.log2(self.n)):.2f}")
        if self.n >= 2 and self.h > math.ceil(math.log2(self.n)):
            logger.warning(f"h={self.h} exceeds ceil(log2(n))={math.ceil(math.log2(self.n))}")
        return self


class LevelBudgets(BaseModel):
    level: int
    trial_count: int
    samples_per_trial: int
    neighbor_threshold: int
    center_prob: float


class WhpEvent(BaseModel):
    """A low-probability event the analysis excludes but this run hit."""

    kind: Literal["classification_failure", "heavy_unclustered"]
    level: int
    host: int
    queried: int
    threshold: int


class LevelStats(BaseModel):
    level: int
    nodes: int
    edges: int
    spanner_edges: int
    light: int = 0
    heavy: int = 0
    failed: int = 0
    centers: int = 0
    satellites: int = 0
    unclustered: int = 0
    heavy_clustered: int = 0
    samples_per_trial: int
    neighbor_threshold: int
    center_prob: float


class SpannerResult(BaseModel):
    spanner_edges: List[int]
    level_edges: List[List[int]]
    stretch_bound: int
    levels: List[LevelStats]
    failures: List[WhpEvent] = []
    faithful: bool = True

    @property
    def size(self) -> int:
        return len(self.spanner_edges)

    @property
    def node_counts(self) -> List[int]:
        return [stats.nodes for stats in self.levels]

    @property
    def edge_counts(self) -> List[int]:
        return [stats.edges for stats in self.levels]


class LevelClusters(BaseModel):
    """
    Clusters of one level, every virtual node named by its host.

    The host of a virtual node is the original node at the root of its
    cluster tree; a center keeps its host when it grows into the next level.
    """

    level: int
    hosts: List[int]
    members: Dict[int, List[int]]
    trees: Dict[int, Dict[int, Tuple[int, int]]]
    centers: List[int] = []
    joined: Dict[int, int] = {}
    unclustered: List[int] = []

    def tree(self, host: int) -> ClusterTree:
        return ClusterTree(host, self.trees[host])


class ClusterAssignment(BaseModel):
    levels: List[LevelClusters]
    retired_at: Dict[int, int]

    def members(self, level: int, host: int) -> List[int]:
        return self.levels[level].members[host]

    def final_clusters(self) -> List[Tuple[int, int, List[int]]]:
        """``(r(v), host, C(v))`` for every unclustered virtual node v."""
        return [
            (level, host, self.members(level, host))
            for host, level in sorted(self.retired_at.items())
        ]
