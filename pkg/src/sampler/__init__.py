from src.sampler.core import grow_trees, sampler, tree_bound
from src.sampler.dataclass import (ClusterAssignment, LevelBudgets,
                                   LevelClusters, LevelStats, Params,
                                   SpannerResult, WhpEvent)
from src.sampler.level import (Answer, Classification, ClassificationFailure,
                               Clustering, LevelState, NodeProgress, absorb,
                               classify, draw_centers, draw_queries, explore,
                               note_stranded, pick_center, run_trial,
                               second_step, settle)
from src.sampler.params import (TREND_SAMPLES, auto_h, ceil_budget,
                                derive_budgets, trend_budget_scale)
from src.sampler.rng import center_stream, flip_center, stream, trial_stream

__all__ = [
    "TREND_SAMPLES",
    "Answer",
    "Classification",
    "ClassificationFailure",
    "ClusterAssignment",
    "Clustering",
    "LevelBudgets",
    "LevelClusters",
    "LevelState",
    "LevelStats",
    "NodeProgress",
    "Params",
    "SpannerResult",
    "WhpEvent",
    "absorb",
    "auto_h",
    "ceil_budget",
    "center_stream",
    "classify",
    "derive_budgets",
    "draw_centers",
    "draw_queries",
    "explore",
    "flip_center",
    "grow_trees",
    "note_stranded",
    "pick_center",
    "run_trial",
    "sampler",
    "second_step",
    "settle",
    "stream",
    "trial_stream",
    "trend_budget_scale",
    "tree_bound",
]
