from src.broadcast.dataclass import (BroadcastInstance, BroadcastOutcome,
                                     MessageReducedOutcome,
                                     PredictedComplexity, SpannerBuild)
from src.broadcast.flooding import (FLOOD_LEVEL, broadcast_over_spanner,
                                    t_local_broadcast)
from src.broadcast.spanners import (DistributedSamplerSpanner, SamplerSpanner,
                                    SpannerAlgorithm, TrivialSpanner,
                                    message_reduced_broadcast,
                                    predicted_complexity)

__all__ = [
    "FLOOD_LEVEL",
    "BroadcastInstance",
    "BroadcastOutcome",
    "DistributedSamplerSpanner",
    "MessageReducedOutcome",
    "PredictedComplexity",
    "SamplerSpanner",
    "SpannerAlgorithm",
    "SpannerBuild",
    "TrivialSpanner",
    "broadcast_over_spanner",
    "message_reduced_broadcast",
    "predicted_complexity",
    "t_local_broadcast",
]
