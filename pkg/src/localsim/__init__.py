from src.localsim.courier import Courier
from src.localsim.dataclass import (PHASES, Counters, Envelope, NodeMemory,
                                    PhaseCount, Probe, Reply)
from src.localsim.engine import Engine, ProtocolViolation
from src.localsim.protocol import (MESSAGE_CONSTANT, ROUND_CONSTANT,
                                   TREE_CONSTANT, DistributedSampler,
                                   level_radius, level_schedule,
                                   message_bound, predicted_rounds,
                                   round_bound, run_distributed_sampler)
from src.localsim.sessions import (broadcast, broadcast_convergecast,
                                   convergecast, forest_height, tree_edges)

__all__ = [
    "MESSAGE_CONSTANT",
    "PHASES",
    "ROUND_CONSTANT",
    "TREE_CONSTANT",
    "Counters",
    "Courier",
    "DistributedSampler",
    "Engine",
    "Envelope",
    "NodeMemory",
    "PhaseCount",
    "Probe",
    "ProtocolViolation",
    "Reply",
    "broadcast",
    "broadcast_convergecast",
    "convergecast",
    "forest_height",
    "level_radius",
    "level_schedule",
    "message_bound",
    "predicted_rounds",
    "round_bound",
    "run_distributed_sampler",
    "tree_edges",
]
