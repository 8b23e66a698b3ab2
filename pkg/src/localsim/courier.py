# File: src/localsim/courier.py
#  Copyright (c) 2025 SpanSim contributors.
#  SpanSim is an open-source spanner simulation toolkit licensed under MIT.
#  All rights reserved where applicable.
#
#

"""
Messages between virtual nodes.

A probe leaves the sender's root, walks down its cluster tree to the
endpoint of the probed edge, crosses it and then climbs parent pointers to
the root on the far side. The answer retraces the recorded trail. Every
hop is a real message metered by the engine.
"""

from typing import Any, Callable, Dict, Iterable, Sequence

from src.localsim.dataclass import Envelope, NodeMemory, Probe, Reply
from src.localsim.engine import Engine, ProtocolViolation
from src.logging import LOGGER

logger = LOGGER(__name__)

# (node where the probe stopped, probe) -> reply body, or None for no reply
Answerer = Callable[[int, Probe], Any]


class Courier:
    def __init__(self, engine: Engine, memory: Sequence[NodeMemory], answer: Answerer):
        self.engine = engine
        self.memory = memory
        self.answer = answer
        self.replies: Dict[int, Dict[int, Any]] = {}
        self.launched = 0

    def launch(
        self,
        root: int,
        kind: str,
        edge_id: int,
        route: Iterable[int],
        climb: bool = True,
        body: Any = None,
    ) -> None:
        """Send a probe from ``root`` down ``route`` (the probed edge last)."""
        route = tuple(route)
        if not route or route[-1] != edge_id:
            raise ProtocolViolation(f"route for edge {edge_id} from {root} must end with that edge")
        self.launched += 1
        self._walk(root, Probe(kind, root, edge_id, route, climb=climb, body=body))

    def _walk(self, node: int, probe: Probe) -> None:
        if probe.route:
            edge_id = probe.route[0]
            self.engine.send(
                node,
                edge_id,
                probe._replace(route=probe.route[1:], trail=probe.trail + (edge_id,)),
            )
            return

        if probe.landing < 0:
            probe = probe._replace(landing=node)
        memory = self.memory[node]
        if probe.climb and not memory.retired and memory.parent is not None:
            _, edge_id = memory.parent
            self.engine.send(node, edge_id, probe._replace(trail=probe.trail + (edge_id,)))
            return

        body = self.answer(node, probe)
        if body is not None:
            self._return(node, Reply(probe.kind, probe.origin, probe.edge_id, probe.trail, body))

    def _return(self, node: int, reply: Reply) -> None:
        if not reply.trail:
            if node != reply.origin:
                raise ProtocolViolation(f"reply for {reply.origin} ended at {node}")
            self.replies.setdefault(reply.origin, {})[reply.edge_id] = reply.body
            return
        self.engine.send(node, reply.trail[-1], reply._replace(trail=reply.trail[:-1]))

    def on_delivery(self, envelope: Envelope) -> None:
        payload = envelope.payload
        if isinstance(payload, Probe):
            self._walk(envelope.receiver, payload)
        else:
            self._return(envelope.receiver, payload)

    def run(self, rounds: int, what: str) -> Dict[int, Dict[int, Any]]:
        """Step ``rounds`` rounds and hand back ``origin -> edge -> reply body``."""
        self.engine.run(rounds, self.on_delivery)
        self.engine.require_quiet(what)
        replies, self.replies = self.replies, {}
        logger.debug(f"{what}: {self.launched} probes, {sum(map(len, replies.values()))} replies")
        self.launched = 0
        return replies
