# File: src/plugins/broadcast.py
#  Copyright (c) 2025 SpanSim contributors.
#  SpanSim is an open-source spanner simulation toolkit licensed under MIT.
#  All rights reserved where applicable.
#
#

from argparse import Namespace
from typing import Optional

import uvloop

from src import config, router
from src.broadcast import (BroadcastInstance, broadcast_over_spanner,
                           message_reduced_broadcast)
from src.graph import graph_digest, load_graph
from src.helpers.commands import EXIT_OK, EXIT_VIOLATIONS, UsageError, arg
from src.helpers.dataclass import RunRecord
from src.helpers.decorators import catch_errors, log_usage
from src.helpers.functions import resolve_alpha
from src.helpers.output import json_line, read_records, write_text
from src.logging import LOGGER

logger = LOGGER(__name__)


def pick_record(path: str, index: Optional[int]) -> RunRecord:
    records = uvloop.run(read_records(path))
    if not records:
        raise UsageError(f"{path} holds no run records")
    try:
        return records[-1 if index is None else index]
    except IndexError:
        raise UsageError(f"{path} has {len(records)} records, no index {index}") from None


@router.on_command(
    "broadcast",
    help="t-local broadcast over a recorded spanner, or the message-reduced scheme end to end",
    arguments=[
        arg("--graph", required=True, help="graph file"),
        arg("--record", help="JSON lines file written by run"),
        arg("--index", type=int, help="which record of the file to use (default: last)"),
        arg("--t", type=int, required=True, help="locality radius"),
        arg("--alpha", default="auto", help="stretch of the spanner, or auto"),
        arg("--gamma", type=int, help="build the spanner in-simulation with k=gamma"),
        arg("--seed", type=int, default=config.DEFAULT_SEED),
        arg("--meter-payloads", action="store_true", help="count every payload, not only bundles"),
        arg("--out", help="append the outcome here instead of printing it"),
    ],
)
@log_usage
@catch_errors
def broadcast(args: Namespace) -> int:
    """Flood every node's payload within t hops and check completeness against BFS in G."""
    g, _ = load_graph(args.graph)

    if args.record is not None:
        record = pick_record(args.record, args.index)
        record.require_graph(graph_digest(g))
        alpha = (
            record.results.stretch_bound
            if str(args.alpha).lower() == "auto"
            else resolve_alpha(args.alpha, record.params.k)
        )
        inst = BroadcastInstance(t=args.t, alpha=alpha, spanner_edges=record.results.spanner_edges)
        outcome = broadcast_over_spanner(g, inst, args.meter_payloads)
        complete = outcome.complete
    elif args.gamma is not None:
        alpha = None if str(args.alpha).lower() == "auto" else resolve_alpha(args.alpha, args.gamma)
        outcome = message_reduced_broadcast(
            g, args.gamma, args.t, seed=args.seed, alpha=alpha, meter_payloads=args.meter_payloads
        )
        complete = outcome.flood.complete
    else:
        raise UsageError("broadcast needs either --record or --gamma")

    uvloop.run(write_text(args.out, json_line(outcome), append=True))
    if not complete:
        return EXIT_VIOLATIONS
    return EXIT_OK
