# File: src/plugins/run.py
#  Copyright (c) 2025 SpanSim contributors.
#  SpanSim is an open-source spanner simulation toolkit licensed under MIT.
#  All rights reserved where applicable.
#
#

from argparse import Namespace

import uvloop

from src import config, router
from src.graph import load_graph
from src.helpers.commands import EXIT_OK, EXIT_VIOLATIONS, arg
from src.helpers.decorators import catch_errors, log_usage
from src.helpers.experiment import describe_file, execute_run, sweep_row
from src.helpers.functions import resolve_budget_scale, resolve_h
from src.helpers.output import append_csv_rows, json_line, sweep_csv, write_text
from src.logging import LOGGER
from src.sampler import Params

logger = LOGGER(__name__)


@router.on_command(
    "run",
    help="build, verify and record one spanner",
    arguments=[
        arg("--graph", required=True, help="graph file"),
        arg("--k", type=int, default=config.DEFAULT_K),
        arg("--h", default="auto", help="trial parameter, or auto for ceil(log2 n)"),
        arg("--c", type=float, default=config.DEFAULT_C),
        arg("--seed", type=int, default=config.DEFAULT_SEED),
        arg("--mode", choices=("centralized", "distributed"), default="centralized"),
        arg("--budget-scale", default=config.DEFAULT_BUDGET_SCALE, help="sample budget factor, or trend"),
        arg("--out", help="append the record here instead of printing it"),
        arg("--format", choices=("json", "csv"), default="json"),
        arg("--all-pairs", action="store_true", help="check stretch over all pairs"),
        arg("--wall-time", action="store_true", default=config.RECORD_WALL_TIME),
    ],
)
@log_usage
@catch_errors
def run(args: Namespace) -> int:
    """Run the Sampler on a graph file, verify the spanner and emit one run record."""
    g, comments = load_graph(args.graph)
    p = Params(
        n=g.node_count,
        k=args.k,
        h=resolve_h(args.h, g.node_count),
        c=args.c,
        seed=args.seed,
        budget_scale=resolve_budget_scale(args.budget_scale, g.node_count, args.c),
    )
    record = execute_run(
        g,
        describe_file(g, comments, args.graph),
        p,
        mode=args.mode,
        all_pairs=args.all_pairs,
        wall_time=args.wall_time,
    )

    if args.format == "csv":
        rows = [sweep_row(record)]
        if args.out is None:
            uvloop.run(write_text(None, sweep_csv(rows)))
        else:
            uvloop.run(append_csv_rows(args.out, rows))
    else:
        uvloop.run(write_text(args.out, json_line(record), append=True))

    if not record.passed:
        logger.warning(f"run finished with verification violations: {record.results.verification}")
        return EXIT_VIOLATIONS
    return EXIT_OK
