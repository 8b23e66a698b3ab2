# File: src/plugins/sweep.py
#  Copyright (c) 2025 SpanSim contributors.
#  SpanSim is an open-source spanner simulation toolkit licensed under MIT.
#  All rights reserved where applicable.
#
#

import itertools
from argparse import Namespace
from typing import List

import uvloop

from src import config, router
from src.helpers.commands import EXIT_OK, EXIT_VIOLATIONS, arg
from src.helpers.dataclass import SweepJob, SweepRow
from src.helpers.decorators import catch_errors, log_usage
from src.helpers.experiment import run_job
from src.helpers.functions import (parse_budget_scales, parse_float_list,
                                  parse_int_list)
from src.helpers.output import append_csv_rows, sweep_csv, write_text
from src.helpers.pool import RunPool
from src.logging import LOGGER

logger = LOGGER(__name__)


def build_jobs(args: Namespace) -> List[SweepJob]:
    h_values = [None] if args.h.lower() == "auto" else parse_int_list(args.h)
    grid = itertools.product(
        parse_int_list(args.n),
        parse_int_list(args.graph_seeds),
        parse_int_list(args.k),
        h_values,
        parse_float_list(args.c),
        parse_budget_scales(args.budget_scale),
        args.mode.split(","),
        parse_int_list(args.seeds),
    )
    jobs = [
        SweepJob(
            model=args.model,
            n=n,
            graph_seed=graph_seed,
            p=args.p,
            rows=args.rows,
            cols=args.cols,
            clique=args.clique,
            k=k,
            h=h,
            c=c,
            budget_scale=scale,
            mode=mode,
            seed=seed,
        )
        for n, graph_seed, k, h, c, scale, mode, seed in grid
    ]
    return sorted(jobs, key=lambda job: job.sort_key)


async def execute_sweep(jobs: List[SweepJob], workers: int) -> List[SweepRow]:
    pool = RunPool(workers)
    try:
        rows = await pool.map(run_job, jobs)
        logger.info(f"sweep: {len(rows)} of {len(jobs)} runs finished")
        return rows
    finally:
        RunPool.shutdown()


async def sweep_main(args: Namespace) -> List[SweepRow]:
    jobs = build_jobs(args)
    logger.info(f"sweep: {len(jobs)} runs on {args.workers} workers")
    rows = await execute_sweep(jobs, args.workers)
    if args.append:
        await append_csv_rows(args.out, rows)
    else:
        await write_text(args.out, sweep_csv(rows))
    return rows


@router.on_command(
    "sweep",
    help="run a parameter grid and write one CSV row per run",
    arguments=[
        arg("--model", required=True),
        arg("--n", required=True, help="comma separated node counts"),
        arg("--p", type=float),
        arg("--rows", type=int),
        arg("--cols", type=int),
        arg("--clique", type=int),
        arg("--graph-seeds", default="0", help="graph instance seeds"),
        arg("--seeds", default=",".join(str(s) for s in config.SWEEP_SEEDS), help="algorithm seeds"),
        arg("--k", default=str(config.DEFAULT_K)),
        arg("--h", default="auto"),
        arg("--c", default=str(config.DEFAULT_C)),
        arg("--budget-scale", default=config.DEFAULT_BUDGET_SCALE, help="comma separated factors, or trend"),
        arg("--mode", default="centralized", help="centralized, distributed or both comma separated"),
        arg("--workers", type=int, default=config.SWEEP_WORKERS),
        arg("--out", required=True, help="CSV file"),
        arg("--append", action="store_true", help="append rows instead of rewriting the file"),
    ],
)
@log_usage
@catch_errors
def sweep(args: Namespace) -> int:
    """Run every combination of the grid and tabulate size, cost and verification outcome."""
    rows = uvloop.run(sweep_main(args))
    failing = [row for row in rows if row.violations]
    if failing:
        logger.warning(f"sweep: {len(failing)} of {len(rows)} runs had verification violations")
        return EXIT_VIOLATIONS
    return EXIT_OK
