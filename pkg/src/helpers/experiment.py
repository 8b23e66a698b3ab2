# File: src/helpers/experiment.py
#  Copyright (c) 2025 SpanSim contributors.
#  SpanSim is an open-source spanner simulation toolkit licensed under MIT.
#  All rights reserved where applicable.
#
#

import time
from typing import Optional, Tuple

from src.graph import MultiGraph, generate, graph_digest
from src.helpers.dataclass import (GraphDescriptor, Mode, RunRecord,
                                   RunResults, SweepJob, SweepRow)
from src.helpers.functions import resolve_budget_scale, resolve_h
from src.localsim import Engine, run_distributed_sampler
from src.logging import LOGGER
from src.sampler import Params, sampler
from src.verify import verify_run

logger = LOGGER(__name__)


def describe_graph(
    g: MultiGraph,
    model: Optional[str] = None,
    seed: Optional[int] = None,
    source: Optional[str] = None,
) -> GraphDescriptor:
    return GraphDescriptor(model=model, n=g.node_count, m=g.edge_count, seed=seed, source=source, digest=graph_digest(g))


def execute_run(
    g: MultiGraph,
    descriptor: GraphDescriptor,
    p: Params,
    mode: Mode = "centralized",
    all_pairs: bool = False,
    wall_time: bool = False,
) -> RunRecord:
    """Build the spanner in the requested mode, verify it and pack the record."""
    logger.info(f"Run start: {mode} n={p.n} m={g.edge_count} k={p.k} h={p.h} c={p.c} seed={p.seed}")
    started = time.perf_counter()
    counters = None
    if mode == "distributed":
        result, assignment, counters = run_distributed_sampler(Engine(g), p)
    else:
        result, assignment = sampler(g, p)
    elapsed = time.perf_counter() - started

    report = verify_run(g, result, assignment, p, counters, all_pairs)
    results = RunResults(
        size=result.size,
        stretch_bound=result.stretch_bound,
        max_stretch=report.max_stretch,
        counters=counters,
        levels=result.levels,
        failures=result.failures,
        verification=report.summary(),
        faithful=result.faithful,
        wall_time=round(elapsed, 6) if wall_time else None,
        spanner_edges=result.spanner_edges,
    )
    return RunRecord(params=p, graph=descriptor, mode=mode, results=results)


def job_graph(job: SweepJob) -> Tuple[MultiGraph, GraphDescriptor]:
    g, _ = generate(
        job.model, job.n, p=job.p, rows=job.rows, cols=job.cols, clique=job.clique, seed=job.graph_seed
    )
    return g, describe_graph(g, model=job.model, seed=job.graph_seed)


def sweep_row(record: RunRecord) -> SweepRow:
    counters = record.results.counters
    verification = record.results.verification
    violations = (
        verification["stretch_violations"]
        + verification["diameter_violations"]
        + (0 if verification["partition_valid"] else 1)
        + (0 if verification["edge_budget_ok"] else 1)
        + verification["node_count_misses"]
        + (0 if verification["protocol_ok"] in (None, True) else 1)
    )
    return SweepRow(
        n=record.graph.n,
        m=record.graph.m,
        k=record.params.k,
        h=record.params.h,
        c=record.params.c,
        budget_scale=record.params.budget_scale,
        mode=record.mode,
        size=record.results.size,
        messages=0 if counters is None else counters.total_messages,
        rounds=0 if counters is None else counters.rounds_elapsed,
        max_stretch=record.results.max_stretch,
        violations=violations,
        failures=len(record.results.failures),
    )


def run_job(job: SweepJob) -> SweepRow:
    """Worker entry point of a sweep: generate, run, verify, summarise."""
    g, descriptor = job_graph(job)
    p = Params(
        n=g.node_count,
        k=job.k,
        h=job.h or resolve_h(None, g.node_count),
        c=job.c,
        seed=job.seed,
        budget_scale=resolve_budget_scale(job.budget_scale, g.node_count, job.c),
    )
    return sweep_row(execute_run(g, descriptor, p, job.mode))


def header_fields(comments) -> dict:
    """``key=value`` tokens of the first comment that names a model."""
    for comment in comments:
        tokens = dict(token.split("=", 1) for token in comment.split() if "=" in token)
        if "model" in tokens:
            return tokens
    return {}


def describe_file(g: MultiGraph, comments, source: str) -> GraphDescriptor:
    fields = header_fields(comments)
    seed = fields.get("seed")
    return describe_graph(
        g,
        model=fields.get("model"),
        seed=int(seed) if seed is not None and seed.isdigit() else None,
        source=source,
    )
