# File: src/plugins/gen.py
#  Copyright (c) 2025 SpanSim contributors.
#  SpanSim is an open-source spanner simulation toolkit licensed under MIT.
#  All rights reserved where applicable.
#
#

from argparse import Namespace

from src import config, router
from src.graph import SUPPORTED_MODELS, generate, graph_digest, save_graph
from src.helpers.commands import EXIT_OK, arg
from src.helpers.decorators import catch_errors, log_usage
from src.logging import LOGGER

logger = LOGGER(__name__)


@router.on_command(
    "gen",
    help="generate a graph file",
    arguments=[
        arg("--model", required=True, choices=SUPPORTED_MODELS),
        arg("--n", type=int, required=True, help="node count (grid: rows*cols when square)"),
        arg("--p", type=float, help="edge probability for gnp"),
        arg("--rows", type=int),
        arg("--cols", type=int),
        arg("--clique", type=int, help="clique size for barbell"),
        arg("--seed", type=int, default=config.DEFAULT_SEED),
        arg("--out", required=True, help="graph file to write"),
    ],
)
@log_usage
@catch_errors
def gen(args: Namespace) -> int:
    """Generate a graph of one of the supported models and write it in the text format."""
    g, comments = generate(
        args.model, args.n, p=args.p, rows=args.rows, cols=args.cols, clique=args.clique, seed=args.seed
    )
    save_graph(args.out, g, comments)
    logger.info(f"Wrote {args.model} graph n={g.node_count} m={g.edge_count} to {args.out} ({graph_digest(g)[:12]})")
    return EXIT_OK
