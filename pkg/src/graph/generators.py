# File: src/graph/generators.py
#  Copyright (c) 2025 SpanSim contributors.
#  SpanSim is an open-source spanner simulation toolkit licensed under MIT.
#  All rights reserved where applicable.
#
#

import math
from typing import List, Optional, Tuple

import networkx as nx

from src.graph.multigraph import GraphError, MultiGraph, build_graph
from src.logging import LOGGER

logger = LOGGER(__name__)

SUPPORTED_MODELS = ("gnp", "complete", "cycle", "path", "grid", "star", "barbell")


class ModelParameterError(GraphError):
    pass


def from_networkx(nx_graph: nx.Graph) -> MultiGraph:
    """Relabel nodes densely (sorted order) and number edges in sorted order."""
    relabel = {node: index for index, node in enumerate(sorted(nx_graph.nodes()))}
    pairs = sorted(
        (min(relabel[u], relabel[v]), max(relabel[u], relabel[v]))
        for u, v in nx_graph.edges()
    )
    return build_graph(len(relabel), pairs)


def to_networkx(g: MultiGraph) -> nx.MultiGraph:
    nx_graph = nx.MultiGraph()
    nx_graph.add_nodes_from(g.nodes())
    nx_graph.add_edges_from((u, v, edge_id) for edge_id, u, v in g.edges)
    return nx_graph


def generate(
    model: str,
    n: int,
    p: Optional[float] = None,
    rows: Optional[int] = None,
    cols: Optional[int] = None,
    clique: Optional[int] = None,
    seed: int = 0,
) -> Tuple[MultiGraph, List[str]]:
    """
    Build a graph of the given model.

    Returns the graph and header comments describing how it was made.
    """
    if model not in SUPPORTED_MODELS:
        raise ModelParameterError(f"unknown model {model!r}, pick one of {', '.join(SUPPORTED_MODELS)}")
    if n < 1 and model != "grid":
        raise ModelParameterError(f"{model} needs n >= 1, got {n}")

    comments = [f"model={model} n={n} seed={seed}"]

    if model == "gnp":
        if p is None or not 0.0 <= p <= 1.0:
            raise ModelParameterError(f"gnp needs 0 <= p <= 1, got {p}")
        nx_graph = nx.gnp_random_graph(n, p, seed=seed)
        comments[0] += f" p={p}"
        if n > 0 and not nx.is_connected(nx_graph):
            components = list(nx.connected_components(nx_graph))
            largest = max(components, key=lambda c: (len(c), -min(c)))
            comments.append(
                f"kept largest connected component: {len(largest)} of {n} nodes"
                f" ({len(components)} components)"
            )
            logger.info(f"gnp({n}, {p}) disconnected, keeping {len(largest)} nodes")
            nx_graph = nx_graph.subgraph(largest).copy()

    elif model == "complete":
        nx_graph = nx.complete_graph(n)

    elif model == "cycle":
        if n < 3:
            raise ModelParameterError(f"cycle needs n >= 3, got {n}")
        nx_graph = nx.cycle_graph(n)

    elif model == "path":
        nx_graph = nx.path_graph(n)

    elif model == "grid":
        if rows is None and cols is None:
            side = math.isqrt(n)
            if side * side != n:
                raise ModelParameterError(f"grid needs rows/cols or a square n, got {n}")
            rows = cols = side
        rows = rows or cols
        cols = cols or rows
        if rows < 1 or cols < 1:
            raise ModelParameterError(f"grid needs positive rows and cols, got {rows}x{cols}")
        nx_graph = nx.grid_2d_graph(rows, cols)
        comments[0] += f" rows={rows} cols={cols}"

    elif model == "star":
        nx_graph = nx.star_graph(n - 1)

    else:  # barbell
        clique = clique or max(3, n // 3)
        bridge = n - 2 * clique
        if clique < 2 or bridge < 0:
            raise ModelParameterError(f"barbell needs 2 <= clique <= n/2, got clique={clique} n={n}")
        nx_graph = nx.barbell_graph(clique, bridge)
        comments[0] += f" clique={clique}"

    graph = from_networkx(nx_graph)
    logger.debug(f"Generated {model}: {graph}")
    return graph, comments
