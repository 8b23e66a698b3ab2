# File: src/graph/io.py
#  Copyright (c) 2025 SpanSim contributors.
#  SpanSim is an open-source spanner simulation toolkit licensed under MIT.
#  All rights reserved where applicable.
#
#

"""
Plain-text graph format.

    # any number of comment lines
    n m
    u v [id]      (m lines, whitespace separated, 0-indexed)

A missing id column means the edge takes its line position (from 0).
"""

import hashlib
from pathlib import Path
from typing import Iterable, List, Tuple, Union

from src.graph.multigraph import GraphError, MultiGraph, build_graph
from src.logging import LOGGER

logger = LOGGER(__name__)

PathLike = Union[str, Path]


class GraphFormatError(GraphError):
    pass


def parse_graph(text: str) -> Tuple[MultiGraph, List[str]]:
    """Parse the text format, returning the graph and its comment lines."""
    comments: List[str] = []
    header = None
    specs = []

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            comments.append(line[1:].strip())
            continue

        fields = line.split()
        try:
            values = [int(field) for field in fields]
        except ValueError:
            raise GraphFormatError(f"line {line_no}: non-integer field in {line!r}") from None

        if header is None:
            if len(values) != 2:
                raise GraphFormatError(f"line {line_no}: header must be 'n m', got {line!r}")
            header = values
            continue

        if len(values) not in (2, 3):
            raise GraphFormatError(f"line {line_no}: edge must be 'u v [id]', got {line!r}")
        specs.append(tuple(values))

    if header is None:
        raise GraphFormatError("missing 'n m' header")

    n, m = header
    if len(specs) != m:
        raise GraphFormatError(f"header announces {m} edges but {len(specs)} were found")

    return build_graph(n, specs), comments


def load_graph(path: PathLike) -> Tuple[MultiGraph, List[str]]:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as error:
        raise GraphFormatError(f"cannot read graph file {path}: {error}") from error

    graph, comments = parse_graph(text)
    logger.debug(f"Loaded {graph} from {path}")
    return graph, comments


def format_graph(g: MultiGraph, comments: Iterable[str] = ()) -> str:
    lines = [f"# {comment}" for comment in comments]
    lines.append(f"{g.node_count} {g.edge_count}")
    lines.extend(f"{u} {v} {edge_id}" for edge_id, u, v in g.edges)
    return "\n".join(lines) + "\n"


def save_graph(path: PathLike, g: MultiGraph, comments: Iterable[str] = ()) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(format_graph(g, comments), encoding="utf-8")
    logger.info(f"Wrote {g} to {path}")
    return path


def graph_digest(g: MultiGraph) -> str:
    """sha256 of the canonical text form (comments excluded)."""
    return hashlib.sha256(format_graph(g).encode("utf-8")).hexdigest()
