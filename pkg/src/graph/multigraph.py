# File: src/graph/multigraph.py
#  Copyright (c) 2025 SpanSim contributors.
#  SpanSim is an open-source spanner simulation toolkit licensed under MIT.
#  All rights reserved where applicable.
#
#

"""
Undirected multigraph with globally unique edge IDs.

Edge IDs survive every transformation in this module: induced subgraphs,
cluster graphs and spanning subgraphs keep the IDs of the original edges,
so a spanner edge found at any level maps straight back to the input graph.
"""

import math
from collections import deque
from typing import (Dict, FrozenSet, Iterable, List, Optional, Sequence,
                    Tuple, Union)

EdgeTriple = Tuple[int, int, int]  # (edge_id, u, v)
EdgeSpec = Union[Tuple[int, int], Tuple[int, int, int]]
Distance = Union[int, float]

INFINITY = math.inf
EDGE_ID_LIMIT = 2**64


class GraphError(ValueError):
    """Base class for malformed graph input."""


class SelfLoopError(GraphError):
    pass


class DuplicateEdgeError(GraphError):
    pass


class NodeRangeError(GraphError):
    pass


class EdgeIdRangeError(GraphError):
    pass


class EmptyGraphError(GraphError):
    pass


class InvalidPartitionError(GraphError):
    pass


class MultiGraph:
    """
    Immutable undirected multigraph over nodes ``0 .. node_count - 1``.

    ``adjacency[v]`` maps every neighbour of ``v`` to the frozen set of edge
    IDs connecting them, so parallel edges are first-class.
    """

    __slots__ = ("node_count", "edges", "adjacency", "_endpoints", "_incident")

    def __init__(self, node_count: int, edges: Iterable[EdgeTriple]):
        if node_count < 0:
            raise NodeRangeError(f"node count must be non-negative, got {node_count}")

        self.node_count: int = node_count
        self.edges: Tuple[EdgeTriple, ...] = tuple(edges)
        self._endpoints: Dict[int, Tuple[int, int]] = {}

        buckets: List[Dict[int, List[int]]] = [{} for _ in range(node_count)]
        for edge_id, u, v in self.edges:
            _check_node(node_count, u)
            _check_node(node_count, v)
            if not 0 <= edge_id < EDGE_ID_LIMIT:
                raise EdgeIdRangeError(f"edge id {edge_id} is not an unsigned 64-bit integer")
            if u == v:
                raise SelfLoopError(f"edge {edge_id} is a self-loop on node {u}")
            if edge_id in self._endpoints:
                raise DuplicateEdgeError(f"edge id {edge_id} used twice")
            self._endpoints[edge_id] = (u, v)
            buckets[u].setdefault(v, []).append(edge_id)
            buckets[v].setdefault(u, []).append(edge_id)

        self.adjacency: Tuple[Dict[int, FrozenSet[int]], ...] = tuple(
            {nbr: frozenset(ids) for nbr, ids in sorted(bucket.items())}
            for bucket in buckets
        )
        self._incident: Tuple[Tuple[int, ...], ...] = tuple(
            tuple(sorted(e for ids in bucket.values() for e in ids))
            for bucket in buckets
        )

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def nodes(self) -> range:
        return range(self.node_count)

    def edge_ids(self) -> List[int]:
        return [edge_id for edge_id, _, _ in self.edges]

    def has_edge(self, edge_id: int) -> bool:
        return edge_id in self._endpoints

    def endpoints(self, edge_id: int) -> Tuple[int, int]:
        try:
            return self._endpoints[edge_id]
        except KeyError:
            raise GraphError(f"unknown edge id {edge_id}") from None

    def other_end(self, edge_id: int, node: int) -> int:
        u, v = self.endpoints(edge_id)
        if node == u:
            return v
        if node == v:
            return u
        raise GraphError(f"edge {edge_id} is not incident to node {node}")

    def neighbors(self, v: int) -> List[int]:
        _check_node(self.node_count, v)
        return list(self.adjacency[v])

    def incident_edges(self, v: int) -> Tuple[int, ...]:
        """Sorted IDs of every edge touching ``v``."""
        _check_node(self.node_count, v)
        return self._incident[v]

    def degree(self, v: int) -> int:
        return len(self.incident_edges(v))

    def __repr__(self) -> str:
        return f"MultiGraph(n={self.node_count}, m={self.edge_count})"


def _check_node(node_count: int, v: int) -> None:
    if not 0 <= v < node_count:
        raise NodeRangeError(f"node {v} out of range [0, {node_count})")


def build_graph(n: int, edge_list: Sequence[EdgeSpec]) -> MultiGraph:
    """
    Build a multigraph from ``(u, v)`` pairs or ``(u, v, id)`` triples.

    Pairs take their position in ``edge_list`` as ID, so a list made only of
    pairs is numbered sequentially from 0.
    """
    triples: List[EdgeTriple] = []
    for position, spec in enumerate(edge_list):
        if len(spec) == 2:
            u, v = spec
            edge_id = position
        elif len(spec) == 3:
            u, v, edge_id = spec
        else:
            raise GraphError(f"edge spec {spec!r} is neither (u, v) nor (u, v, id)")
        triples.append((int(edge_id), int(u), int(v)))
    return MultiGraph(n, triples)


def edges_between(g: MultiGraph, u: int, v: int) -> FrozenSet[int]:
    """IDs of the edges with endpoints {u, v}; empty when not adjacent."""
    _check_node(g.node_count, u)
    _check_node(g.node_count, v)
    return g.adjacency[u].get(v, frozenset())


def bfs_distances(
    g: MultiGraph,
    source: int,
    cutoff: Optional[int] = None,
    targets: Optional[Iterable[int]] = None,
) -> List[Distance]:
    """
    Hop distances from ``source``; unreachable nodes get ``INFINITY``.

    ``cutoff`` stops expansion past that depth and ``targets`` stops the sweep
    once all of them are settled. Settled entries are always exact.
    """
    _check_node(g.node_count, source)
    dist: List[Distance] = [INFINITY] * g.node_count
    dist[source] = 0

    pending = None
    if targets is not None:
        pending = set(targets)
        pending.discard(source)
        if not pending:
            return dist

    queue = deque([source])
    adjacency = g.adjacency
    while queue:
        node = queue.popleft()
        depth = dist[node]
        if cutoff is not None and depth >= cutoff:
            continue
        for nbr in adjacency[node]:
            if dist[nbr] is INFINITY:
                dist[nbr] = depth + 1
                queue.append(nbr)
                if pending is not None:
                    pending.discard(nbr)
                    if not pending:
                        return dist
    return dist


def induced_subgraph(g: MultiGraph, nodes: Iterable[int]) -> Tuple[MultiGraph, Dict[int, int]]:
    """
    Subgraph induced by ``nodes`` with original edge IDs preserved.

    Returns the graph and the relabeling ``original node -> new node``
    (new labels follow ascending original order).
    """
    chosen = sorted(set(nodes))
    if not chosen:
        raise EmptyGraphError("cannot induce a subgraph on an empty node set")
    for v in chosen:
        _check_node(g.node_count, v)

    relabel = {v: i for i, v in enumerate(chosen)}
    triples = [
        (edge_id, relabel[u], relabel[v])
        for edge_id, u, v in g.edges
        if u in relabel and v in relabel
    ]
    return MultiGraph(len(chosen), triples), relabel


def spanning_subgraph(g: MultiGraph, edge_ids: Iterable[int]) -> MultiGraph:
    """H = (V, S): same node set, only the listed edges (IDs preserved)."""
    keep = set(edge_ids)
    unknown = [e for e in keep if not g.has_edge(e)]
    if unknown:
        raise GraphError(f"edges {sorted(unknown)[:5]} are not in the graph")
    return MultiGraph(g.node_count, [t for t in g.edges if t[0] in keep])


class Partition:
    """
    Disjoint non-empty clusters over a node set.

    Nodes outside every cluster are unclustered; ``assignment[v]`` is the
    cluster index of ``v`` or ``None``.
    """

    __slots__ = ("node_count", "clusters", "assignment")

    def __init__(self, node_count: int, clusters: Sequence[Iterable[int]]):
        self.node_count = node_count
        self.clusters: Tuple[FrozenSet[int], ...] = tuple(frozenset(c) for c in clusters)
        self.assignment: List[Optional[int]] = [None] * node_count

        for index, cluster in enumerate(self.clusters):
            if not cluster:
                raise InvalidPartitionError(f"cluster {index} is empty")
            for v in cluster:
                if not 0 <= v < node_count:
                    raise InvalidPartitionError(f"cluster {index} holds out-of-range node {v}")
                if self.assignment[v] is not None:
                    raise InvalidPartitionError(
                        f"node {v} is in clusters {self.assignment[v]} and {index}"
                    )
                self.assignment[v] = index

    @property
    def unclustered(self) -> List[int]:
        return [v for v, index in enumerate(self.assignment) if index is None]

    def __len__(self) -> int:
        return len(self.clusters)

    def __repr__(self) -> str:
        return f"Partition(clusters={len(self.clusters)}, unclustered={len(self.unclustered)})"


def cluster_graph(g: MultiGraph, p: Partition) -> Tuple[MultiGraph, Dict[int, int]]:
    """
    Contract every cluster of ``p`` into one node.

    Inter-cluster edges survive with their IDs (parallel edges included),
    intra-cluster edges and edges touching unclustered nodes are dropped.
    The returned edge map is the identity on the surviving IDs.
    """
    if p.node_count != g.node_count:
        raise InvalidPartitionError(
            f"partition covers {p.node_count} nodes but the graph has {g.node_count}"
        )

    assignment = p.assignment
    triples: List[EdgeTriple] = []
    for edge_id, u, v in g.edges:
        cu, cv = assignment[u], assignment[v]
        if cu is None or cv is None or cu == cv:
            continue
        triples.append((edge_id, cu, cv))

    contracted = MultiGraph(len(p.clusters), triples)
    return contracted, {edge_id: edge_id for edge_id, _, _ in triples}


def diameter(g: MultiGraph) -> Distance:
    """Largest BFS distance over node pairs; ``INFINITY`` when disconnected."""
    if g.node_count == 0:
        raise EmptyGraphError("diameter of the empty graph is undefined")

    longest: Distance = 0
    for source in g.nodes():
        farthest = max(bfs_distances(g, source))
        if math.isinf(farthest):
            return INFINITY
        longest = max(longest, farthest)
    return longest
