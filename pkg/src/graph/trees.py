# File: src/graph/trees.py
#  Copyright (c) 2025 SpanSim contributors.
#  SpanSim is an open-source spanner simulation toolkit licensed under MIT.
#  All rights reserved where applicable.
#
#

from collections import deque
from typing import Dict, List, Mapping, Optional, Tuple

ParentLink = Tuple[int, int]  # (parent node, edge id)


class TreeHeightError(RuntimeError):
    def __init__(self, root: int, height: int, bound: int):
        super().__init__(f"cluster tree rooted at {root} has height {height} > {bound}")
        self.root = root
        self.height = height
        self.bound = bound


class ClusterTree:
    """
    Rooted spanning tree of a cluster, stored as parent pointers.

    Every non-root node maps to ``(parent, edge_id)`` where ``edge_id`` is the
    original graph edge joining the two. Instances are never mutated; the
    structural operations return new trees.
    """

    __slots__ = ("root", "parent")

    def __init__(self, root: int, parent: Optional[Mapping[int, ParentLink]] = None):
        self.root = root
        self.parent: Dict[int, ParentLink] = dict(parent or {})
        if root in self.parent:
            raise ValueError(f"root {root} cannot have a parent")

    @classmethod
    def singleton(cls, root: int) -> "ClusterTree":
        return cls(root)

    @property
    def size(self) -> int:
        return len(self.parent) + 1

    def nodes(self) -> List[int]:
        return sorted([self.root, *self.parent])

    def edge_ids(self) -> List[int]:
        return sorted(edge_id for _, edge_id in self.parent.values())

    def children(self) -> Dict[int, List[ParentLink]]:
        """node -> sorted ``(child, edge_id)`` pairs."""
        kids: Dict[int, List[ParentLink]] = {v: [] for v in self.nodes()}
        for child, (parent, edge_id) in self.parent.items():
            kids[parent].append((child, edge_id))
        for links in kids.values():
            links.sort()
        return kids

    def depths(self) -> Dict[int, int]:
        kids = self.children()
        depth = {self.root: 0}
        queue = deque([self.root])
        while queue:
            node = queue.popleft()
            for child, _ in kids[node]:
                depth[child] = depth[node] + 1
                queue.append(child)
        if len(depth) != self.size:
            raise ValueError(f"tree rooted at {self.root} is not connected")
        return depth

    @property
    def height(self) -> int:
        return max(self.depths().values())

    def require_height(self, bound: int) -> int:
        height = self.height
        if height > bound:
            raise TreeHeightError(self.root, height, bound)
        return height

    def path_to_root(self, node: int) -> List[ParentLink]:
        """``(next node, edge)`` hops from ``node`` up to the root."""
        hops: List[ParentLink] = []
        while node != self.root:
            parent, edge_id = self.parent[node]
            hops.append((parent, edge_id))
            node = parent
        return hops

    def route_from_root(self, node: int) -> List[int]:
        """Edge IDs walked from the root down to ``node``."""
        return [edge_id for _, edge_id in reversed(self.path_to_root(node))]

    def rerooted(self, new_root: int) -> "ClusterTree":
        if new_root == self.root:
            return ClusterTree(self.root, self.parent)
        if new_root not in self.parent:
            raise ValueError(f"node {new_root} is not in the tree rooted at {self.root}")

        parent = dict(self.parent)
        del parent[new_root]
        below = new_root
        for above, edge_id in self.path_to_root(new_root):
            parent[above] = (below, edge_id)
            below = above
        return ClusterTree(new_root, parent)

    def graft(self, satellite: "ClusterTree", attach: int, anchor: int, edge_id: int) -> "ClusterTree":
        """
        Hang ``satellite`` below ``anchor`` through ``edge_id``.

        The satellite is re-rooted at ``attach`` (its endpoint of the edge)
        and the result keeps this tree's root.
        """
        if anchor != self.root and anchor not in self.parent:
            raise ValueError(f"anchor {anchor} is not in the tree rooted at {self.root}")
        overlap = set(satellite.nodes()) & set(self.nodes())
        if overlap:
            raise ValueError(f"trees share nodes {sorted(overlap)[:5]}")

        parent = dict(self.parent)
        parent.update(satellite.rerooted(attach).parent)
        parent[attach] = (anchor, edge_id)
        return ClusterTree(self.root, parent)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ClusterTree)
            and self.root == other.root
            and self.parent == other.parent
        )

    def __repr__(self) -> str:
        return f"ClusterTree(root={self.root}, size={self.size})"
