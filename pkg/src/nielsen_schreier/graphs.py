"""Finite directed multigraphs, connectivity and canonical spanning trees.

Edges are ``(src, dst)`` pairs indexed by their position in ``Graph.edges``.
Connectivity ignores orientation.  Parallel edges and self-loops are allowed.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .errors import NoCrossingEdge, NotConnected

FORWARD = 1
BACKWARD = -1


@dataclass(frozen=True)
class Graph:
    num_vertices: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.num_vertices < 0:
            raise ValueError("num_vertices must be non-negative")
        edges = tuple((int(s), int(d)) for s, d in self.edges)
        for i, (s, d) in enumerate(edges):
            if not (0 <= s < self.num_vertices and 0 <= d < self.num_vertices):
                raise ValueError(f"edge {i} = ({s}, {d}) has an endpoint out of range")
        object.__setattr__(self, "edges", edges)

    def incident(self) -> list[list[int]]:
        """Edge indices touching each vertex, increasing; self-loops listed once."""
        adj: list[list[int]] = [[] for _ in range(self.num_vertices)]
        for i, (s, d) in enumerate(self.edges):
            adj[s].append(i)
            if d != s:
                adj[d].append(i)
        return adj


@dataclass(frozen=True)
class ParentLink:
    vertex: int
    edge: int
    direction: int  # FORWARD: the edge points parent -> child


@dataclass(frozen=True)
class SpanningTree:
    root: int
    num_vertices: int
    tree_edges: frozenset[int]
    parent: tuple[ParentLink | None, ...]  # None exactly at the root
    order: tuple[int, ...]  # vertices in discovery order, root first


def connected_components(g: Graph) -> tuple[int, ...]:
    """Component label per vertex, numbered by least member vertex."""
    labels = [-1] * g.num_vertices
    adj = g.incident()
    k = 0
    for start in range(g.num_vertices):
        if labels[start] >= 0:
            continue
        labels[start] = k
        stack = [start]
        while stack:
            v = stack.pop()
            for e in adj[v]:
                s, d = g.edges[e]
                w = d if s == v else s
                if labels[w] < 0:
                    labels[w] = k
                    stack.append(w)
        k += 1
    return tuple(labels)


def is_connected(g: Graph) -> bool:
    if g.num_vertices == 0:
        return False
    return max(connected_components(g)) == 0


def _require_connected(g: Graph) -> None:
    if not is_connected(g):
        labels = connected_components(g)
        raise NotConnected(
            f"graph with {g.num_vertices} vertices has "
            f"{len(set(labels))} components: {list(labels)}",
            labels,
        )


def find_crossing_edge(g: Graph, color: Sequence[int]) -> int:
    """Least-index edge whose endpoints get different colours."""
    if len(color) != g.num_vertices or any(c not in (0, 1) for c in color):
        raise ValueError("need one 0/1 colour per vertex")
    if len(set(color)) != 2:
        raise ValueError("both colour classes must be non-empty")
    for i, (s, d) in enumerate(g.edges):
        if color[s] != color[d]:
            return i
    raise NoCrossingEdge("no edge joins the two colour classes; the graph is not connected")


def spanning_tree(g: Graph, root: int = 0) -> SpanningTree:
    """Breadth-first spanning tree; each vertex's incident edges are scanned by index."""
    if not 0 <= root < g.num_vertices:
        raise ValueError(f"root {root} out of range")
    _require_connected(g)
    adj = g.incident()
    parent: list[ParentLink | None] = [None] * g.num_vertices
    seen = [False] * g.num_vertices
    seen[root] = True
    order = [root]
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for e in adj[u]:
            s, d = g.edges[e]
            v, direction = (d, FORWARD) if s == u else (s, BACKWARD)
            if not seen[v]:
                seen[v] = True
                parent[v] = ParentLink(u, e, direction)
                order.append(v)
                queue.append(v)
    tree_edges = frozenset(p.edge for p in parent if p is not None)
    return SpanningTree(root, g.num_vertices, tree_edges, tuple(parent), tuple(order))


def tree_path(t: SpanningTree, v: int) -> list[tuple[int, int]]:
    """``(edge, direction)`` steps of the tree path from the root to ``v``."""
    if not 0 <= v < t.num_vertices:
        raise ValueError(f"vertex {v} out of range")
    path = []
    while v != t.root:
        link = t.parent[v]
        path.append((link.edge, link.direction))
        v = link.vertex
    path.reverse()
    return path


def euler_rank(g: Graph) -> int:
    """Rank of the fundamental group of a connected graph: |E| - |V| + 1."""
    _require_connected(g)
    return len(g.edges) - g.num_vertices + 1


def non_tree_edges(g: Graph, t: SpanningTree) -> list[int]:
    return [i for i in range(len(g.edges)) if i not in t.tree_edges]


def is_spanning_tree(g: Graph, t: SpanningTree) -> bool:
    """Independent structural check of a :class:`SpanningTree` against ``g``."""
    n = g.num_vertices
    if t.num_vertices != n or not 0 <= t.root < n or t.parent[t.root] is not None:
        return False
    if len(t.tree_edges) != n - 1:
        return False
    links = [p for p in t.parent if p is not None]
    if len(links) != n - 1 or {p.edge for p in links} != set(t.tree_edges):
        return False
    for child, link in enumerate(t.parent):
        if link is None:
            if child != t.root:
                return False
            continue
        s, d = g.edges[link.edge]
        expected = (link.vertex, child) if link.direction == FORWARD else (child, link.vertex)
        if (s, d) != expected:
            return False
    for v in range(n):
        steps = 0
        while v != t.root:
            v = t.parent[v].vertex
            steps += 1
            if steps > n:
                return False
    return True
