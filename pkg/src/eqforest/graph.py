"""Simple undirected graphs on dense integer vertices.

Every other module works on :class:`Graph`: vertices are ``0..n-1``,
edges are stored as sorted pairs, and the object never changes after
construction.
"""

from __future__ import annotations

import heapq
import math
from collections import deque
from typing import Iterable, NamedTuple

INFINITE = math.inf


class GraphError(ValueError):
    """Raised for malformed graph input (bad endpoints, duplicates, loops)."""


class Graph:
    """Immutable simple graph.

    Parameters
    ----------
    n : int
        Number of vertices. Isolated vertices are allowed.
    edges : iterable of pairs
        Unordered vertex pairs. A pair given twice (in either orientation)
        is rejected rather than merged.
    """

    __slots__ = ("_n", "_edges", "_adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if isinstance(n, bool) or not isinstance(n, int) or n < 0:
            raise GraphError(f"vertex count must be a non-negative integer, got {n!r}")
        adj: list[set[int]] = [set() for _ in range(n)]
        normalized = []
        for pair in edges:
            try:
                u, v = pair
                u, v = int(u), int(v)
            except (TypeError, ValueError):
                raise GraphError(f"edge must be a pair of integers, got {pair!r}") from None
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
            if v in adj[u]:
                raise GraphError(f"duplicate edge ({min(u, v)}, {max(u, v)})")
            adj[u].add(v)
            adj[v].add(u)
            normalized.append((u, v) if u < v else (v, u))
        self._n = n
        self._edges = tuple(sorted(normalized))
        self._adj = tuple(frozenset(a) for a in adj)

    @property
    def n(self) -> int:
        return self._n

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """Sorted edge list with the smaller endpoint first."""
        return self._edges

    @property
    def num_edges(self) -> int:
        return len(self._edges)

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self._n and v in self._adj[u]

    def vertices(self) -> range:
        return range(self._n)

    def add_vertices(self, k: int) -> "Graph":
        """Return a copy with ``k`` extra isolated vertices appended."""
        return Graph(self._n + k, self._edges)

    def without_edge(self, u: int, v: int) -> "Graph":
        key = (min(u, v), max(u, v))
        if key not in set(self._edges):
            raise GraphError(f"({u}, {v}) is not an edge")
        return Graph(self._n, (e for e in self._edges if e != key))

    def with_edges(self, extra: Iterable[tuple[int, int]]) -> "Graph":
        return Graph(self._n, list(self._edges) + list(extra))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._n, self._edges))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, edges={len(self._edges)})"


class Subgraph(NamedTuple):
    """An induced subgraph plus the map back to the parent's labels.

    ``vertices[i]`` is the parent vertex that became vertex ``i``.
    """

    graph: Graph
    vertices: tuple[int, ...]


def min_degree(graph: Graph) -> int:
    if graph.n == 0:
        raise GraphError("minimum degree of the empty graph is undefined")
    return min(graph.degree(v) for v in graph.vertices())


def max_degree(graph: Graph) -> int:
    if graph.n == 0:
        raise GraphError("maximum degree of the empty graph is undefined")
    return max(graph.degree(v) for v in graph.vertices())


def girth(graph: Graph) -> float | int:
    """Length of the shortest cycle, or ``INFINITE`` for a forest.

    Runs a breadth-first search from every vertex; a non-tree edge ``uw``
    seen from root ``r`` closes a closed walk of length
    ``dist[u] + dist[w] + 1`` through ``r``, and the minimum over all roots
    is attained by a genuine shortest cycle.
    """
    best = INFINITE
    for root in graph.vertices():
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            # nothing shorter can be found past this depth
            if 2 * dist[u] + 1 >= best:
                break
            for w in graph.neighbors(u):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def edges_between(graph: Graph, s1: Iterable[int], s2: Iterable[int]) -> int:
    """Number of edges with one end in ``s1`` and the other in ``s2``."""
    s1, s2 = set(s1), set(s2)
    if s1 & s2:
        raise GraphError("vertex sets must be disjoint")
    for v in s1 | s2:
        if not 0 <= v < graph.n:
            raise GraphError(f"vertex {v} is not in the graph")
    if len(s1) > len(s2):
        s1, s2 = s2, s1
    return sum(1 for u in s1 for w in graph.neighbors(u) if w in s2)


def induced_subgraph(graph: Graph, vertices: Iterable[int]) -> Subgraph:
    keep = sorted(set(vertices))
    for v in keep:
        if not 0 <= v < graph.n:
            raise GraphError(f"vertex {v} is not in the graph")
    index = {v: i for i, v in enumerate(keep)}
    edges = [
        (index[u], index[v]) for u, v in graph.edges if u in index and v in index
    ]
    return Subgraph(Graph(len(keep), edges), tuple(keep))


def connected_components(graph: Graph) -> list[list[int]]:
    seen = [False] * graph.n
    comps = []
    for s in graph.vertices():
        if seen[s]:
            continue
        seen[s] = True
        comp, stack = [s], [s]
        while stack:
            u = stack.pop()
            for w in graph.neighbors(u):
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def is_forest(graph: Graph) -> bool:
    return graph.num_edges == graph.n - len(connected_components(graph))


def degeneracy_order(graph: Graph) -> list[int]:
    """Vertices in the order they are removed by repeated min-degree deletion.

    Ties go to the smallest index.
    """
    deg = [graph.degree(v) for v in graph.vertices()]
    heap = [(d, v) for v, d in enumerate(deg)]
    heapq.heapify(heap)
    removed = [False] * graph.n
    order = []
    while heap:
        d, v = heapq.heappop(heap)
        if removed[v] or d != deg[v]:
            continue
        removed[v] = True
        order.append(v)
        for w in graph.neighbors(v):
            if not removed[w]:
                deg[w] -= 1
                heapq.heappush(heap, (deg[w], w))
    return order


def degeneracy(graph: Graph) -> int:
    if graph.n == 0:
        raise GraphError("degeneracy of the empty graph is undefined")
    deg = [graph.degree(v) for v in graph.vertices()]
    removed = [False] * graph.n
    best = 0
    for v in degeneracy_order(graph):
        best = max(best, deg[v])
        removed[v] = True
        for w in graph.neighbors(v):
            if not removed[w]:
                deg[w] -= 1
    return best


def bfs_distance(graph: Graph, source: int, target: int, limit: float = INFINITE) -> float | int:
    """Shortest-path length from ``source`` to ``target`` (``INFINITE`` if
    unreachable or longer than ``limit``)."""
    if source == target:
        return 0
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        if dist[u] >= limit:
            break
        for w in graph.neighbors(u):
            if w not in dist:
                if w == target:
                    return dist[u] + 1
                dist[w] = dist[u] + 1
                queue.append(w)
    return INFINITE
