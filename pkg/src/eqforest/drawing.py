"""1-plane drawings as combinatorial objects: a graph plus crossing pairs.

A :class:`Drawing` does not carry coordinates. Validation checks the
necessary conditions the density arguments rely on (each edge crossed at
most once, four distinct endpoints per crossing, planar skeleton), not
geometric realizability.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

import networkx as nx

from .graph import INFINITE, Graph, GraphError, girth, min_degree

Edge = tuple[int, int]


def _norm(edge: Iterable[int]) -> Edge:
    u, v = edge
    u, v = int(u), int(v)
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True, order=True)
class Crossing:
    """Two mutually crossed edges, stored with ``e1 < e2``."""

    e1: Edge
    e2: Edge

    def __post_init__(self):
        a, b = sorted((_norm(self.e1), _norm(self.e2)))
        object.__setattr__(self, "e1", a)
        object.__setattr__(self, "e2", b)

    @property
    def cluster(self) -> frozenset[int]:
        """The end-vertices of both edges."""
        return frozenset(self.e1 + self.e2)


@dataclass(frozen=True)
class Drawing:
    graph: Graph
    crossings: tuple[Crossing, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "crossings", tuple(sorted(self.crossings)))

    @property
    def n(self) -> int:
        return self.graph.n


@dataclass(frozen=True)
class Violation:
    kind: str  # "missing-edge" | "shared-endpoint" | "edge-reuse"
    crossing: int
    message: str


def clusters(drawing: Drawing) -> list[frozenset[int]]:
    return [c.cluster for c in drawing.crossings]


def validate_one_plane(drawing: Drawing) -> list[Violation]:
    """Every way the crossing list fails to describe a 1-plane drawing."""
    out = []
    first_use: dict[Edge, int] = {}
    for i, c in enumerate(drawing.crossings):
        for e in (c.e1, c.e2):
            if not drawing.graph.has_edge(*e):
                out.append(Violation("missing-edge", i, f"crossing {i}: {e} is not an edge"))
        if len(c.cluster) != 4:
            out.append(Violation(
                "shared-endpoint", i,
                f"crossing {i}: edges {c.e1} and {c.e2} share an endpoint",
            ))
        for e in (c.e1, c.e2):
            if e in first_use:
                out.append(Violation(
                    "edge-reuse", i,
                    f"crossing {i}: edge {e} already crossed in crossing {first_use[e]}",
                ))
            else:
                first_use[e] = i
    return out


def is_ic(drawing: Drawing) -> bool:
    """True iff the crossing clusters are pairwise disjoint."""
    seen: set[int] = set()
    for cl in clusters(drawing):
        if seen & cl:
            return False
        seen |= cl
    return True


def planarize(drawing: Drawing) -> Graph:
    """Drop the lexicographically smaller edge of every crossing."""
    drop = {c.e1 for c in drawing.crossings}
    return Graph(drawing.n, (e for e in drawing.graph.edges if e not in drop))


def to_networkx(graph: Graph) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(graph.vertices())
    g.add_edges_from(graph.edges)
    return g


def is_planar(graph: Graph) -> bool:
    planar, _ = nx.check_planarity(to_networkx(graph))
    return planar


def edge_bound(n: int, g: int) -> Fraction:
    """Maximum edge count of an IC-plane graph of order ``n`` and girth ``g``."""
    if g < 3:
        raise GraphError(f"girth must be at least 3, got {g}")
    if n < 3:
        raise GraphError(f"the bound needs n >= 3, got {n}")
    return Fraction(5 * g - 2, 4 * g - 8) * n - Fraction(2 * g, g - 2)


def min_degree_bound(g: float | int) -> int:
    if g < 3:
        raise GraphError(f"girth must be at least 3, got {g}")
    if g == 3:
        return 6
    if g == 4:
        return 4
    return 3


# class count from which colorings are guaranteed, at the girths listed
_THRESHOLDS = ((26, 3), (6, 4), (5, 5), (4, 6), (3, 8))


def threshold_F(g: float | int) -> int:
    """Guaranteed class-count threshold for IC-plane graphs of girth ``>= g``.

    Between listed girths the bound of the largest listed girth ``<= g``
    applies, because the graph classes are nested.
    """
    if g < 3:
        raise GraphError(f"girth must be at least 3, got {g}")
    for floor, value in _THRESHOLDS:
        if g >= floor:
            return value
    raise AssertionError("unreachable")


@dataclass(frozen=True)
class DensityReport:
    n: int
    edges: int
    girth: float | int
    crossings: int
    ic: bool
    edge_bound: Fraction | None
    min_degree: int | None
    min_degree_bound: int
    edge_ok: bool
    degree_ok: bool
    crossings_ok: bool
    violations: tuple[Violation, ...] = field(default=())

    @property
    def passed(self) -> bool:
        return self.edge_ok and self.degree_ok and self.crossings_ok


def check_density(drawing: Drawing) -> DensityReport:
    """Audit a drawing against the IC edge-count, min-degree and crossing bounds.

    A forest has no cycle to feed the edge bound, so that check passes
    vacuously.
    """
    G = drawing.graph
    g = girth(G)
    bound = edge_bound(G.n, g) if g != INFINITE else None
    delta = min_degree(G) if G.n else None
    delta_bound = min_degree_bound(g)
    return DensityReport(
        n=G.n,
        edges=G.num_edges,
        girth=g,
        crossings=len(drawing.crossings),
        ic=is_ic(drawing),
        edge_bound=bound,
        min_degree=delta,
        min_degree_bound=delta_bound,
        edge_ok=bound is None or G.num_edges <= bound,
        degree_ok=delta is None or delta <= delta_bound,
        crossings_ok=len(drawing.crossings) <= G.n // 4,
        violations=tuple(validate_one_plane(drawing)),
    )


def format_girth(g: float | int) -> str:
    return "INFINITE" if g == math.inf else str(g)
