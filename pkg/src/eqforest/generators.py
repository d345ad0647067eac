"""Seeded graph and drawing generators.

Randomness comes from ``numpy.random.default_rng(seed)`` (PCG64), so the
same parameters and seed always give the same graph.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import networkx as nx
import numpy as np
from scipy.spatial import Delaunay

from .drawing import Crossing, Drawing, check_density, to_networkx
from .graph import INFINITE, Graph, GraphError, bfs_distance, girth

RNG_ALGORITHM = "numpy.random.PCG64"


def _union_find(n):
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    return parent, find


class _Adjacency:
    """Mutable neighbor sets for incremental construction; ``bfs_distance``
    only needs ``neighbors``."""

    def __init__(self, graph: Graph):
        self.adj = [set(graph.neighbors(v)) for v in range(graph.n)]

    def neighbors(self, v: int) -> set[int]:
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def add(self, u: int, v: int) -> None:
        self.adj[u].add(v)
        self.adj[v].add(u)

    def remove(self, u: int, v: int) -> None:
        self.adj[u].discard(v)
        self.adj[v].discard(u)


def _closes_short_cycle(adj: _Adjacency, u: int, v: int, min_girth: int) -> bool:
    return bfs_distance(adj, u, v, limit=min_girth - 1) + 1 < min_girth


def _delaunay_edges(n: int, rng: np.random.Generator) -> list[tuple[int, int]]:
    if n <= 3:
        return [(u, v) for u in range(n) for v in range(u + 1, n)]
    points = rng.random((n, 2))
    tri = Delaunay(points)
    edges = set()
    for a, b, c in tri.simplices:
        for u, v in ((a, b), (b, c), (a, c)):
            edges.add((int(min(u, v)), int(max(u, v))))
    return sorted(edges)


def random_planar(n: int, min_girth: int = 3, seed: int = 0,
                  max_edges: int | None = None) -> Graph:
    """Connected planar graph with girth at least ``min_girth``.

    Edges are drawn from the Delaunay triangulation of ``n`` random points
    (a planar host), first as a random spanning tree and then in random
    order, skipping any edge that would close a cycle shorter than
    ``min_girth``. Insertion stops when no host edge is admissible or
    ``max_edges`` is reached.
    """
    if n < 1:
        raise GraphError(f"need at least one vertex, got {n}")
    if min_girth < 3:
        raise GraphError(f"girth floor must be >= 3, got {min_girth}")
    rng = np.random.default_rng(seed)
    host = _delaunay_edges(n, rng)
    order = [host[i] for i in rng.permutation(len(host))]

    parent, find = _union_find(n)
    tree, extra = [], []
    for u, v in order:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            tree.append((u, v))
        else:
            extra.append((u, v))
    adj = _Adjacency(Graph(n, tree))
    edges = list(tree)
    cap = max_edges if max_edges is not None else len(host)
    for u, v in extra:
        if len(edges) >= cap:
            break
        if not _closes_short_cycle(adj, u, v, min_girth):
            adj.add(u, v)
            edges.append((u, v))
    return Graph(n, edges)


def _faces(graph: Graph) -> list[list[int]]:
    """Boundary walks of the faces of some planar embedding of ``graph``."""
    planar, emb = nx.check_planarity(to_networkx(graph))
    if not planar:
        raise GraphError("graph is not planar")
    seen = set()
    faces = []
    for u, v in sorted(emb.edges()):
        if (u, v) in seen:
            continue
        faces.append(emb.traverse_face(u, v, mark_half_edges=seen))
    return faces


@dataclass
class _Augmenter:
    graph: Graph
    min_girth: int
    used_vertices: set[int] = field(default_factory=set)
    used_faces: set[int] = field(default_factory=set)
    crossings: list[Crossing] = field(default_factory=list)

    def admissible(self, new_edges) -> bool:
        adj = self.adj
        added = []
        ok = True
        for u, v in new_edges:
            if adj.has_edge(u, v) or _closes_short_cycle(adj, u, v, self.min_girth):
                ok = False
                break
            adj.add(u, v)
            added.append((u, v))
        for u, v in added:
            adj.remove(u, v)
        return ok

    def __post_init__(self):
        self.adj = _Adjacency(self.graph)
        self.added: list[tuple[int, int]] = []

    def commit(self, old_edge, new_edges, faces) -> None:
        for u, v in new_edges:
            self.adj.add(u, v)
        self.added += new_edges
        e1, e2 = (old_edge, new_edges[0]) if old_edge else new_edges
        self.crossings.append(Crossing(e1, e2))
        self.used_vertices |= set(e1) | set(e2)
        self.used_faces |= set(faces)


def ic_augment(graph: Graph, max_crossings: int, seed: int = 0,
               min_girth: int = 3, attempts: int = 40) -> Drawing:
    """Add independent crossings to a planar graph.

    Each crossing lives inside the faces of a fixed planar embedding: either
    two new chords with interleaved ends inside one face, or a new edge
    ``cd`` crossing an existing edge ``ab`` from the face on one side of
    ``ab`` to the face on the other. Every crossing uses four vertices not
    used by any earlier crossing and faces not used before, so the clusters
    are disjoint and all crossings can be drawn at once. New edges never
    close a cycle shorter than ``min_girth``.
    """
    if max_crossings < 0:
        raise ValueError("max_crossings must be non-negative")
    rng = np.random.default_rng(seed)
    aug = _Augmenter(graph, min_girth)
    limit = min(max_crossings, graph.n // 4)
    if limit == 0 or graph.n < 4:
        return Drawing(graph)

    faces = _faces(graph)
    edge_faces: dict[tuple[int, int], list[int]] = {}
    for fi, walk in enumerate(faces):
        for a, b in zip(walk, walk[1:] + walk[:1]):
            edge_faces.setdefault((min(a, b), max(a, b)), []).append(fi)

    def fresh(vs):
        return len(set(vs)) == len(vs) and not aug.used_vertices & set(vs)

    for _ in range(attempts * limit):
        if len(aug.crossings) >= limit:
            break
        if rng.random() < 0.5:
            fi = int(rng.integers(len(faces)))
            walk = faces[fi]
            if fi in aug.used_faces or len(walk) < 4:
                continue
            pos = sorted(rng.choice(len(walk), size=4, replace=False))
            a, c, b, d = (walk[p] for p in pos)
            if not fresh([a, b, c, d]):
                continue
            chords = [(min(a, b), max(a, b)), (min(c, d), max(c, d))]
            if aug.admissible(chords):
                aug.commit(None, chords, [fi])
        else:
            edges = graph.edges
            a, b = edges[int(rng.integers(len(edges)))]
            sides = edge_faces.get((a, b), [])
            if len(sides) != 2 or sides[0] == sides[1]:
                continue
            if aug.used_faces & set(sides):
                continue
            left = [v for v in faces[sides[0]] if v not in (a, b)]
            right = [v for v in faces[sides[1]] if v not in (a, b)]
            if not left or not right:
                continue
            c = left[int(rng.integers(len(left)))]
            d = right[int(rng.integers(len(right)))]
            if not fresh([a, b, c, d]):
                continue
            chord = (min(c, d), max(c, d))
            if aug.admissible([chord]):
                aug.commit((a, b), [chord], sides)

    drawing = Drawing(graph.with_edges(aug.added), tuple(aug.crossings))
    if not check_density(drawing).passed:
        raise AssertionError("augmented drawing violates the IC density bounds")
    return drawing


def star(delta: int) -> Graph:
    """``K_{1,delta}`` with center 0."""
    if delta < 0:
        raise GraphError("star needs delta >= 0")
    return Graph(delta + 1, [(0, i) for i in range(1, delta + 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle needs n >= 3, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def complete(k: int) -> Graph:
    return Graph(k, [(u, v) for u in range(k) for v in range(u + 1, k)])


def subdivide(graph: Graph, r: int) -> Graph:
    """Replace every edge by a path of ``r + 1`` edges (``r`` new vertices each)."""
    if r < 0:
        raise GraphError("subdivision count must be >= 0")
    n = graph.n
    edges = []
    for u, v in graph.edges:
        chain = [u] + list(range(n, n + r)) + [v]
        n += r
        edges.extend(zip(chain, chain[1:]))
    return Graph(n, edges)


def sharpness_example(k: int, t: int) -> Graph:
    """``K_k`` plus ``t`` vertices joined to every vertex of the clique."""
    if k < 2:
        raise GraphError(f"need k >= 2, got {k}")
    if t < 2 * k - 3:
        raise GraphError(f"need t >= 2k - 3 = {2 * k - 3}, got {t}")
    edges = [(u, v) for u in range(k) for v in range(u + 1, k)]
    edges += [(u, k + i) for i in range(t) for u in range(k)]
    return Graph(k + t, edges)


def fan_example(path_len: int) -> Graph:
    """A path on ``path_len`` vertices plus a universal vertex (the last one)."""
    if path_len < 1:
        raise GraphError(f"need path_len >= 1, got {path_len}")
    edges = [(i, i + 1) for i in range(path_len - 1)]
    edges += [(i, path_len) for i in range(path_len)]
    return Graph(path_len + 1, edges)


FAMILIES = {
    "star": star,
    "cycle": cycle,
    "path": path,
    "complete": complete,
    "sharpness": sharpness_example,
    "fan": fan_example,
}


@dataclass(frozen=True)
class CorpusEntry:
    graph_id: str
    drawing: Drawing
    meta: dict


def ic_corpus(count: int, min_girth: int, seed: int = 0,
              n_range: tuple[int, int] = (8, 60)) -> list[CorpusEntry]:
    """``count`` IC drawings with girth at least ``min_girth``.

    Instance ``i`` uses seed ``seed * 100003 + i`` for both the planar base
    and the augmentation, and a vertex count drawn uniformly from
    ``n_range``.
    """
    lo, hi = n_range
    picker = np.random.default_rng(seed)
    out = []
    for i in range(count):
        n = int(picker.integers(lo, hi + 1))
        sub_seed = seed * 100003 + i
        base = random_planar(n, min_girth, sub_seed)
        drawing = ic_augment(base, n // 4, sub_seed, min_girth=min_girth)
        out.append(CorpusEntry(
            f"ic-g{min_girth}-s{seed}-{i:04d}",
            drawing,
            {"construction": "random_planar+ic_augment", "n": n, "min_girth": min_girth,
             "seed": sub_seed, "rng": RNG_ALGORITHM},
        ))
    return out


def high_girth_corpus(min_girth: int = 26) -> list[CorpusEntry]:
    """Crossing-free drawings of girth at least ``min_girth``: long cycles and
    subdivided small complete graphs."""
    out = []
    for n in (min_girth, min_girth + 1, 2 * min_girth):
        out.append(CorpusEntry(f"cycle-{n}", Drawing(cycle(n)),
                               {"construction": f"cycle({n})"}))
    for k in (3, 4):
        r = -(-min_girth // 3) - 1
        g = subdivide(complete(k), r)
        assert girth(g) >= min_girth or girth(g) == INFINITE
        out.append(CorpusEntry(f"subdivided-K{k}-r{r}", Drawing(g),
                               {"construction": f"subdivide(complete({k}), {r})"}))
    return out
