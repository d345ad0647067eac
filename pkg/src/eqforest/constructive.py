"""Constructive equitable tree-coloring.

The procedure mirrors the induction used for IC-plane graphs:

* pad the graph with isolated vertices until its order is a multiple of
  ``m``;
* peel minimum-degree vertices and re-insert them one at a time, placing
  each into a smallest class where it closes no cycle, or relaying a vertex
  out of the way through at most two transfers;
* if that fails, delete an edge ``x x1`` at a low-degree vertex, color the
  rest, and repair the coloring around ``x`` by transfer chains or by the
  exchange step: a vertex ``z`` of ``x``'s class with two non-adjacent
  neighbors ``y1, y2`` that each send exactly two edges into that class lets
  the class be rebuilt as a forest of the right size while the remaining
  vertices are colored recursively with ``m - 1`` classes;
* fall back to exhaustive search for whatever time is left.

Every returned coloring is verified. The constructive steps never conclude
infeasibility; an ``UNSAT`` outcome can only come from the exhaustive
fallback and is tagged ``solver="exact"``.
"""

from __future__ import annotations

import logging
import math
import time
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Union

from .coloring import FOREST, Partition, verify
from .exact import DEFAULT_TIMEOUT, exact_solve
from .graph import Graph, Subgraph, degeneracy_order, induced_subgraph, is_forest
from .outcome import SolveOutcome, Status, UnknownReason

log = logging.getLogger(__name__)

CONSTRUCTIVE_SHARE = 0.7
MAX_CHAIN = 3
MAX_EDGE_CANDIDATES = 6


# -- moves -------------------------------------------------------------------

@dataclass(frozen=True)
class Place:
    v: int
    cls: int


@dataclass(frozen=True)
class Transfer:
    v: int
    src: int
    dst: int


@dataclass(frozen=True)
class Exchange:
    """Rebuild of the whole coloring after a successful exchange step.

    ``result`` is the full assignment afterwards, so a replay does not need
    to re-run the recursive solve.
    """

    z: int
    y1: int
    y2: int
    depth: int
    result: tuple[int, ...]


Move = Union[Place, Transfer, Exchange]


@dataclass
class MoveTrace:
    moves: list[Move] = field(default_factory=list)

    def append(self, move: Move) -> None:
        self.moves.append(move)

    def extend(self, other: "MoveTrace") -> None:
        self.moves.extend(other.moves)

    def __len__(self) -> int:
        return len(self.moves)

    def __iter__(self):
        return iter(self.moves)

    def replay(self, n: int, initial: Iterable[int] | None = None) -> list[int]:
        """Apply the moves to ``initial`` (default: nothing assigned, all 0)."""
        cls = list(initial) if initial is not None else [0] * n
        for mv in self.moves:
            if isinstance(mv, Place):
                if cls[mv.v]:
                    raise ValueError(f"{mv}: vertex already placed")
                cls[mv.v] = mv.cls
            elif isinstance(mv, Transfer):
                if cls[mv.v] != mv.src:
                    raise ValueError(f"{mv}: vertex is in class {cls[mv.v]}")
                cls[mv.v] = mv.dst
            else:
                cls = list(mv.result)
        return cls


# -- working coloring --------------------------------------------------------

class WorkingColoring:
    """Mutable, possibly partial assignment of a graph's vertices to classes
    ``1..m`` (``0`` means unassigned). Every change is logged to ``trace``.
    """

    def __init__(self, graph: Graph, m: int, trace: MoveTrace | None = None,
                 debug: bool = False):
        self.graph = graph
        self.m = m
        self.cls = [0] * graph.n
        self.members: list[set[int]] = [set() for _ in range(m + 1)]
        self.trace = trace if trace is not None else MoveTrace()
        self.debug = debug

    @classmethod
    def from_assignment(cls, graph, m, assignment, trace=None, debug=False):
        wc = cls(graph, m, trace, debug)
        for v, c in enumerate(assignment):
            if c:
                wc.cls[v] = c
                wc.members[c].add(v)
        return wc

    def size(self, c: int) -> int:
        return len(self.members[c])

    def sizes(self) -> list[int]:
        return [len(self.members[c]) for c in range(1, self.m + 1)]

    def inside(self, v: int, c: int, without: Iterable[int] = ()) -> list[int]:
        skip = set(without)
        return [u for u in self.graph.neighbors(v)
                if self.cls[u] == c and u not in skip and u != v]

    def fits(self, v: int, c: int, without: Iterable[int] = ()) -> bool:
        """Whether class ``c`` (minus ``without``) stays acyclic with ``v`` in it.

        Exact: ``v`` may have several neighbors in the class as long as they
        lie in different trees.
        """
        skip = set(without)
        skip.add(v)
        nbrs = [u for u in self.graph.neighbors(v) if self.cls[u] == c and u not in skip]
        if len(nbrs) <= 1:
            return True
        targets = set(nbrs)
        seen: set[int] = set()
        for s in nbrs:
            if s in seen:
                return False
            seen.add(s)
            queue = deque([s])
            while queue:
                a = queue.popleft()
                for b in self.graph.neighbors(a):
                    if b in seen or b in skip or self.cls[b] != c:
                        continue
                    if b in targets:
                        return False
                    seen.add(b)
                    queue.append(b)
        return True

    def place(self, v: int, c: int) -> None:
        self.cls[v] = c
        self.members[c].add(v)
        self.trace.append(Place(v, c))
        self._check()

    def transfer(self, v: int, dst: int) -> None:
        src = self.cls[v]
        self.members[src].discard(v)
        self.members[dst].add(v)
        self.cls[v] = dst
        self.trace.append(Transfer(v, src, dst))
        self._check()

    def assign_all(self, assignment: Iterable[int]) -> None:
        self.cls = list(assignment)
        self.members = [set() for _ in range(self.m + 1)]
        for v, c in enumerate(self.cls):
            if c:
                self.members[c].add(v)

    def class_is_forest(self, c: int) -> bool:
        return is_forest(induced_subgraph(self.graph, self.members[c]).graph)

    def all_forests(self) -> bool:
        return all(self.class_is_forest(c) for c in range(1, self.m + 1))

    def complete(self) -> bool:
        return all(self.cls)

    def partition(self) -> Partition:
        return Partition(self.m, tuple(self.cls))

    def _check(self) -> None:
        if self.debug and not self.all_forests():
            raise AssertionError(f"a class stopped being a forest after {self.trace.moves[-1]}")


def transfer_move(coloring: WorkingColoring, v: int, to: int) -> bool:
    """Move ``v`` into class ``to`` if that class stays acyclic.

    Returns whether the move was applied (and recorded).
    """
    if coloring.cls[v] == to or not coloring.fits(v, to):
        return False
    coloring.transfer(v, to)
    return True


def _by_guard(coloring: WorkingColoring, v: int, classes: Iterable[int]) -> list[int]:
    # classes where v has at most one neighbor first, then the rest, by index
    return sorted(classes, key=lambda c: (len(coloring.inside(v, c)) > 1, c))


def reinsert_vertex(coloring: WorkingColoring, v: int) -> bool:
    """Insert unassigned ``v`` while keeping the class sizes balanced.

    Tries, in order: a smallest class that ``v`` fits; one relay (some ``u``
    leaves class ``i`` for a smallest class ``j`` and ``v`` takes its place
    in ``i``); a two-step relay ``i -> k -> j``. Returns ``False`` when none
    applies; the coloring is then unchanged.
    """
    m = coloring.m
    sizes = coloring.sizes()
    lo = min(sizes)
    smallest = [c for c in range(1, m + 1) if sizes[c - 1] == lo]
    for c in _by_guard(coloring, v, smallest):
        if coloring.fits(v, c):
            coloring.place(v, c)
            return True

    for j in smallest:
        for i in _by_guard(coloring, v, (c for c in range(1, m + 1) if c != j)):
            for u in sorted(coloring.members[i]):
                if coloring.fits(v, i, without=(u,)) and coloring.fits(u, j):
                    coloring.transfer(u, j)
                    coloring.place(v, i)
                    return True

    for j in smallest:
        into_j = {k: [u for u in sorted(coloring.members[k]) if coloring.fits(u, j)]
                  for k in range(1, m + 1) if k != j}
        for i in range(1, m + 1):
            if i == j:
                continue
            for u1 in sorted(coloring.members[i]):
                if not coloring.fits(v, i, without=(u1,)):
                    continue
                for k, movers in into_j.items():
                    if k == i:
                        continue
                    for u2 in movers:
                        if coloring.fits(u1, k, without=(u2,)):
                            coloring.transfer(u2, j)
                            coloring.transfer(u1, k)
                            coloring.place(v, i)
                            return True
    return False


# -- padding -----------------------------------------------------------------

def pad_to_multiple(graph: Graph, m: int) -> tuple[Graph, int]:
    """Append isolated vertices until the order is divisible by ``m``."""
    if m < 1:
        raise ValueError(f"class count must be >= 1, got {m}")
    k = (m - graph.n % m) % m
    return graph.add_vertices(k), k


def strip_padding(graph: Graph, pad_count: int) -> Graph:
    """Inverse of :func:`pad_to_multiple`."""
    n = graph.n - pad_count
    for v in range(n, graph.n):
        if graph.degree(v):
            raise ValueError(f"vertex {v} is not an isolated padding vertex")
    return Graph(n, graph.edges)


def _unpad(coloring: WorkingColoring, n: int) -> Partition | None:
    """Restrict to the first ``n`` vertices, first spreading the padding
    vertices over distinct classes so the restriction stays equitable."""
    pads = range(n, coloring.graph.n)
    crowded = lambda: [c for c in range(1, coloring.m + 1)  # noqa: E731
                       if sum(1 for p in pads if coloring.cls[p] == c) > 1]
    while crowded():
        c = crowded()[0]
        p = next(p for p in pads if coloring.cls[p] == c)
        free = [k for k in range(1, coloring.m + 1)
                if not any(coloring.cls[q] == k for q in pads)]
        swap = next(((u, k) for k in free for u in sorted(coloring.members[k])
                     if coloring.fits(u, c, without=(p,))), None)
        if swap is None:
            return None
        u, k = swap
        coloring.transfer(p, k)
        coloring.transfer(u, c)
    return Partition(coloring.m, tuple(coloring.cls[:n]))


# -- exchange configuration ----------------------------------------------------

class LiftError(RuntimeError):
    """Internal precondition of the exchange step broken; indicates a bug."""


class Configuration:
    """Coloring of ``G - x x1`` with every class of size ``t``, seen from ``x``.

    ``first`` is the class holding ``x``; ``v1_prime`` is that class without
    ``x``; ``rest`` (the union of all other classes) and ``low_attached``
    (vertices of ``rest`` with exactly two neighbors in ``v1_prime``) are
    recomputed on every access.
    """

    def __init__(self, graph: Graph, m: int, x: int, x1: int, coloring: WorkingColoring):
        if not graph.has_edge(x, x1):
            raise ValueError(f"({x}, {x1}) is not an edge")
        if graph.n % m:
            raise ValueError("configuration needs an order divisible by m")
        self.graph = graph
        self.m = m
        self.t = graph.n // m
        self.x = x
        self.x1 = x1
        self.coloring = coloring

    @property
    def first(self) -> int:
        return self.coloring.cls[self.x]

    @property
    def v1_prime(self) -> set[int]:
        return self.coloring.members[self.first] - {self.x}

    @property
    def rest(self) -> set[int]:
        first = self.first
        return {v for v in self.graph.vertices() if self.coloring.cls[v] != first}

    @property
    def low_attached(self) -> set[int]:
        v1 = self.v1_prime
        return {v for v in self.rest
                if sum(1 for u in self.graph.neighbors(v) if u in v1) == 2}

    def reduced_graph(self, z: int, y1: int, y2: int) -> Subgraph:
        keep = (self.rest | {self.x, z}) - {y1, y2}
        return induced_subgraph(self.graph, keep)


def exchange_candidates(cfg: Configuration) -> Iterator[tuple[int, int, int]]:
    """All ``(z, y1, y2)`` with ``z`` in ``v1_prime`` adjacent to non-adjacent
    ``y1 < y2`` from ``low_attached``, in lexicographic order."""
    a1 = cfg.low_attached
    if len(a1) < 2:
        return
    for z in sorted(cfg.v1_prime):
        ys = sorted(u for u in cfg.graph.neighbors(z) if u in a1)
        for y1, y2 in combinations(ys, 2):
            if not cfg.graph.has_edge(y1, y2):
                yield z, y1, y2


def find_exchange_vertex(cfg: Configuration) -> tuple[int, int, int] | None:
    """First triple of :func:`exchange_candidates`, or ``None``."""
    return next(exchange_candidates(cfg), None)


def rebuilt_class(cfg: Configuration, z: int, y1: int, y2: int) -> set[int]:
    return (cfg.v1_prime - {z}) | {y1, y2}


def lift_coloring(cfg: Configuration, z: int, y1: int, y2: int,
                  sub: Partition, sub_vertices: tuple[int, ...]) -> Partition:
    """Combine the rebuilt first class with an ``(m-1)``-coloring of the
    reduced graph.

    ``sub`` colors the graph returned by :meth:`Configuration.reduced_graph`
    and ``sub_vertices`` maps its vertices back. The rebuilt class
    ``v1_prime - {z} + {y1, y2}`` becomes class 1; class ``c`` of ``sub``
    becomes class ``c + 1``.
    """
    G = cfg.graph
    if cfg.t < 2:
        raise LiftError("the exchange step needs classes of size t >= 2")
    if any(s != cfg.t for s in cfg.coloring.sizes()):
        raise LiftError("configuration classes must all have size t")
    f1 = rebuilt_class(cfg, z, y1, y2)
    if len(f1) != cfg.t:
        raise LiftError(f"rebuilt class has order {len(f1)}, expected {cfg.t}")
    if not is_forest(induced_subgraph(G, f1).graph):
        raise LiftError("rebuilt class is not a forest")
    if sub.m != cfg.m - 1 or len(sub_vertices) != sub.n:
        raise LiftError("sub-coloring has the wrong shape")
    sub_graph = induced_subgraph(G, sub_vertices).graph
    report = verify(sub_graph, sub, FOREST)
    if not report.valid or any(s != cfg.t for s in sub.sizes()):
        raise LiftError(f"sub-coloring is not an equitable tree-coloring:\n{report.describe()}")
    if set(sub_vertices) | f1 != set(G.vertices()) or set(sub_vertices) & f1:
        raise LiftError("rebuilt class and reduced graph do not partition the vertices")
    assignment = [0] * G.n
    for v in f1:
        assignment[v] = 1
    for i, v in enumerate(sub_vertices):
        assignment[v] = sub.assignment[i] + 1
    return Partition(cfg.m, tuple(assignment))


def repair_with_transfers(cfg: Configuration, deadline: float = math.inf) -> bool:
    """Move ``x`` out of its class along a chain of at most ``MAX_CHAIN``
    displaced vertices, the last of which lands in ``v1_prime``.

    With one displaced vertex this is ``x -> V_i`` and ``u -> V'_1``; longer
    chains pass through further classes. Class sizes are preserved.
    """
    wc = cfg.coloring
    first, x = cfg.first, cfg.x

    def search(mover: int, dst: int, used: list[int], chain: list[tuple[int, int]]):
        # mover enters class dst, displacing some u from it
        if time.perf_counter() > deadline:
            return None
        for u in sorted(wc.members[dst]):
            if not wc.fits(mover, dst, without=(u,)):
                continue
            step = chain + [(mover, dst)]
            if wc.fits(u, first, without=(x,)):
                return step + [(u, first)]
            if len(step) < MAX_CHAIN:
                for k in range(1, cfg.m + 1):
                    if k not in used:
                        found = search(u, k, used + [k], step)
                        if found:
                            return found
        return None

    for i in range(1, cfg.m + 1):
        if i == first:
            continue
        chain = search(x, i, [first, i], [])
        if chain:
            # intermediate states may hold a cycle; only the end state is checked
            debug, wc.debug = wc.debug, False
            for v, dst in chain:
                wc.transfer(v, dst)
            wc.debug = debug
            if not (wc.class_is_forest(first) and all(wc.class_is_forest(c) for _, c in chain)):
                raise AssertionError("transfer chain produced a cycle")
            return True
    return False


# -- orchestration -------------------------------------------------------------

def _peel(graph: Graph, m: int, deadline: float, debug: bool) -> WorkingColoring | None:
    """Insert vertices in reverse min-degree removal order; ``None`` if one
    cannot be placed."""
    wc = WorkingColoring(graph, m, debug=debug)
    for v in reversed(degeneracy_order(graph)):
        if time.perf_counter() > deadline or not reinsert_vertex(wc, v):
            return None
    return wc


def _exchange_path(graph: Graph, m: int, deadline: float, depth: int,
                   debug: bool) -> WorkingColoring | None:
    t = graph.n // m
    if m < 2 or t < 2 or depth > m - 2:
        return None
    candidates = sorted((v for v in graph.vertices() if graph.degree(v)),
                        key=lambda v: (graph.degree(v), v))
    for x in candidates[:MAX_EDGE_CANDIDATES]:
        if time.perf_counter() > deadline:
            return None
        x1 = min(graph.neighbors(x))
        wc = _peel(graph.without_edge(x, x1), m, deadline, debug=False)
        if wc is None:
            continue
        wc.graph = graph
        wc.debug = debug
        if wc.class_is_forest(wc.cls[x]):
            return wc
        cfg = Configuration(graph, m, x, x1, wc)
        if repair_with_transfers(cfg, deadline):
            log.debug("transfer chain repaired the coloring around x=%d", x)
            return wc
        # the lift needs the rebuilt class to be a forest; skip triples where it is not
        triple = next((tr for tr in exchange_candidates(cfg)
                       if is_forest(induced_subgraph(graph, rebuilt_class(cfg, *tr)).graph)),
                      None)
        if triple is None:
            continue
        sub_graph = cfg.reduced_graph(*triple)
        sub = solve(sub_graph.graph, m - 1, timeout=deadline - time.perf_counter(),
                    fallback=True, debug=debug, _depth=depth + 1)
        if not sub.sat:
            continue
        lifted = lift_coloring(cfg, *triple, sub.partition, sub_graph.vertices)
        wc.trace.append(Exchange(*triple, depth, lifted.assignment))
        wc.assign_all(lifted.assignment)
        log.debug("exchange step at depth %d via z=%d", depth, triple[0])
        return wc
    return None


def solve(graph: Graph, m: int, timeout: float | None = DEFAULT_TIMEOUT, *,
          fallback: bool = True, debug: bool = False, _depth: int = 0) -> SolveOutcome:
    """Find an equitable partition of ``graph`` into ``m`` induced forests.

    Parameters
    ----------
    graph : Graph
    m : int
        Number of classes.
    timeout : float or None
        Seconds. 70% goes to the constructive steps and the remainder to the
        exhaustive fallback.
    fallback : bool
        Run the exhaustive search when the constructive steps fail. Without
        it the outcome is always ``SAT`` or ``UNKNOWN``.
    debug : bool
        Check after every move that all classes are still forests.

    Returns
    -------
    SolveOutcome
        ``SAT`` outcomes carry a verified partition and, when the
        constructive steps produced it, the move trace over the padded graph
        (padding vertices are numbered from ``graph.n`` on).
    """
    if m < 1:
        raise ValueError(f"class count must be >= 1, got {m}")
    start = time.perf_counter()
    total = math.inf if timeout is None else timeout
    end = start + total
    constructive_end = start + CONSTRUCTIVE_SHARE * total

    padded, pad = pad_to_multiple(graph, m)
    wc = _peel(padded, m, constructive_end, debug)
    if wc is None:
        wc = _exchange_path(padded, m, constructive_end, _depth, debug)
    if wc is not None:
        partition = _unpad(wc, graph.n)
        if partition is not None:
            report = verify(graph, partition, FOREST)
            if not report.valid:
                raise AssertionError(f"constructive solve produced:\n{report.describe()}")
            return SolveOutcome(Status.SAT, partition, solver="constructive",
                                elapsed=time.perf_counter() - start, trace=wc.trace)

    if fallback:
        remaining = end - time.perf_counter()
        if remaining > 0:
            outcome = exact_solve(graph, m, FOREST, remaining)
            if outcome.status is not Status.UNKNOWN:
                return SolveOutcome(outcome.status, outcome.partition, solver="exact",
                                    elapsed=time.perf_counter() - start, nodes=outcome.nodes)
    timed_out = time.perf_counter() >= (end if fallback else constructive_end)
    return SolveOutcome(
        Status.UNKNOWN,
        reason=UnknownReason.TIMEOUT if timed_out else UnknownReason.HEURISTIC_FAILED,
        solver="constructive", elapsed=time.perf_counter() - start,
    )
