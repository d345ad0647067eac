"""Exhaustive search for equitable partitions, and the threshold quantities
(least feasible class count, least count from which every larger one is
feasible) computed from it.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass

from .coloring import FOREST, ClassPredicate, Partition, PredicateKind, verify
from .graph import Graph
from .outcome import SearchTimeout, SolveOutcome, Status, UnknownReason

DEFAULT_TIMEOUT = 10.0
BRUTE_FORCE_MAX_N = 10


class _Timeout(Exception):
    pass


def _checked(graph, partition, predicate, **kw) -> SolveOutcome:
    report = verify(graph, partition, predicate)
    if not report.valid:
        raise AssertionError(f"solver produced an invalid partition:\n{report.describe()}")
    return SolveOutcome(Status.SAT, partition, **kw)


def exact_solve(
    graph: Graph,
    m: int,
    predicate: ClassPredicate = FOREST,
    timeout: float | None = DEFAULT_TIMEOUT,
) -> SolveOutcome:
    """Backtracking search over class assignments.

    Class sizes are pinned up front: ``n mod m`` classes end at
    ``ceil(n/m)`` and the rest at ``floor(n/m)``. Vertices are tried in
    descending degree order; among empty classes only the lowest-index one
    is tried. Each class keeps a union-find over its vertices so a vertex
    with two neighbors in one tree of a class is rejected on the spot.
    """
    if m < 1:
        raise ValueError(f"class count must be >= 1, got {m}")
    start = time.perf_counter()
    deadline = math.inf if timeout is None else start + timeout
    n = graph.n
    q, r = divmod(n, m)
    order = sorted(graph.vertices(), key=lambda v: (-graph.degree(v), v))
    adj = [tuple(graph.neighbors(v)) for v in graph.vertices()]
    kind = predicate.kind
    d = predicate.d

    color = [-1] * n
    size = [0] * m
    parent = list(range(n))
    weight = [1] * n
    ideg = [0] * n
    merged: list[int] = []
    state = {"big": 0, "nodes": 0}

    def find(x: int) -> int:
        while parent[x] != x:
            x = parent[x]
        return x

    def place(i: int) -> bool:
        if i == n:
            return True
        state["nodes"] += 1
        if not state["nodes"] & 1023 and time.perf_counter() > deadline:
            raise _Timeout
        v = order[i]
        tried_empty = False
        for c in range(m):
            s = size[c]
            if s == 0:
                if tried_empty:
                    continue
                tried_empty = True
            if s > q or (s == q and state["big"] >= r):
                continue
            inside = [u for u in adj[v] if color[u] == c]
            if kind is PredicateKind.INDEPENDENT:
                if inside:
                    continue
                roots = []
            else:
                roots = [find(u) for u in inside]
                if len(set(roots)) != len(roots):
                    continue
                if kind is PredicateKind.DEFECTIVE_FOREST:
                    if len(inside) > d or any(ideg[u] >= d for u in inside):
                        continue

            color[v] = c
            size[c] += 1
            if size[c] == q + 1:
                state["big"] += 1
            mark = len(merged)
            root_v = v
            for ru in roots:
                if weight[ru] > weight[root_v]:
                    ru, root_v = root_v, ru
                parent[ru] = root_v
                weight[root_v] += weight[ru]
                merged.append(ru)
            for u in inside:
                ideg[u] += 1
            ideg[v] = len(inside)

            if place(i + 1):
                return True

            for u in inside:
                ideg[u] -= 1
            ideg[v] = 0
            while len(merged) > mark:
                ru = merged.pop()
                weight[parent[ru]] -= weight[ru]
                parent[ru] = ru
            if size[c] == q + 1:
                state["big"] -= 1
            size[c] -= 1
            color[v] = -1
        return False

    try:
        found = place(0)
    except _Timeout:
        return SolveOutcome(
            Status.UNKNOWN, reason=UnknownReason.TIMEOUT, solver="exact",
            elapsed=time.perf_counter() - start, nodes=state["nodes"],
        )
    elapsed = time.perf_counter() - start
    if not found:
        return SolveOutcome(Status.UNSAT, solver="exact", elapsed=elapsed, nodes=state["nodes"])
    partition = Partition(m, tuple(c + 1 for c in color))
    return _checked(graph, partition, predicate, solver="exact", elapsed=elapsed,
                    nodes=state["nodes"])


def brute_force_solve(graph: Graph, m: int, predicate: ClassPredicate = FOREST) -> SolveOutcome:
    """Reference oracle: enumerate every set partition of the vertices into at
    most ``m`` blocks and keep the first one :func:`verify` accepts.

    Restricted to ``n <= 10``; meant for tests.
    """
    n = graph.n
    if n > BRUTE_FORCE_MAX_N:
        raise ValueError(f"brute force is limited to n <= {BRUTE_FORCE_MAX_N}, got {n}")
    if m < 1:
        raise ValueError(f"class count must be >= 1, got {m}")
    cap = -(-n // m)
    block = [0] * n
    counts = [0] * m

    def partitions(i: int, used: int):
        if i == n:
            yield used
            return
        for b in range(min(used + 1, m)):
            if counts[b] == cap:
                continue
            block[i] = b
            counts[b] += 1
            yield from partitions(i + 1, max(used, b + 1))
            counts[b] -= 1

    for _ in partitions(0, 0):
        if max(counts) - min(counts) > 1:
            continue
        candidate = Partition(m, tuple(b + 1 for b in block))
        if verify(graph, candidate, predicate).valid:
            return SolveOutcome(Status.SAT, candidate, solver="brute-force")
    return SolveOutcome(Status.UNSAT, solver="brute-force")


def _feasible(graph, m, predicate, timeout) -> bool:
    outcome = exact_solve(graph, m, predicate, timeout)
    if outcome.status is Status.UNKNOWN:
        raise SearchTimeout(m)
    return outcome.sat


def va_eq(graph: Graph, predicate: ClassPredicate = FOREST,
          timeout: float | None = DEFAULT_TIMEOUT) -> int:
    """Least ``m`` with an equitable partition into ``m`` valid classes."""
    if graph.n == 0:
        raise ValueError("thresholds are undefined for the empty graph")
    for m in range(1, graph.n + 1):
        if _feasible(graph, m, predicate, timeout):
            return m
    raise AssertionError("m = n is always feasible")


def va_eq_star(graph: Graph, predicate: ClassPredicate = FOREST,
               timeout: float | None = DEFAULT_TIMEOUT) -> int:
    """Least ``k`` such that every ``m`` in ``[k, n]`` is feasible."""
    if graph.n == 0:
        raise ValueError("thresholds are undefined for the empty graph")
    for m in range(graph.n, 0, -1):
        if not _feasible(graph, m, predicate, timeout):
            return m + 1
    return 1


@dataclass(frozen=True)
class ThresholdReport:
    va_eq: int
    va_eq_star: int
    feasible: tuple[bool, ...]  # feasible[m - 1] for m = 1..n
    d: int | None = None

    def __post_init__(self):
        if not all(self.feasible[self.va_eq_star - 1:]):
            raise AssertionError("feasibility must hold from va_eq_star on")
        if self.va_eq > self.va_eq_star:
            raise AssertionError("va_eq cannot exceed va_eq_star")

    @property
    def bitstring(self) -> str:
        return "".join("1" if f else "0" for f in self.feasible)


def threshold_report(graph: Graph, predicate: ClassPredicate = FOREST,
                     timeout: float | None = DEFAULT_TIMEOUT) -> ThresholdReport:
    """Full feasibility vector for ``m = 1..n``; feasibility is not assumed
    monotone in ``m``."""
    if graph.n == 0:
        raise ValueError("thresholds are undefined for the empty graph")
    feasible = tuple(_feasible(graph, m, predicate, timeout) for m in range(1, graph.n + 1))
    first = feasible.index(True) + 1
    star = graph.n
    while star > 1 and feasible[star - 2]:
        star -= 1
    return ThresholdReport(first, star, feasible, predicate.d)
