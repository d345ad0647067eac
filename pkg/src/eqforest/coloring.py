"""Partitions into classes and the verifier for equitable tree-colorings."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import Graph, is_forest, induced_subgraph


class PredicateKind(enum.Enum):
    INDEPENDENT = "independent"
    FOREST = "forest"
    DEFECTIVE_FOREST = "defective-forest"


@dataclass(frozen=True)
class ClassPredicate:
    """What every color class has to induce.

    ``d`` is only meaningful for ``DEFECTIVE_FOREST``: the forest induced by
    a class must have maximum degree at most ``d``.
    """

    kind: PredicateKind = PredicateKind.FOREST
    d: int | None = None

    def __post_init__(self):
        if self.kind is PredicateKind.DEFECTIVE_FOREST:
            if self.d is None or self.d < 1:
                raise ValueError(f"defect must be a positive integer, got {self.d!r}")
        elif self.d is not None:
            raise ValueError(f"{self.kind.value} takes no defect parameter")

    @classmethod
    def defective(cls, d: int) -> "ClassPredicate":
        return cls(PredicateKind.DEFECTIVE_FOREST, d)

    def __str__(self) -> str:
        if self.kind is PredicateKind.DEFECTIVE_FOREST:
            return f"{self.kind.value}({self.d})"
        return self.kind.value


FOREST = ClassPredicate(PredicateKind.FOREST)
INDEPENDENT = ClassPredicate(PredicateKind.INDEPENDENT)


@dataclass(frozen=True)
class Partition:
    """Assignment of vertex ``v`` to class ``assignment[v]`` in ``1..m``."""

    m: int
    assignment: tuple[int, ...]

    def __post_init__(self):
        if self.m < 1:
            raise ValueError(f"class count must be >= 1, got {self.m}")
        object.__setattr__(self, "assignment", tuple(int(c) for c in self.assignment))
        for v, c in enumerate(self.assignment):
            if not 1 <= c <= self.m:
                raise ValueError(f"vertex {v} has class {c} outside 1..{self.m}")

    @classmethod
    def from_classes(cls, classes: Sequence[Iterable[int]], n: int) -> "Partition":
        """Build from a list of vertex sets; ``classes[0]`` becomes class 1."""
        assignment = [0] * n
        for i, members in enumerate(classes, start=1):
            for v in members:
                if assignment[v]:
                    raise ValueError(f"vertex {v} is in more than one class")
                assignment[v] = i
        if 0 in assignment:
            raise ValueError(f"vertex {assignment.index(0)} has no class")
        return cls(len(classes), tuple(assignment))

    @property
    def n(self) -> int:
        return len(self.assignment)

    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.m)]
        for v, c in enumerate(self.assignment):
            out[c - 1].append(v)
        return out

    def sizes(self) -> list[int]:
        sizes = [0] * self.m
        for c in self.assignment:
            sizes[c - 1] += 1
        return sizes


def is_equitable(partition: Partition) -> bool:
    """Class sizes differ by at most one, empty classes included."""
    sizes = partition.sizes()
    return max(sizes) - min(sizes) <= 1


class Reason(enum.Enum):
    CYCLE = "CYCLE"
    DEGREE = "DEGREE"
    ADJACENT = "ADJACENT"


@dataclass(frozen=True)
class VerifyReport:
    equitable_ok: bool
    class_violations: tuple[tuple[int, Reason], ...]
    size_spread: tuple[int, int]

    @property
    def valid(self) -> bool:
        return self.equitable_ok and not self.class_violations

    def __bool__(self) -> bool:
        return self.valid

    def describe(self) -> str:
        lo, hi = self.size_spread
        lines = [
            f"verdict: {'VALID' if self.valid else 'INVALID'}",
            f"equitable: {'yes' if self.equitable_ok else 'no'} (class sizes {lo}..{hi})",
        ]
        for c, reason in self.class_violations:
            lines.append(f"class {c}: {reason.value}")
        return "\n".join(lines)


def verify(graph: Graph, partition: Partition, predicate: ClassPredicate = FOREST) -> VerifyReport:
    """Check equitability and the class predicate; report every violation."""
    if partition.n != graph.n:
        raise ValueError(
            f"partition covers {partition.n} vertices but the graph has {graph.n}"
        )
    sizes = partition.sizes()
    violations = []
    for c, members in enumerate(partition.classes(), start=1):
        if len(members) < 2:
            continue
        sub = induced_subgraph(graph, members).graph
        if predicate.kind is PredicateKind.INDEPENDENT:
            if sub.num_edges:
                violations.append((c, Reason.ADJACENT))
            continue
        if not is_forest(sub):
            violations.append((c, Reason.CYCLE))
        if predicate.kind is PredicateKind.DEFECTIVE_FOREST:
            if any(sub.degree(v) > predicate.d for v in sub.vertices()):
                violations.append((c, Reason.DEGREE))
    return VerifyReport(
        equitable_ok=max(sizes) - min(sizes) <= 1,
        class_violations=tuple(violations),
        size_spread=(min(sizes), max(sizes)),
    )
