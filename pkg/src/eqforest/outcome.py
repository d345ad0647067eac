"""Three-valued solver results."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import TYPE_CHECKING

from .coloring import Partition

if TYPE_CHECKING:
    from .constructive import MoveTrace


class Status(enum.Enum):
    SAT = "SAT"
    UNSAT = "UNSAT"
    UNKNOWN = "UNKNOWN"


class UnknownReason(enum.Enum):
    TIMEOUT = "TIMEOUT"
    HEURISTIC_FAILED = "HEURISTIC_FAILED"


@dataclass(frozen=True)
class SolveOutcome:
    """Result of one ``(graph, m)`` solve.

    ``UNSAT`` is only ever produced by exhaustive search; ``solver`` names
    the procedure that settled the instance.
    """

    status: Status
    partition: Partition | None = None
    reason: UnknownReason | None = None
    solver: str = "exact"
    elapsed: float = 0.0
    nodes: int = 0
    trace: "MoveTrace | None" = None

    @property
    def sat(self) -> bool:
        return self.status is Status.SAT

    def __str__(self) -> str:
        if self.status is Status.UNKNOWN:
            return f"UNKNOWN({self.reason.value})"
        return self.status.value


class SearchTimeout(RuntimeError):
    """A threshold computation needed a solve that ran out of time."""

    def __init__(self, m: int):
        super().__init__(f"solve at m={m} timed out")
        self.m = m
