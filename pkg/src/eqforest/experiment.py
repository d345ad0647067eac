"""Corpus experiments: run the solver over graphs and class counts and tabulate."""

from __future__ import annotations

import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from .coloring import FOREST, ClassPredicate, verify
from .constructive import solve
from .drawing import (Drawing, format_girth, is_ic, is_planar, planarize, threshold_F,
                      validate_one_plane)
from .exact import DEFAULT_TIMEOUT, threshold_report
from .generators import CorpusEntry, star
from .graph import girth
from .io import ReportRow, read_graph_file, write_drawing
from .outcome import Status

MANIFEST = "manifest.json"


def write_corpus(entries: Iterable[CorpusEntry], directory: str | Path) -> list[Path]:
    """One drawing document per entry plus a manifest of construction
    parameters."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    paths, manifest = [], {}
    for entry in entries:
        path = directory / f"{entry.graph_id}.json"
        write_drawing(entry.drawing, path)
        paths.append(path)
        manifest[entry.graph_id] = entry.meta
    (directory / MANIFEST).write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n",
                                      encoding="utf-8")
    return paths


def load_corpus(directory: str | Path) -> list[tuple[str, Drawing]]:
    directory = Path(directory)
    if not directory.is_dir():
        raise FileNotFoundError(f"corpus directory {directory} does not exist")
    files = sorted(p for p in directory.iterdir()
                   if p.suffix in (".json", ".col", ".dimacs") and p.name != MANIFEST)
    return [(p.stem, read_graph_file(p)) for p in files]


def valid_ic_claim(drawing: Drawing) -> bool:
    """The drawing passes every combinatorial IC check we can run."""
    return (not validate_one_plane(drawing) and is_ic(drawing)
            and is_planar(planarize(drawing)))


@dataclass(frozen=True)
class TaskResult:
    graph_id: str
    m: int
    status: Status
    solver: str
    elapsed: float
    verified: bool


def _run_task(args) -> TaskResult:
    graph_id, graph, m, timeout = args
    outcome = solve(graph, m, timeout)
    verified = outcome.sat and verify(graph, outcome.partition, FOREST).valid
    return TaskResult(graph_id, m, outcome.status, outcome.solver, outcome.elapsed, verified)


def default_m_range(drawing: Drawing) -> tuple[int, int]:
    f = threshold_F(girth(drawing.graph))
    return f, min(drawing.n, f + 4)


@dataclass
class ExperimentResult:
    rows: list[ReportRow]
    contradictions: int
    invalid: int

    @property
    def ok(self) -> bool:
        return not self.contradictions and not self.invalid


def run_experiment(corpus: Sequence[tuple[str, Drawing]], m_range: tuple[int, int] | None = None,
                   timeout: float = DEFAULT_TIMEOUT, jobs: int = 1,
                   timing: bool = True) -> ExperimentResult:
    """Solve every ``(graph, m)`` pair and build one report row per graph.

    A verified ``UNSAT`` at ``m >= F(girth)`` on a drawing that passes the
    IC checks would contradict the guaranteed threshold and is counted in
    ``contradictions``; ``UNSAT`` rows on other graphs are only flagged.
    """
    info = {}
    tasks = []
    for graph_id, drawing in corpus:
        lo, hi = m_range if m_range is not None else default_m_range(drawing)
        # class counts above n add nothing; keep at least m = lo
        hi = max(lo, min(hi, drawing.n))
        g = girth(drawing.graph)
        info[graph_id] = (drawing, g, valid_ic_claim(drawing), lo, hi)
        tasks += [(graph_id, drawing.graph, m, timeout) for m in range(lo, hi + 1)]

    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_task, tasks, chunksize=4))
    else:
        results = [_run_task(t) for t in tasks]

    by_graph: dict[str, list[TaskResult]] = {gid: [] for gid in info}
    for res in results:
        by_graph[res.graph_id].append(res)

    rows, contradictions, invalid = [], 0, 0
    for graph_id, (drawing, g, ic, lo, hi) in info.items():
        res = sorted(by_graph[graph_id], key=lambda r: r.m)
        bits, flags = [], []
        f = threshold_F(g)
        for r in res:
            if r.status is Status.SAT:
                bits.append("1")
                if not r.verified:
                    invalid += 1
                    flags.append(f"INVALID@{r.m}")
            elif r.status is Status.UNSAT:
                bits.append("0")
                flags.append(f"UNSAT@{r.m}")
                if ic and r.m >= f:
                    contradictions += 1
                    flags.append(f"CONTRADICTION@{r.m}")
            else:
                bits.append("?")
                flags.append(f"UNKNOWN@{r.m}")
        feas = "".join(bits)
        va = va_star = None
        if lo == 1 and hi == drawing.n and feas and "?" not in feas:
            va = feas.index("1") + 1
            va_star = len(feas.rstrip("1")) + 1
        solvers = "+".join(sorted({r.solver for r in res}))
        elapsed = round(1000 * sum(r.elapsed for r in res)) if timing else None
        rows.append(ReportRow(graph_id, drawing.n, drawing.graph.num_edges, format_girth(g),
                              ic, (lo, hi), feas, va, va_star, solvers, elapsed, tuple(flags)))
    rows.sort(key=lambda r: r.graph_id)
    return ExperimentResult(rows, contradictions, invalid)


@dataclass(frozen=True)
class StarDefectRow:
    delta: int
    d: int
    va_eq: int
    va_eq_star: int
    formula: int

    @property
    def agrees(self) -> bool:
        return self.va_eq == self.va_eq_star == self.formula


def star_defective_audit(deltas: Iterable[int], defects: Iterable[int],
                         timeout: float = DEFAULT_TIMEOUT) -> list[StarDefectRow]:
    """Exact d-defective thresholds of stars next to ``ceil((delta+1)/d)``.

    The closed form is reported, never assumed.
    """
    rows = []
    for delta in deltas:
        g = star(delta)
        for d in defects:
            rep = threshold_report(g, ClassPredicate.defective(d), timeout)
            rows.append(StarDefectRow(delta, d, rep.va_eq, rep.va_eq_star,
                                      math.ceil((delta + 1) / d)))
    return rows

