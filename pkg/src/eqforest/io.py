"""Reading and writing drawings, DIMACS graphs, partitions and reports.

Drawing documents are JSON::

    {"n": 4, "edges": [[0, 1], ...], "crossings": [{"e1": [0, 2], "e2": [1, 3]}]}

Writers emit one canonical form (sorted edges, smaller endpoint first,
sorted crossings) so the same object always serializes to the same bytes.
"""

from __future__ import annotations

import csv
import io
import json
import os
import warnings
from dataclasses import dataclass
from pathlib import Path
from typing import IO, Iterable, Union

from .coloring import Partition
from .drawing import Crossing, Drawing
from .graph import Graph, GraphError

Source = Union[str, os.PathLike, IO[str]]


class DocumentError(ValueError):
    """A document could not be parsed or describes an invalid object."""


class DimacsWarning(UserWarning):
    pass


def _read_text(source: Source) -> str:
    if hasattr(source, "read"):
        return source.read()
    return Path(source).read_text(encoding="utf-8")


def _write_text(text: str, dest: Source | None) -> str:
    if dest is None:
        return text
    if hasattr(dest, "write"):
        dest.write(text)
    else:
        Path(dest).write_text(text, encoding="utf-8")
    return text


def _load_json(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise DocumentError("document must be a JSON object")
    return doc


def _int(value, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise DocumentError(f"{what} must be an integer, got {value!r}")
    return value


def _pair(value, what: str) -> tuple[int, int]:
    if not isinstance(value, list) or len(value) != 2:
        raise DocumentError(f"{what} must be a two-element list, got {value!r}")
    return _int(value[0], what), _int(value[1], what)


def drawing_from_dict(doc: dict) -> Drawing:
    if "n" not in doc or "edges" not in doc:
        raise DocumentError("drawing document needs 'n' and 'edges'")
    n = _int(doc["n"], "n")
    if not isinstance(doc["edges"], list):
        raise DocumentError("'edges' must be a list")
    edges = [_pair(e, "edge") for e in doc["edges"]]
    try:
        graph = Graph(n, edges)
    except GraphError as exc:
        raise DocumentError(str(exc)) from None
    crossings = []
    for c in doc.get("crossings", []):
        if not isinstance(c, dict) or set(c) != {"e1", "e2"}:
            raise DocumentError(f"crossing must be {{'e1': [a, b], 'e2': [c, d]}}, got {c!r}")
        crossings.append(Crossing(_pair(c["e1"], "crossing edge"), _pair(c["e2"], "crossing edge")))
    return Drawing(graph, tuple(crossings))


def drawing_to_text(drawing: Drawing) -> str:
    edges = ", ".join(f"[{u}, {v}]" for u, v in drawing.graph.edges)
    crossings = ", ".join(
        f'{{"e1": [{c.e1[0]}, {c.e1[1]}], "e2": [{c.e2[0]}, {c.e2[1]}]}}'
        for c in drawing.crossings
    )
    return (
        "{\n"
        f'  "n": {drawing.n},\n'
        f'  "edges": [{edges}],\n'
        f'  "crossings": [{crossings}]\n'
        "}\n"
    )


def read_drawing(source: Source) -> Drawing:
    return drawing_from_dict(_load_json(_read_text(source)))


def write_drawing(drawing: Drawing | Graph, dest: Source | None = None) -> str:
    """Serialize; returns the text and writes it to ``dest`` if given."""
    if isinstance(drawing, Graph):
        drawing = Drawing(drawing)
    return _write_text(drawing_to_text(drawing), dest)


def read_dimacs_col(source: Source) -> Graph:
    """Parse the DIMACS edge format (``p edge n m`` / ``e u v``, 1-indexed).

    A header edge count that disagrees with the ``e`` lines, or an edge
    listed twice, only triggers a :class:`DimacsWarning`.
    """
    n = None
    declared = 0
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(_read_text(source).splitlines(), start=1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        if parts[0] == "p":
            if n is not None:
                raise DocumentError(f"line {lineno}: second 'p' line")
            if len(parts) != 4 or parts[1] not in ("edge", "col"):
                raise DocumentError(f"line {lineno}: expected 'p edge <n> <m>'")
            try:
                n, declared = int(parts[2]), int(parts[3])
            except ValueError:
                raise DocumentError(f"line {lineno}: malformed header") from None
        elif parts[0] == "e":
            if n is None:
                raise DocumentError(f"line {lineno}: edge before 'p' line")
            if len(parts) != 3:
                raise DocumentError(f"line {lineno}: expected 'e <u> <v>'")
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise DocumentError(f"line {lineno}: malformed edge") from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise DocumentError(f"line {lineno}: vertex outside 1..{n}")
            if u == v:
                raise DocumentError(f"line {lineno}: self-loop")
            key = (min(u, v) - 1, max(u, v) - 1)
            if key in seen:
                warnings.warn(f"line {lineno}: repeated edge {u}-{v} ignored", DimacsWarning,
                              stacklevel=2)
                continue
            seen.add(key)
            edges.append(key)
        else:
            raise DocumentError(f"line {lineno}: unknown line type {parts[0]!r}")
    if n is None:
        raise DocumentError("missing 'p edge <n> <m>' header")
    if declared != len(edges):
        warnings.warn(f"header declares {declared} edges, read {len(edges)}", DimacsWarning,
                      stacklevel=2)
    return Graph(n, edges)


def read_graph_file(path: str | os.PathLike) -> Drawing:
    """Load a drawing document, or a DIMACS file by its ``.col``/``.dimacs``
    suffix."""
    if Path(path).suffix.lower() in (".col", ".dimacs"):
        return Drawing(read_dimacs_col(path))
    return read_drawing(path)


def read_partition(source: Source) -> Partition:
    doc = _load_json(_read_text(source))
    if "m" not in doc or "assignment" not in doc:
        raise DocumentError("partition document needs 'm' and 'assignment'")
    m = _int(doc["m"], "m")
    if not isinstance(doc["assignment"], list):
        raise DocumentError("'assignment' must be a list")
    assignment = [_int(c, "class index") for c in doc["assignment"]]
    try:
        return Partition(m, tuple(assignment))
    except ValueError as exc:
        raise DocumentError(str(exc)) from None


def write_partition(partition: Partition, dest: Source | None = None) -> str:
    text = json.dumps({"m": partition.m, "assignment": list(partition.assignment)}) + "\n"
    return _write_text(text, dest)


REPORT_COLUMNS = (
    "graph_id", "n", "e", "girth", "ic", "m_range", "feasibility",
    "va_eq", "va_eq_star", "solver", "elapsed_ms", "flags",
)


@dataclass(frozen=True)
class ReportRow:
    """One experiment row. ``feasibility`` has one character per class count
    in ``m_range``: ``1`` feasible, ``0`` infeasible, ``?`` undecided."""

    graph_id: str
    n: int
    e: int
    girth: str
    ic: bool
    m_range: tuple[int, int]
    feasibility: str
    va_eq: int | None = None
    va_eq_star: int | None = None
    solver: str = ""
    elapsed_ms: int | None = None
    flags: tuple[str, ...] = ()

    def cells(self) -> list[str]:
        opt = lambda x: "" if x is None else str(x)  # noqa: E731
        return [
            self.graph_id, str(self.n), str(self.e), self.girth,
            "1" if self.ic else "0", f"{self.m_range[0]}..{self.m_range[1]}",
            self.feasibility, opt(self.va_eq), opt(self.va_eq_star), self.solver,
            opt(self.elapsed_ms), ";".join(self.flags),
        ]


def write_report(rows: Iterable[ReportRow], dest: Source | None = None) -> str:
    """Comma-separated table, header first, rows sorted by graph id."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(REPORT_COLUMNS)
    for row in sorted(rows, key=lambda r: r.graph_id):
        writer.writerow(row.cells())
    return _write_text(buf.getvalue(), dest)
