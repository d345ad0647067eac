"""Command-line interface.

Exit codes: 0 success/SAT, 1 UNSAT / verification failure / contradiction,
2 input error, 4 timeout or unknown.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import generators as gen
from .coloring import FOREST, INDEPENDENT, ClassPredicate, verify
from .constructive import Exchange, Place, Transfer, solve
from .drawing import Drawing, check_density, format_girth, is_planar, planarize, threshold_F
from .exact import exact_solve, threshold_report
from .experiment import load_corpus, run_experiment, write_corpus
from .io import (DocumentError, read_graph_file, read_partition, write_drawing,
                 write_partition, write_report)
from .outcome import SearchTimeout, Status

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_UNKNOWN = 0, 1, 2, 4


class InputError(Exception):
    pass


def _predicate(args) -> ClassPredicate:
    if getattr(args, "independent", False):
        return INDEPENDENT
    if getattr(args, "defect", None) is not None:
        if args.defect < 1:
            raise InputError("--defect must be a positive integer")
        return ClassPredicate.defective(args.defect)
    return FOREST


def _m_range(text: str) -> tuple[int, int]:
    try:
        lo, hi = (int(x) for x in text.split(".."))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a..b, got {text!r}") from None
    if lo < 1 or hi < lo:
        raise argparse.ArgumentTypeError(f"need 1 <= a <= b, got {text!r}")
    return lo, hi


def cmd_verify(args) -> int:
    drawing = read_graph_file(args.graph)
    partition = read_partition(args.coloring)
    try:
        report = verify(drawing.graph, partition, _predicate(args))
    except ValueError as exc:
        raise InputError(str(exc)) from None
    print(report.describe())
    return EXIT_OK if report.valid else EXIT_FAIL


def _move_doc(mv) -> dict:
    if isinstance(mv, Place):
        return {"move": "PLACE", "v": mv.v, "class": mv.cls}
    if isinstance(mv, Transfer):
        return {"move": "TRANSFER", "v": mv.v, "from": mv.src, "to": mv.dst}
    assert isinstance(mv, Exchange)
    return {"move": "EXCHANGE", "z": mv.z, "y1": mv.y1, "y2": mv.y2, "depth": mv.depth,
            "result": list(mv.result)}


def cmd_solve(args) -> int:
    graph = read_graph_file(args.graph).graph
    if args.m < 1:
        raise InputError("-m must be >= 1")
    timeout = args.timeout_ms / 1000
    if args.method == "exact":
        outcome = exact_solve(graph, args.m, FOREST, timeout)
    else:
        outcome = solve(graph, args.m, timeout, fallback=args.method == "auto")
    print(f"status={outcome} solver={outcome.solver} elapsed_ms={1000 * outcome.elapsed:.0f}")
    if args.trace and outcome.trace is not None:
        lines = ",\n ".join(json.dumps(_move_doc(mv)) for mv in outcome.trace)
        Path(args.trace).write_text(f"[{lines}]\n", encoding="utf-8")
    if outcome.status is Status.SAT:
        text = write_partition(outcome.partition, args.output)
        if args.output is None:
            sys.stdout.write(text)
        return EXIT_OK
    return EXIT_FAIL if outcome.status is Status.UNSAT else EXIT_UNKNOWN


def cmd_threshold(args) -> int:
    graph = read_graph_file(args.graph).graph
    if graph.n == 0:
        raise InputError("thresholds are undefined for the empty graph")
    try:
        rep = threshold_report(graph, _predicate(args), args.timeout_ms / 1000)
    except SearchTimeout as exc:
        print(f"UNKNOWN: {exc}")
        return EXIT_UNKNOWN
    print(f"va_eq={rep.va_eq} va_eq*={rep.va_eq_star}")
    print(f"feasibility={rep.bitstring}")
    return EXIT_OK


def cmd_bounds(args) -> int:
    drawing = read_graph_file(args.graph)
    rep = check_density(drawing)
    ok = lambda flag: "PASS" if flag else "FAIL"  # noqa: E731
    skeleton = is_planar(planarize(drawing))
    one_plane = not rep.violations
    lines = [
        f"n={rep.n} e={rep.edges} crossings={rep.crossings}",
        f"girth={format_girth(rep.girth)}",
        f"one_plane={ok(one_plane)}",
        f"ic={ok(rep.ic)}",
        f"skeleton_planar={ok(skeleton)}",
        f"edge_bound={'vacuous' if rep.edge_bound is None else rep.edge_bound} "
        f"density={ok(rep.edge_ok)}",
        f"min_degree={rep.min_degree} min_degree_bound={rep.min_degree_bound} "
        f"degree={ok(rep.degree_ok)}",
        f"crossing_bound={rep.n // 4} crossing_count={ok(rep.crossings_ok)}",
        f"F={threshold_F(rep.girth)}",
    ]
    for v in rep.violations:
        lines.append(f"violation: {v.message}")
    print("\n".join(lines))
    return EXIT_OK if rep.passed and one_plane and rep.ic and skeleton else EXIT_FAIL


def _need(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise InputError(f"--{name.replace('_', '-')} is required for family {args.family}")


def cmd_generate(args) -> int:
    fam = args.family
    if fam == "corpus":
        _need(args, "count")
        if args.output is None:
            raise InputError("-o <directory> is required")
        girths = [args.girth] if args.girth else [3, 4, 5, 6]
        entries = []
        for g in girths:
            entries += gen.ic_corpus(args.count, g, args.seed, (args.n_min, args.n_max))
        write_corpus(entries, args.output)
        print(f"wrote {len(entries)} drawings to {args.output}")
        return EXIT_OK

    if fam == "planar":
        _need(args, "n")
        drawing = Drawing(gen.random_planar(args.n, args.girth or 3, args.seed))
    elif fam == "ic":
        _need(args, "n")
        g = args.girth or 3
        base = gen.random_planar(args.n, g, args.seed)
        k = args.crossings if args.crossings is not None else args.n // 4
        drawing = gen.ic_augment(base, k, args.seed, min_girth=g)
    elif fam == "star":
        _need(args, "delta")
        drawing = Drawing(gen.star(args.delta))
    elif fam in ("cycle", "path", "complete"):
        _need(args, "n")
        drawing = Drawing(gen.FAMILIES[fam](args.n))
    elif fam == "sharpness":
        _need(args, "k")
        t = args.t if args.t is not None else 2 * args.k - 3
        drawing = Drawing(gen.sharpness_example(args.k, t))
    elif fam == "fan":
        _need(args, "path_len")
        drawing = Drawing(gen.fan_example(args.path_len))
    else:  # subdivide
        _need(args, "r")
        base = read_graph_file(args.base).graph if args.base else gen.complete(args.k or 4)
        drawing = Drawing(gen.subdivide(base, args.r))
    text = write_drawing(drawing, args.output)
    if args.output is None:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_experiment(args) -> int:
    corpus = load_corpus(args.corpus)
    result = run_experiment(corpus, args.m_range, args.timeout_ms / 1000, args.jobs,
                            timing=not args.no_timing)
    write_report(result.rows, args.report)
    unknown = sum(r.feasibility.count("?") for r in result.rows)
    print(f"graphs={len(result.rows)} contradictions={result.contradictions} "
          f"invalid={result.invalid} unknown={unknown}")
    return EXIT_OK if result.ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eqforest",
        description="Equitable partitions into induced forests for IC-plane drawings.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def predicate_flags(p):
        group = p.add_mutually_exclusive_group()
        group.add_argument("--defect", type=int, metavar="D")
        group.add_argument("--independent", action="store_true")

    p = sub.add_parser("verify", help="check a coloring")
    p.add_argument("--graph", required=True)
    p.add_argument("--coloring", required=True)
    predicate_flags(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("solve", help="find an equitable tree-m-coloring")
    p.add_argument("--graph", required=True)
    p.add_argument("-m", type=int, required=True)
    p.add_argument("--method", choices=("constructive", "exact", "auto"), default="auto")
    p.add_argument("--timeout-ms", type=int, default=10_000)
    p.add_argument("--trace")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("threshold", help="exact va_eq and va_eq*")
    p.add_argument("--graph", required=True)
    p.add_argument("--timeout-ms", type=int, default=10_000)
    predicate_flags(p)
    p.set_defaults(func=cmd_threshold)

    p = sub.add_parser("bounds", help="audit the IC density bounds")
    p.add_argument("--graph", required=True)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("generate", help="write a generated graph or corpus")
    p.add_argument("--family", required=True,
                   choices=("planar", "ic", "corpus", "star", "cycle", "path", "complete",
                            "sharpness", "fan", "subdivide"))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n", type=int)
    p.add_argument("--girth", type=int)
    p.add_argument("--crossings", type=int)
    p.add_argument("--delta", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--path-len", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--base")
    p.add_argument("--count", type=int)
    p.add_argument("--n-min", type=int, default=8)
    p.add_argument("--n-max", type=int, default=60)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("experiment", help="solve a corpus and write a report")
    p.add_argument("--corpus", required=True)
    p.add_argument("--report", required=True)
    p.add_argument("--m-range", type=_m_range)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--timeout-ms", type=int, default=10_000)
    p.add_argument("--no-timing", action="store_true",
                   help="leave elapsed_ms empty so reports are byte-stable")
    p.set_defaults(func=cmd_experiment)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (InputError, DocumentError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
