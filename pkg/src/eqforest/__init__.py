"""Equitable partitions of graphs into induced forests, with IC-plane drawing
checks, exact and constructive solvers, generators and an experiment harness."""

from .coloring import (FOREST, INDEPENDENT, ClassPredicate, Partition, PredicateKind, Reason,
                       VerifyReport, is_equitable, verify)
from .constructive import solve
from .drawing import (Crossing, DensityReport, Drawing, check_density, edge_bound, is_ic,
                      is_planar, min_degree_bound, planarize, threshold_F, validate_one_plane)
from .estimator import ArborableThreshold, ColoringNotFoundError, EquitableForestPartition
from .exact import (ThresholdReport, brute_force_solve, exact_solve, threshold_report, va_eq,
                    va_eq_star)
from .graph import INFINITE, Graph, GraphError, girth
from .outcome import SearchTimeout, SolveOutcome, Status, UnknownReason

__version__ = "0.1.0"

__all__ = [
    "ArborableThreshold", "ClassPredicate", "ColoringNotFoundError", "Crossing",
    "DensityReport", "Drawing", "EquitableForestPartition", "FOREST", "Graph", "GraphError",
    "INDEPENDENT", "INFINITE", "Partition", "PredicateKind", "Reason", "SearchTimeout",
    "SolveOutcome", "Status", "ThresholdReport", "UnknownReason", "VerifyReport",
    "brute_force_solve", "check_density", "edge_bound", "exact_solve", "girth", "is_equitable",
    "is_ic", "is_planar", "min_degree_bound", "planarize", "solve", "threshold_F",
    "threshold_report", "va_eq", "va_eq_star", "validate_one_plane", "verify",
]
