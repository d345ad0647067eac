"""scikit-learn style front end.

:class:`EquitableForestPartition` behaves like a clustering estimator:
``fit(X)`` colors the graph ``X`` and stores ``labels_`` (class indices
``0..m-1``), so ``fit_predict`` and ``get_params``/``set_params``/``clone``
work as usual. :class:`ArborableThreshold` computes the exact threshold
quantities of a graph.

``X`` can be a :class:`~eqforest.graph.Graph`, a
:class:`~eqforest.drawing.Drawing`, a networkx graph with integer nodes
``0..n-1``, or a square symmetric 0/1 adjacency matrix (dense or sparse).
"""

from __future__ import annotations

import numpy as np
import scipy.sparse as sp
from sklearn.base import BaseEstimator, ClusterMixin

from .coloring import FOREST, INDEPENDENT, ClassPredicate
from .constructive import solve
from .drawing import Drawing
from .exact import DEFAULT_TIMEOUT, exact_solve, threshold_report
from .graph import Graph
from .outcome import Status

METHODS = ("auto", "constructive", "exact")


class ColoringNotFoundError(RuntimeError):
    """``fit`` ended without a coloring (infeasible or out of time)."""


def check_graph(X) -> Graph:
    """Convert supported graph inputs to :class:`Graph`, validating them."""
    if isinstance(X, Graph):
        return X
    if isinstance(X, Drawing):
        return X.graph
    try:
        import networkx as nx
    except ImportError:  # pragma: no cover
        nx = None
    if nx is not None and isinstance(X, nx.Graph):
        if X.is_directed() or X.is_multigraph():
            raise ValueError("only simple undirected graphs are supported")
        n = X.number_of_nodes()
        if set(X.nodes) != set(range(n)):
            raise ValueError("networkx graph nodes must be 0..n-1")
        return Graph(n, X.edges)
    if sp.issparse(X):
        A = sp.coo_matrix(X)
        if A.shape[0] != A.shape[1]:
            raise ValueError(f"adjacency matrix must be square, got shape {A.shape}")
        if (A != A.T).nnz:
            raise ValueError("adjacency matrix must be symmetric")
        pairs = {(int(i), int(j)) for i, j, w in zip(A.row, A.col, A.data) if w and i < j}
        if any(i == j and w for i, j, w in zip(A.row, A.col, A.data)):
            raise ValueError("adjacency matrix has a nonzero diagonal (self-loop)")
        return Graph(A.shape[0], sorted(pairs))
    A = np.asarray(X)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError(f"adjacency matrix must be square, got shape {A.shape}")
    if not np.array_equal(A, A.T):
        raise ValueError("adjacency matrix must be symmetric")
    if np.any(np.diag(A)):
        raise ValueError("adjacency matrix has a nonzero diagonal (self-loop)")
    rows, cols = np.nonzero(np.triu(A, 1))
    return Graph(A.shape[0], zip(rows.tolist(), cols.tolist()))


def _predicate(independent: bool, defect: int | None) -> ClassPredicate:
    if independent and defect is not None:
        raise ValueError("choose at most one of independent and defect")
    if independent:
        return INDEPENDENT
    if defect is not None:
        return ClassPredicate.defective(defect)
    return FOREST


class EquitableForestPartition(ClusterMixin, BaseEstimator):
    """Equitable partition of a graph's vertices into induced forests.

    Parameters
    ----------
    n_classes : int, default=8
        Number of classes ``m``.
    method : {"auto", "constructive", "exact"}, default="auto"
        ``constructive`` runs only the padding/insertion/exchange steps,
        ``exact`` only the exhaustive search, ``auto`` the former with the
        latter as fallback.
    timeout : float, default=10.0
        Seconds per solve.
    independent : bool, default=False
        Require independent classes instead of forests (``exact`` only).
    defect : int or None, default=None
        Require forests of maximum degree ``defect`` (``exact`` only).

    Attributes
    ----------
    labels_ : ndarray of shape (n_vertices,)
        Class of every vertex, ``0..n_classes-1``.
    partition_ : Partition
    outcome_ : SolveOutcome
    """

    def __init__(self, n_classes=8, method="auto", timeout=DEFAULT_TIMEOUT,
                 independent=False, defect=None):
        self.n_classes = n_classes
        self.method = method
        self.timeout = timeout
        self.independent = independent
        self.defect = defect

    def fit(self, X, y=None):
        graph = check_graph(X)
        if self.method not in METHODS:
            raise ValueError(f"method must be one of {METHODS}, got {self.method!r}")
        if int(self.n_classes) < 1:
            raise ValueError(f"n_classes must be >= 1, got {self.n_classes}")
        predicate = _predicate(self.independent, self.defect)
        if predicate != FOREST and self.method != "exact":
            raise ValueError("independent/defective classes need method='exact'")
        if self.method == "exact":
            outcome = exact_solve(graph, int(self.n_classes), predicate, self.timeout)
        else:
            outcome = solve(graph, int(self.n_classes), self.timeout,
                            fallback=self.method == "auto")
        self.outcome_ = outcome
        self.n_vertices_ = graph.n
        if outcome.status is not Status.SAT:
            raise ColoringNotFoundError(
                f"no equitable partition into {self.n_classes} classes: {outcome}")
        self.partition_ = outcome.partition
        self.labels_ = np.asarray(outcome.partition.assignment, dtype=int) - 1
        return self


class ArborableThreshold(BaseEstimator):
    """Exact least feasible class count and the threshold from which every
    class count up to ``n`` is feasible.

    Attributes
    ----------
    va_eq_ : int
    va_eq_star_ : int
    feasible_ : ndarray of bool, shape (n_vertices,)
        ``feasible_[m - 1]`` for ``m = 1..n``.
    """

    def __init__(self, timeout=DEFAULT_TIMEOUT, independent=False, defect=None):
        self.timeout = timeout
        self.independent = independent
        self.defect = defect

    def fit(self, X, y=None):
        graph = check_graph(X)
        report = threshold_report(graph, _predicate(self.independent, self.defect),
                                  self.timeout)
        self.report_ = report
        self.va_eq_ = report.va_eq
        self.va_eq_star_ = report.va_eq_star
        self.feasible_ = np.asarray(report.feasible, dtype=bool)
        return self
