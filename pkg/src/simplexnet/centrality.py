"""Vertex centralities on simplicial complexes: degree, closeness and eigenvector.

Every measure is indexed by a dimension ``p``. Two vertices are p-neighbours
when they lie together in a p-simplex; the resulting graph ``G_p`` carries
the p-walks, p-distances and the p-adjacency matrix.
"""
from __future__ import annotations

import enum
import json
import math
from collections import deque
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from . import adjacency
from .complex import ComplexError, SimplicialComplex, cofaces_of_set


class ConvergenceError(RuntimeError):
    """Power iteration did not reach the requested tolerance."""


class ClosenessVariant(enum.Enum):
    RECIPROCAL_OF_SUM = "reciprocal"
    HARMONIC = "harmonic"


@dataclass
class CentralityReport:
    """Per-vertex values of one measure.

    ``p`` is an integer dimension or the string ``"max"`` for the aggregate
    over all dimensions.
    """

    measure: str
    p: int | str
    values: dict[int, float]
    meta: dict[str, Any] = field(default_factory=dict)

    def rows(self):
        for v in sorted(self.values):
            yield v, self.measure, self.p, self.values[v]

    def to_csv(self, decimals: int | None = None) -> str:
        lines = ["vertex,measure,p,value"]
        for v, m, p, x in self.rows():
            lines.append(f"{v},{m},{p},{format_value(x, decimals)}")
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        return {
            "measure": self.measure,
            "p": self.p,
            "values": {str(v): self.values[v] for v in sorted(self.values)},
            "meta": self.meta,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)


def format_value(x: float, decimals: int | None = None) -> str:
    """6 significant digits, or fixed ``decimals`` in table mode."""
    if decimals is not None:
        return f"{x:.{decimals}f}"
    if float(x).is_integer():
        return str(int(x))
    return f"{x:.6g}"


def _check_vertex(c: SimplicialComplex, v: int):
    if (v,) not in c:
        raise ComplexError(f"vertex {v} is not in the complex")


def _check_p(c: SimplicialComplex, p: int):
    if not 1 <= p <= c.dim:
        raise ComplexError(f"p must satisfy 1 <= p <= {c.dim}, got {p}")


# ---------------------------------------------------------------- degree

def degree_centrality_p(c: SimplicialComplex, v: int, p: int) -> int:
    """Number of simplices sharing a p-simplex with vertex ``v``."""
    _check_vertex(c, v)
    return adjacency.deg_upper_p(c, (v,), p)


def degree_centrality_pp(c: SimplicialComplex, v: int, p: int, strict: bool = False) -> int:
    """Number of p-simplices containing ``v``.

    With ``strict`` only those lying in no (p+1)-simplex count, i.e. the
    p-dimensional facets through ``v``. Any ``p >= 1`` is accepted; above
    the complex dimension the count is 0.
    """
    _check_vertex(c, v)
    if p < 1:
        raise ComplexError(f"p must be positive, got {p}")
    through = cofaces_of_set(c, (v,), p)
    if not strict:
        return len(through)
    return sum(1 for s in through if not cofaces_of_set(c, s, p + 1))


def max_simplicial_degree_centrality(c: SimplicialComplex, v: int) -> int:
    _check_vertex(c, v)
    return adjacency.deg_upper_max(c, (v,))


def degree_bound_binomial(c: SimplicialComplex, v: int, p: int) -> int:
    """Upper bound on the p-degree from the vertex's graph degree alone."""
    _check_vertex(c, v)
    d = len(cofaces_of_set(c, (v,), 1))
    return sum(math.comb(d + 1, j) for j in range(1, p + 2)) - 1


def degree_bound_pp(c: SimplicialComplex, v: int, p: int) -> int:
    """Upper bound on the p-degree: each p-simplex through v adds at most 2^(p+1) - 2 faces."""
    return degree_centrality_pp(c, v, p) * (2 ** (p + 1) - 2)


def max_degree_bound(c: SimplicialComplex, v: int) -> int:
    _check_vertex(c, v)
    return len(cofaces_of_set(c, (v,), 1)) * max(c.dim, 0)


# ---------------------------------------------------------------- p-graph

def p_neighbors(c: SimplicialComplex, p: int) -> dict[int, set[int]]:
    """Adjacency of ``G_p``: vertices joined when they share a p-simplex."""
    nbrs: dict[int, set[int]] = {v: set() for v in c.vertices}
    for s in c.faces_by_dim.get(p, ()) if p >= 1 else ():
        for u in s:
            nbrs[u].update(w for w in s if w != u)
    return nbrs


def _bfs(nbrs: dict[int, set[int]], source: int) -> dict[int, int]:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in nbrs[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def p_distance(c: SimplicialComplex, u: int, v: int, p: int) -> float:
    """Length of the shortest p-walk from ``u`` to ``v``; ``math.inf`` if none."""
    _check_vertex(c, u)
    _check_vertex(c, v)
    _check_p(c, p)
    return _bfs(p_neighbors(c, p), u).get(v, math.inf)


def _closeness(nbrs, v, vertices, variant: ClosenessVariant) -> float:
    dist = _bfs(nbrs, v)
    others = [u for u in vertices if u != v]
    if not others:
        return 0.0
    if variant is ClosenessVariant.HARMONIC:
        return float(sum(1.0 / dist[u] for u in others if u in dist))
    if any(u not in dist for u in others):
        return 0.0
    return 1.0 / sum(dist[u] for u in others)


def closeness_centrality_p(
    c: SimplicialComplex,
    v: int,
    p: int,
    variant: ClosenessVariant = ClosenessVariant.RECIPROCAL_OF_SUM,
) -> float:
    """p-closeness of vertex ``v``.

    ``RECIPROCAL_OF_SUM`` is one over the summed p-distances (0 as soon as a
    vertex is unreachable); ``HARMONIC`` sums reciprocal distances with
    1/inf = 0. A lone vertex scores 0 under both.
    """
    _check_vertex(c, v)
    if p < 1:
        raise ComplexError(f"p must be positive, got {p}")
    return _closeness(p_neighbors(c, p), v, c.vertices, ClosenessVariant(variant))


def max_closeness_centrality(
    c: SimplicialComplex, v: int, variant: ClosenessVariant = ClosenessVariant.RECIPROCAL_OF_SUM
) -> float:
    _check_vertex(c, v)
    return sum(closeness_centrality_p(c, v, p, variant) for p in range(1, c.dim + 1))


# ---------------------------------------------------------------- eigenvector

@dataclass
class PAdjacencyMatrix:
    p: int
    vertices: tuple[int, ...]
    matrix: np.ndarray

    def __array__(self, dtype=None, copy=None):
        return self.matrix if dtype is None else self.matrix.astype(dtype)


def p_adjacency_matrix(c: SimplicialComplex, p: int) -> PAdjacencyMatrix:
    """0/1 matrix of p-upper adjacency between vertices, rows in ascending id order.

    ``p`` above the complex dimension gives the zero matrix.
    """
    if p < 1:
        raise ComplexError(f"p must be positive, got {p}")
    order = c.vertices
    index = {v: i for i, v in enumerate(order)}
    a = np.zeros((len(order), len(order)), dtype=int)
    for u, ns in p_neighbors(c, p).items():
        for w in ns:
            a[index[u], index[w]] = 1
    return PAdjacencyMatrix(p, order, a)


def _components(a: np.ndarray) -> list[list[int]]:
    n = a.shape[0]
    seen = [False] * n
    comps = []
    for start in range(n):
        if seen[start]:
            continue
        seen[start] = True
        comp, stack = [], [start]
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in np.flatnonzero(a[i]):
                if not seen[j]:
                    seen[j] = True
                    stack.append(j)
        comps.append(sorted(comp))
    return comps


def is_irreducible(m) -> bool:
    """True iff the graph of the symmetric 0/1 matrix ``m`` is connected.

    A 1x1 matrix counts as irreducible.
    """
    a = np.asarray(m)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if a.shape[0] == 0:
        return False
    return len(_components(a != 0)) == 1


def is_p_upper_connected(c: SimplicialComplex, p: int) -> bool:
    if p < 1 or c.vertex_count == 0:
        return False
    if c.vertex_count == 1:
        return True
    nbrs = p_neighbors(c, p)
    return len(_bfs(nbrs, c.vertices[0])) == c.vertex_count


def power_iteration(a: np.ndarray, tolerance: float = 1e-10, max_iterations: int = 10_000):
    """Dominant eigenpair of a connected non-negative symmetric matrix.

    Iterates on ``a + I``, which has the same eigenvectors but a strictly
    dominant top eigenvalue even for bipartite graphs. Stops when
    ``||a x - lam x||_inf / lam <= tolerance`` with ``||x||_inf = 1``.
    Returns ``(lam, x, iterations)``.
    """
    a = np.asarray(a, dtype=float)
    shifted = a + np.eye(a.shape[0])
    x = np.ones(a.shape[0])
    for it in range(1, max_iterations + 1):
        x = shifted @ x
        x /= np.max(np.abs(x))
        ax = a @ x
        lam = float(x @ ax / (x @ x))
        if lam > 0 and np.max(np.abs(ax - lam * x)) / lam <= tolerance:
            return lam, x, it
    raise ConvergenceError(f"power iteration did not converge in {max_iterations} iterations")


def eigenvector_centrality_p(
    c: SimplicialComplex, p: int, tolerance: float = 1e-10, max_iterations: int = 10_000
) -> CentralityReport:
    """p-eigenvector centrality of every vertex.

    Each connected component of ``G_p`` with at least one edge gets its own
    Perron vector, scaled so that its smallest entry is 1; vertices in no
    p-simplex get 0. Values from different components are not comparable.
    """
    pm = p_adjacency_matrix(c, p)
    a = pm.matrix
    values = {v: 0.0 for v in pm.vertices}
    eigenvalues, iterations = [], []
    for comp in _components(a):
        if len(comp) == 1:
            continue
        lam, x, it = power_iteration(a[np.ix_(comp, comp)], tolerance, max_iterations)
        x = x / x.min()
        for i, xi in zip(comp, x):
            values[pm.vertices[i]] = float(xi)
        eigenvalues.append(lam)
        iterations.append(it)
    meta = {
        "dimension": c.dim,
        "eigenvalues": eigenvalues,
        "iterations": iterations,
        "components": len(eigenvalues),
        "all_zero": not eigenvalues,
        "normalization": "min-positive-entry-1 per component",
        "cross_component_comparable": len(eigenvalues) <= 1,
    }
    return CentralityReport("eigenvector", p, values, meta)


def max_eigenvector_centrality(
    c: SimplicialComplex, v: int, tolerance: float = 1e-10, max_iterations: int = 10_000
) -> float:
    _check_vertex(c, v)
    return sum(
        eigenvector_centrality_p(c, p, tolerance, max_iterations).values[v]
        for p in range(1, c.dim + 1)
    )


# ---------------------------------------------------------------- reports

MEASURES = (
    "degree",
    "degree-pp",
    "degree-pp-strict",
    "degree-max",
    "closeness",
    "closeness-max",
    "eigenvector",
    "eigenvector-max",
)


def centrality_report(
    c: SimplicialComplex,
    measure: str,
    p: int | None = None,
    variant: ClosenessVariant = ClosenessVariant.RECIPROCAL_OF_SUM,
    tolerance: float = 1e-10,
    max_iterations: int = 10_000,
) -> CentralityReport:
    """Evaluate one named measure on every vertex of ``c``."""
    variant = ClosenessVariant(variant)
    vs = c.vertices
    meta: dict[str, Any] = {"dimension": c.dim}
    if measure.endswith("-max"):
        if measure == "degree-max":
            values = {v: max_simplicial_degree_centrality(c, v) for v in vs}
        elif measure == "closeness-max":
            values = {v: max_closeness_centrality(c, v, variant) for v in vs}
            meta["variant"] = variant.value
        elif measure == "eigenvector-max":
            reports = [eigenvector_centrality_p(c, q, tolerance, max_iterations) for q in range(1, c.dim + 1)]
            values = {v: sum(r.values[v] for r in reports) for v in vs}
            meta["eigenvalues"] = {r.p: r.meta["eigenvalues"] for r in reports}
        else:
            raise ComplexError(f"unknown measure {measure!r}")
        return CentralityReport(measure, "max", values, meta)
    if p is None:
        raise ComplexError(f"measure {measure!r} needs a dimension p")
    if measure == "degree":
        values = {v: degree_centrality_p(c, v, p) for v in vs}
    elif measure == "degree-pp":
        values = {v: degree_centrality_pp(c, v, p) for v in vs}
    elif measure == "degree-pp-strict":
        values = {v: degree_centrality_pp(c, v, p, strict=True) for v in vs}
    elif measure == "closeness":
        nbrs = p_neighbors(c, p)
        values = {v: _closeness(nbrs, v, vs, variant) for v in vs}
        meta["variant"] = variant.value
    elif measure == "eigenvector":
        return eigenvector_centrality_p(c, p, tolerance, max_iterations)
    else:
        raise ComplexError(f"unknown measure {measure!r}; choose from {', '.join(MEASURES)}")
    return CentralityReport(measure, p, values, meta)
