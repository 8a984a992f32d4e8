"""Finite abstract simplicial complexes and their construction from graphs and point clouds.

Simplices are plain tuples of vertex ids in strictly ascending order, so
``(0, 2, 5)`` is the 2-simplex on vertices 0, 2 and 5. Use :func:`simplex` to
normalize arbitrary iterables.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from typing import Iterable, Mapping

import numpy as np

Simplex = tuple[int, ...]


class ComplexError(ValueError):
    """Invalid input for a complex, graph or point cloud."""


def simplex(vertices: Iterable[int]) -> Simplex:
    """Normalize ``vertices`` into a simplex (sorted, duplicate-free tuple)."""
    s = tuple(sorted(set(int(v) for v in vertices)))
    if not s:
        raise ComplexError("a simplex must contain at least one vertex")
    return s


def dim_of(s: Simplex) -> int:
    return len(s) - 1


def _edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on non-negative integer vertex ids."""

    vertices: frozenset[int]
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        for v in self.vertices:
            if not isinstance(v, (int, np.integer)) or v < 0:
                raise ComplexError(f"vertex id {v!r} is not a non-negative integer")
        for u, v in self.edges:
            if u == v:
                raise ComplexError(f"loop at vertex {u} is not allowed")
            if u > v:
                raise ComplexError(f"edge {(u, v)} is not normalized as (min, max)")
            if u not in self.vertices or v not in self.vertices:
                raise ComplexError(f"edge {(u, v)} references an unknown vertex")

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[int, int]], vertices: Iterable[int] = ()) -> "Graph":
        """Build a graph from an edge iterable; endpoints are added as vertices.

        Repeated edges collapse. Loops raise :class:`ComplexError`.
        """
        es = set()
        vs = set(int(v) for v in vertices)
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise ComplexError(f"loop at vertex {u} is not allowed")
            if u < 0 or v < 0:
                raise ComplexError(f"negative vertex id in edge {(u, v)}")
            es.add(_edge(u, v))
            vs.update((u, v))
        return cls(frozenset(vs), frozenset(es))

    def neighbors(self) -> dict[int, set[int]]:
        nbrs: dict[int, set[int]] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return nbrs

    def adjacency_matrix(self) -> np.ndarray:
        order = sorted(self.vertices)
        index = {v: i for i, v in enumerate(order)}
        a = np.zeros((len(order), len(order)), dtype=int)
        for u, v in self.edges:
            a[index[u], index[v]] = a[index[v], index[u]] = 1
        return a


class SimplicialComplex:
    """Immutable finite abstract simplicial complex.

    Construct with :meth:`from_simplices` (downward closure is taken) or with
    :func:`build_clique_complex` / :func:`build_vietoris_rips`.
    """

    __slots__ = ("_faces_by_dim", "_faces", "_facets", "_vertices", "_star")

    def __init__(self, faces: Iterable[Simplex]):
        by_dim: dict[int, set[Simplex]] = {}
        for s in faces:
            by_dim.setdefault(len(s) - 1, set()).add(s)
        self._faces_by_dim = {k: frozenset(v) for k, v in sorted(by_dim.items())}
        self._faces = frozenset(itertools.chain.from_iterable(self._faces_by_dim.values()))
        self._vertices = tuple(sorted(s[0] for s in self._faces_by_dim.get(0, ())))
        self._check_closed()
        self._star: dict[int, frozenset[Simplex]] = {}
        star: dict[int, set[Simplex]] = {v: set() for v in self._vertices}
        for s in self._faces:
            for v in s:
                star[v].add(s)
        self._star = {v: frozenset(ss) for v, ss in star.items()}
        self._facets = self._compute_facets()

    @classmethod
    def from_simplices(cls, simplices: Iterable[Iterable[int]]) -> "SimplicialComplex":
        """Smallest complex containing every given simplex."""
        faces: set[Simplex] = set()
        for s in simplices:
            s = simplex(s)
            if s in faces:
                continue
            for k in range(1, len(s) + 1):
                faces.update(itertools.combinations(s, k))
        return cls(faces)

    def _check_closed(self):
        for k, faces in self._faces_by_dim.items():
            if k == 0:
                continue
            lower = self._faces_by_dim.get(k - 1, frozenset())
            for s in faces:
                for sub in itertools.combinations(s, k):
                    if sub not in lower:
                        raise ComplexError(f"face {sub} of {s} is missing: not downward closed")

    def _compute_facets(self) -> frozenset[Simplex]:
        covered: set[Simplex] = set()
        for k, faces in self._faces_by_dim.items():
            if k == 0:
                continue
            for s in faces:
                covered.update(itertools.combinations(s, k))
        return frozenset(self._faces - covered)

    @property
    def dim(self) -> int:
        """Largest simplex dimension; -1 for the empty complex."""
        return max(self._faces_by_dim, default=-1)

    @property
    def vertices(self) -> tuple[int, ...]:
        return self._vertices

    @property
    def vertex_count(self) -> int:
        return len(self._vertices)

    @property
    def facets(self) -> frozenset[Simplex]:
        return self._facets

    @property
    def faces_by_dim(self) -> Mapping[int, frozenset[Simplex]]:
        return dict(self._faces_by_dim)

    def faces(self) -> frozenset[Simplex]:
        return self._faces

    def f_vector(self) -> tuple[int, ...]:
        return tuple(len(self._faces_by_dim.get(k, ())) for k in range(self.dim + 1))

    def star(self, v: int) -> frozenset[Simplex]:
        """All faces containing vertex ``v``."""
        return self._star.get(v, frozenset())

    def one_skeleton(self) -> Graph:
        edges = frozenset((s[0], s[1]) for s in self._faces_by_dim.get(1, ()))
        return Graph(frozenset(self._vertices), edges)

    def __contains__(self, s) -> bool:
        return tuple(s) in self._faces

    def __len__(self) -> int:
        return len(self._faces)

    def __eq__(self, other) -> bool:
        return isinstance(other, SimplicialComplex) and self._faces == other._faces

    def __hash__(self) -> int:
        return hash(self._faces)

    def __repr__(self) -> str:
        return f"SimplicialComplex(dim={self.dim}, f_vector={self.f_vector()})"


def faces_of_dim(c: SimplicialComplex, k: int) -> frozenset[Simplex]:
    if k < 0:
        raise ComplexError(f"dimension must be non-negative, got {k}")
    return c.faces_by_dim.get(k, frozenset())


def cofaces_of_set(c: SimplicialComplex, vertices: Simplex, k: int) -> set[Simplex]:
    """k-faces of ``c`` containing every vertex in ``vertices`` (no membership check)."""
    if len(vertices) > k + 1 or not vertices:
        return set()
    it = iter(vertices)
    candidates = c.star(next(it))
    rest = set(it)
    return {s for s in candidates if len(s) == k + 1 and rest.issubset(s)}


def cofaces(c: SimplicialComplex, s: Simplex, k: int) -> set[Simplex]:
    """All k-simplices of ``c`` that contain ``s``."""
    s = tuple(s)
    if s not in c:
        raise ComplexError(f"simplex {s} is not in the complex")
    if k < dim_of(s):
        raise ComplexError(f"coface dimension {k} is below dim {dim_of(s)} of {s}")
    return cofaces_of_set(c, s, k)


def bron_kerbosch(nbrs: Mapping[int, set[int]]) -> list[Simplex]:
    """Maximal cliques of a graph given as an adjacency mapping (Tomita pivoting)."""
    out: list[Simplex] = []

    def expand(r: list[int], p: set[int], x: set[int]):
        if not p and not x:
            out.append(tuple(sorted(r)))
            return
        pivot = max(p | x, key=lambda u: len(p & nbrs[u]))
        for v in list(p - nbrs[pivot]):
            expand(r + [v], p & nbrs[v], x & nbrs[v])
            p.discard(v)
            x.add(v)

    expand([], set(nbrs), set())
    return sorted(out)


def build_clique_complex(g: Graph, max_dim: int | None = None) -> SimplicialComplex:
    """Clique (flag) complex of ``g``: k-simplices are the (k+1)-cliques.

    With ``max_dim`` the complex is truncated to its ``max_dim``-skeleton.
    Cliques are grown in ascending vertex order, each extended only by common
    neighbours larger than its last vertex, so every clique is produced once.
    """
    if max_dim is not None and max_dim < 0:
        raise ComplexError(f"max_dim must be non-negative, got {max_dim}")
    nbrs = g.neighbors()
    higher = {v: {u for u in ns if u > v} for v, ns in nbrs.items()}
    faces: list[Simplex] = []
    stack: list[tuple[Simplex, set[int]]] = [((v,), higher[v]) for v in sorted(g.vertices)]
    while stack:
        clique, cand = stack.pop()
        faces.append(clique)
        if max_dim is not None and len(clique) > max_dim:
            continue
        for u in cand:
            stack.append((clique + (u,), cand & higher[u]))
    return SimplicialComplex(faces)


class Metric(enum.Enum):
    EUCLIDEAN = "d1"
    CHEBYSHEV = "d2"
    MANHATTAN = "d3"
    EXCHANGE_SIZE = "d4"
    EXCHANGE_FLAG = "d5"

    @classmethod
    def parse(cls, name: str) -> "Metric":
        try:
            return cls(name)
        except ValueError:
            try:
                return cls[name.upper()]
            except KeyError:
                raise ComplexError(f"unknown metric {name!r}; use one of d1..d5") from None


@dataclass
class PointCloud:
    """Labelled points plus optional pairwise exchange records.

    ``exchange_size`` maps an unordered pair ``(u, v)`` with ``u < v`` to a
    positive exchange volume (metric d4); ``exchange_flag`` lists pairs with a
    recorded exchange (metric d5). When only sizes are supplied, their pairs
    double as flags.
    """

    points: dict[int, np.ndarray]
    exchange_size: dict[tuple[int, int], float] | None = None
    exchange_flag: set[tuple[int, int]] | None = None
    _dim: int = field(init=False, default=0, repr=False)

    def __post_init__(self):
        pts = {}
        dims = set()
        for k, x in self.points.items():
            if int(k) < 0:
                raise ComplexError(f"vertex id {k} is negative")
            arr = np.atleast_1d(np.asarray(x, dtype=float))
            dims.add(arr.shape)
            pts[int(k)] = arr
        if len(dims) > 1:
            raise ComplexError(f"points have mismatched coordinate dimensions: {sorted(dims)}")
        self.points = pts
        self._dim = next(iter(dims))[0] if dims else 0
        if self.exchange_size is not None:
            sizes = {}
            for (u, v), e in self.exchange_size.items():
                if not e > 0:
                    raise ComplexError(f"exchange size for {(u, v)} must be positive, got {e}")
                sizes[_edge(int(u), int(v))] = float(e)
            self.exchange_size = sizes
        if self.exchange_flag is not None:
            self.exchange_flag = {_edge(int(u), int(v)) for u, v in self.exchange_flag}

    @property
    def ids(self) -> list[int]:
        return sorted(self.points)

    def flags(self) -> set[tuple[int, int]] | None:
        if self.exchange_flag is not None:
            return self.exchange_flag
        if self.exchange_size is not None:
            return set(self.exchange_size)
        return None


def distance(pc: PointCloud, u: int, v: int, metric: Metric) -> float:
    if metric is Metric.EXCHANGE_SIZE:
        if pc.exchange_size is None:
            raise ComplexError("metric d4 needs exchange sizes")
        e = pc.exchange_size.get(_edge(u, v))
        return 1.0 / e if e is not None else 2.0
    if metric is Metric.EXCHANGE_FLAG:
        flags = pc.flags()
        if flags is None:
            raise ComplexError("metric d5 needs exchange records")
        return 0.0 if _edge(u, v) in flags else 1.0
    diff = pc.points[v] - pc.points[u]
    if metric is Metric.EUCLIDEAN:
        return float(np.sqrt(np.dot(diff, diff)))
    if metric is Metric.CHEBYSHEV:
        return float(np.max(np.abs(diff)))
    return float(np.sum(np.abs(diff)))


def neighborhood_graph(pc: PointCloud, metric: Metric, r: float) -> Graph:
    """Graph joining every pair of points at distance at most ``r``."""
    ids = pc.ids
    edges = [(u, v) for u, v in itertools.combinations(ids, 2) if distance(pc, u, v, metric) <= r]
    return Graph.from_edges(edges, vertices=ids)


def build_vietoris_rips(
    pc: PointCloud, metric: Metric, r: float, max_dim: int | None = None
) -> SimplicialComplex:
    """Vietoris-Rips complex of ``pc`` at scale ``r`` (pairs at distance exactly r included)."""
    if not r > 0:
        raise ComplexError(f"radius must be positive, got {r}")
    metric = Metric.parse(metric) if isinstance(metric, str) else metric
    return build_clique_complex(neighborhood_graph(pc, metric, r), max_dim=max_dim)
