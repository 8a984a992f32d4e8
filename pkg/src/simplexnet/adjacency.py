"""Upper, lower and mixed adjacency between simplices, and the degrees they induce.

All predicates take the complex first and two distinct member simplices.
Degree functions count distinct partner simplices, never witnesses.

Lower adjacency is only defined between simplices that are not nested: a
simplex and one of its own faces or cofaces are never lower adjacent. This
keeps vertices free of lower/mixed adjacencies and leaves the worked
triangle examples unchanged (nested pairs there already fail strictness).
"""
from __future__ import annotations

import enum
import itertools

from .complex import ComplexError, Simplex, SimplicialComplex, cofaces_of_set, dim_of


class AdjacencyKind(enum.Enum):
    UPPER = "upper"
    STRICT_UPPER = "strict-upper"
    LOWER = "lower"
    STRICT_LOWER = "strict-lower"
    P_ADJACENT = "p-adjacent"
    MAXIMAL_P_ADJACENT = "maximal-p-adjacent"


def _member(c: SimplicialComplex, s) -> Simplex:
    s = tuple(s)
    if s not in c:
        raise ComplexError(f"simplex {s} is not in the complex")
    return s


def _check_pair(c, s, t) -> tuple[Simplex, Simplex]:
    s, t = _member(c, s), _member(c, t)
    if s == t:
        raise ComplexError("adjacency is only defined for distinct simplices")
    return s, t


def _check_upper_p(c: SimplicialComplex, p: int):
    if not 1 <= p <= c.dim:
        raise ComplexError(f"upper adjacency needs 1 <= p <= {c.dim}, got p={p}")


def _check_lower_p(c: SimplicialComplex, p: int):
    if not 0 <= p <= c.dim - 1:
        raise ComplexError(f"lower adjacency needs 0 <= p <= {c.dim - 1}, got p={p}")


# Unchecked kernels. p outside the valid range simply yields False.

def _upper(c: SimplicialComplex, s: Simplex, t: Simplex, p: int) -> bool:
    if p < 1 or p > c.dim:
        return False
    union = tuple(sorted(set(s) | set(t)))
    return bool(cofaces_of_set(c, union, p))


def _strict_upper(c, s, t, p) -> bool:
    return _upper(c, s, t, p) and not _upper(c, s, t, p + 1)


def _nested(s: Simplex, t: Simplex) -> bool:
    ss, ts = set(s), set(t)
    return ss <= ts or ts <= ss


def _lower(c, s, t, p) -> bool:
    if p < 0 or _nested(s, t):
        return False
    # any (p+1)-subset of the intersection is a common p-face by downward closure
    return len(set(s) & set(t)) >= p + 1


def _strict_lower(c, s, t, p) -> bool:
    return _lower(c, s, t, p) and not _lower(c, s, t, p + 1)


def _p_adjacent(c, s, t, p) -> bool:
    return _strict_lower(c, s, t, p) and not _upper(c, s, t, dim_of(s) + dim_of(t) - p)


def _p_adjacent_partners(c, s, p) -> list[Simplex]:
    # p-adjacent partners share a vertex with s
    cand = set()
    for v in s:
        cand |= c.star(v)
    cand.discard(s)
    return [t for t in cand if _p_adjacent(c, s, t, p)]


def _maximal_p_adjacent(c, s, t, p) -> bool:
    if not _p_adjacent(c, s, t, p):
        return False
    ts = set(t)
    return not any(ts < set(u) for u in _p_adjacent_partners(c, s, p))


def upper_adjacent(c: SimplicialComplex, s, t, p: int) -> bool:
    """True iff some p-simplex of ``c`` has both ``s`` and ``t`` as faces."""
    s, t = _check_pair(c, s, t)
    _check_upper_p(c, p)
    return _upper(c, s, t, p)


def strictly_upper_adjacent(c: SimplicialComplex, s, t, p: int) -> bool:
    s, t = _check_pair(c, s, t)
    _check_upper_p(c, p)
    return _strict_upper(c, s, t, p)


def lower_adjacent(c: SimplicialComplex, s, t, p: int) -> bool:
    s, t = _check_pair(c, s, t)
    _check_lower_p(c, p)
    return _lower(c, s, t, p)


def strictly_lower_adjacent(c: SimplicialComplex, s, t, p: int) -> bool:
    s, t = _check_pair(c, s, t)
    _check_lower_p(c, p)
    return _strict_lower(c, s, t, p)


def p_adjacent(c: SimplicialComplex, s, t, p: int) -> bool:
    """Strictly p-lower adjacent and not (dim s + dim t - p)-upper adjacent.

    When that upper index falls outside ``[1, dim c]`` no such simplex exists
    and the upper clause does not restrict.
    """
    s, t = _check_pair(c, s, t)
    _check_lower_p(c, p)
    return _p_adjacent(c, s, t, p)


def maximal_p_adjacent(c: SimplicialComplex, s, t, p: int) -> bool:
    """p-adjacent, and ``t`` is not a proper subset of another p-adjacent partner of ``s``.

    Not symmetric in general.
    """
    s, t = _check_pair(c, s, t)
    _check_lower_p(c, p)
    return _maximal_p_adjacent(c, s, t, p)


_PREDICATES = {
    AdjacencyKind.UPPER: upper_adjacent,
    AdjacencyKind.STRICT_UPPER: strictly_upper_adjacent,
    AdjacencyKind.LOWER: lower_adjacent,
    AdjacencyKind.STRICT_LOWER: strictly_lower_adjacent,
    AdjacencyKind.P_ADJACENT: p_adjacent,
    AdjacencyKind.MAXIMAL_P_ADJACENT: maximal_p_adjacent,
}


def adjacent(c: SimplicialComplex, kind: AdjacencyKind, s, t, p: int) -> bool:
    return _PREDICATES[AdjacencyKind(kind)](c, s, t, p)


def deg_upper_p(c: SimplicialComplex, s, p: int) -> int:
    """Number of simplices p-upper adjacent to ``s`` (any dimension)."""
    s = _member(c, s)
    _check_upper_p(c, p)
    partners: set[Simplex] = set()
    for tau in cofaces_of_set(c, s, p):
        for k in range(1, p + 2):
            partners.update(itertools.combinations(tau, k))
    partners.discard(s)
    return len(partners)


def deg_upper_hp(c: SimplicialComplex, s, h: int, p: int, strict: bool = False) -> int:
    """Number of (dim s + h)-simplices that are (strictly) p-upper adjacent to ``s``.

    ``h = 0`` is accepted and counts same-dimension partners, so the
    (0, 1)-degree of a vertex is its number of graph neighbours.
    """
    s = _member(c, s)
    _check_upper_p(c, p)
    if h < 0:
        raise ComplexError(f"h must be non-negative, got {h}")
    k = dim_of(s) + h
    if k > p:
        return 0
    pred = _strict_upper if strict else _upper
    # a partner must sit inside a p-simplex through s
    cand: set[Simplex] = set()
    for tau in cofaces_of_set(c, s, p):
        cand.update(itertools.combinations(tau, k + 1))
    cand.discard(s)
    return sum(1 for t in cand if pred(c, s, t, p))


def deg_upper_max(c: SimplicialComplex, s) -> int:
    """Sum over h of the strict (h, dim s + h)-upper degrees of ``s``."""
    s = _member(c, s)
    q = dim_of(s)
    return sum(deg_upper_hp(c, s, h, q + h, strict=True) for h in range(1, c.dim - q + 1))


def deg_lower_p(c: SimplicialComplex, s, p: int) -> int:
    s = _member(c, s)
    _check_lower_p(c, p)
    cand = set()
    for v in s:
        cand |= c.star(v)
    cand.discard(s)
    return sum(1 for t in cand if _lower(c, s, t, p))


def deg_adj_p(c: SimplicialComplex, s, p: int) -> int:
    s = _member(c, s)
    _check_lower_p(c, p)
    return len(_p_adjacent_partners(c, s, p))


def deg_adj_p_star(c: SimplicialComplex, s, p: int) -> int:
    s = _member(c, s)
    _check_lower_p(c, p)
    partners = _p_adjacent_partners(c, s, p)
    sets = [set(t) for t in partners]
    return sum(1 for ts in sets if not any(ts < us for us in sets))


def deg_adj_star(c: SimplicialComplex, s) -> int:
    """Sum of maximal p-adjacency degrees for p = 0 .. dim s - 1."""
    s = _member(c, s)
    return sum(deg_adj_p_star(c, s, p) for p in range(0, dim_of(s)))


def deg_star(c: SimplicialComplex, s) -> int:
    """Maximal simplicial degree: adjacency part plus upper part."""
    return deg_adj_star(c, s) + deg_upper_max(c, s)
