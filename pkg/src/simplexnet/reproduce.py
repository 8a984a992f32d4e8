"""Named reproduction suites over the embedded fixtures.

Each suite returns a list of :class:`Check`. A suite that needs external
data it was not given reports those checks as skipped rather than failed.
"""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Callable

import numpy as np

from . import adjacency as adj
from . import centrality as cen
from . import fixtures as fx
from .complex import Metric, build_clique_complex, build_vietoris_rips, distance
from .epidemic import SIParams, infection_rate
from .io import read_edge_list
from .mining import quality

PASS, FAIL, SKIP = "pass", "fail", "skip"


@dataclass
class Check:
    name: str
    status: str
    detail: str = ""

    def line(self) -> str:
        tail = f"  ({self.detail})" if self.detail else ""
        return f"[{self.status.upper():4}] {self.name}{tail}"


def _eq(name, got, want) -> Check:
    ok = got == want
    return Check(name, PASS if ok else FAIL, f"got {got!r}, expected {want!r}")


def _close(name, got, want, tol) -> Check:
    ok = abs(got - want) <= tol
    return Check(name, PASS if ok else FAIL, f"got {got:.6g}, expected {want:.6g} +/- {tol:g}")


def ratio_mismatch(computed, printed) -> float:
    """Largest relative deviation of ``computed`` from ``printed`` after the best common scale.

    Compares only entries that are nonzero in ``printed``.
    """
    c = np.asarray(computed, dtype=float)
    p = np.asarray(printed, dtype=float)
    nz = p != 0
    if not nz.any():
        return 0.0
    scale = np.dot(c[nz], p[nz]) / np.dot(c[nz], c[nz]) if np.any(c[nz]) else 0.0
    return float(np.max(np.abs(c[nz] * scale - p[nz]) / p[nz]))


def example_suite(**_) -> list[Check]:
    c = fx.example_complex()
    checks = [
        _eq("clique complex f-vector", c.f_vector(), (5, 6, 2)),
        _eq("clique complex 2-simplices", sorted(c.faces_by_dim[2]), fx.EXAMPLE_TRIANGLES),
        _eq(
            "Rips complex (d1, r=3) equals clique complex",
            build_vietoris_rips(fx.example_point_cloud(), Metric.EUCLIDEAN, fx.EXAMPLE_RIPS_RADIUS),
            c,
        ),
    ]
    fig = fx.example_point_cloud(figure=True)
    for name, metric in (("d1", Metric.EUCLIDEAN), ("d2", Metric.CHEBYSHEV), ("d3", Metric.MANHATTAN)):
        checks.append(_close(f"{name}(x1, x2) as printed", distance(fig, 1, 2, metric),
                             fx.EXAMPLE_DISTANCES_PRINTED[name], 1e-12))
    a, b = (1, 2, 3), (2, 4, 5)
    checks += [
        _eq("0-adjacency degree of {x1,x2,x3}", adj.deg_adj_p(c, a, 0), 3),
        _eq("{x1,x2,x3}, {x2,x4,x5} strictly 0-lower adjacent", adj.strictly_lower_adjacent(c, a, b, 0), True),
        _eq("{x1,x2,x3}, {x2,x4,x5} 0-adjacent", adj.p_adjacent(c, a, b, 0), True),
        _eq("{x1,x2,x3}, {x2,x4,x5} upper adjacent for some p",
            any(adj.upper_adjacent(c, a, b, p) for p in range(1, c.dim + 1)), False),
    ]
    return checks


def two_complexes_suite(**_) -> list[Check]:
    left, right = fx.left_complex(), fx.right_complex()
    s1, s2, s3 = fx.SIGMA1, fx.SIGMA2, fx.SIGMA3
    checks = [
        _eq("strict (3,3)-degree of sigma1", cen.degree_centrality_pp(left, s1, 3, strict=True), 1),
        _eq("strict (3,3)-degree of sigma2", cen.degree_centrality_pp(right, s2, 3, strict=True), 0),
        _eq("strict (2,2)-degree of sigma1", cen.degree_centrality_pp(left, s1, 2, strict=True), 0),
        _eq("strict (2,2)-degree of sigma2", cen.degree_centrality_pp(right, s2, 2, strict=True), 6),
        _eq("maximal degree of sigma1", cen.max_simplicial_degree_centrality(left, s1), 1),
        _eq("maximal degree of sigma2", cen.max_simplicial_degree_centrality(right, s2), 6),
        _eq("maximal-degree bound of sigma1", cen.max_degree_bound(left, s1), 9),
        _eq("maximal-degree bound of sigma2", cen.max_degree_bound(right, s2), 12),
    ]
    h = cen.ClosenessVariant.HARMONIC
    plus = fx.right_complex(with_bare_edge=True)
    c1, c2 = cen.closeness_centrality_p(right, s3, 1, h), cen.closeness_centrality_p(right, s3, 2, h)
    d1, d2 = cen.closeness_centrality_p(plus, s3, 1, h), cen.closeness_centrality_p(plus, s3, 2, h)
    checks += [
        _eq("harmonic 1-closeness of sigma3", c1, 5.0),
        _eq("harmonic 2-closeness of sigma3", c2, 5.0),
        _eq("1-closeness after bare edge", d1, 6.0),
        _eq("2-closeness unchanged after bare edge", d2, c2),
        _eq("maximal closeness strictly below bound", cen.max_closeness_centrality(plus, s3, h) < 2 * d1, True),
    ]
    return checks


def eigenvector_suite(**_) -> list[Check]:
    c = fx.eigen_complex()
    a1 = cen.p_adjacency_matrix(c, 1).matrix
    a2 = cen.p_adjacency_matrix(c, 2).matrix
    e1 = cen.eigenvector_centrality_p(c, 1).values
    e2 = cen.eigenvector_centrality_p(c, 2).values
    v1 = [e1[v] for v in c.vertices]
    v2 = [e2[v] for v in c.vertices]
    m1, m2 = ratio_mismatch(v1, fx.V1_PRINTED), ratio_mismatch(v2, fx.V2_PRINTED)
    return [
        Check("A_1 equals the matrix printed as A_1", PASS if np.array_equal(a1, fx.A1_PRINTED) else FAIL,
              "computed A_1 contains the edge 16 and equals the matrix printed as A_2"),
        Check("A_2 equals the matrix printed as A_2", PASS if np.array_equal(a2, fx.A2_PRINTED) else FAIL,
              "computed A_2 lacks the edge 16 and equals the matrix printed as A_1"),
        Check("printed matrices are A_2 and A_1 (labels swapped)",
              PASS if np.array_equal(a1, fx.A2_PRINTED) and np.array_equal(a2, fx.A1_PRINTED) else FAIL),
        _eq("complex is 2-upper connected", cen.is_p_upper_connected(c, 2), True),
        Check("v1 ratios within 1%", PASS if m1 <= 0.01 else FAIL, f"max deviation {m1:.4f}"),
        Check("v2 ratios within 1%", PASS if m2 <= 0.01 else FAIL, f"max deviation {m2:.4f}"),
        _eq("c6 E1 > c6 E2", e1[6] > e2[6], True),
        _eq("c4 E2 > c4 E1", e2[4] > e1[4], True),
    ]


def quality_suite(**_) -> list[Check]:
    tbl = fx.congress_features()
    targets = {t.name: t for t in fx.congress_targets()}
    return [_eq(f"q0[{t}]({p})", quality(tbl, p, targets[t]), want) for p, t, want in fx.QUALITY_CHECKS]


def congress_suite(congress_edges: str | Path | None = None, **_) -> list[Check]:
    deg11 = fx.DEGREE_TABLE["deg11"]
    lam = sum(deg11) / len(deg11)
    checks = [
        _close("average (1,1)-degree", lam, 5.3, 1e-12),
        _close("SI rate P*lam/N for P=0.2", infection_rate(SIParams(N=20, g0=4, P=0.2, lam=lam)), 0.053, 1e-12),
        _eq("attacker count", sum(fx.ATTACKER_LABELS), 7),
        _eq("eig4 column all zero", all(x == 0 for x in fx.EIGEN_TABLE["eig4"]), True),
    ]
    graph_checks = [f"degree column deg{p}{p}" for p in range(1, 5)]
    graph_checks += [f"eigenvector column eig{p}" for p in range(1, 5)] + ["closeness column close1"]
    if congress_edges is None:
        return checks + [Check(n, SKIP, "no congress edge list supplied") for n in graph_checks]
    c = build_clique_complex(read_edge_list(congress_edges))
    ids = fx.CONGRESS_IDS
    missing = [v for v in ids if (v,) not in c]
    if missing:
        return checks + [Check(n, FAIL, f"vertices {missing} absent from edge list") for n in graph_checks]
    for p in range(1, 5):
        got = [cen.degree_centrality_pp(c, v, p) for v in ids]
        checks.append(_eq(f"degree column deg{p}{p}", got, fx.DEGREE_TABLE[f"deg{p}{p}"]))
    for p in range(1, 5):
        vals = cen.eigenvector_centrality_p(c, p).values
        got = [vals[v] for v in ids]
        want = fx.EIGEN_TABLE[f"eig{p}"]
        zeros_ok = all((g == 0) == (w == 0) for g, w in zip(got, want))
        dev = ratio_mismatch(got, want)
        ok = zeros_ok and dev <= 0.01
        checks.append(Check(f"eigenvector column eig{p}", PASS if ok else FAIL,
                            f"max ratio deviation {dev:.4f}, zero pattern {'ok' if zeros_ok else 'differs'}"))
    got = [cen.closeness_centrality_p(c, v, 1) for v in ids]
    worst = max(abs(g - w) for g, w in zip(got, fx.CLOSENESS_TABLE["close1"]))
    checks.append(Check("closeness column close1", PASS if worst <= 0.0005 else FAIL, f"max abs error {worst:.5f}"))
    return checks


SUITES: dict[str, Callable[..., list[Check]]] = {
    "example-2.2": example_suite,
    "two-complexes": two_complexes_suite,
    "eigenvector-7": eigenvector_suite,
    "congress-tables": congress_suite,
    "quality-values": quality_suite,
}


def run_suite(name: str, **kwargs) -> list[Check]:
    try:
        suite = SUITES[name]
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}; available: {', '.join(SUITES)}") from None
    return suite(**kwargs)
