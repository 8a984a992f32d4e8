"""Embedded worked examples and tables: small complexes, feature tables, labels and expected values."""
from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from .complex import Graph, PointCloud, SimplicialComplex, build_clique_complex
from .mining import FeatureTable, Pattern, Target

# ------------------------------------------------------------- five-vertex example
# vertices x1..x5 carry ids 1..5

EXAMPLE_EDGES = [(1, 2), (1, 3), (2, 3), (4, 5), (2, 5), (2, 4)]
EXAMPLE_TRIANGLES = [(1, 2, 3), (2, 4, 5)]

# Coordinates drawn in the figure. They fix the sample distances
# d2(x1, x2) = 3/2 and d3(x1, x2) = 2 but do not realize the complex as a
# Rips complex: d1(x3, x4) = 2 < d1(x2, x5) = sqrt(5).
EXAMPLE_FIGURE_POINTS = {
    1: (1.0, 0.0),
    2: (2.5, 0.5),
    3: (1.5, 1.5),
    4: (3.5, 1.5),
    5: (4.5, 1.5),
}

# A point set whose Euclidean Rips complex at r = 3 is exactly the example,
# keeping the x1 -> x2 offset (1.5, 0.5) of the figure.
EXAMPLE_RIPS_POINTS = {
    1: (1.0, 0.5),
    2: (2.5, 1.0),
    3: (1.0, 2.0),
    4: (4.1, 2.0),
    5: (4.1, 0.0),
}
EXAMPLE_RIPS_RADIUS = 3.0


def example_complex() -> SimplicialComplex:
    return build_clique_complex(Graph.from_edges(EXAMPLE_EDGES))


def example_point_cloud(figure: bool = False) -> PointCloud:
    pts = EXAMPLE_FIGURE_POINTS if figure else EXAMPLE_RIPS_POINTS
    return PointCloud({k: np.array(v) for k, v in pts.items()})


# ------------------------------------------------------------- two complexes
# Left: a solid tetrahedron through sigma1. Right: sigma2 is the hub of six
# triangles, sigma3 a vertex of one of them.

SIGMA1, SIGMA2, SIGMA3 = 1, 2, 3
LEFT_EDGES = [(1, 11), (1, 12), (1, 13), (11, 12), (11, 13), (12, 13)]
# R=3 (sigma3), V=2 (sigma2), S=4, W=5, T=6, U=7, X=8, Y=9, K=10
RIGHT_EDGES = [
    (2, 10), (2, 9), (9, 10),   # V K Y
    (3, 4), (2, 3), (2, 4),     # R S V
    (7, 8), (2, 7), (2, 8),     # X U V
    (4, 5), (2, 5),             # W S V
    (2, 6), (6, 7),             # T U V
    (8, 9),                     # X Y V
]
BARE_EDGE_VERTEX = 14


def left_complex() -> SimplicialComplex:
    return build_clique_complex(Graph.from_edges(LEFT_EDGES))


def right_complex(with_bare_edge: bool = False) -> SimplicialComplex:
    edges = RIGHT_EDGES + ([(SIGMA3, BARE_EDGE_VERTEX)] if with_bare_edge else [])
    return build_clique_complex(Graph.from_edges(edges))


# ------------------------------------------------------------- seven-vertex eigenvector example
# Vertices sigma1..sigma7 carry ids 1..7. Triangles 123, 245, 467 plus the
# bare edge 16.

EIGEN_EDGES = [(1, 2), (1, 3), (2, 3), (2, 4), (2, 5), (4, 5), (4, 6), (4, 7), (6, 7), (1, 6)]

# As printed. The matrix printed for p = 1 lacks the edge 16 and is the one
# for p = 2, and vice versa: entrywise A_2 <= A_1 must hold, and only this
# assignment reproduces the printed eigenvectors.
A1_PRINTED = np.array([
    [0, 1, 1, 0, 0, 0, 0],
    [1, 0, 1, 1, 1, 0, 0],
    [1, 1, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 1, 1, 1],
    [0, 1, 0, 1, 0, 0, 0],
    [0, 0, 0, 1, 0, 0, 1],
    [0, 0, 0, 1, 0, 1, 0],
])
A2_PRINTED = np.array([
    [0, 1, 1, 0, 0, 1, 0],
    [1, 0, 1, 1, 1, 0, 0],
    [1, 1, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 1, 1, 1],
    [0, 1, 0, 1, 0, 0, 0],
    [1, 0, 0, 1, 0, 0, 1],
    [0, 0, 0, 1, 0, 1, 0],
])
V1_PRINTED = (1.33, 1.70, 1.0, 1.70, 1.12, 1.33, 1.0)
V2_PRINTED = (1.0, 1.81, 1.0, 1.81, 1.29, 1.0, 1.0)


def eigen_complex() -> SimplicialComplex:
    return build_clique_complex(Graph.from_edges(EIGEN_EDGES))


# ------------------------------------------------------------- congress tables (20 individuals, ids 0..19)

CONGRESS_IDS = tuple(range(20))

DEGREE_TABLE = {
    "deg11": [6, 3, 3, 5, 6, 2, 1, 5, 8, 6, 2, 8, 6, 10, 4, 6, 4, 12, 5, 4],
    "deg22": [5, 2, 1, 6, 5, 1, 0, 7, 12, 3, 0, 9, 8, 14, 2, 6, 4, 21, 3, 5],
    "deg33": [1, 0, 0, 2, 0, 0, 0, 3, 6, 0, 0, 3, 2, 6, 0, 2, 1, 8, 0, 2],
    "deg44": [0] * 20,
}
ATTACKER_LABELS = [0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 1, 0, 1, 1, 0, 1, 1, 0]

EIGEN_TABLE = {
    "eig1": [1.421, 0.962, 0.663, 1.384, 1.442, 0.648, 0.298, 1.564, 1.935, 0.908,
             0.421, 1.828, 1.643, 2.380, 0.772, 1.601, 1.321, 2.816, 1.014, 1.187],
    "eig2": [1.279, 0.973, 0.122, 1.430, 1.455, 0.661, 0.0, 1.617, 1.962, 0.384,
             0.0, 1.803, 1.640, 2.336, 0.617, 1.514, 1.362, 2.772, 0.384, 1.244],
    "eig3": [0.913, 0.0, 0.0, 1.338, 0.0, 0.0, 0.0, 1.760, 2.134, 0.0,
             0.0, 1.564, 1.299, 2.293, 0.0, 1.475, 1.238, 2.565, 0.0, 1.381],
    "eig4": [0.0] * 20,
}

CLOSENESS_TABLE = {
    "close1": [0.029, 0.026, 0.025, 0.028, 0.028, 0.023, 0.020, 0.029, 0.031, 0.027,
               0.023, 0.032, 0.030, 0.036, 0.024, 0.031, 0.028, 0.039, 0.029, 0.025],
}
# the closeness table prints a different labeling (14 attackers); qualities use ATTACKER_LABELS
CLOSENESS_TABLE_ATTACKER = [0, 1, 1, 0, 0, 1, 1, 1, 1, 1, 1, 1, 0, 1, 1, 0, 1, 1, 0, 1]


def congress_features() -> FeatureTable:
    cols = {**DEGREE_TABLE, **EIGEN_TABLE, **CLOSENESS_TABLE}
    return FeatureTable(CONGRESS_IDS, cols)


def congress_targets() -> tuple[Target, Target]:
    """(non-attacker, attacker) targets from ATTACKER_LABELS."""
    attacker = Target("attacker", dict(zip(CONGRESS_IDS, ATTACKER_LABELS)))
    return attacker.complement("non_attacker"), attacker


# (pattern, target name, printed quality)
QUALITY_CHECKS = [
    (Pattern.of("deg11", "<", 4), "non_attacker", Fraction(7, 20)),
    (Pattern.of("deg22", "<", 2), "non_attacker", Fraction(7, 20)),
    (Pattern.of("deg33", "<", 1), "non_attacker", Fraction(17, 180)),
    (Pattern.of("deg11", ">", 5), "attacker", Fraction(37, 180)),
    (Pattern.of("deg22", ">", 14), "attacker", Fraction(13, 20)),
    (Pattern.of("deg33", ">", 7), "attacker", Fraction(13, 20)),
    (Pattern.of("eig1", "<", 0.5), "non_attacker", Fraction(7, 20)),
    (Pattern.of("eig2", "<", 0.2), "non_attacker", Fraction(7, 20)),
    (Pattern.of("eig3", "<", 2), "non_attacker", Fraction(19, 340)),
    (Pattern.of("eig1", ">", 2.5), "attacker", Fraction(13, 20)),
    (Pattern.of("eig2", ">", 2.5), "attacker", Fraction(13, 20)),
    (Pattern.of("eig3", ">", 2.5), "attacker", Fraction(13, 20)),
    (Pattern.of("close1", "<", 0.024), "non_attacker", Fraction(7, 20)),
    # the printed support (13, share 6/13) counts the vertex sitting exactly at 0.027
    (Pattern.of("close1", ">=", 0.027), "attacker", Fraction(29, 260)),
]

# printed sample distances between x1 and x2
EXAMPLE_DISTANCES_PRINTED = {"d1": math.sqrt(10) / 4, "d2": 1.5, "d3": 2.0}
