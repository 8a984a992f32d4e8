import itertools

import pytest
from hypothesis import given

import oracles
from simplexnet import adjacency as adj
from simplexnet import fixtures as fx
from simplexnet.complex import ComplexError, Graph, SimplicialComplex, build_clique_complex

TRIANGLE = SimplicialComplex.from_simplices([(0, 1, 2)])
TETRA = SimplicialComplex.from_simplices([(0, 1, 2, 3)])


def test_tetrahedron_faces_are_3_upper_adjacent():
    faces = [s for s in TETRA.faces() if s != (0, 1, 2, 3)]
    for s, t in itertools.combinations(faces, 2):
        assert adj.upper_adjacent(TETRA, s, t, 3)


def test_edge_in_no_triangle_is_strict():
    c = build_clique_complex(Graph.from_edges([(0, 1), (1, 2), (0, 2), (2, 3)]))
    assert adj.strictly_upper_adjacent(c, (2,), (3,), 1)
    assert not adj.strictly_upper_adjacent(c, (0,), (1,), 1)
    assert adj.strictly_upper_adjacent(c, (0,), (1,), 2)


def test_strict_at_top_dimension_is_plain_upper():
    c = fx.example_complex()
    assert adj.strictly_upper_adjacent(c, (4,), (5,), 2)


def test_lower_adjacency_examples():
    c = fx.example_complex()
    a, b = (1, 2, 3), (2, 4, 5)
    assert adj.lower_adjacent(c, a, b, 0)
    assert adj.strictly_lower_adjacent(c, a, b, 0)
    assert not adj.lower_adjacent(c, (1,), (2,), 0)
    two = SimplicialComplex.from_simplices([(0, 1, 2), (1, 2, 3)])
    assert adj.lower_adjacent(two, (0, 1, 2), (1, 2, 3), 1)


def test_nested_simplices_are_not_lower_adjacent():
    assert not adj.lower_adjacent(TRIANGLE, (0, 1), (0, 1, 2), 0)


def test_edges_of_one_triangle_not_0_adjacent():
    # strictly 0-lower adjacent, but the triangle makes them 2-upper adjacent
    assert adj.strictly_lower_adjacent(TRIANGLE, (0, 1), (1, 2), 0)
    assert not adj.p_adjacent(TRIANGLE, (0, 1), (1, 2), 0)


def test_maximal_p_adjacency_examples():
    c = fx.example_complex()
    assert adj.maximal_p_adjacent(c, (1, 2, 3), (2, 4, 5), 0)
    assert adj.p_adjacent(c, (1, 2, 3), (2, 4), 0)
    assert not adj.maximal_p_adjacent(c, (1, 2, 3), (2, 4), 0)
    assert not adj.maximal_p_adjacent(c, (1, 2, 3), (4, 5), 0)


def test_degree_examples():
    c = fx.example_complex()
    assert adj.deg_adj_p(c, (1, 2, 3), 0) == 3
    assert adj.deg_upper_p(TRIANGLE, (0,), 2) == 6
    assert adj.deg_upper_p(c, (1,), 2) == 6
    assert adj.deg_upper_max(TETRA, (0,)) == 1
    assert adj.deg_upper_hp(TETRA, (0,), 4, 3) == 0


def test_isolated_vertex_degrees():
    c = SimplicialComplex.from_simplices([(0, 1), (2,)])
    assert adj.deg_upper_p(c, (2,), 1) == 0
    assert adj.deg_upper_max(c, (2,)) == 0
    assert adj.deg_star(c, (2,)) == 0


def test_validation():
    c = fx.example_complex()
    with pytest.raises(ComplexError):
        adj.upper_adjacent(c, (1,), (1,), 1)
    with pytest.raises(ComplexError):
        adj.upper_adjacent(c, (1,), (9,), 1)
    with pytest.raises(ComplexError):
        adj.upper_adjacent(c, (1,), (2,), 3)
    with pytest.raises(ComplexError):
        adj.lower_adjacent(c, (1, 2), (2, 3), 2)


def test_adjacent_dispatch():
    c = fx.example_complex()
    assert adj.adjacent(c, adj.AdjacencyKind.P_ADJACENT, (1, 2, 3), (2, 4, 5), 0)
    assert adj.adjacent(c, "upper", (1,), (2,), 1)


@given(oracles.graphs(max_vertices=8))
def test_graph_adjacency_is_1_upper_adjacency(g):
    c = build_clique_complex(g)
    if c.dim < 1:
        return
    for u, v in itertools.combinations(c.vertices, 2):
        assert adj.upper_adjacent(c, (u,), (v,), 1) == ((u, v) in g.edges)


@given(oracles.general_complexes(max_vertices=7))
def test_vertex_properties(c):
    for v in c.vertices:
        for p in range(0, c.dim):
            assert adj.deg_lower_p(c, (v,), p) == 0
            assert adj.deg_adj_p(c, (v,), p) == 0
        assert adj.deg_star(c, (v,)) == adj.deg_upper_max(c, (v,))


@given(oracles.general_complexes(max_vertices=6))
def test_symmetry(c):
    faces = sorted(c.faces())[:12]
    for s, t in itertools.combinations(faces, 2):
        for p in range(1, c.dim + 1):
            assert adj.upper_adjacent(c, s, t, p) == adj.upper_adjacent(c, t, s, p)
            assert adj.strictly_upper_adjacent(c, s, t, p) == adj.strictly_upper_adjacent(c, t, s, p)
        for p in range(0, c.dim):
            assert adj.lower_adjacent(c, s, t, p) == adj.lower_adjacent(c, t, s, p)
            assert adj.strictly_lower_adjacent(c, s, t, p) == adj.strictly_lower_adjacent(c, t, s, p)
            assert adj.p_adjacent(c, s, t, p) == adj.p_adjacent(c, t, s, p)
            assert adj.maximal_p_adjacent(c, s, t, p) == oracles.max_p_adj(c, s, t, p)


@given(oracles.general_complexes(max_vertices=7))
def test_upper_adjacency_of_vertices_closed_downward_in_p(c):
    for u, v in itertools.combinations(c.vertices, 2):
        for p in range(2, c.dim + 1):
            if adj.upper_adjacent(c, (u,), (v,), p):
                assert adj.upper_adjacent(c, (u,), (v,), p - 1)
