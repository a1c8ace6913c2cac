from fractions import Fraction

import pytest
from hypothesis import given, settings

from conftest import connected_graphs
from gcurv.errors import (
    DisconnectedError,
    DuplicateEdgeError,
    ParseError,
    SelfLoopError,
)
from gcurv.families import cocktail_party, complete_graph, cycle, path_graph
from gcurv.graphs import (
    are_isomorphic,
    ball,
    build_graph,
    effective_diameter,
    induced_subgraph,
    is_convex_subset,
    is_isometric_subset,
    is_locally_connected,
    parse_edge_list,
    side_partition,
    sphere,
)


def test_build_rejects_self_loop():
    with pytest.raises(SelfLoopError):
        build_graph(3, [(0, 1), (1, 1)])


def test_build_rejects_duplicate_edge():
    with pytest.raises(DuplicateEdgeError):
        build_graph(3, [(0, 1), (1, 0), (1, 2)])


def test_build_rejects_disconnected():
    with pytest.raises(DisconnectedError):
        build_graph(4, [(0, 1), (2, 3)])


def test_parse_edge_list_k2():
    g = parse_edge_list("2 1\n0 1\n")
    assert g.n == 2 and g.m == 1


def test_parse_edge_list_comments_and_blanks():
    g = parse_edge_list("# triangle\n3 3\n\n0 1\n1 2\n0 2\n")
    assert g.m == 3


def test_parse_edge_list_reports_line():
    with pytest.raises(ParseError) as exc:
        parse_edge_list("3 2\n0 1\n1 1\n")
    assert exc.value.line == 3


def test_parse_edge_list_edge_count_mismatch():
    with pytest.raises(ParseError):
        parse_edge_list("3 3\n0 1\n1 2\n")


def test_distances_path():
    g = path_graph(4)
    assert g.distance(0, 3) == 3
    assert g.distance(1, 3) == 2


def test_sphere_and_ball():
    g = cycle(6)
    assert sphere(g, 0, 2) == (2, 4)
    assert ball(g, 0, 1) == (0, 1, 5)
    assert sphere(g, 0, 7) == ()


def test_effective_diameter_cycle():
    # row sums of C5 are 0+1+2+2+1 = 6, over 25 ordered pairs
    assert effective_diameter(cycle(5)) == Fraction(6, 5)


def test_effective_diameter_octahedron(octahedron):
    assert effective_diameter(octahedron) == Fraction(1)


def test_side_partition_octahedron(octahedron):
    sp = side_partition(octahedron, 0, 2)
    assert sp.side_x == (0, 3)
    assert sp.side_y == (1, 2)
    assert sp.middle == (4, 5)


def test_locally_connected_verdicts(octahedron):
    assert is_locally_connected(octahedron) == (True, None)
    ok, witness = is_locally_connected(cycle(5))
    assert not ok and witness is not None


def test_induced_subgraph_tracks_vertices(octahedron):
    sub, verts = induced_subgraph(octahedron, (0, 3))
    assert sub.n == 2 and sub.m == 1
    assert verts == (0, 3)


def test_convex_and_isometric_subsets():
    g = cycle(6)
    assert is_isometric_subset(g, (0, 1, 2, 3))
    assert not is_convex_subset(g, (0, 3))  # both geodesics leave the pair
    assert is_convex_subset(g, (0, 1))


def test_isomorphic_octahedron_relabelled(octahedron):
    relabel = (5, 4, 3, 2, 1, 0)
    edges = [(relabel[u], relabel[v]) for (u, v) in octahedron.edges]
    h = build_graph(6, edges)
    assert are_isomorphic(octahedron, h) is not None


def test_not_isomorphic_same_degree_sequence():
    assert are_isomorphic(cycle(6), build_graph(
        6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3)],
    )) is None


@given(connected_graphs())
@settings(max_examples=40, deadline=None)
def test_metric_symmetry_and_triangle(g):
    dist = g.dist_rows()
    for x in range(g.n):
        assert dist[x][x] == 0
        for y in range(g.n):
            assert dist[x][y] == dist[y][x]
            for z in range(g.n):
                assert dist[x][z] <= dist[x][y] + dist[y][z]


@given(connected_graphs())
@settings(max_examples=40, deadline=None)
def test_side_partition_is_a_partition(g):
    x, y = g.edges[0]
    sp = side_partition(g, x, y)
    combined = sorted(sp.side_x + sp.side_y + sp.middle)
    assert combined == list(range(g.n))


@given(connected_graphs())
@settings(max_examples=30, deadline=None)
def test_self_isomorphism_exists(g):
    mapping = are_isomorphic(g, g)
    assert mapping is not None
    for (u, v) in g.edges:
        assert g.adjacent(mapping[u], mapping[v])


@given(connected_graphs(min_n=3, max_n=7))
@settings(max_examples=30, deadline=None)
def test_effective_diameter_between_zero_and_diameter(g):
    de = effective_diameter(g)
    diam = max(max(row) for row in g.dist_rows())
    assert 0 < de <= diam


def test_complete_graph_effective_diameter():
    # n-1 ordered pairs at distance 1 per vertex
    assert effective_diameter(complete_graph(4)) == Fraction(12, 16)


def test_convex_subset_implies_isometric_examples(octahedron):
    for s in [(0, 3), (1, 2), (0,)]:
        if is_convex_subset(octahedron, s):
            assert is_isometric_subset(octahedron, s)
