from fractions import Fraction

import pytest
from hypothesis import given, settings

from conftest import connected_graphs
from gcurv.errors import NotAdjacentError, NotReflectiveError
from gcurv.families import (
    cartesian_product,
    cocktail_party,
    complete_graph,
    cycle,
    hypercube,
    johnson,
    path_graph,
)
from gcurv.graphs import side_partition
from gcurv.reflective import (
    are_parallel,
    candidate_reflection,
    distance_eigenfunction_check,
    find_reflection,
    is_reflective,
    matching_structure_check,
    pair_orbit_certificate,
    parallel_gradient_identity,
    parallel_in_ball,
    triangle_matching_check,
    vxy_convex_reflective_check,
)


def test_octahedron_is_reflective(octahedron):
    verdict = is_reflective(octahedron)
    assert verdict.reflective
    assert verdict.counterexample is None


def test_cycle5_counterexample():
    verdict = is_reflective(cycle(5))
    assert not verdict.reflective
    assert verdict.counterexample == (0, 1)


def test_path_not_reflective():
    assert not is_reflective(path_graph(4)).reflective


def test_reflection_mapping_octahedron(octahedron):
    found = find_reflection(octahedron, 0, 2)
    assert found.reflection is not None
    # antipodal pairs 0-1 and 2-3 swap across the edge, the rest stay
    assert found.reflection.mapping == (2, 3, 0, 1, 4, 5)


def test_reflection_swaps_endpoints_and_fixes_middle(q3):
    x, y = q3.edges[0]
    m = find_reflection(q3, x, y).reflection.mapping
    assert m[x] == y and m[y] == x
    sp = side_partition(q3, x, y)
    assert all(m[v] == v for v in sp.middle)
    assert {m[v] for v in sp.side_x} == set(sp.side_y)


def test_reflection_is_involution(j52):
    for (x, y) in j52.edges[:6]:
        m = find_reflection(j52, x, y).reflection.mapping
        assert all(m[m[v]] == v for v in range(j52.n))


def test_candidate_agrees_with_search(octahedron):
    for (x, y) in octahedron.edges:
        cand = candidate_reflection(octahedron, x, y)
        found = find_reflection(octahedron, x, y)
        assert cand.reflection.mapping == found.reflection.mapping


def test_failed_search_names_an_axiom():
    search = find_reflection(cycle(5), 0, 1)
    assert search.reflection is None
    assert search.failed_axiom


def test_parallel_relation_octahedron(octahedron):
    # the opposite edge of a square face is the reflection partner
    assert are_parallel(octahedron, (0, 2), (0, 2))
    m = find_reflection(octahedron, 0, 2).reflection.mapping
    for v in side_partition(octahedron, 0, 2).side_x:
        assert are_parallel(octahedron, (0, 2), (v, m[v]))


def test_parallel_gradient_identity_hypercube(q3):
    e1 = q3.edges[0]
    m = find_reflection(q3, *e1).reflection.mapping
    for v in side_partition(q3, *e1).side_x:
        e2 = (v, m[v])
        assert are_parallel(q3, e1, e2)
        assert parallel_gradient_identity(q3, e1, e2)


def test_parallel_in_ball_covers_hypercube(q3):
    for e in q3.edges:
        for z in range(q3.n):
            partner = parallel_in_ball(q3, e, z)
            assert are_parallel(q3, e, partner)


def test_pair_orbit_certificate(octahedron, j52):
    assert pair_orbit_certificate(octahedron)
    assert pair_orbit_certificate(j52)


def test_matching_structure_octahedron(octahedron):
    kappa = Fraction(4)
    for (x, y) in octahedron.edges:
        verdict = matching_structure_check(octahedron, x, y, kappa)
        assert verdict.ok, verdict.note


def test_matching_structure_rejects_non_integer():
    verdict = matching_structure_check(
        cocktail_party(3), 0, 2, Fraction(7, 2),
    )
    assert not verdict.ok
    assert verdict.note


def test_distance_eigenfunction_octahedron(octahedron):
    for x in range(octahedron.n):
        assert distance_eigenfunction_check(octahedron, x, Fraction(4))


def test_triangle_matching(octahedron):
    for (x, y) in octahedron.edges:
        assert triangle_matching_check(octahedron, x, y)


def test_triangle_matching_requires_adjacency(octahedron):
    with pytest.raises(NotAdjacentError):
        triangle_matching_check(octahedron, 0, 1)


def test_vxy_check_octahedron(octahedron):
    for (x, y) in octahedron.edges:
        assert vxy_convex_reflective_check(octahedron, x, y)
        assert vxy_convex_reflective_check(octahedron, y, x)


def test_vxy_check_rejects_non_reflective():
    with pytest.raises(NotReflectiveError):
        vxy_convex_reflective_check(cycle(5), 0, 1)


def test_products_of_reflective_factors_are_reflective():
    prod = cartesian_product(complete_graph(2), johnson(4, 2))
    assert is_reflective(prod).reflective


def test_product_with_non_reflective_factor_fails():
    prod = cartesian_product(cycle(5), complete_graph(2))
    assert not is_reflective(prod).reflective


@given(connected_graphs(min_n=2, max_n=6))
@settings(max_examples=30, deadline=None)
def test_returned_reflections_are_automorphisms(g):
    edge_set = set(g.edges)
    for (x, y) in g.edges[:3]:
        search = find_reflection(g, x, y)
        if search.reflection is None:
            continue
        m = search.reflection.mapping
        image = {tuple(sorted((m[u], m[v]))) for (u, v) in g.edges}
        assert image == edge_set
        assert all(m[m[v]] == v for v in range(g.n))


@given(connected_graphs(min_n=2, max_n=6))
@settings(max_examples=25, deadline=None)
def test_parallel_is_reflexive_on_reflective_graphs(g):
    if not is_reflective(g).reflective:
        return
    for e in g.edges[:4]:
        assert are_parallel(g, e, e)
