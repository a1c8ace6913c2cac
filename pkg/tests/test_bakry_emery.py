from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import connected_graphs
from gcurv.bakry_emery import (
    LocalForm,
    bakry_emery_curvature,
    be_effective_bound_report,
    be_rigidity_check,
    curvature_from_forms,
    gamma2_form,
    gamma2_matches_symbolic,
    gamma_form,
)
from gcurv.errors import NonpositiveCurvatureError
from gcurv.families import (
    cocktail_party,
    complete_bipartite,
    complete_graph,
    cycle,
    hypercube,
    johnson,
    path_graph,
)


def test_single_edge_curvature():
    assert abs(bakry_emery_curvature(complete_graph(2), 0) - 2) < 1e-9


@pytest.mark.parametrize("n", [2, 3, 4])
def test_hypercube_curvature_two(n):
    g = hypercube(n)
    for x in range(g.n):
        assert abs(bakry_emery_curvature(g, x) - 2) < 1e-6


def test_triangle_curvature():
    # complete graphs have curvature (n + 2) / 2
    assert abs(bakry_emery_curvature(complete_graph(3), 0) - 2.5) < 1e-8


def test_cycle_six_flat():
    for x in range(6):
        assert abs(bakry_emery_curvature(cycle(6), x)) < 1e-8


def test_path_interior_versus_ends():
    g = path_graph(4)
    assert abs(bakry_emery_curvature(g, 0) - 1.5) < 1e-8
    assert abs(bakry_emery_curvature(g, 1) - 0.219223594) < 1e-6


def test_bipartite_curvature():
    assert abs(bakry_emery_curvature(complete_bipartite(3, 3), 0) - 2) < 1e-8


def test_gamma_form_psd_and_symmetric(octahedron):
    form = gamma_form(octahedron, 0)
    k = len(form.support)
    for i in range(k):
        for j in range(k):
            assert form.matrix[i][j] == form.matrix[j][i]
    mat = np.array([[float(v) for v in row] for row in form.matrix])
    assert np.linalg.eigvalsh(mat)[0] > -1e-10


def test_gamma_form_value_single_edge():
    form = gamma_form(complete_graph(2), 0)
    # Gamma f(x) = (1/2) f(y)^2 in the f(x)=0 gauge
    assert form.value({1: Fraction(2)}) == Fraction(2)


def test_form_rejects_asymmetric_matrix():
    from gcurv.errors import InvalidParameterError

    with pytest.raises(InvalidParameterError):
        LocalForm(0, (1, 2), ((Fraction(0), Fraction(1)),
                              (Fraction(2), Fraction(0))))


def test_gamma2_matches_symbolic_small():
    for g in [complete_graph(2), path_graph(3), cycle(4), cocktail_party(3)]:
        for x in range(g.n):
            assert gamma2_matches_symbolic(g, x)


def test_scale_invariance(octahedron):
    base = bakry_emery_curvature(octahedron, 0)
    gamma = gamma_form(octahedron, 0)
    gamma2 = gamma2_form(octahedron, 0)
    scale = lambda form: LocalForm(
        form.base, form.support,
        tuple(tuple(4 * v for v in row) for row in form.matrix),
    )
    scaled = curvature_from_forms(octahedron, 0, scale(gamma), scale(gamma2))
    assert abs(base - scaled) < 1e-9


def test_effective_bound_hypercube():
    rep = be_effective_bound_report(hypercube(4))
    assert rep.k_snapped == 2
    assert rep.diam_eff == Fraction(2)
    assert rep.bound_holds and rep.equality


def test_effective_bound_octahedron(octahedron):
    rep = be_effective_bound_report(octahedron)
    assert rep.bound_holds
    assert not rep.equality


def test_effective_bound_rejects_flat_graph():
    with pytest.raises(NonpositiveCurvatureError):
        be_effective_bound_report(cycle(6))


def test_rigidity_on_mixed_corpus(octahedron, j52):
    corpus = [
        ("Q2", hypercube(2)),
        ("Q3", hypercube(3)),
        ("CP(3)", octahedron),
        ("J(5,2)", j52),
        ("K3", complete_graph(3)),
    ]
    report = be_rigidity_check(corpus)
    assert report.ok
    by_name = {e.name: e for e in report.entries}
    assert by_name["Q2"].equality and by_name["Q2"].is_hypercube
    assert by_name["Q3"].equality and by_name["Q3"].is_hypercube
    assert not by_name["CP(3)"].equality
    assert not by_name["K3"].equality


def test_rigidity_empty_corpus():
    assert be_rigidity_check([]).ok


@given(connected_graphs(min_n=2, max_n=6), st.integers(0, 5))
@settings(max_examples=25, deadline=None)
def test_curvature_is_a_lower_bound_for_sampled_quotients(g, salt):
    x = salt % g.n
    k = bakry_emery_curvature(g, x)
    gamma = gamma_form(g, x)
    gamma2 = gamma2_form(g, x)
    # any test function gives an upper bound on the infimum
    f = {v: Fraction((v * 7 + salt * 3) % 5 - 2) for v in gamma2.support}
    denom = gamma.value(f)
    if denom <= 0:
        return
    quotient = float(gamma2.value(f)) / float(denom)
    assert k <= quotient + 1e-7


@given(connected_graphs(min_n=2, max_n=6))
@settings(max_examples=20, deadline=None)
def test_gamma2_symbolic_agreement_random(g):
    assert gamma2_matches_symbolic(g, 0)
