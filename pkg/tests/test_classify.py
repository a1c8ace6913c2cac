import json
from fractions import Fraction

import pytest

from gcurv.classify import (
    classify,
    family_on_named_list,
    identify_family,
    report_to_json,
)
from gcurv.errors import TrivialGraphError
from gcurv.families import (
    complete_graph,
    cycle,
    halved_cube,
    hypercube,
    johnson,
    parse_family,
)
from gcurv.graphs import Graph, build_graph


def petersen() -> Graph:
    j = johnson(5, 2)
    edges = [
        (u, v)
        for u in range(10)
        for v in range(u + 1, 10)
        if v not in j.neighbors[u]
    ]
    return build_graph(10, edges)


def test_gosset_report(gosset_graph):
    rep = classify(gosset_graph)
    assert rep.kappa_min == 18 and rep.kappa_constant
    assert rep.diam_eff == Fraction(3, 2)
    assert rep.eff_bm_sharp and rep.reflective
    assert abs(rep.lambda_ - 18) < 1e-6
    assert rep.lichnerowicz_sharp
    assert rep.distance_regular.b == (27, 10, 1)
    assert rep.distance_regular.c == (1, 10, 27)
    assert [name for _, name in rep.prime_factors] == ["Gosset"]
    assert all(v.passed for v in rep.theorem_verdicts.values())
    assert all(v.witness is None for v in rep.theorem_verdicts.values())


def test_product_report_not_sharp():
    rep = classify(parse_family("( K 2 x J 4 2 )").build())
    assert rep.n == 12 and rep.m == 30
    assert rep.kappa_min == 2 and not rep.kappa_constant
    assert rep.diam_eff == Fraction(3, 2)
    assert not rep.eff_bm_sharp
    assert rep.reflective
    # factors pick up their canonical names, octahedron included
    assert sorted(name for _, name in rep.prime_factors) == ["CP(3)", "K2"]
    assert all(v.passed for v in rep.theorem_verdicts.values())


def test_cycle_report_skips_local_check():
    rep = classify(cycle(5))
    assert not rep.reflective and not rep.locally_connected
    assert not rep.eff_bm_sharp
    verdict = rep.theorem_verdicts["E2_locally_connected_equivalences"]
    assert verdict.passed and verdict.witness.startswith("skipped")
    assert [name for _, name in rep.prime_factors] == ["unrecognized"]


def test_trivial_graph_rejected():
    with pytest.raises(TrivialGraphError):
        classify(build_graph(1, []))


@pytest.mark.parametrize(
    "build,expected",
    [
        (lambda: complete_graph(4), "HQ(3)"),
        (lambda: cycle(4), "CP(2)"),
        (lambda: halved_cube(4), "CP(4)"),
        (lambda: hypercube(3), "H(3,2)"),
        (lambda: complete_graph(2), "K2"),
        (lambda: johnson(4, 2), "CP(3)"),
        (petersen, "unrecognized"),
        (lambda: cycle(5), "unrecognized"),
    ],
)
def test_identify_family_precedence(build, expected):
    assert identify_family(build()) == expected


def test_named_list_membership():
    assert family_on_named_list("CP(3)")
    assert family_on_named_list("J(7,3)")
    assert family_on_named_list("HQ(5)")
    assert family_on_named_list("Gosset")
    assert family_on_named_list("K2")
    assert not family_on_named_list("H(3,2)")
    assert not family_on_named_list("Q3")
    assert not family_on_named_list("unrecognized")


def test_json_round_trip_and_determinism(octahedron):
    first = report_to_json(classify(octahedron))
    second = report_to_json(classify(parse_family("CP 3").build()))
    assert first == second
    data = json.loads(first)
    assert data["kappa_min"] == {"num": 4, "den": 1}
    assert data["diam_eff"] == {"num": 1, "den": 1}
    assert data["eff_bm_sharp"] is True
    assert data["prime_factors"][0]["family"] == "CP(3)"
    assert set(data["theorem_verdicts"]) == {
        "E1_sharp_iff_reflective_constant",
        "E2_locally_connected_equivalences",
        "E3_reflective_iff_factors_named",
    }
