from fractions import Fraction as F

import pytest

from bestmono import EmptyPart, ParamOutOfRange, majorizes, parse_sequence
from bestmono.conditions import REGISTRY, Params, get_row
from bestmono.oracles import has_property, parse_property, toughness
from bestmono.witnesses import (
    E,
    K,
    WitnessRecipe,
    has_family,
    join,
    recipe_for,
    union,
    verify_weak_optimality,
    witness_for,
)

S = parse_sequence
FAMILY_ROWS = [r for r in REGISTRY.values() if has_family(r)]


def test_every_best_monotone_row_has_a_family():
    for row in REGISTRY.values():
        if row.best_monotone:
            assert has_family(row), row.id


def test_recipe_render_and_degrees():
    r = WitnessRecipe(join(K(2), union(E(2), K(3))))
    assert r.render() == "K2 + (E2 u K3)"
    assert r.n == 7
    assert r.degrees() == r.build().degree_sequence() == S("2^2 4^3 6^2")


def test_recipe_rejects_negative_parts():
    with pytest.raises(EmptyPart):
        WitnessRecipe(join(K(-1), E(3)))


def test_ham_witness_examples():
    r = recipe_for("HAM", None, 7, "1.1", 2)
    assert r.render() == "K2 + (E2 u K3)"
    assert r.degrees() == S("2^2 4^3 6^2")
    paw = witness_for("HAM", None, 4, "1.1", 1)
    assert paw.degree_sequence() == S("1,2,2,3")
    assert not has_property(parse_property("hamiltonian"), paw)


def test_tough_witness_example():
    g = witness_for("TOUGH", Params(t=F(3, 2)), 7, "3.3.1", 3)
    assert g.degree_sequence() == S("3^2 4^2 6^3")
    assert toughness(g)[0] == 1


def test_pancyclic_witness_is_complete_bipartite():
    r = recipe_for("PANCYC", None, 6, "3.5.6")
    assert r.render() == "E3 + E3"
    assert not has_property(parse_property("pancyclic"), r.build())


def test_alpha_witness():
    g = witness_for("ALPHA_LE", Params(k=1), 5, "3.6.1")
    assert g.degree_sequence() == S("3^2 4^3")


def test_degenerate_three_triangle_witness():
    # at n = 10 the isolated part of the second one-factor witness is empty
    r = recipe_for("BIND1_1F", None, 10, "4.6")
    assert r.render() == "K1 + (K3 u K3 u K3)"
    g = r.build()
    assert has_property(parse_property("1_binding"), g)
    assert not has_property(parse_property("1_factor"), g)


def test_out_of_range_instance():
    with pytest.raises(ParamOutOfRange):
        recipe_for("HAM", None, 7, "1.1", 4)
    with pytest.raises(ParamOutOfRange):
        recipe_for("HAM", None, 7, "9.9", 1)


def _instances(row, params, n):
    for clause in row.clauses:
        for i, j in clause.indices(n, params):
            yield clause, (i if clause.indexed else None), j


@pytest.mark.parametrize("row", FAMILY_ROWS, ids=lambda r: r.id)
def test_symbolic_degrees_match_built_graphs(row):
    built = 0
    for params in row.grid():
        for n in range(1, 13):
            if not row.accepts(n, params):
                continue
            for clause, i, j in _instances(row, params, n):
                try:
                    recipe = recipe_for(row, params, n, clause.label, i, j)
                except EmptyPart:
                    continue
                g = recipe.build()
                assert g.n == n
                assert recipe.degrees() == g.degree_sequence(), (row.id, params, n, clause.label, i, j)
                built += 1
    assert built > 0


@pytest.mark.parametrize("n", range(3, 13))
def test_ham_witnesses_are_pairwise_incomparable(n):
    seqs = [recipe_for("HAM", None, n, "1.1", i).degrees() for i in range(1, (n - 1) // 2 + 1)]
    for a in seqs:
        for b in seqs:
            if a != b:
                assert not majorizes(a, b)


def test_tough_to_two_factor_witnesses_at_larger_n():
    row = get_row("TOUGH1_F2")
    labels = set()
    for n in range(12, 19):
        for clause, i, j in _instances(row, Params(), n):
            try:
                recipe = recipe_for(row, Params(), n, clause.label, i, j)
            except EmptyPart:
                continue
            assert recipe.degrees() == recipe.build().degree_sequence()
            labels.add(clause.label)
    assert labels == {c.label for c in row.clauses}


@pytest.mark.parametrize(
    "cond, params, ns",
    [
        ("HAM", Params(), [5, 6, 7]),
        ("ALPHA_LE", Params(k=1), [5]),
        ("DEFIC", Params(beta=0), [6]),
        ("TOUGH", Params(t=F(3, 2)), [7]),
        ("CHI_LE", Params(k=2), [6]),
    ],
)
def test_weak_optimality_examples(cond, params, ns):
    for n in ns:
        report = verify_weak_optimality(cond, params, n)
        assert report.passed, report.to_json()
        assert all(r.lacks_property in (True, None) for r in report.instances)


def test_weak_optimality_report_json():
    data = verify_weak_optimality("HAM", None, 7).to_json()
    assert data["passed"] and data["n"] == 7
    assert [inst["i"] for inst in data["instances"]] == [1, 2, 3]
    assert data["instances"][1]["recipe"] == "K2 + (E2 u K3)"
