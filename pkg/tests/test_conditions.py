import math
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bestmono import NotGraphical, ParamOutOfDomain, SequenceTooShort, parse_sequence
from bestmono.conditions import (
    REGISTRY,
    Params,
    arboricity_upper,
    binding_toughness_bound,
    caro_wei,
    clique_chromatic_lower,
    declares,
    evaluate,
    get_row,
    max_degree_arboricity_upper,
    max_degree_chi_upper,
    murphy_alpha,
    murphy_f_trace,
    welsh_powell_chi_upper,
)
from bestmono.sequences import enumerate_graphical
from bestmono.sweeps import identity, monotonicity

from .conftest import graphical_sequences

S = parse_sequence
EXAMPLE = S("1^5 4^2 6^2 7^3")

ROW_IDS = [
    "HAM", "KCONN", "EDGE2", "EDGE3", "EDGEK", "BINDLO", "BINDHI", "TOUGH", "TOUGHLO", "DEFIC",
    "FACTOR2", "KHAM", "KPATH", "HAMCONN", "KEDGEHAM", "PANCYC", "ALPHA_LE", "CHI_LE", "ARB_LE",
    "TRACE_HAM", "CONN2_HAM", "BIND1_HAM", "BIND1_1F", "F2_TOUGH1", "JUNG", "HOANG", "HOANG_COR",
    "TOUGH1_F2", "DIRAC",
]


def test_registry_has_every_row_once():
    assert sorted(REGISTRY) == sorted(ROW_IDS)
    for row in REGISTRY.values():
        data = row.to_json()
        assert data["id"] == row.id and data["clauses"] and data["citation"]
        assert row.grid(), row.id


def test_row_flags():
    assert get_row("EDGEK").flags >= {"sufficient_only"}
    assert get_row("TOUGHLO").flags >= {"sufficient_only"}
    assert get_row("JUNG").flags >= {"structural_min_degree"}
    assert get_row("HAM").best_monotone and not get_row("HAM").is_implication
    assert get_row("TRACE_HAM").is_implication
    assert str(get_row("BIND1_HAM").property(Params())) == "b_binding(1)=>hamiltonian"


def test_get_row_is_forgiving():
    assert get_row("alpha-le") is get_row("ALPHA_LE") is get_row("alpha_le")
    with pytest.raises(KeyError):
        get_row("nope")


@pytest.mark.parametrize(
    "cond, params, text, failing",
    [
        ("HAM", Params(), "1,2,2,3", ("1.1", 1)),
        ("HAM", Params(), "2^5", ("1.1", 2)),
        ("HAM", Params(), "4^5", None),
        ("TOUGH", Params(t=F(5, 3)), "3,4,4,5,5,5", ("3.3.1", 3)),
        ("DEFIC", Params(beta=0), "2,2,2,2", None),
        ("KCONN", Params(k=2), "1,2,2,3", ("1.2", 1)),
        ("EDGE2", Params(), "1,1,2,2", ("3.1a", None)),
        ("ALPHA_LE", Params(k=1), "3^4", None),
        ("PANCYC", Params(), "3^6", ("3.5.6", None)),
    ],
)
def test_evaluate_examples(cond, params, text, failing):
    verdict = evaluate(cond, params, S(text))
    if failing is None:
        assert verdict.declared and verdict.failing_clause is None
    else:
        assert not verdict.declared
        assert (verdict.failing_clause.clause, verdict.failing_clause.i) == failing


def test_verdict_json_and_text():
    verdict = evaluate("HAM", None, S("2^5"))
    assert verdict.to_json() == {
        "condition": "HAM",
        "params": {},
        "declared": False,
        "failing_clause": {"clause": "1.1", "i": 2, "j": None},
    }
    assert str(verdict.failing_clause) == "(1.1) at i=2"
    assert evaluate("TOUGH", Params(t=F(3, 2)), S("6^7")).to_json()["params"] == {"t": "3/2"}


def test_trace_covers_every_instance():
    verdict = evaluate("HAM", None, S("2^7"))
    assert [(e.clause, e.i) for e in verdict.trace] == [("1.1", 1), ("1.1", 2), ("1.1", 3)]
    first = verdict.trace[0]
    assert not first.antecedent and first.consequent is None and first.holds


def test_evaluate_errors():
    with pytest.raises(ParamOutOfDomain):
        evaluate("TOUGH", Params(t=F(1, 2)), S("2^5"))
    with pytest.raises(SequenceTooShort):
        evaluate("HAM", None, S("1,1"))
    with pytest.raises(NotGraphical):
        evaluate("HAM", None, S("1,3,3,3"))
    with pytest.raises(ParamOutOfDomain):
        Params.parse(k="3/2")


def test_params_parse():
    assert Params.parse(b="3/2", k="2") == Params(k=2, b=F(3, 2))
    assert str(Params(t=F(3, 2))) == "t=3/2"


@given(graphical_sequences(min_n=3), st.sampled_from(ROW_IDS))
@settings(max_examples=300, deadline=None)
def test_fast_path_agrees_with_evaluate(seq, row_id):
    row = get_row(row_id)
    for params in row.grid():
        if row.accepts(seq.n, params):
            assert declares(row, params, seq) == evaluate(row, params, seq).declared


@pytest.mark.parametrize("row_id", ROW_IDS)
def test_declared_sets_are_monotone(row_id):
    row = get_row(row_id)
    for params in row.grid():
        for n in range(1, 8):
            assert monotonicity(row, params, n) == [], (row_id, params, n)


def test_tough_one_matches_ham_including_indices():
    ham, tough = get_row("HAM"), get_row("TOUGH")
    for n in range(3, 9):
        for s in enumerate_graphical(n):
            a = evaluate(ham, None, s).failing_clause
            b = evaluate(tough, Params(t=F(1)), s).failing_clause
            assert (a is None) == (b is None)
            if a is not None:
                assert a.i == b.i


@pytest.mark.parametrize("k", [1, 2, 3])
def test_chi_and_arboricity_rows_coincide(k):
    for n in range(1, 9):
        assert identity((get_row("CHI_LE"), Params(k=2 * k)), (get_row("ARB_LE"), Params(k=k)), n) == []


def test_kham_zero_is_ham():
    for n in range(3, 9):
        assert identity((get_row("KHAM"), Params(k=0)), (get_row("HAM"), Params()), n) == []


def test_binding_rows_agree_at_b_one():
    one = Params(b=F(1))
    for n in range(2, 9):
        assert identity((get_row("BINDLO"), one), (get_row("BINDHI"), one), n) == []


def test_hoang_corollary_is_weaker():
    full, cor = get_row("HOANG"), get_row("HOANG_COR")
    for n in range(3, 9):
        if full.accepts(n, Params()):
            for s in enumerate_graphical(n):
                if declares(cor, Params(), s):
                    assert declares(full, Params(), s)


# ---------------------------------------------------------------------------
# bounds


def test_caro_wei():
    result = caro_wei(EXAMPLE)
    assert result.value == F(997, 280)
    assert result.integer == 4 and result.kind == "lower"
    assert caro_wei(S("0,0,0")).value == 3
    assert caro_wei(S("4^5")).to_json() == {"value": "1", "integer": 1, "kind": "lower"}


def test_murphy():
    assert murphy_f_trace(EXAMPLE) == [1, 1, 1, 4, 7, math.inf]
    assert murphy_f_trace(S("0")) == [0, math.inf]
    assert murphy_f_trace(S("2^6")) == [2, 2, math.inf]
    assert murphy_alpha(EXAMPLE).integer == 5
    assert murphy_alpha(S("0,0,0")).integer == 3
    assert murphy_alpha(S("1^1 2^2 3^3 4^4")).integer == 4


def test_clique_chromatic_lower():
    assert clique_chromatic_lower(S("3^6")).integer == 2
    assert clique_chromatic_lower(S("3^4")).integer == 4
    assert clique_chromatic_lower(S("0,0")).integer == 1


def test_chromatic_and_arboricity_upper_bounds():
    assert welsh_powell_chi_upper(S("2,2,2")).integer == 3
    assert welsh_powell_chi_upper(S("0^4")).integer == 1
    assert welsh_powell_chi_upper(EXAMPLE).integer == 5
    assert max_degree_chi_upper(EXAMPLE).integer == 8
    assert max_degree_arboricity_upper(EXAMPLE).integer == 4
    assert arboricity_upper(EXAMPLE).integer == 3


@pytest.mark.parametrize("n", range(1, 9))
def test_welsh_powell_is_least_declared_chi(n):
    row = get_row("CHI_LE")
    for s in enumerate_graphical(n):
        least = min(k for k in range(1, n + 1) if declares(row, Params(k=k), s))
        assert welsh_powell_chi_upper(s).integer == least


@pytest.mark.parametrize(
    "b, expected",
    [
        (F(2), F(3, 2)),
        (F(9, 4), F(2)),
        (F(8, 3), F(5, 2)),
        (F(3), F(3)),
        (F(7, 3), F(2)),  # 2 + 1/3, m = 2
        (F(12, 5), F(7, 3)),  # 2 + 2/5, m = 3
        (F(5, 2), F(5, 2)),
    ],
)
def test_binding_toughness_bound(b, expected):
    assert binding_toughness_bound(b) == expected


def test_binding_toughness_bound_domain():
    assert binding_toughness_bound("8/3") == F(5, 2)
    with pytest.raises(ParamOutOfDomain):
        binding_toughness_bound(F(3, 2))
