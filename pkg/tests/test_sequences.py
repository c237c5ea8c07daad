from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bestmono import (
    DegreeOutOfRange,
    DegreeSequence,
    LengthMismatch,
    NotGraphical,
    ParseError,
    blocking_condition,
    complement,
    enumerate_graphical,
    is_graphical,
    majorizes,
    parse_sequence,
    realize,
    render_sequence,
)

from .conftest import all_graphs, graphical_sequences


def seq(*xs):
    return DegreeSequence.of(xs)


@pytest.mark.parametrize(
    "text, expected",
    [
        ("1^5 4^2 6^2 7^3", (1, 1, 1, 1, 1, 4, 4, 6, 6, 7, 7, 7)),
        ("0", (0,)),
        ("2,2,1,1", (1, 1, 2, 2)),
        ("3 3^2", (3, 3, 3)),
    ],
)
def test_parse(text, expected):
    assert parse_sequence(text).degrees == expected


@pytest.mark.parametrize("bad", ["", "   ", "a^2", "2^x", "-1", "1,-2", "2^0", "1,,2"])
def test_parse_rejects(bad):
    with pytest.raises(ParseError):
        parse_sequence(bad)


def test_render():
    assert render_sequence(seq(4, 4, 4, 4, 4, 5, 5, 6)) == "4^5 5^2 6^1"
    assert str(seq(0)) == "0^1"


@given(st.lists(st.integers(0, 9), min_size=1, max_size=12))
def test_render_round_trip(values):
    s = DegreeSequence.of(values)
    assert parse_sequence(render_sequence(s)) == s


def test_storage_is_sorted_and_one_based():
    s = parse_sequence("3,1,2")
    assert s.degrees == (1, 2, 3)
    assert (s.d(0), s.d(1), s.d(3)) == (0, 1, 3)


@pytest.mark.parametrize(
    "degrees, expected",
    [((1, 1, 1, 3), True), ((1, 3, 3, 3), False), ((0, 0, 0), True), ((1,), False), ((3, 3, 3), False)],
)
def test_is_graphical_examples(degrees, expected):
    assert is_graphical(seq(*degrees)) is expected


@pytest.mark.parametrize("n", range(1, 7))
def test_erdos_gallai_matches_exhaustive_search(n):
    realized = {g.degree_sequence().degrees for g in all_graphs(n)}
    for degrees in product(range(n), repeat=n):
        if list(degrees) == sorted(degrees):
            assert is_graphical(degrees) == (degrees in realized), degrees


def test_enumerate_graphical_small():
    assert [s.degrees for s in enumerate_graphical(1)] == [(0,)]
    assert [s.degrees for s in enumerate_graphical(3)] == [(0, 0, 0), (0, 1, 1), (1, 1, 2), (2, 2, 2)]
    four = list(enumerate_graphical(4))
    assert seq(1, 2, 2, 3) in four and seq(1, 3, 3, 3) not in four


def test_enumerate_graphical_counts():
    # number of graphical sequences of length n (OEIS A004251)
    assert [len(list(enumerate_graphical(n))) for n in range(1, 9)] == [1, 2, 4, 11, 31, 102, 342, 1213]


@pytest.mark.parametrize(
    "degrees, edges",
    [
        ((2, 2, 2, 2, 2), 5),
        ((1, 1), 1),
        ((1, 1, 1, 3), 3),
    ],
)
def test_realize_examples(degrees, edges):
    g = realize(seq(*degrees))
    assert g.degree_sequence() == seq(*degrees)
    assert g.edge_count() == edges


def test_realize_is_deterministic():
    g = realize(seq(1, 1, 1, 3))
    assert g.edges() == [(0, 3), (1, 3), (2, 3)]
    assert realize(seq(2, 2, 2, 2, 2)).to_json() == realize(seq(2, 2, 2, 2, 2)).to_json()


def test_realize_rejects_non_graphical():
    with pytest.raises(NotGraphical):
        realize(seq(1, 3, 3, 3))


@given(graphical_sequences())
def test_realize_has_requested_degrees(s):
    assert realize(s).degree_sequence() == s


def test_majorizes_examples():
    assert majorizes(seq(1, 2, 2, 3), seq(1, 1, 1, 3))
    assert majorizes(seq(1, 2, 2, 3), seq(1, 2, 2, 3))
    a = seq(4, 4, 4, 4, 4, 4, 4, 5, 5, 6)
    b = seq(4, 4, 4, 4, 4, 4, 5, 5, 5, 5)
    assert not majorizes(a, b) and not majorizes(b, a)
    with pytest.raises(LengthMismatch):
        majorizes(seq(1, 1), seq(0, 0, 0))


@pytest.mark.parametrize("n", range(1, 6))
def test_majorization_is_a_partial_order(n):
    seqs = list(enumerate_graphical(n))
    for a in seqs:
        assert majorizes(a, a)
        for b in seqs:
            if a != b and majorizes(a, b):
                assert not majorizes(b, a)
            for c in seqs:
                if majorizes(a, b) and majorizes(b, c):
                    assert majorizes(a, c)


def test_complement_examples():
    assert complement(seq(3, 3, 3, 3, 3, 3)) == seq(2, 2, 2, 2, 2, 2)
    assert complement(seq(0)) == seq(0)
    assert complement(seq(1, 1, 2, 2)) == seq(1, 1, 2, 2)
    with pytest.raises(DegreeOutOfRange):
        complement(seq(3, 3))


@pytest.mark.parametrize("n", range(1, 8))
def test_complement_is_an_involution(n):
    for s in enumerate_graphical(n):
        c = complement(s)
        assert is_graphical(c)
        assert complement(c) == s


def test_blocking_condition_examples():
    assert blocking_condition(seq(1, 2, 2, 3)).thresholds == (2, 3, 3, 4)
    assert blocking_condition(seq(0)).thresholds == (1,)
    assert blocking_condition(seq(1, 2, 2, 3)).satisfied_by(seq(2, 2, 2, 2))


@pytest.mark.parametrize("n", range(1, 6))
def test_blocking_condition_is_the_complement_of_minorization(n):
    seqs = list(enumerate_graphical(n))
    for a in seqs:
        c = blocking_condition(a)
        assert not c.satisfied_by(a)
        for b in seqs:
            assert c.satisfied_by(b) == (not majorizes(a, b))
