import pytest

from bestmono import ParamOutOfRange, majorizes, parse_sequence
from bestmono.conditions import Params, get_row
from bestmono.oracles import edge_connectivity, parse_property
from bestmono.sinks import (
    cut_sequences,
    kriesell_family,
    partition_count,
    partition_count_pentagonal,
    partitions,
    sinks,
    verify_sink_lower_bound,
)
from bestmono.sweeps import failing_at

S = parse_sequence


def test_partition_count_examples():
    assert [partition_count(r) for r in range(10)] == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30]
    assert partition_count(50) == 204226
    with pytest.raises(ValueError):
        partition_count(-1)


def test_two_partition_counts_agree():
    for r in range(51):
        assert partition_count(r) == partition_count_pentagonal(r)


def test_partitions_reverse_lex():
    assert list(partitions(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert all(len(list(partitions(r))) == partition_count(r) for r in range(12))


def test_ham_sinks_n4():
    report = sinks(parse_property("hamiltonian"), 4)
    assert report.sinks == [S("1,2,2,3")] and report.count == 1
    assert report.certificates[0].degree_sequence() == S("1,2,2,3")
    data = report.to_json()
    assert data == {
        "property": "hamiltonian",
        "params": {},
        "n": 4,
        "sinks": [[1, 2, 2, 3]],
        "count": 1,
        "certificates": [report.certificates[0].to_json()],
    }


def test_ham_sinks_n5():
    assert sinks(parse_property("hamiltonian"), 5).sinks == [S("1,3,3,3,4"), S("2,2,2,4,4")]


@pytest.mark.parametrize("n", [4, 5, 6])
def test_ham_sinks_fail_the_classical_condition(n):
    ham = get_row("HAM")
    report = sinks(parse_property("hamiltonian"), n)
    assert report.pairwise_incomparable and report.blocking_ok
    for s in report.sinks:
        assert any(failing_at(ham, Params(), s, i) for i in range(1, n))


@pytest.mark.parametrize("prop", ["alpha_le(1)", "k_connected(2)", "t_tough(1)", "has_2_factor"])
@pytest.mark.parametrize("n", [4, 5])
def test_sinks_are_pairwise_blocking(prop, n):
    report = sinks(parse_property(prop), n)
    assert report.pairwise_incomparable and report.blocking_ok


def test_sink_certificates_lack_the_property():
    prop = parse_property("k_edge_connected(2)")
    report = sinks(prop, 6)
    for s, g in zip(report.sinks, report.certificates):
        assert g.degree_sequence() == s and not prop.holds(g)


def test_decreasing_property_sinks_are_minimal():
    # chi <= 2 fails exactly when a triangle is forced or possible
    report = sinks(parse_property("chi_le(2)"), 4)
    for s in report.sinks:
        assert not any(t != s and majorizes(s, t) for t in report.sinks)
    assert S("0,2,2,2") in report.sinks


def test_kriesell_family_examples():
    fam = kriesell_family(3, 10)
    assert [s for _, s in fam] == [S("4^7 5^2 6^1"), S("4^6 5^4")]
    one = kriesell_family(2, 6)
    assert len(one) == 1
    g, s = one[0]
    assert s == S("2^4 3^2") and (0, 3) in g.edges()
    for k, n in [(2, 6), (3, 10), (4, 14), (5, 18)]:
        fam = kriesell_family(k, n)
        assert len(fam) == partition_count(k - 1)
        for g, s in fam:
            half = n // 2
            cross = [(u, v) for u, v in g.edges() if u < half <= v]
            assert len(cross) == k - 1
            assert s.d(1) == half - 1


def test_kriesell_family_graphs_are_not_k_edge_connected():
    for k, n in [(2, 6), (3, 10), (4, 14)]:
        for g, _ in kriesell_family(k, n):
            assert edge_connectivity(g) == k - 1


@pytest.mark.parametrize("k, n", [(1, 6), (2, 5), (3, 8), (2, 7)])
def test_kriesell_family_domain(k, n):
    with pytest.raises(ParamOutOfRange):
        kriesell_family(k, n)


def test_cut_sequences_small():
    # K_a and K_(6-a) joined by one edge, for a = 5, 4, 3
    assert cut_sequences(2, 6) == {S("1 4^4 5"), S("1 2 3^3 4"), S("2^4 3^2")}


@pytest.mark.parametrize("k, n", [(2, 6), (3, 10), (4, 14), (5, 18)])
def test_sink_lower_bound(k, n):
    report = verify_sink_lower_bound(k, n)
    assert report.passed, report.to_json()
    assert report.count == partition_count(k - 1)
    if n <= 7:
        assert report.oracle_confirmed is True
