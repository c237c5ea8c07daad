"""Exhaustive sweeps over all graphical sequences of a given length.

These compare declared sets of catalog rows with each other, with the
forcibly oracle, and with the set cut out by the sinks of a property.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

from .conditions import ConditionRow, Params, declares, evaluate, get_row
from .errors import ParseError
from .graph import Graph
from .oracles import ScaleLimits, forcibly
from .sequences import DegreeSequence, enumerate_graphical, majorizes
from .sinks import sinks

__all__ = [
    "parse_row_spec",
    "soundness",
    "monotonicity",
    "identity",
    "ContainmentReport",
    "containment",
    "bm_mismatches",
    "bindhi_ham_boundary",
    "bindhi_tough_boundary",
    "failing_at",
]

Progress = Callable[[str], None] | None


def parse_row_spec(text: str) -> tuple[ConditionRow, Params]:
    """``tough:1`` or ``bindhi:3/2`` or plain ``ham``: a row and its parameter."""
    name, _, raw = text.partition(":")
    row = get_row(name)
    if not raw:
        return row, Params()
    if row.param is None:
        raise ParseError(f"condition {row.id} takes no parameter")
    return row, Params.parse(**{row.param: raw})


def _graphical(n: int, cache: dict[int, list[DegreeSequence]] = {}) -> list[DegreeSequence]:
    if n not in cache:
        cache[n] = list(enumerate_graphical(n))
    return cache[n]


def soundness(
    row: ConditionRow,
    params: Params,
    n: int,
    *,
    limits: ScaleLimits | None = None,
) -> list[tuple[DegreeSequence, Graph]]:
    """Declared sequences that some realization refutes, with that realization."""
    if not row.accepts(n, params):
        return []
    prop = row.property(params)
    bad = []
    for seq in _graphical(n):
        if declares(row, params, seq):
            result = forcibly(prop, seq, limits, max_n=n)
            if not result.holds:
                bad.append((seq, result.counterexample))
    return bad


def monotonicity(row: ConditionRow, params: Params, n: int) -> list[tuple[DegreeSequence, DegreeSequence]]:
    """Pairs (declared, other) where ``other`` is undeclared but should not be.

    For an increasing property ``other`` majorizes the declared sequence;
    for a decreasing one it is majorized by it.
    """
    if not row.accepts(n, params):
        return []
    increasing = row.property(params).increasing
    seqs = _graphical(n)
    status = {s: declares(row, params, s) for s in seqs}
    out = []
    for base in seqs:
        if not status[base]:
            continue
        for other in seqs:
            if status[other]:
                continue
            if majorizes(other, base) if increasing else majorizes(base, other):
                out.append((base, other))
    return out


def identity(
    a: tuple[ConditionRow, Params],
    b: tuple[ConditionRow, Params],
    n: int,
) -> list[DegreeSequence]:
    """Sequences on which the two rows disagree."""
    (ra, pa), (rb, pb) = a, b
    if not (ra.accepts(n, pa) and rb.accepts(n, pb)):
        return []
    return [s for s in _graphical(n) if declares(ra, pa, s) != declares(rb, pb, s)]


@dataclass
class ContainmentReport:
    source: str
    target: str
    checked: dict[int, int] = field(default_factory=dict)
    counterexamples: dict[int, list[DegreeSequence]] = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return not any(self.counterexamples.values())

    def to_json(self) -> dict:
        return {
            "from": self.source,
            "to": self.target,
            "holds": self.holds,
            "checked": {str(n): c for n, c in self.checked.items()},
            "counterexamples": {
                str(n): [s.to_json() for s in seqs] for n, seqs in self.counterexamples.items() if seqs
            },
        }


def _label(row: ConditionRow, params: Params) -> str:
    return f"{row.id}({params})" if row.param else row.id


def containment(
    source: tuple[ConditionRow, Params],
    target: tuple[ConditionRow, Params],
    ns: Iterable[int],
    progress: Progress = None,
) -> ContainmentReport:
    """Check declared(source) is a subset of declared(target) for each n in ``ns``."""
    (rs, ps), (rt, pt) = source, target
    report = ContainmentReport(_label(rs, ps), _label(rt, pt))
    for n in ns:
        if not (rs.accepts(n, ps) and rt.accepts(n, pt)):
            continue
        seqs = _graphical(n)
        report.checked[n] = len(seqs)
        report.counterexamples[n] = [
            s for s in seqs if declares(rs, ps, s) and not declares(rt, pt, s)
        ]
        if progress:
            progress(f"n={n}: {len(seqs)} sequences, {len(report.counterexamples[n])} outside")
    return report


def bm_mismatches(
    row: ConditionRow,
    params: Params,
    n: int,
    *,
    limits: ScaleLimits | None = None,
    jobs: int = 1,
) -> list[DegreeSequence]:
    """Sequences where the row's verdict differs from 'no sink lies above it'.

    For decreasing properties 'above' means 'minorized by'.
    """
    if not row.accepts(n, params):
        return []
    prop = row.property(params)
    found = sinks(prop, n, limits=limits, max_n=n, jobs=jobs).sinks
    if prop.increasing:
        blocked = lambda s: any(majorizes(t, s) for t in found)  # noqa: E731
    else:
        blocked = lambda s: any(majorizes(s, t) for t in found)  # noqa: E731
    return [s for s in _graphical(n) if declares(row, params, s) == blocked(s)]


# ---------------------------------------------------------------------------
# boundary sequences


def bindhi_ham_boundary(n: int) -> DegreeSequence:
    """Declared by the b = 1 binding row yet failing the hamiltonian row at i = floor(n/2) - 1."""
    h = n // 2
    return DegreeSequence.of([h - 1] * (h - 1) + [n - h] * (n - 2 * h + 2) + [n - 1] * (h - 1))


def bindhi_tough_boundary(m: int) -> tuple[Fraction, DegreeSequence]:
    """For b = 2 - 1/m: declared by the b-binding row yet failing the b-tough row at i = 2m - 3."""
    b = 2 - Fraction(1, m)
    seq = DegreeSequence.of([2 * m - 3] * (m - 2) + [2 * m - 2] * 2 + [3 * m - 4] * (2 * m - 3))
    return b, seq


def failing_at(row: ConditionRow, params: Params, seq: DegreeSequence, i: int) -> bool:
    """Whether some clause instance at index ``i`` fails."""
    verdict = evaluate(row, params, seq)
    return any(e.i == i and not e.holds for e in verdict.trace)

