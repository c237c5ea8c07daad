"""Degree sequences: parsing, graphicality, realization, majorization.

Sequences are kept in nondecreasing order and indexed 1-based through
:meth:`DegreeSequence.d`, which is how every degree condition in
:mod:`bestmono.conditions` reads them.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations_with_replacement, groupby
from typing import Iterable, Iterator

from .errors import DegreeOutOfRange, LengthMismatch, NotGraphical, ParseError

__all__ = [
    "DegreeSequence",
    "BlockingCondition",
    "parse_sequence",
    "render_sequence",
    "is_graphical",
    "realize",
    "majorizes",
    "complement",
    "enumerate_graphical",
    "blocking_condition",
]

_RUN_TOKEN = re.compile(r"^(\d+)(?:\^(\d+))?$")


@dataclass(frozen=True)
class DegreeSequence:
    degrees: tuple[int, ...]

    def __post_init__(self) -> None:
        degrees = tuple(sorted(int(x) for x in self.degrees))
        if degrees and degrees[0] < 0:
            raise ParseError(f"negative degree {degrees[0]}")
        object.__setattr__(self, "degrees", degrees)

    @classmethod
    def of(cls, values: Iterable[int]) -> DegreeSequence:
        return cls(tuple(values))

    @property
    def n(self) -> int:
        return len(self.degrees)

    def d(self, i: int) -> int:
        """1-based degree lookup; ``d(0)`` is the zero sentinel."""
        if i == 0:
            return 0
        if not 1 <= i <= len(self.degrees):
            raise IndexError(f"degree index {i} outside 0..{len(self.degrees)}")
        return self.degrees[i - 1]

    def __iter__(self) -> Iterator[int]:
        return iter(self.degrees)

    def __len__(self) -> int:
        return len(self.degrees)

    def __str__(self) -> str:
        return render_sequence(self)

    def to_json(self) -> list[int]:
        return list(self.degrees)


def parse_sequence(text: str) -> DegreeSequence:
    """Parse ``"1^5 4^2 6^2"`` run-length notation or a comma list ``"2,2,1,1"``."""
    text = text.strip()
    if not text:
        raise ParseError("empty sequence")
    values: list[int] = []
    if "," in text:
        for token in text.split(","):
            token = token.strip()
            if not re.fullmatch(r"-?\d+", token):
                raise ParseError(f"malformed token {token!r}")
            values.append(int(token))
    else:
        for token in text.split():
            if token.startswith("-"):
                raise ParseError(f"negative degree in {token!r}")
            m = _RUN_TOKEN.match(token)
            if m is None:
                raise ParseError(f"malformed token {token!r}")
            count = int(m.group(2)) if m.group(2) is not None else 1
            if count == 0:
                raise ParseError(f"zero multiplicity in {token!r}")
            values.extend([int(m.group(1))] * count)
    if any(v < 0 for v in values):
        raise ParseError("negative degree")
    return DegreeSequence.of(values)


def render_sequence(seq: DegreeSequence) -> str:
    return " ".join(f"{v}^{len(list(g))}" for v, g in groupby(seq.degrees))


def is_graphical(seq: DegreeSequence | Iterable[int]) -> bool:
    """Erdős–Gallai test with an even-sum precheck."""
    degrees = sorted(seq.degrees if isinstance(seq, DegreeSequence) else seq, reverse=True)
    n = len(degrees)
    if any(x < 0 or x > n - 1 for x in degrees) or sum(degrees) % 2:
        return False
    prefix = 0
    for k in range(1, n + 1):
        prefix += degrees[k - 1]
        tail = sum(min(x, k) for x in degrees[k:])
        if prefix > k * (k - 1) + tail:
            return False
    return True


def realize(seq: DegreeSequence):
    """One realization, built highest residual degree first.

    The chosen vertex is joined to the vertices of largest residual degree;
    ties go to the lowest index. Vertex ``v`` carries degree ``seq.d(v + 1)``.
    """
    from .graph import Graph

    if not is_graphical(seq):
        raise NotGraphical(str(seq))
    n = seq.n
    residual = list(seq.degrees)
    edges: list[tuple[int, int]] = []
    while True:
        v = max(range(n), key=lambda u: (residual[u], -u))
        r = residual[v]
        if r == 0:
            break
        residual[v] = 0
        candidates = sorted((u for u in range(n) if residual[u] > 0), key=lambda u: (-residual[u], u))
        for u in candidates[:r]:
            residual[u] -= 1
            edges.append((v, u))
    return Graph.from_edges(n, edges)


def majorizes(upper: DegreeSequence, lower: DegreeSequence) -> bool:
    if upper.n != lower.n:
        raise LengthMismatch(f"lengths {upper.n} and {lower.n} differ")
    return all(a >= b for a, b in zip(upper.degrees, lower.degrees))


def complement(seq: DegreeSequence) -> DegreeSequence:
    n = seq.n
    if any(x > n - 1 for x in seq.degrees):
        raise DegreeOutOfRange(f"{seq} has a degree above n-1={n - 1}")
    return DegreeSequence.of((n - 1) - x for x in reversed(seq.degrees))


def enumerate_graphical(n: int) -> Iterator[DegreeSequence]:
    """Every graphical sequence of length ``n``, lexicographically."""
    for degrees in combinations_with_replacement(range(n), n):
        if is_graphical(degrees):
            yield DegreeSequence(degrees)


@dataclass(frozen=True)
class BlockingCondition:
    """The weakest monotone condition that ``source`` fails.

    A sequence satisfies it iff some position reaches its threshold.
    """

    thresholds: tuple[int, ...]
    source: DegreeSequence

    def satisfied_by(self, seq: DegreeSequence) -> bool:
        if seq.n != len(self.thresholds):
            raise LengthMismatch(f"lengths {seq.n} and {len(self.thresholds)} differ")
        return any(d >= t for d, t in zip(seq.degrees, self.thresholds))


def blocking_condition(seq: DegreeSequence) -> BlockingCondition:
    return BlockingCondition(tuple(x + 1 for x in seq.degrees), seq)
