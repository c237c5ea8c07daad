"""Sinks of the majorization poset and the edge-connectivity sink family.

For an increasing property P, a (P, n)-sink is a graphical sequence that is
not forcibly P and is majorized by no other such sequence. For a decreasing
property the roles flip: sinks are the minimal non-forcibly-P sequences.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Callable, Iterator

from .errors import ParamOutOfRange
from .graph import Graph
from .oracles import PropertyId, ScaleLimits, edge_connectivity, forcibly
from .sequences import DegreeSequence, blocking_condition, enumerate_graphical, majorizes

__all__ = [
    "partition_count",
    "partition_count_pentagonal",
    "partitions",
    "SinkReport",
    "classify",
    "sinks",
    "kriesell_family",
    "cut_sequences",
    "SinkBoundReport",
    "verify_sink_lower_bound",
]


# ---------------------------------------------------------------------------
# partitions


def partition_count(r: int) -> int:
    """p(r) by the coin-change recurrence over part sizes."""
    if r < 0:
        raise ValueError("r must be nonnegative")
    ways = [1] + [0] * r
    for part in range(1, r + 1):
        for total in range(part, r + 1):
            ways[total] += ways[total - part]
    return ways[r]


@lru_cache(maxsize=None)
def partition_count_pentagonal(r: int) -> int:
    """p(r) by Euler's pentagonal number recurrence."""
    if r < 0:
        return 0
    if r == 0:
        return 1
    total, k = 0, 1
    while True:
        g1 = k * (3 * k - 1) // 2
        if g1 > r:
            break
        sign = 1 if k % 2 else -1
        total += sign * partition_count_pentagonal(r - g1)
        g2 = k * (3 * k + 1) // 2
        if g2 <= r:
            total += sign * partition_count_pentagonal(r - g2)
        k += 1
    return total


def partitions(r: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of ``r`` as nonincreasing tuples, in reverse-lexicographic order."""
    if max_part is None:
        max_part = r
    if r == 0:
        yield ()
        return
    for first in range(min(r, max_part), 0, -1):
        for rest in partitions(r - first, first):
            yield (first,) + rest


# ---------------------------------------------------------------------------
# sinks


@dataclass
class SinkReport:
    property: PropertyId
    n: int
    sinks: list[DegreeSequence]
    certificates: list[Graph]
    classified: int
    non_forcible: int
    pairwise_incomparable: bool
    blocking_ok: bool

    @property
    def count(self) -> int:
        return len(self.sinks)

    def to_json(self) -> dict:
        prop = self.property
        return {
            "property": str(prop),
            "params": {} if prop.param is None else {"value": str(prop.param)},
            "n": self.n,
            "sinks": [s.to_json() for s in self.sinks],
            "count": self.count,
            "certificates": [g.to_json() for g in self.certificates],
        }


def _classify_one(args: tuple[PropertyId, tuple[int, ...], ScaleLimits, int | None]):
    prop, degrees, limits, max_n = args
    result = forcibly(prop, DegreeSequence(degrees), limits, max_n)
    return result.holds, result.counterexample


def classify(
    prop: PropertyId,
    n: int,
    *,
    limits: ScaleLimits | None = None,
    max_n: int | None = None,
    jobs: int = 1,
    progress: Callable[[str], None] | None = None,
) -> list[tuple[DegreeSequence, bool, Graph | None]]:
    """Run the forcibly oracle on every graphical sequence of length ``n``."""
    limits = limits or ScaleLimits()
    seqs = list(enumerate_graphical(n))
    tasks = [(prop, s.degrees, limits, max_n) for s in seqs]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_classify_one, tasks, chunksize=8))
    else:
        results = []
        for t, task in enumerate(tasks):
            results.append(_classify_one(task))
            if progress and (t + 1) % 200 == 0:
                progress(f"{prop} n={n}: {t + 1}/{len(tasks)} classified")
    return [(s, holds, cex) for s, (holds, cex) in zip(seqs, results)]


def sinks(
    prop: PropertyId,
    n: int,
    *,
    limits: ScaleLimits | None = None,
    max_n: int | None = None,
    jobs: int = 1,
    progress: Callable[[str], None] | None = None,
) -> SinkReport:
    table = classify(prop, n, limits=limits, max_n=max_n, jobs=jobs, progress=progress)
    bad = [(s, cex) for s, holds, cex in table if not holds]
    if prop.increasing:
        above = lambda a, b: majorizes(a, b)  # noqa: E731
    else:
        above = lambda a, b: majorizes(b, a)  # noqa: E731
    found = [(s, cex) for s, cex in bad if not any(o != s and above(o, s) for o, _ in bad)]
    seqs = [s for s, _ in found]
    incomparable = all(not majorizes(a, b) and not majorizes(b, a) for a, b in combinations(seqs, 2))
    blocking = True
    if prop.increasing:
        blocking = all(
            blocking_condition(b).satisfied_by(a) for a in seqs for b in seqs if a != b
        )
    return SinkReport(
        prop, n, seqs, [cex for _, cex in found], len(table), len(bad), incomparable, blocking
    )


# ---------------------------------------------------------------------------
# the k-edge-connectivity sink family


def kriesell_family(k: int, n: int) -> list[tuple[Graph, DegreeSequence]]:
    """One graph per partition of k - 1: two copies of K_(n/2) and k - 1 cross edges.

    X is ``0..n/2-1`` and Y is ``n/2..n-1``. The partition (a_1, ..., a_j)
    sends a_t cross edges from x_t = t to fresh Y vertices, taken lowest first.
    """
    if k < 2:
        raise ParamOutOfRange("needs k >= 2")
    if n % 2 or n < 4 * k - 2:
        raise ParamOutOfRange(f"needs n even and n >= 4k - 2 = {4 * k - 2}, got n = {n}")
    half = n // 2
    base = Graph.complete(half).union(Graph.complete(half))
    out = []
    for parts in partitions(k - 1):
        edges, y = [], half
        for x, count in enumerate(parts):
            for _ in range(count):
                edges.append((x, y))
                y += 1
        g = base.add_edges(edges)
        out.append((g, g.degree_sequence()))
    return out


def _bipartite_realizable(left: list[int], right: list[int]) -> bool:
    """Gale-Ryser test for a simple bipartite graph with the given side degrees."""
    if sum(left) != sum(right):
        return False
    left = sorted(left, reverse=True)
    for t in range(1, len(left) + 1):
        if sum(left[:t]) > sum(min(r, t) for r in right):
            return False
    return True


def cut_sequences(k: int, n: int) -> set[DegreeSequence]:
    """Degree sequences of every edge-maximal graph with a cut of exactly k - 1 edges.

    Such a graph is two cliques on a split ``|Y| + |X| = n`` plus k - 1
    cross edges; only the cross-degree multiset on each side matters.
    """
    out: set[DegreeSequence] = set()
    for ysize in range(1, n // 2 + 1):
        xsize = n - ysize
        for left in partitions(k - 1):
            if len(left) > xsize:
                continue
            for right in partitions(k - 1):
                if len(right) > ysize or not _bipartite_realizable(list(left), list(right)):
                    continue
                lx = list(left) + [0] * (xsize - len(left))
                ry = list(right) + [0] * (ysize - len(right))
                degs = [xsize - 1 + c for c in lx] + [ysize - 1 + c for c in ry]
                out.add(DegreeSequence.of(degs))
    return out


@dataclass
class SinkBoundReport:
    k: int
    n: int
    family: list[DegreeSequence]
    expected: int
    pairwise_incomparable: bool
    cut_checked: int
    dominated: list[tuple[DegreeSequence, DegreeSequence]] = field(default_factory=list)
    cuts_ok: bool = True
    oracle_confirmed: bool | None = None

    @property
    def count(self) -> int:
        return len(self.family)

    @property
    def passed(self) -> bool:
        return (
            self.pairwise_incomparable
            and not self.dominated
            and self.cuts_ok
            and self.count >= self.expected
            and self.oracle_confirmed is not False
        )

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "n": self.n,
            "family": [s.to_json() for s in self.family],
            "count": self.count,
            "expected": self.expected,
            "pairwise_incomparable": self.pairwise_incomparable,
            "cut_sequences_checked": self.cut_checked,
            "dominated": [[a.to_json(), b.to_json()] for a, b in self.dominated],
            "cuts_ok": self.cuts_ok,
            "oracle_confirmed": self.oracle_confirmed,
            "passed": self.passed,
        }


def verify_sink_lower_bound(
    k: int,
    n: int,
    *,
    oracle_max_n: int = 7,
    limits: ScaleLimits | None = None,
    jobs: int = 1,
) -> SinkBoundReport:
    """Check that the family gives at least p(k - 1) k-edge-connectivity sinks.

    Every graph that is not k-edge-connected has its degrees majorized by
    one of :func:`cut_sequences`, so a family member is a sink exactly when
    no other cut sequence majorizes it.
    """
    family = kriesell_family(k, n)
    seqs = [s for _, s in family]
    incomparable = all(not majorizes(a, b) and not majorizes(b, a) for a, b in combinations(seqs, 2))
    cuts = cut_sequences(k, n)
    dominated = [(s, c) for s in seqs for c in sorted(cuts, key=lambda c: c.degrees) if c != s and majorizes(c, s)]
    limits = limits or ScaleLimits()
    cuts_ok = all(edge_connectivity(g) == k - 1 for g, _ in family) if n <= limits.subsets else True
    report = SinkBoundReport(
        k, n, seqs, partition_count(k - 1), incomparable, len(cuts), dominated, cuts_ok
    )
    if n <= oracle_max_n:
        found = sinks(PropertyId("k_edge_connected", k), n, limits=limits, jobs=jobs)
        report.oracle_confirmed = all(s in found.sinks for s in seqs)
    return report
