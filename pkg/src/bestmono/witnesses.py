"""Extremal witness graphs and the weak-optimality harness.

A recipe is a small expression over complete parts ``K``, edgeless parts
``E``, disjoint union ``u`` and join ``+``, plus a list of extra edges
between named parts. Vertices are numbered leaf by leaf, left to right, so
"independent edges" always land on the lowest-indexed free vertices.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Union

from .conditions import Clause, ConditionRow, Params, _reader, get_row
from .errors import EmptyPart, ParamOutOfRange
from .graph import Graph
from .oracles import ScaleLimits, has_property
from .sequences import DegreeSequence, enumerate_graphical, majorizes

__all__ = [
    "Part",
    "Op",
    "WitnessRecipe",
    "K",
    "E",
    "join",
    "union",
    "recipe_for",
    "witness_for",
    "has_family",
    "InstanceReport",
    "WeakOptimalityReport",
    "verify_weak_optimality",
]

F = Fraction


@dataclass(frozen=True)
class Part:
    kind: str  # "K" complete, "E" edgeless
    size: int
    name: str


@dataclass(frozen=True)
class Op:
    op: str  # "+" join, "u" union
    children: tuple


Expr = Union[Part, Op]

_counter = [0]


def _fresh(prefix: str) -> str:
    _counter[0] += 1
    return f"{prefix}{_counter[0]}"


def K(size: int, name: str | None = None) -> Part:
    return Part("K", size, name or _fresh("K"))


def E(size: int, name: str | None = None) -> Part:
    return Part("E", size, name or _fresh("E"))


def join(*children: Expr) -> Op:
    return Op("+", children)


def union(*children: Expr) -> Op:
    return Op("u", children)


def _leaves(expr: Expr) -> list[Part]:
    if isinstance(expr, Part):
        return [expr]
    out: list[Part] = []
    for child in expr.children:
        out.extend(_leaves(child))
    return out


def _size(expr: Expr) -> int:
    return sum(p.size for p in _leaves(expr))


@dataclass(frozen=True)
class WitnessRecipe:
    expr: Expr
    edges: tuple[tuple[str, int, str, int], ...] = ()

    def __post_init__(self) -> None:
        for part in _leaves(self.expr):
            if part.size < 0:
                raise EmptyPart(f"part {part.kind} has negative size {part.size}")
        sizes = {p.name: p.size for p in _leaves(self.expr)}
        for a, ia, b, ib in self.edges:
            if ia >= sizes[a] or ib >= sizes[b]:
                raise EmptyPart(f"extra edge needs vertex {ia} of {a} and {ib} of {b}")

    @property
    def n(self) -> int:
        return _size(self.expr)

    def offsets(self) -> dict[str, int]:
        out, at = {}, 0
        for part in _leaves(self.expr):
            out[part.name] = at
            at += part.size
        return out

    def _extra_edges(self) -> list[tuple[int, int]]:
        off = self.offsets()
        return [(off[a] + ia, off[b] + ib) for a, ia, b, ib in self.edges]

    def build(self) -> Graph:
        def rec(expr: Expr) -> Graph:
            if isinstance(expr, Part):
                return Graph.complete(expr.size) if expr.kind == "K" else Graph.empty(expr.size)
            graphs = [rec(c) for c in expr.children]
            out = graphs[0]
            for g in graphs[1:]:
                out = out.join(g) if expr.op == "+" else out.union(g)
            return out

        return rec(self.expr).add_edges(self._extra_edges())

    def degrees(self) -> DegreeSequence:
        """Degrees read off the part sizes, without building adjacency."""

        def rec(expr: Expr) -> list[int]:
            if isinstance(expr, Part):
                return [expr.size - 1 if expr.kind == "K" else 0] * expr.size
            total = _size(expr)
            out: list[int] = []
            for child in expr.children:
                extra = total - _size(child) if expr.op == "+" else 0
                out.extend(x + extra for x in rec(child))
            return out

        degs = rec(self.expr)
        for u, v in self._extra_edges():
            degs[u] += 1
            degs[v] += 1
        return DegreeSequence.of(degs)

    def render(self) -> str:
        def rec(expr: Expr, top: bool) -> str:
            if isinstance(expr, Part):
                return f"{expr.kind}{expr.size}"
            kids = [c for c in expr.children if _size(c) > 0] or list(expr.children[:1])
            if len(kids) == 1:
                return rec(kids[0], top)
            text = f" {expr.op} ".join(rec(c, False) for c in kids)
            return text if top else f"({text})"

        text = rec(self.expr, True)
        if self.edges:
            text += f", plus {len(self.edges)} edge" + ("s" if len(self.edges) > 1 else "")
        return text

    def __str__(self) -> str:
        return self.render()


def _matching(a: Part, b: Part, count: int, start_a: int = 0, start_b: int = 0):
    return tuple((a.name, start_a + t, b.name, start_b + t) for t in range(count))


# ---------------------------------------------------------------------------
# families

Family = Callable[[int, Params, int, "int | None"], WitnessRecipe]


def _apex(a: int, b: int, c: int) -> WitnessRecipe:
    """K_a + (E_b u K_c), the shape shared by most hamiltonian-type families."""
    return WitnessRecipe(join(K(a), union(E(b), K(c))))


def _two_cliques(a: int, b: int, pairs: list[tuple[int, int]]) -> WitnessRecipe:
    x, y = K(a, "X"), K(b, "Y")
    return WitnessRecipe(union(x, y), tuple(("X", u, "Y", v) for u, v in pairs))


def _ham(n, p, i, j):
    return _apex(i, i, n - 2 * i)


def _odd_split(n, p, i, j):
    m = (n + 1) // 2 - i
    return WitnessRecipe(join(K(i), union(E(i - 1), K(m), K(m))))


def _factor2_344(n, p, i, j):
    e, k = E(i + 1), K(n - 2 * i - 1)
    # with a single-vertex clique the extra edge would satisfy the clause
    return WitnessRecipe(join(K(i), union(e, k)), _matching(e, k, 1 if k.size > 1 else 0))


def _factor2_345(n, p, i, j):
    e, k = E(i + 2), K(n - 2 * i - 2)
    return WitnessRecipe(join(K(i), union(e, k)), _matching(e, k, 3))


def _t410(n, p, i, j):
    e, k = E(i + 2 * j + 1), K(n - 2 * i - 3 * j - 1)
    return WitnessRecipe(join(K(i + j), union(e, k)), _matching(e, k, 2 * j + 1))


def _t411(n, p, i, j):
    e, a, b = E(i + 4), K(n // 2 - i - 3), K(n // 2 - i - 3)
    return WitnessRecipe(
        join(K(i + 2), union(e, a, b)), _matching(e, a, 3) + ((e.name, 3, b.name, 0),)
    )


def _t412(n, p, i, j):
    e, a, b = E(i + 3), K(n // 2 - i - 2), K(n // 2 - i - 2)
    # x, y, z are the first three edgeless vertices; x also reaches the other copy
    return WitnessRecipe(
        join(K(i + 1), union(e, a, b)), _matching(e, a, 3) + ((e.name, 0, b.name, 0),)
    )


def _t413(n, p, i, j):
    e, c3, c1 = E(n // 2 - 1), K(3), K(1)
    return WitnessRecipe(
        join(K(n // 2 - 3), union(e, c3, c1)), _matching(e, c3, 3) + ((e.name, 3, c1.name, 0),)
    )


def _bind_cut(n: int, b: Fraction) -> int:
    return math.floor(F(n) / (b + 1))


def _bind_tail(n, p, i, j):
    m = _bind_cut(n, p.b)
    return WitnessRecipe(join(K(n - m - 1), E(m + 1)))


def _bindlo(n, p, i, j):
    c = math.ceil(p.b * i)
    return WitnessRecipe(join(K(c - 1), union(K(n - i - c + 1), E(i))))


def _bindhi(n, p, i, j):
    q = math.floor(F(n - i) / p.b)
    return WitnessRecipe(join(K(n - q - 1), union(K(q - i + 1), E(i))))


def _tough(n, p, i, j):
    q = math.floor(i / p.t)
    return WitnessRecipe(join(K(i), union(E(q), K(n - i - q))))


def _bipartite_half(n, p, i, j):
    return WitnessRecipe(join(E(n // 2), E(n // 2)))


_FAMILIES: dict[tuple[str, str], Family] = {
    ("HAM", "1.1"): _ham,
    ("KCONN", "1.2"): lambda n, p, i, j: WitnessRecipe(
        join(K(p.k - 1), union(K(i), K(n - p.k - i + 1)))
    ),
    ("EDGE2", "3.1a"): lambda n, p, i, j: _two_cliques(1, n - 1, [(0, 0)] if n > 1 else []),
    ("EDGE2", "3.1b"): lambda n, p, i, j: _two_cliques(i, n - i, [(0, 0)]),
    ("EDGE2", "3.1c"): lambda n, p, i, j: _two_cliques(n // 2, n // 2, [(0, 0)] if n > 2 else []),
    ("EDGE3", "3.2a"): lambda n, p, i, j: _two_cliques(1, n - 1, [(0, 0), (0, 1)]),
    ("EDGE3", "3.2b"): lambda n, p, i, j: _two_cliques(i, n - i, [(0, 0), (1, 1)]),
    ("EDGE3", "3.2c"): lambda n, p, i, j: _two_cliques(i, n - i, [(0, 0), (0, 1)]),
    ("EDGE3", "3.2d"): lambda n, p, i, j: _two_cliques(i, n - i, [(0, 0), (1, 0)]),
    # below n = 8 the second independent edge lifts d_(n/2) over the threshold
    ("EDGE3", "3.2e"): lambda n, p, i, j: _two_cliques(
        n // 2, n // 2, [(0, 0), (1, 1)] if n >= 8 else [(0, 0)]
    ),
    ("EDGE3", "3.2f"): lambda n, p, i, j: _two_cliques((n - 1) // 2, (n + 1) // 2, [(0, 0), (0, 1)]),
    ("EDGE3", "3.2g"): lambda n, p, i, j: _two_cliques(
        n // 2, n // 2, [(0, 0), (0, 1)] if n > 4 else [(0, 0)]
    ),
    ("BINDLO", "3.2.1"): _bindlo,
    ("BINDLO", "3.2.2"): _bind_tail,
    ("BINDHI", "3.2.3"): _bindhi,
    ("BINDHI", "3.2.4"): _bind_tail,
    ("TOUGH", "3.3.1"): _tough,
    ("DEFIC", "3.4.1"): lambda n, p, i, j: _apex(i - p.beta, i + 1, n - 2 * i + p.beta - 1),
    ("FACTOR2", "3.4.2"): lambda n, p, i, j: WitnessRecipe(join(K((n - 1) // 2), E((n + 1) // 2))),
    ("FACTOR2", "3.4.3"): lambda n, p, i, j: _apex((n - 2) // 2, (n - 2) // 2, 2),
    ("FACTOR2", "3.4.4"): _factor2_344,
    ("FACTOR2", "3.4.5"): _factor2_345,
    ("KHAM", "3.5.1"): lambda n, p, i, j: _apex(i + p.k, i, n - 2 * i - p.k),
    ("KPATH", "3.5.2"): lambda n, p, i, j: _apex(i, i + p.k, n - 2 * i - p.k),
    ("HAMCONN", "3.5.3"): lambda n, p, i, j: _apex(i, i - 1, n - 2 * i + 1),
    ("KEDGEHAM", "3.5.4"): lambda n, p, i, j: _apex(i, i - p.k, n - 2 * i + p.k),
    ("PANCYC", "3.5.5"): _ham,
    ("PANCYC", "3.5.6"): _bipartite_half,
    ("ALPHA_LE", "3.6.1"): lambda n, p, i, j: WitnessRecipe(join(E(p.k + 1), K(n - p.k - 1))),
    ("CHI_LE", "3.6.2"): lambda n, p, i, j: WitnessRecipe(union(K(p.k + 1), E(n - p.k - 1))),
    ("ARB_LE", "3.6.3"): lambda n, p, i, j: WitnessRecipe(union(K(2 * p.k + 1), E(n - 2 * p.k - 1))),
    ("TRACE_HAM", "4.1"): _ham,
    ("CONN2_HAM", "4.2"): _ham,
    ("BIND1_HAM", "4.3"): _ham,
    ("BIND1_HAM", "4.4"): _odd_split,
    ("BIND1_1F", "4.5"): lambda n, p, i, j: WitnessRecipe(
        join(K(i), union(E(i), K(2 * j + 1), K(n - 2 * i - 2 * j - 1)))
    ),
    ("BIND1_1F", "4.6"): lambda n, p, i, j: WitnessRecipe(
        join(K(n // 2 - 4), union(E(n // 2 - 5), K(3), K(3), K(3)))
    ),
    ("F2_TOUGH1", "4.7"): _ham,
    ("F2_TOUGH1", "4.8"): _odd_split,
    ("F2_TOUGH1", "4.9"): lambda n, p, i, j: WitnessRecipe(
        join(K(i), union(E(i - 1), K(n // 2 - i), K(n // 2 + 1 - i)))
    ),
    ("TOUGH1_F2", "4.10"): _t410,
    ("TOUGH1_F2", "4.11"): _t411,
    ("TOUGH1_F2", "4.12"): _t412,
    ("TOUGH1_F2", "4.13"): _t413,
}


def has_family(cond: str | ConditionRow) -> bool:
    row = cond if isinstance(cond, ConditionRow) else get_row(cond)
    return all((row.id, c.label) in _FAMILIES for c in row.clauses)


def _clause(row: ConditionRow, label: str) -> Clause:
    for clause in row.clauses:
        if clause.label == label.strip("()"):
            return clause
    raise ParamOutOfRange(f"{row.id} has no clause ({label})")


def recipe_for(
    cond: str | ConditionRow,
    params: Params | None,
    n: int,
    clause: str,
    i: int | None = None,
    j: int | None = None,
) -> WitnessRecipe:
    """The extremal recipe for one clause instance of a row."""
    row = cond if isinstance(cond, ConditionRow) else get_row(cond)
    params = params or Params()
    row.check_domain(n, params)
    c = _clause(row, clause)
    family = _FAMILIES.get((row.id, c.label))
    if family is None:
        raise ParamOutOfRange(f"{row.id} has no extremal family")
    index = (i if c.indexed else 0, j)
    if index not in c.indices(n, params):
        raise ParamOutOfRange(f"({c.label}) has no instance i={i}, j={j} at n={n}")
    recipe = family(n, params, index[0], j)
    if recipe.n != n:
        raise EmptyPart(f"recipe has {recipe.n} vertices, expected {n}")
    return recipe


def witness_for(
    cond: str | ConditionRow,
    params: Params | None,
    n: int,
    clause: str,
    i: int | None = None,
    j: int | None = None,
) -> Graph:
    return recipe_for(cond, params, n, clause, i, j).build()


# ---------------------------------------------------------------------------
# weak optimality


def _fails_instance(row: ConditionRow, clause: Clause, params: Params, seq: DegreeSequence, i: int, j) -> bool:
    d = _reader(seq, row.sentinel)
    n = seq.n
    return clause.antecedent(d, n, params, i, j) and not clause.consequent(d, n, params, i, j)


@dataclass
class InstanceReport:
    clause: str
    i: int | None
    j: int | None
    recipe: str | None
    witness: DegreeSequence | None
    fails_clause: bool | None = None
    lacks_property: bool | None = None  # None when above oracle scale
    dominates: bool | None = None  # every failing sequence lies below this witness
    failing_checked: int = 0
    covered_elsewhere: int = 0
    problems: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.problems

    def to_json(self) -> dict:
        return {
            "clause": self.clause,
            "i": self.i,
            "j": self.j,
            "recipe": self.recipe,
            "witness": self.witness.to_json() if self.witness else None,
            "fails_clause": self.fails_clause,
            "lacks_property": self.lacks_property,
            "dominates": self.dominates,
            "failing_checked": self.failing_checked,
            "covered_elsewhere": self.covered_elsewhere,
            "problems": list(self.problems),
        }


@dataclass
class WeakOptimalityReport:
    condition: str
    params: Params
    n: int
    instances: list[InstanceReport]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.instances)

    def to_json(self) -> dict:
        return {
            "condition": self.condition,
            "params": self.params.to_json(),
            "n": self.n,
            "passed": self.passed,
            "instances": [r.to_json() for r in self.instances],
        }


_GRAPHICAL_CACHE: dict[int, list[DegreeSequence]] = {}


def _graphical(n: int) -> list[DegreeSequence]:
    if n not in _GRAPHICAL_CACHE:
        _GRAPHICAL_CACHE[n] = list(enumerate_graphical(n))
    return _GRAPHICAL_CACHE[n]


def _lacks(row: ConditionRow, params: Params, g: Graph, limits: ScaleLimits) -> bool:
    target = row.property(params)
    if target.premise is not None:
        return has_property(target.premise, g, limits) and not has_property(target.conclusion, g, limits)
    return not has_property(target, g, limits)


def verify_weak_optimality(
    cond: str | ConditionRow,
    params: Params | None,
    n: int,
    *,
    oracle_max_n: int = 7,
    sample: int | None = None,
    seed: int = 0,
    limits: ScaleLimits | None = None,
) -> WeakOptimalityReport:
    """Check every clause instance at ``n`` against its extremal witness.

    (a) the witness degrees fail that instance; (b) up to ``oracle_max_n``
    the witness lacks the property (or has P1 and lacks P2); (c) every
    graphical sequence failing that instance is dominated by the witness,
    majorized for increasing properties and minorized for decreasing ones.
    With ``sample`` set, (c) looks at a seeded random subset instead.
    """
    row = cond if isinstance(cond, ConditionRow) else get_row(cond)
    params = params or Params()
    limits = limits or ScaleLimits()
    row.check_domain(n, params)
    increasing = row.property(params).increasing
    rng = random.Random(seed)

    def below(witness: DegreeSequence, seq: DegreeSequence) -> bool:
        return majorizes(witness, seq) if increasing else majorizes(seq, witness)

    reports: list[InstanceReport] = []
    pools: list[list[DegreeSequence]] = []
    for clause in row.clauses:
        for i, j in clause.indices(n, params):
            shown_i = i if clause.indexed else None
            failing = [s for s in _graphical(n) if _fails_instance(row, clause, params, s, i, j)]
            if sample is not None and len(failing) > sample:
                failing = rng.sample(failing, sample)
            pools.append(failing)
            try:
                recipe = recipe_for(row, params, n, clause.label, shown_i, j)
            except EmptyPart:
                # vacuous unless some sequence fails the instance (checked below)
                reports.append(InstanceReport(clause.label, shown_i, j, None, None))
                continue
            graph = recipe.build()
            seq = graph.degree_sequence()
            rep = InstanceReport(clause.label, shown_i, j, recipe.render(), seq)
            if recipe.degrees() != seq:
                rep.problems.append("symbolic degrees differ from the built graph")
            rep.fails_clause = _fails_instance(row, clause, params, seq, i, j)
            if not rep.fails_clause:
                rep.problems.append("witness satisfies the clause it targets")
            if n <= oracle_max_n:
                rep.lacks_property = _lacks(row, params, graph, limits)
                if not rep.lacks_property:
                    rep.problems.append("oracle: witness is not a counterexample")
            reports.append(rep)

    # a failing sequence must sit below its own witness or, failing that,
    # below another sound witness of the row at the same n
    sound = [r.witness for r in reports if r.witness is not None and not r.problems]
    for rep, failing in zip(reports, pools):
        rep.failing_checked = len(failing)
        if rep.witness is None:
            if failing:
                rep.problems.append(f"{len(failing)} sequences fail with no witness, e.g. {failing[0]}")
            continue
        escaped = [s for s in failing if not below(rep.witness, s)]
        rep.dominates = not escaped
        rep.covered_elsewhere = len(escaped)
        lost = [s for s in escaped if not any(below(w, s) for w in sound)]
        if lost:
            rep.problems.append(f"{len(lost)} failing sequences lie below no witness, e.g. {lost[0]}")
    return WeakOptimalityReport(row.id, params, n, reports)
