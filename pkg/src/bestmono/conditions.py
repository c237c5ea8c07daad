"""Registry of Chvátal-type degree conditions and degree-based bounds.

Each row is a list of clauses. A clause ranges over integer indices ``i``
(and sometimes ``j``) inside real bounds, and at each index asks
``antecedent => consequent`` where both sides read the sorted degrees
1-based. A sequence is *declared* when no clause instance fails.

Clause labels are the equation tags under which the conditions are usually
quoted; they are user-facing identifiers (``fails (1.1) at i=2``).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Iterator

from .errors import NotGraphical, ParamOutOfDomain, SequenceTooShort
from .oracles import PropertyId, parse_rational
from .sequences import DegreeSequence, complement, is_graphical

__all__ = [
    "Params",
    "Clause",
    "ConditionRow",
    "Verdict",
    "FailingClause",
    "ClauseEval",
    "BoundResult",
    "REGISTRY",
    "get_row",
    "evaluate",
    "declares",
    "caro_wei",
    "murphy_f_trace",
    "murphy_alpha",
    "clique_chromatic_lower",
    "welsh_powell_chi_upper",
    "max_degree_chi_upper",
    "max_degree_arboricity_upper",
    "arboricity_upper",
    "binding_toughness_bound",
    "PARAM_GRID",
]

F = Fraction


# ---------------------------------------------------------------------------
# parameters


@dataclass(frozen=True)
class Params:
    k: int | None = None
    b: Fraction | None = None
    t: Fraction | None = None
    beta: int | None = None

    def to_json(self) -> dict:
        out: dict = {}
        for name in ("k", "b", "t", "beta"):
            value = getattr(self, name)
            if value is None:
                continue
            if isinstance(value, Fraction):
                out[name] = str(value)
            else:
                out[name] = value
        return out

    @classmethod
    def parse(cls, **raw: str | int | Fraction | None) -> Params:
        values: dict = {}
        for name, value in raw.items():
            if value is None:
                continue
            if name in ("b", "t"):
                values[name] = value if isinstance(value, Fraction) else parse_rational(str(value))
            else:
                r = value if isinstance(value, (int, Fraction)) else parse_rational(str(value))
                if F(r).denominator != 1:
                    raise ParamOutOfDomain(f"{name} must be an integer, got {value}")
                values[name] = int(r)
        return cls(**values)

    def __str__(self) -> str:
        return ", ".join(f"{k}={v}" for k, v in self.to_json().items())


# default sweep grids, per parameter
PARAM_GRID: dict[str, list] = {
    "k": [0, 1, 2, 3, 4],
    "beta": [0, 1, 2],
    "b": [F(1, 2), F(1), F(3, 2), F(2), F(5, 2)],
    "t": [F(1), F(3, 2), F(2)],
}

# rows whose domain excludes the default grid get their own
_ROW_GRIDS: dict[str, list] = {
    "TOUGHLO": [F(1, 3), F(1, 2), F(2, 3)],
}


# ---------------------------------------------------------------------------
# clause machinery

Index = tuple[int, int | None]
Reader = Callable[[int], int]


def irange(lo, hi, *, lo_strict: bool = False, hi_strict: bool = False) -> range:
    """Integers in the real interval between ``lo`` and ``hi``."""
    lo, hi = F(lo), F(hi)
    start = math.floor(lo) + 1 if lo_strict else math.ceil(lo)
    stop = math.ceil(hi) if hi_strict else math.floor(hi) + 1
    return range(start, max(start, stop))


def single() -> list[Index]:
    return [(0, None)]


def when(flag: bool) -> list[Index]:
    return single() if flag else []


def over_i(r: Iterable[int]) -> list[Index]:
    return [(i, None) for i in r]


@dataclass(frozen=True)
class Clause:
    label: str
    indices: Callable[[int, Params], list[Index]]
    antecedent: Callable[[Reader, int, Params, int, int | None], bool]
    consequent: Callable[[Reader, int, Params, int, int | None], bool]
    indexed: bool = True  # False for single-instance clauses (no i reported)


def _always(d, n, p, i, j) -> bool:
    return True


@dataclass(frozen=True)
class FailingClause:
    clause: str
    i: int | None
    j: int | None

    def to_json(self) -> dict:
        return {"clause": self.clause, "i": self.i, "j": self.j}

    def __str__(self) -> str:
        where = []
        if self.i is not None:
            where.append(f"i={self.i}")
        if self.j is not None:
            where.append(f"j={self.j}")
        return f"({self.clause})" + (" at " + ", ".join(where) if where else "")


@dataclass(frozen=True)
class ClauseEval:
    clause: str
    i: int | None
    j: int | None
    antecedent: bool
    consequent: bool | None  # not evaluated when the antecedent is false

    @property
    def holds(self) -> bool:
        return not self.antecedent or bool(self.consequent)


@dataclass(frozen=True)
class Verdict:
    condition: str
    params: Params
    declared: bool
    failing_clause: FailingClause | None
    trace: tuple[ClauseEval, ...] = ()

    def to_json(self) -> dict:
        return {
            "condition": self.condition,
            "params": self.params.to_json(),
            "declared": self.declared,
            "failing_clause": self.failing_clause.to_json() if self.failing_clause else None,
        }


@dataclass(frozen=True)
class ConditionRow:
    id: str
    citation: str
    conclusion: str
    param: str | None
    flags: frozenset[str]
    clauses: tuple[Clause, ...]
    property_of: Callable[[Params], PropertyId]
    check_domain: Callable[[int, Params], None]
    domain_text: str
    sentinel: bool = False  # reads d_0 = 0
    premise_of: Callable[[Params], PropertyId] | None = None

    @property
    def is_implication(self) -> bool:
        return "implication" in self.flags

    @property
    def best_monotone(self) -> bool:
        return "best_monotone" in self.flags

    def property(self, params: Params) -> PropertyId:
        """The property whose forcibility the row certifies (an implication for P1 => P2 rows)."""
        conclusion = self.property_of(params)
        if self.premise_of is not None:
            return PropertyId.implies(self.premise_of(params), conclusion)
        return conclusion

    def grid(self) -> list[Params]:
        if self.param is None:
            return [Params()]
        values = _ROW_GRIDS.get(self.id, PARAM_GRID[self.param])
        out = []
        for v in values:
            p = Params(**{self.param: v})
            try:
                self.check_domain(10**6, p)
            except ParamOutOfDomain:
                continue
            except SequenceTooShort:
                pass
            out.append(p)
        return out

    def accepts(self, n: int, params: Params) -> bool:
        try:
            self.check_domain(n, params)
        except (ParamOutOfDomain, SequenceTooShort):
            return False
        return True

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "citation": self.citation,
            "conclusion": self.conclusion,
            "parameter": self.param,
            "domain": self.domain_text,
            "flags": sorted(self.flags),
            "clauses": [c.label for c in self.clauses],
        }


def _reader(seq: DegreeSequence, sentinel: bool) -> Reader:
    degrees = seq.degrees
    n = len(degrees)

    def d(i: int) -> int:
        if 1 <= i <= n:
            return degrees[i - 1]
        if i == 0 and sentinel:
            return 0
        raise IndexError(f"degree index {i} outside 1..{n}")

    return d


def _require(param: str, p: Params):
    value = getattr(p, param)
    if value is None:
        raise ParamOutOfDomain(f"missing parameter {param}")
    return value


def _min_n(n: int, minimum: int) -> None:
    if n < minimum:
        raise SequenceTooShort(f"needs n >= {minimum}, got n = {n}")


# ---------------------------------------------------------------------------
# rows


def _ham_clause(label: str, start: int = 1) -> Clause:
    return Clause(
        label,
        lambda n, p: over_i(irange(start, F(n - 1, 2))),
        lambda d, n, p, i, j: d(i) <= i,
        lambda d, n, p, i, j: d(n - i) >= n - i,
    )


def _dom_n3(n: int, p: Params) -> None:
    _min_n(n, 3)


def _dom_kconn(n: int, p: Params) -> None:
    k = _require("k", p)
    if k < 1:
        raise ParamOutOfDomain("k must be >= 1")
    _min_n(n, max(2, k + 1))


def _dom_edgek(n: int, p: Params) -> None:
    if _require("k", p) < 1:
        raise ParamOutOfDomain("k must be >= 1")


def _dom_bindlo(n: int, p: Params) -> None:
    b = _require("b", p)
    if not 0 < b <= 1:
        raise ParamOutOfDomain("needs 0 < b <= 1")
    _min_n(n, 2)


def _dom_bindhi(n: int, p: Params) -> None:
    b = _require("b", p)
    if b < 1:
        raise ParamOutOfDomain("needs b >= 1")
    _min_n(n, math.ceil(b + 1))


def _dom_tough(n: int, p: Params) -> None:
    t = _require("t", p)
    if t < 1:
        raise ParamOutOfDomain("needs t >= 1")
    _min_n(n, math.ceil(t) + 2)


def _dom_toughlo(n: int, p: Params) -> None:
    t = _require("t", p)
    if not 0 < t < 1:
        raise ParamOutOfDomain("needs 0 < t < 1")
    _min_n(n, math.floor(1 / t) + 2)


def _dom_defic(n: int, p: Params) -> None:
    beta = _require("beta", p)
    if beta < 0:
        raise ParamOutOfDomain("needs beta >= 0")
    _min_n(n, beta)
    if (n - beta) % 2:
        raise ParamOutOfDomain(f"needs n = beta (mod 2), got n = {n}, beta = {beta}")


def _dom_kham(n: int, p: Params) -> None:
    k = _require("k", p)
    if k < 0:
        raise ParamOutOfDomain("needs k >= 0")
    _min_n(n, max(3, k + 3))


def _dom_kpath(n: int, p: Params) -> None:
    if _require("k", p) < 1:
        raise ParamOutOfDomain("needs k >= 1")


def _dom_n4(n: int, p: Params) -> None:
    _min_n(n, 4)


def _dom_alpha(n: int, p: Params) -> None:
    k = _require("k", p)
    if k < 1:
        raise ParamOutOfDomain("needs k >= 1")
    _min_n(n, k + 1)


def _dom_chi(n: int, p: Params) -> None:
    k = _require("k", p)
    if k < 1:
        raise ParamOutOfDomain("needs k >= 1")
    _min_n(n, k)


def _dom_arb(n: int, p: Params) -> None:
    k = _require("k", p)
    if k < 1:
        raise ParamOutOfDomain("needs k >= 1")
    _min_n(n, 2 * k)


def _dom_even(n: int, p: Params) -> None:
    if n % 2:
        raise ParamOutOfDomain(f"needs n even, got n = {n}")
    _min_n(n, 2)


def _dom_jung(n: int, p: Params) -> None:
    _min_n(n, 11)


def _dom_none(n: int, p: Params) -> None:
    pass


def _prop(name: str, param: str | None = None, fixed=None) -> Callable[[Params], PropertyId]:
    if fixed is not None:
        return lambda p: PropertyId(name, fixed)
    if param is None:
        return lambda p: PropertyId(name)
    return lambda p: PropertyId(name, getattr(p, param))


_HAM = _prop("hamiltonian")
_ONE_TOUGH = _prop("t_tough", fixed=F(1))
_ONE_BINDING = _prop("b_binding", fixed=F(1))
_TWO_FACTOR = _prop("has_2_factor")

BM = frozenset({"best_monotone"})
BM_IMP = frozenset({"best_monotone", "implication"})
SUFF = frozenset({"sufficient_only"})
SUFF_IMP = frozenset({"sufficient_only", "implication"})
MINDEG_IMP = frozenset({"sufficient_only", "structural_min_degree", "implication"})


def _b_cut(n: int, b: Fraction) -> int:
    return math.floor(F(n) / (b + 1))


def _rows() -> list[ConditionRow]:
    rows: list[ConditionRow] = []

    def add(**kw) -> None:
        rows.append(ConditionRow(**kw))

    add(
        id="HAM",
        citation="Chvátal (1972)",
        conclusion="forcibly hamiltonian",
        param=None,
        flags=BM,
        clauses=(_ham_clause("1.1"),),
        property_of=_HAM,
        check_domain=_dom_n3,
        domain_text="n >= 3",
    )
    add(
        id="KCONN",
        citation="Bondy (1969), form of Boesch (1974)",
        conclusion="forcibly k-connected",
        param="k",
        flags=BM,
        clauses=(
            Clause(
                "1.2",
                lambda n, p: over_i(irange(1, F(n - p.k + 1, 2))),
                lambda d, n, p, i, j: d(i) <= i + p.k - 2,
                lambda d, n, p, i, j: d(n - p.k + 1) >= n - i,
            ),
        ),
        property_of=_prop("k_connected", "k"),
        check_domain=_dom_kconn,
        domain_text="n >= 2, 1 <= k <= n-1",
    )
    add(
        id="EDGE2",
        citation="best monotone 2-edge-connectivity condition (2009)",
        conclusion="forcibly 2-edge-connected",
        param=None,
        flags=BM,
        clauses=(
            Clause("3.1a", lambda n, p: single(), _always, lambda d, n, p, i, j: d(1) >= 2, indexed=False),
            Clause(
                "3.1b",
                lambda n, p: over_i(irange(3, F(n, 2), hi_strict=True)),
                lambda d, n, p, i, j: d(i - 1) <= i - 1 and d(i) <= i,
                lambda d, n, p, i, j: d(n - 1) >= n - i or d(n) >= n - i + 1,
            ),
            Clause(
                "3.1c",
                lambda n, p: when(n % 2 == 0),
                lambda d, n, p, i, j: d(n // 2) <= n // 2 - 1,
                lambda d, n, p, i, j: d(n - 2) >= n // 2 or d(n) >= n // 2 + 1,
                indexed=False,
            ),
        ),
        property_of=_prop("k_edge_connected", fixed=2),
        check_domain=_dom_none,
        domain_text="n >= 1",
        sentinel=True,
    )
    add(
        id="EDGE3",
        citation="Kriesell (2007); Yin & Guo",
        conclusion="forcibly 3-edge-connected",
        param=None,
        flags=BM,
        clauses=(
            Clause("3.2a", lambda n, p: single(), _always, lambda d, n, p, i, j: d(1) >= 3, indexed=False),
            Clause(
                "3.2b",
                lambda n, p: over_i(irange(4, F(n, 2), hi_strict=True)),
                lambda d, n, p, i, j: d(i - 2) <= i - 1 and d(i) <= i,
                lambda d, n, p, i, j: d(n - 2) >= n - i or d(n) >= n - i + 1,
            ),
            Clause(
                "3.2c",
                lambda n, p: over_i(irange(4, F(n - 1, 2), hi_strict=True)),
                lambda d, n, p, i, j: d(i - 1) <= i - 1 and d(i) <= i + 1,
                lambda d, n, p, i, j: d(n - 2) >= n - i or d(n) >= n - i + 1,
            ),
            Clause(
                "3.2d",
                lambda n, p: over_i(irange(4, F(n, 2), hi_strict=True)),
                lambda d, n, p, i, j: d(i - 2) <= i - 1 and d(i) <= i,
                lambda d, n, p, i, j: d(n - 1) >= n - i or d(n) >= n - i + 2,
            ),
            Clause(
                "3.2e",
                lambda n, p: when(n % 2 == 0),
                lambda d, n, p, i, j: d(n // 2) <= n // 2 - 1,
                lambda d, n, p, i, j: d(n - 4) >= n // 2 or d(n) >= n // 2 + 1,
                indexed=False,
            ),
            Clause(
                "3.2f",
                lambda n, p: when(n % 2 == 1),
                lambda d, n, p, i, j: d((n - 3) // 2) <= (n - 3) // 2,
                lambda d, n, p, i, j: d(n - 3) >= (n + 1) // 2 or d(n) >= (n + 3) // 2,
                indexed=False,
            ),
            Clause(
                "3.2g",
                lambda n, p: when(n % 2 == 0),
                lambda d, n, p, i, j: d(n // 2) <= n // 2 - 1,
                lambda d, n, p, i, j: d(n - 3) >= n // 2 or d(n - 1) >= n // 2 + 1 or d(n) >= n // 2 + 2,
                indexed=False,
            ),
        ),
        property_of=_prop("k_edge_connected", fixed=3),
        check_domain=_dom_n4,
        domain_text="n >= 4",
        sentinel=True,
    )
    add(
        id="EDGEK",
        citation="best monotone 3-edge-connectivity condition (2009)",
        conclusion="forcibly k-edge-connected",
        param="k",
        flags=SUFF,
        clauses=(
            Clause("3.11a", lambda n, p: single(), _always, lambda d, n, p, i, j: d(1) >= p.k, indexed=False),
            Clause(
                "3.11b",
                lambda n, p: over_i(irange(p.k + 1, n // 2)),
                lambda d, n, p, i, j: d(i - p.k + 1) <= i - 1 and d(i) <= i + p.k - 2,
                lambda d, n, p, i, j: d(n) >= n - i + p.k - 1,
            ),
        ),
        property_of=_prop("k_edge_connected", "k"),
        check_domain=_dom_edgek,
        domain_text="k >= 1",
    )
    bind_tail = Clause(
        "3.2.2",
        lambda n, p: single(),
        _always,
        lambda d, n, p, i, j: d(_b_cut(n, p.b) + 1) >= n - _b_cut(n, p.b),
        indexed=False,
    )
    add(
        id="BINDLO",
        citation="best monotone binding condition, b <= 1 (2011)",
        conclusion="forcibly b-binding",
        param="b",
        flags=BM,
        clauses=(
            Clause(
                "3.2.1",
                lambda n, p: over_i(irange(1, _b_cut(n, p.b))),
                lambda d, n, p, i, j: d(i) <= math.ceil(p.b * i) - 1,
                lambda d, n, p, i, j: d(n - math.ceil(p.b * i) + 1) >= n - i,
            ),
            bind_tail,
        ),
        property_of=_prop("b_binding", "b"),
        check_domain=_dom_bindlo,
        domain_text="0 < b <= 1, n >= 2",
    )
    add(
        id="BINDHI",
        citation="best monotone binding condition, b >= 1 (2011)",
        conclusion="forcibly b-binding",
        param="b",
        flags=BM,
        clauses=(
            Clause(
                "3.2.3",
                lambda n, p: over_i(irange(1, _b_cut(n, p.b))),
                lambda d, n, p, i, j: d(i) <= n - math.floor(F(n - i) / p.b) - 1,
                lambda d, n, p, i, j: d(math.floor(F(n - i) / p.b) + 1) >= n - i,
            ),
            Clause("3.2.4", bind_tail.indices, bind_tail.antecedent, bind_tail.consequent, indexed=False),
        ),
        property_of=_prop("b_binding", "b"),
        check_domain=_dom_bindhi,
        domain_text="b >= 1, n >= ceil(b+1)",
    )
    add(
        id="TOUGH",
        citation="best monotone toughness condition, t >= 1 (2013)",
        conclusion="forcibly t-tough",
        param="t",
        flags=BM,
        clauses=(
            Clause(
                "3.3.1",
                lambda n, p: over_i(irange(p.t, p.t * n / (p.t + 1), hi_strict=True)),
                lambda d, n, p, i, j: d(math.floor(i / p.t)) <= i,
                lambda d, n, p, i, j: d(n - i) >= n - math.floor(i / p.t),
            ),
        ),
        property_of=_prop("t_tough", "t"),
        check_domain=_dom_tough,
        domain_text="t >= 1, n >= ceil(t)+2",
    )
    add(
        id="TOUGHLO",
        citation="sufficient toughness condition, t < 1 (2013)",
        conclusion="forcibly t-tough",
        param="t",
        flags=SUFF,
        clauses=(
            Clause(
                "3.3.2a",
                lambda n, p: over_i(
                    irange(math.floor(1 / p.t), F(n + math.floor(1 / p.t) - 1, 2), hi_strict=True)
                ),
                lambda d, n, p, i, j: d(i) <= i - math.floor(1 / p.t) + 1,
                lambda d, n, p, i, j: d(n - i + math.floor(1 / p.t) - 1) >= n - i,
            ),
            Clause(
                "3.3.2b",
                lambda n, p: over_i(irange(1, F(n, 2))),
                lambda d, n, p, i, j: d(i) <= i - 1,
                lambda d, n, p, i, j: d(n) >= n - i,
            ),
        ),
        property_of=_prop("t_tough", "t"),
        check_domain=_dom_toughlo,
        domain_text="0 < t < 1, n >= floor(1/t)+2",
    )
    add(
        id="DEFIC",
        citation="Las Vergnas (1972)",
        conclusion="forcibly beta-deficient",
        param="beta",
        flags=BM,
        clauses=(
            Clause(
                "3.4.1",
                # i = 0 included: at beta = 0 it rejects an isolated vertex
                lambda n, p: over_i(irange(0, F(n + p.beta - 2, 2))),
                lambda d, n, p, i, j: d(i + 1) <= i - p.beta,
                lambda d, n, p, i, j: d(n + p.beta - i) >= n - i - 1,
            ),
        ),
        property_of=_prop("beta_deficient", "beta"),
        check_domain=_dom_defic,
        domain_text="0 <= beta <= n, n = beta (mod 2)",
    )
    add(
        id="FACTOR2",
        citation="best monotone 2-factor condition (2012)",
        conclusion="forcibly contains a 2-factor",
        param=None,
        flags=BM,
        clauses=(
            Clause(
                "3.4.2",
                lambda n, p: when(n % 2 == 1),
                _always,
                lambda d, n, p, i, j: d((n + 1) // 2) >= (n + 1) // 2,
                indexed=False,
            ),
            Clause(
                "3.4.3",
                lambda n, p: when(n % 2 == 0),
                _always,
                lambda d, n, p, i, j: d(n // 2 - 1) >= n // 2 or d(n // 2 + 1) >= n // 2 + 1,
                indexed=False,
            ),
            Clause(
                "3.4.4",
                lambda n, p: over_i(irange(0, F(n, 2) - 1)),
                lambda d, n, p, i, j: d(i) <= i and d(i + 1) <= i + 1,
                lambda d, n, p, i, j: d(n - i - 1) >= n - i - 1 or d(n - i) >= n - i,
            ),
            Clause(
                "3.4.5",
                lambda n, p: over_i(irange(1, F(n - 5, 2))),
                lambda d, n, p, i, j: d(i - 1) <= i and d(i + 2) <= i + 1,
                lambda d, n, p, i, j: d(n - i - 3) >= n - i - 2 or d(n - i) >= n - i - 1,
            ),
        ),
        property_of=_TWO_FACTOR,
        check_domain=_dom_n3,
        domain_text="n >= 3",
        sentinel=True,
    )
    add(
        id="KHAM",
        citation="Chvátal (1972)",
        conclusion="forcibly k-hamiltonian",
        param="k",
        flags=BM,
        clauses=(
            Clause(
                "3.5.1",
                lambda n, p: over_i(irange(1, F(n - p.k, 2), hi_strict=True)),
                lambda d, n, p, i, j: d(i) <= i + p.k,
                lambda d, n, p, i, j: d(n - i - p.k) >= n - i,
            ),
        ),
        property_of=_prop("k_hamiltonian", "k"),
        check_domain=_dom_kham,
        domain_text="n >= 3, 0 <= k <= n-3",
    )
    add(
        id="KPATH",
        citation="Bondy & Chvátal (1976); Lesniak (1976)",
        conclusion="forcibly k-path-coverable",
        param="k",
        flags=BM,
        clauses=(
            Clause(
                "3.5.2",
                # i = 0 included: it blocks sequences with k isolated vertices
                lambda n, p: over_i(irange(0, F(n - p.k, 2), hi_strict=True)),
                lambda d, n, p, i, j: d(i + p.k) <= i,
                lambda d, n, p, i, j: d(n - i) >= n - i - p.k,
            ),
        ),
        property_of=_prop("k_path_coverable", "k"),
        check_domain=_dom_kpath,
        domain_text="k >= 1",
    )
    add(
        id="HAMCONN",
        citation="Berge (1973)",
        conclusion="forcibly hamiltonian-connected",
        param=None,
        flags=BM,
        clauses=(
            Clause(
                "3.5.3",
                lambda n, p: over_i(irange(2, F(n + 1, 2), hi_strict=True)),
                lambda d, n, p, i, j: d(i - 1) <= i,
                lambda d, n, p, i, j: d(n - i) >= n - i + 1,
            ),
        ),
        property_of=_prop("hamiltonian_connected"),
        check_domain=_dom_n4,
        domain_text="n >= 4",
    )
    add(
        id="KEDGEHAM",
        citation="Kronk (1969)",
        conclusion="forcibly k-edge-hamiltonian",
        param="k",
        flags=BM,
        clauses=(
            Clause(
                "3.5.4",
                lambda n, p: over_i(irange(p.k + 1, F(n + p.k, 2), hi_strict=True)),
                lambda d, n, p, i, j: d(i - p.k) <= i,
                lambda d, n, p, i, j: d(n - i) >= n - i + p.k,
            ),
        ),
        property_of=_prop("k_edge_hamiltonian", "k"),
        check_domain=_dom_kham,
        domain_text="n >= 3, 0 <= k <= n-3",
    )
    add(
        id="PANCYC",
        citation="classical pancyclicity degree condition (1990)",
        conclusion="forcibly pancyclic",
        param=None,
        flags=BM,
        clauses=(
            Clause(
                "3.5.5",
                lambda n, p: over_i(irange(1, F(n, 2), hi_strict=True)),
                lambda d, n, p, i, j: d(i) <= i,
                lambda d, n, p, i, j: d(n - i) >= n - i,
            ),
            Clause(
                "3.5.6",
                lambda n, p: when(n % 2 == 0),
                _always,
                lambda d, n, p, i, j: d(n) >= n // 2 + 1,
                indexed=False,
            ),
        ),
        property_of=_prop("pancyclic"),
        check_domain=_dom_n3,
        domain_text="n >= 3",
    )
    add(
        id="ALPHA_LE",
        citation="folklore; Rao (1979) for the decision procedure",
        conclusion="forcibly alpha(G) <= k",
        param="k",
        flags=BM,
        clauses=(
            Clause(
                "3.6.1",
                lambda n, p: single(),
                _always,
                lambda d, n, p, i, j: d(p.k + 1) >= n - p.k,
                indexed=False,
            ),
        ),
        property_of=_prop("alpha_le", "k"),
        check_domain=_dom_alpha,
        domain_text="1 <= k <= n-1",
    )
    add(
        id="CHI_LE",
        citation="Welsh & Powell (1967)",
        conclusion="forcibly chi(G) <= k",
        param="k",
        flags=BM,
        clauses=(
            Clause(
                "3.6.2",
                lambda n, p: single(),
                _always,
                lambda d, n, p, i, j: d(n - p.k) <= p.k - 1,
                indexed=False,
            ),
        ),
        property_of=_prop("chi_le", "k"),
        check_domain=_dom_chi,
        domain_text="1 <= k <= n",
        sentinel=True,
    )
    add(
        id="ARB_LE",
        citation="max-min vertex arboricity bound (1989)",
        conclusion="forcibly a(G) <= k",
        param="k",
        flags=BM,
        clauses=(
            Clause(
                "3.6.3",
                lambda n, p: single(),
                _always,
                lambda d, n, p, i, j: d(n - 2 * p.k) <= 2 * p.k - 1,
                indexed=False,
            ),
        ),
        property_of=_prop("arboricity_le", "k"),
        check_domain=_dom_arb,
        domain_text="1 <= k <= n/2",
        sentinel=True,
    )
    add(
        id="TRACE_HAM",
        citation="Chvátal (1972), implication form",
        conclusion="every traceable realization is hamiltonian",
        param=None,
        flags=BM_IMP,
        clauses=(_ham_clause("4.1"),),
        property_of=_HAM,
        premise_of=_prop("traceable"),
        check_domain=_dom_n3,
        domain_text="n >= 3",
    )
    add(
        id="CONN2_HAM",
        citation="Chvátal (1972), implication form",
        conclusion="every 2-connected realization is hamiltonian",
        param=None,
        flags=BM_IMP,
        clauses=(_ham_clause("4.2", start=2),),
        property_of=_HAM,
        premise_of=_prop("k_connected", fixed=2),
        check_domain=_dom_n3,
        domain_text="n >= 3",
    )
    add(
        id="BIND1_HAM",
        citation="implication condition, 1-binding to hamiltonian",
        conclusion="every 1-binding realization is hamiltonian",
        param=None,
        flags=BM_IMP,
        clauses=(
            # the top index at odd n is dropped: its witness K_i + E_(i+1) is not 1-binding
            Clause(
                "4.3",
                lambda n, p: over_i(irange(1, F(n - 2, 2))),
                lambda d, n, p, i, j: d(i) <= i,
                lambda d, n, p, i, j: d(n - i) >= n - i,
            ),
            Clause(
                "4.4",
                lambda n, p: over_i(irange(1, F(n - 3, 2))) if n % 2 else [],
                lambda d, n, p, i, j: d(i - 1) <= i,
                lambda d, n, p, i, j: d(n - i) >= F(n + 1, 2),
            ),
        ),
        property_of=_HAM,
        premise_of=_ONE_BINDING,
        check_domain=_dom_n3,
        domain_text="n >= 3",
        sentinel=True,
    )
    add(
        id="BIND1_1F",
        citation="implication condition, 1-binding to 1-factor",
        conclusion="every 1-binding realization contains a 1-factor",
        param=None,
        flags=BM_IMP,
        clauses=(
            Clause(
                "4.5",
                # i = 0 included: it rejects two odd cliques such as 2K3
                lambda n, p: [
                    (i, j) for i in irange(0, F(n - 6, 2)) for j in irange(1, F(n - 2 * i - 2, 4))
                ],
                lambda d, n, p, i, j: d(i) <= i and d(i + 2 * j + 1) <= i + 2 * j,
                lambda d, n, p, i, j: d(n - i) >= n - (i + 2 * j + 1),
            ),
            Clause(
                "4.6",
                lambda n, p: when(n >= 10),
                _always,
                lambda d, n, p, i, j: d(n // 2 - 5) >= n // 2 - 3 or d(n // 2 + 4) >= n // 2 - 1,
                indexed=False,
            ),
        ),
        property_of=_prop("has_k_factor", fixed=1),
        premise_of=_ONE_BINDING,
        check_domain=_dom_even,
        domain_text="n even",
        sentinel=True,
    )
    add(
        id="F2_TOUGH1",
        citation="implication condition, 2-factor to 1-tough",
        conclusion="every realization with a 2-factor is 1-tough",
        param=None,
        flags=BM_IMP,
        clauses=(
            Clause(
                "4.7",
                # starts at i = 2: with d_1 <= 1 no realization has a 2-factor
                lambda n, p: over_i(irange(2, F(n - 3, 2))),
                lambda d, n, p, i, j: d(i) <= i,
                lambda d, n, p, i, j: d(n - i) >= n - i,
            ),
            Clause(
                "4.8",
                lambda n, p: over_i(irange(1, F(n - 5, 2))) if n % 2 else [],
                lambda d, n, p, i, j: d(i - 1) <= i,
                lambda d, n, p, i, j: d(n - i) >= F(n + 1, 2),
            ),
            Clause(
                "4.9",
                lambda n, p: [] if n % 2 else over_i(irange(1, F(n - 4, 2))),
                lambda d, n, p, i, j: d(i - 1) <= i,
                lambda d, n, p, i, j: d(n // 2 - 1) >= n // 2 or d(n - i) >= n // 2 + 1,
            ),
        ),
        property_of=_ONE_TOUGH,
        premise_of=_TWO_FACTOR,
        check_domain=_dom_n3,
        domain_text="n >= 3",
        sentinel=True,
    )
    add(
        id="JUNG",
        citation="Jung (1978)",
        conclusion="every 1-tough realization is hamiltonian (minimum degree n/2 - 2)",
        param=None,
        flags=MINDEG_IMP,
        clauses=(
            Clause(
                "jung",
                lambda n, p: single(),
                _always,
                lambda d, n, p, i, j: d(1) >= F(n, 2) - 2,
                indexed=False,
            ),
        ),
        property_of=_HAM,
        premise_of=_ONE_TOUGH,
        check_domain=_dom_jung,
        domain_text="n >= 11",
    )
    add(
        id="HOANG",
        citation="Hoàng (1995)",
        conclusion="every 1-tough realization is hamiltonian",
        param=None,
        flags=SUFF_IMP,
        clauses=(
            Clause(
                "4.8",
                lambda n, p: [
                    (i, j) for i in irange(1, math.ceil(F(n, 2))) for j in irange(i + 1, math.ceil(F(n, 2)))
                ],
                lambda d, n, p, i, j: d(i) <= i and d(n - i + 1) <= n - i - 1,
                lambda d, n, p, i, j: d(j) + d(n - j + 1) >= n,
            ),
        ),
        property_of=_HAM,
        premise_of=_ONE_TOUGH,
        check_domain=_dom_n3,
        domain_text="n >= 3",
    )
    add(
        id="HOANG_COR",
        citation="Hoàng (1995), corollary",
        conclusion="every 1-tough realization is hamiltonian",
        param=None,
        flags=SUFF_IMP,
        clauses=(
            Clause(
                "4.9",
                lambda n, p: over_i(irange(1, F(n - 1, 2))),
                lambda d, n, p, i, j: d(i) <= i,
                lambda d, n, p, i, j: d(n - i + 1) >= n - i,
            ),
        ),
        property_of=_HAM,
        premise_of=_ONE_TOUGH,
        check_domain=_dom_n3,
        domain_text="n >= 3",
    )
    add(
        id="TOUGH1_F2",
        citation="implication condition, 1-tough to 2-factor",
        conclusion="every 1-tough realization contains a 2-factor",
        param=None,
        flags=BM_IMP,
        clauses=(
            Clause(
                "4.10",
                lambda n, p: [
                    (i, j) for i in irange(0, F(n - 7, 2)) for j in irange(1, F(n - 2 * i - 2, 5))
                ],
                lambda d, n, p, i, j: d(i) <= i + j and d(i + 2 * j + 1) <= i + j + 1,
                lambda d, n, p, i, j: d(n - i - 3 * j - 1) >= n - i - 2 * j - 1
                or d(n - i - j) >= n - i - 2 * j,
            ),
            Clause(
                "4.11",
                lambda n, p: over_i(irange(0, F(n - 18, 2))) if n >= 18 and n % 2 == 0 else [],
                lambda d, n, p, i, j: d(i) <= i + 2 and d(i + 4) <= i + 3,
                lambda d, n, p, i, j: d(n - i - 6) >= n // 2 - 1 or d(n - i - 2) >= n // 2,
            ),
            Clause(
                "4.12",
                lambda n, p: over_i(irange(0, F(n - 16, 2))) if n >= 16 and n % 2 == 0 else [],
                lambda d, n, p, i, j: d(i) <= i + 1 and d(i + 2) <= i + 2 and d(i + 3) <= i + 3,
                lambda d, n, p, i, j: d(n - i - 5) >= n // 2 - 1 or d(n - i - 1) >= n // 2,
            ),
            Clause(
                "4.13",
                lambda n, p: when(n >= 10 and n % 2 == 0),
                _always,
                lambda d, n, p, i, j: d(n // 2 - 5) >= n // 2 - 2
                or d(n // 2) >= n // 2 - 1
                or d(n // 2 + 3) >= n // 2 + 1,
                indexed=False,
            ),
        ),
        property_of=_TWO_FACTOR,
        premise_of=_ONE_TOUGH,
        check_domain=_dom_n3,
        domain_text="n >= 3",
        sentinel=True,
    )
    add(
        id="DIRAC",
        citation="Dirac (1952)",
        conclusion="every realization with a 2-factor is hamiltonian (minimum degree n/2)",
        param=None,
        flags=MINDEG_IMP,
        clauses=(
            Clause(
                "dirac",
                lambda n, p: single(),
                _always,
                lambda d, n, p, i, j: d(1) >= F(n, 2),
                indexed=False,
            ),
        ),
        property_of=_HAM,
        premise_of=_TWO_FACTOR,
        check_domain=_dom_n3,
        domain_text="n >= 3",
    )
    return rows


REGISTRY: dict[str, ConditionRow] = {row.id: row for row in _rows()}

_ROW_ALIASES = {row.id.lower().replace("_", "-"): row.id for row in REGISTRY.values()}


def get_row(cond: str) -> ConditionRow:
    key = cond.strip()
    if key.upper() in REGISTRY:
        return REGISTRY[key.upper()]
    alias = key.lower().replace("_", "-")
    if alias in _ROW_ALIASES:
        return REGISTRY[_ROW_ALIASES[alias]]
    raise KeyError(f"unknown condition {cond!r}")


# ---------------------------------------------------------------------------
# evaluation


def _instances(row: ConditionRow, n: int, params: Params) -> Iterator[tuple[Clause, int, int | None]]:
    for clause in row.clauses:
        for i, j in clause.indices(n, params):
            yield clause, i, j


def evaluate(
    cond: str | ConditionRow,
    params: Params | None,
    seq: DegreeSequence,
    *,
    check_graphical: bool = True,
) -> Verdict:
    """Evaluate every clause instance and report the first failure in clause order."""
    row = cond if isinstance(cond, ConditionRow) else get_row(cond)
    params = params or Params()
    if check_graphical and not is_graphical(seq):
        raise NotGraphical(str(seq))
    n = seq.n
    row.check_domain(n, params)
    d = _reader(seq, row.sentinel)
    trace: list[ClauseEval] = []
    failing: FailingClause | None = None
    for clause, i, j in _instances(row, n, params):
        ante = clause.antecedent(d, n, params, i, j)
        cons = clause.consequent(d, n, params, i, j) if ante else None
        shown_i = i if clause.indexed else None
        trace.append(ClauseEval(clause.label, shown_i, j, ante, cons))
        if ante and not cons and failing is None:
            failing = FailingClause(clause.label, shown_i, j)
    return Verdict(row.id, params, failing is None, failing, tuple(trace))


def declares(row: ConditionRow, params: Params, seq: DegreeSequence) -> bool:
    """Fast path of :func:`evaluate`: no trace, stops at the first failure."""
    n = seq.n
    d = _reader(seq, row.sentinel)
    for clause, i, j in _instances(row, n, params):
        if clause.antecedent(d, n, params, i, j) and not clause.consequent(d, n, params, i, j):
            return False
    return True


# ---------------------------------------------------------------------------
# bounds


@dataclass(frozen=True)
class BoundResult:
    """A degree-based bound: exact value plus its integral form."""

    value: Fraction
    integer: int
    kind: str  # "lower" or "upper"
    trace: tuple = field(default=())

    def to_json(self) -> dict:
        return {"value": str(self.value), "integer": self.integer, "kind": self.kind}


def caro_wei(seq: DegreeSequence) -> BoundResult:
    total = sum((F(1, x + 1) for x in seq.degrees), F(0))
    return BoundResult(total, math.ceil(total), "lower")


INF = math.inf


def murphy_f_trace(seq: DegreeSequence) -> list[float | int]:
    """Murphy's jump sequence, ending with the first ``inf``.

    Start at position 1; from a position holding degree f, jump f + 1
    places. Each landing spot is one vertex of a forced independent set.
    """
    n = seq.n
    out: list[float | int] = []
    j = 1
    while j <= n:
        f = seq.d(j)
        out.append(f)
        j = j + f + 1
    out.append(INF)
    return out


def murphy_alpha(seq: DegreeSequence) -> BoundResult:
    trace = murphy_f_trace(seq)
    count = len(trace) - 1
    return BoundResult(F(count), count, "lower", tuple(trace))


def clique_chromatic_lower(seq: DegreeSequence) -> BoundResult:
    """Lower bound valid for both clique number and chromatic number."""
    return murphy_alpha(complement(seq))


def welsh_powell_chi_upper(seq: DegreeSequence) -> BoundResult:
    n = seq.n
    value = max(min(n - j + 1, seq.d(j) + 1) for j in range(1, n + 1))
    return BoundResult(F(value), value, "upper")


def max_degree_chi_upper(seq: DegreeSequence) -> BoundResult:
    value = seq.d(seq.n) + 1
    return BoundResult(F(value), value, "upper")


def max_degree_arboricity_upper(seq: DegreeSequence) -> BoundResult:
    value = seq.d(seq.n) // 2 + 1
    return BoundResult(F(value), value, "upper")


def _ceil_half(x: int) -> int:
    return -(-x // 2)


def arboricity_upper(seq: DegreeSequence) -> BoundResult:
    n = seq.n
    value = max(min(_ceil_half(n - j + 1), _ceil_half(seq.d(j) + 1)) for j in range(1, n + 1))
    return BoundResult(F(value), value, "upper")


def _odd_at_least_3(x: Fraction) -> bool:
    return x.denominator == 1 and x >= 3 and x.numerator % 2 == 1


def binding_toughness_bound(b: Fraction | int | str) -> Fraction:
    """Best lower bound on toughness for a graph of binding number ``b >= 2``."""
    b = parse_rational(b) if isinstance(b, str) else F(b)
    if b < 2:
        raise ParamOutOfDomain("needs b >= 2")
    if b == 2:
        return F(3, 2)
    excess = b - 2
    if b == F(9, 4) or _odd_at_least_3(1 / excess):
        return F(2)
    if _odd_at_least_3(2 / excess):
        m = ((2 / excess) + 1) / 2
        return 2 + 1 / m
    return b
