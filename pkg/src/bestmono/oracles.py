"""Exact graph-property oracles and the forcibly-P quantifier.

Everything here is exhaustive search over bitmasks: subsets for binding
number, toughness and connectivity, Held-Karp style path tables for cycles
and paths, subset-partition DP for chromatic number and vertex arboricity.
That is only viable on desk-scale graphs, which is the point: these are the
ground truth the degree conditions are checked against.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from collections import Counter
from itertools import combinations
from typing import Callable, Iterator

from .errors import NotGraphical, ParseError, ScaleExceeded
from .graph import Graph, bits
from .sequences import DegreeSequence, is_graphical

__all__ = [
    "PropertyId",
    "parse_property",
    "ScaleLimits",
    "binding_number",
    "toughness",
    "deficiency",
    "independence_number",
    "clique_number",
    "chromatic_number",
    "vertex_arboricity",
    "edge_connectivity",
    "vertex_connectivity",
    "cycle_lengths",
    "has_property",
    "enumerate_realizations",
    "forcibly",
    "conditionally_forcibly",
    "ForcedResult",
]


# ---------------------------------------------------------------------------
# scale limits


def _env_int(name: str, default: int) -> int:
    value = os.environ.get(name)
    return int(value) if value else default


@dataclass(frozen=True)
class ScaleLimits:
    """Soft vertex-count limits for the exhaustive searches."""

    realizations: int = field(default_factory=lambda: _env_int("BESTMONO_MAX_REALIZATION_N", 8))
    cycles: int = field(default_factory=lambda: _env_int("BESTMONO_MAX_CYCLE_N", 10))
    partitions: int = field(default_factory=lambda: _env_int("BESTMONO_MAX_PARTITION_N", 8))
    subsets: int = field(default_factory=lambda: _env_int("BESTMONO_MAX_SUBSET_N", 20))


# ---------------------------------------------------------------------------
# subset helpers


def _components(adj: tuple[int, ...], mask: int) -> int:
    count = 0
    rest = mask
    while rest:
        frontier = rest & -rest
        seen = frontier
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= adj[v]
            frontier = nxt & mask & ~seen
            seen |= frontier
        rest &= ~seen
        count += 1
    return count


def _is_connected(adj: tuple[int, ...], mask: int) -> bool:
    return _components(adj, mask) <= 1


def _induced_edges(adj: tuple[int, ...], mask: int) -> int:
    return sum((adj[v] & mask).bit_count() for v in bits(mask)) // 2


def binding_number(g: Graph) -> tuple[Fraction, int]:
    """Minimum of |N(S)|/|S| over nonempty S with N(S) != V, and a minimizing S."""
    n, full = g.n, g.full_mask
    neigh = [0] * (1 << n)
    best: Fraction | None = None
    best_set = 0
    for mask in range(1, 1 << n):
        low = mask & -mask
        neigh[mask] = neigh[mask ^ low] | g.adj[low.bit_length() - 1]
        if neigh[mask] == full:
            continue
        ratio = Fraction(neigh[mask].bit_count(), mask.bit_count())
        if best is None or ratio < best:
            best, best_set = ratio, mask
    assert best is not None  # singletons never dominate V, so S is nonempty
    return best, best_set


def toughness(g: Graph) -> tuple[Fraction, int | None]:
    """Exact toughness and one minimizing cut set (None for complete graphs)."""
    n, full = g.n, g.full_mask
    if g.edge_count() == n * (n - 1) // 2:
        return Fraction(n - 1), None
    best: Fraction | None = None
    best_set = 0
    for x in range(1 << n):
        size = x.bit_count()
        if best is not None and size >= best * (n - size):
            continue  # cannot beat best even with every remaining vertex isolated
        comps = _components(g.adj, full & ~x)
        if comps >= 2:
            ratio = Fraction(size, comps)
            if best is None or ratio < best:
                best, best_set = ratio, x
    assert best is not None
    return best, best_set


def deficiency(g: Graph) -> int:
    """Number of vertices left unmatched by a maximum matching."""
    adj = g.adj

    @lru_cache(maxsize=None)
    def matched(mask: int) -> int:
        if not mask:
            return 0
        low = mask & -mask
        v = low.bit_length() - 1
        rest = mask ^ low
        best = matched(rest)
        for u in bits(adj[v] & rest):
            best = max(best, 2 + matched(rest & ~(1 << u)))
        return best

    return g.n - matched(g.full_mask)


def independence_number(g: Graph) -> int:
    adj = g.adj

    @lru_cache(maxsize=None)
    def alpha(mask: int) -> int:
        if not mask:
            return 0
        low = mask & -mask
        v = low.bit_length() - 1
        rest = mask ^ low
        if not adj[v] & rest:
            return 1 + alpha(rest)
        return max(alpha(rest), 1 + alpha(rest & ~adj[v]))

    return alpha(g.full_mask)


def clique_number(g: Graph) -> int:
    return independence_number(g.complement())


def _min_partition(n: int, good: Callable[[int], bool]) -> int:
    """Fewest parts partitioning V so each part satisfies ``good``."""
    full = (1 << n) - 1
    ok = [good(m) for m in range(1 << n)]
    cost = [0] + [n + 1] * full
    for mask in range(1, full + 1):
        low = mask & -mask
        rest = mask ^ low
        sub = rest
        best = n + 1
        while True:
            part = sub | low
            if ok[part]:
                best = min(best, cost[mask ^ part] + 1)
            if not sub:
                break
            sub = (sub - 1) & rest
        cost[mask] = best
    return cost[full]


def chromatic_number(g: Graph) -> int:
    adj = g.adj
    return _min_partition(g.n, lambda m: all(not adj[v] & m for v in bits(m)))


def vertex_arboricity(g: Graph) -> int:
    adj = g.adj
    return _min_partition(
        g.n, lambda m: _induced_edges(adj, m) == m.bit_count() - _components(adj, m)
    )


def vertex_connectivity(g: Graph) -> int:
    """Largest k with g k-connected; K_n counts as (n-1)-connected."""
    n, full = g.n, g.full_mask
    for size in range(0, n - 1):
        for cut in combinations(range(n), size):
            mask = full & ~sum(1 << v for v in cut)
            if not _is_connected(g.adj, mask):
                return size
    return max(n - 1, 0)


def edge_connectivity(g: Graph) -> int:
    """Minimum edge cut; 0 for a single vertex."""
    n, full = g.n, g.full_mask
    if n <= 1:
        return 0
    best = None
    # every cut has a side containing vertex 0
    for rest in range(0, 1 << (n - 1)):
        side = (rest << 1) | 1
        if side == full:
            continue
        cut = sum((g.adj[v] & ~side).bit_count() for v in bits(side))
        if best is None or cut < best:
            best = cut
    return best


# ---------------------------------------------------------------------------
# paths and cycles


def _path_table(g: Graph, starts: int) -> list[int]:
    """``table[mask]`` = endpoints of paths covering exactly ``mask`` that begin in ``starts``."""
    n = g.n
    table = [0] * (1 << n)
    for s in bits(starts):
        table[1 << s] |= 1 << s
    adj = g.adj
    for mask in range(1, 1 << n):
        ends = table[mask]
        if not ends:
            continue
        for v in bits(ends):
            for u in bits(adj[v] & ~mask):
                table[mask | 1 << u] |= 1 << u
    return table


def _single_start_table(g: Graph, s: int) -> list[int]:
    return _path_table(g, 1 << s)


def is_hamiltonian(g: Graph) -> bool:
    if g.n < 3:
        return False
    table = _single_start_table(g, 0)
    return bool(table[g.full_mask] & g.adj[0])


def is_traceable(g: Graph) -> bool:
    if g.n == 0:
        return False
    return bool(_path_table(g, g.full_mask)[g.full_mask])


def is_hamiltonian_connected(g: Graph) -> bool:
    full = g.full_mask
    for s in range(g.n):
        ends = _single_start_table(g, s)[full]
        if ends | (1 << s) != full and g.n > 1:
            return False
    return True


def min_path_cover(g: Graph) -> int:
    traceable = _path_table(g, g.full_mask)
    return _min_partition(g.n, lambda m: bool(traceable[m]) if m else True)


def cycle_lengths(g: Graph) -> set[int]:
    """All l such that g contains a cycle of length l."""
    n, adj = g.n, g.adj
    found: set[int] = set()
    for s in range(n):
        allowed = ((1 << n) - 1) & ~((1 << s) - 1)
        table: dict[int, int] = {1 << s: 1 << s}
        for mask in sorted_masks(allowed, s):
            ends = table.get(mask, 0)
            if not ends:
                continue
            size = mask.bit_count()
            if size >= 3 and ends & adj[s]:
                found.add(size)
            for v in bits(ends):
                for u in bits(adj[v] & allowed & ~mask):
                    nxt = mask | 1 << u
                    table[nxt] = table.get(nxt, 0) | 1 << u
    return found


def sorted_masks(allowed: int, s: int) -> Iterator[int]:
    """Masks inside ``allowed`` that contain ``s``, in increasing numeric order."""
    free = allowed & ~(1 << s)
    positions = list(bits(free))
    for k in range(1 << len(positions)):
        mask = 1 << s
        for i, p in enumerate(positions):
            if k >> i & 1:
                mask |= 1 << p
        yield mask


def hamiltonian_cycles(g: Graph) -> list[int]:
    """Edge sets of all Hamilton cycles, each as a bitmask over ``g.edges()`` order."""
    n = g.n
    if n < 3:
        return []
    edge_index = {e: i for i, e in enumerate(g.edges())}

    def eid(u: int, v: int) -> int:
        return 1 << edge_index[(u, v) if u < v else (v, u)]

    cycles: set[int] = set()
    path = [0]

    def extend(v: int, visited: int, used: int) -> None:
        if visited == g.full_mask:
            if g.adj[v] & 1:
                cycles.add(used | eid(v, 0))
            return
        for u in bits(g.adj[v] & ~visited):
            path.append(u)
            extend(u, visited | 1 << u, used | eid(v, u))
            path.pop()

    extend(0, 1, 0)
    return sorted(cycles)


def _is_linear_forest(edges: list[tuple[int, int]], n: int) -> bool:
    degree = [0] * n
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        degree[u] += 1
        degree[v] += 1
        if degree[u] > 2 or degree[v] > 2:
            return False
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def is_k_edge_hamiltonian(g: Graph, k: int) -> bool:
    cycles = hamiltonian_cycles(g)
    if not cycles:
        return False
    edges = g.edges()
    for size in range(1, k + 1):
        for chosen in combinations(range(len(edges)), size):
            subset = [edges[i] for i in chosen]
            if not _is_linear_forest(subset, g.n):
                continue
            mask = sum(1 << i for i in chosen)
            if not any(c & mask == mask for c in cycles):
                return False
    return True


def is_k_hamiltonian(g: Graph, k: int) -> bool:
    for size in range(0, k + 1):
        for removed in combinations(range(g.n), size):
            if not is_hamiltonian(g.remove_vertices(sum(1 << v for v in removed))):
                return False
    return True


def has_k_factor(g: Graph, k: int) -> bool:
    """Whether g has a spanning k-regular subgraph."""
    n = g.n
    if k == 0:
        return True
    if any(d < k for d in g.degrees()) or (n * k) % 2:
        return False
    need = [k] * n

    def place(v: int) -> bool:
        if v == n:
            return True
        if need[v] == 0:
            return place(v + 1)
        options = [u for u in bits(g.adj[v]) if u > v and need[u] > 0]
        if len(options) < need[v]:
            return False
        for chosen in combinations(options, need[v]):
            for u in chosen:
                need[u] -= 1
            saved, need[v] = need[v], 0
            if place(v + 1):
                return True
            need[v] = saved
            for u in chosen:
                need[u] += 1
        return False

    return place(0)


# ---------------------------------------------------------------------------
# property ids

_Param = Fraction | int | None


@dataclass(frozen=True)
class _PropertyKind:
    name: str
    param: str | None  # "int" | "rational" | None
    increasing: bool
    scale: str  # which ScaleLimits field bounds it
    test: Callable[[Graph, _Param], bool]


def _ham(g: Graph, _: _Param) -> bool:
    return is_hamiltonian(g)


_KINDS: dict[str, _PropertyKind] = {
    kind.name: kind
    for kind in [
        _PropertyKind("hamiltonian", None, True, "cycles", _ham),
        _PropertyKind("traceable", None, True, "cycles", lambda g, _: is_traceable(g)),
        _PropertyKind("k_connected", "int", True, "subsets", lambda g, k: vertex_connectivity(g) >= k),
        _PropertyKind(
            "k_edge_connected", "int", True, "subsets", lambda g, k: g.n >= 2 and edge_connectivity(g) >= k
        ),
        _PropertyKind("b_binding", "rational", True, "subsets", lambda g, b: binding_number(g)[0] >= b),
        _PropertyKind("t_tough", "rational", True, "subsets", lambda g, t: toughness(g)[0] >= t),
        _PropertyKind("beta_deficient", "int", True, "subsets", lambda g, b: deficiency(g) <= b),
        _PropertyKind("has_2_factor", None, True, "subsets", lambda g, _: has_k_factor(g, 2)),
        _PropertyKind("has_k_factor", "int", True, "subsets", lambda g, k: has_k_factor(g, k)),
        _PropertyKind("k_hamiltonian", "int", True, "cycles", lambda g, k: is_k_hamiltonian(g, k)),
        _PropertyKind(
            "k_path_coverable", "int", True, "partitions", lambda g, k: g.n == 0 or min_path_cover(g) <= k
        ),
        _PropertyKind(
            "hamiltonian_connected", None, True, "cycles", lambda g, _: is_hamiltonian_connected(g)
        ),
        _PropertyKind(
            "k_edge_hamiltonian", "int", True, "cycles", lambda g, k: is_k_edge_hamiltonian(g, k)
        ),
        _PropertyKind(
            "pancyclic",
            None,
            True,
            "cycles",
            lambda g, _: g.n >= 3 and cycle_lengths(g) >= set(range(3, g.n + 1)),
        ),
        _PropertyKind("alpha_le", "int", True, "subsets", lambda g, k: independence_number(g) <= k),
        _PropertyKind("alpha_ge", "int", False, "subsets", lambda g, k: independence_number(g) >= k),
        _PropertyKind("omega_ge", "int", True, "subsets", lambda g, k: clique_number(g) >= k),
        _PropertyKind("chi_le", "int", False, "partitions", lambda g, k: chromatic_number(g) <= k),
        _PropertyKind("chi_ge", "int", True, "partitions", lambda g, k: chromatic_number(g) >= k),
        _PropertyKind(
            "arboricity_le", "int", False, "partitions", lambda g, k: vertex_arboricity(g) <= k
        ),
    ]
}

_ALIASES = {
    "2_connected": ("k_connected", 2),
    "1_binding": ("b_binding", Fraction(1)),
    "1_tough": ("t_tough", Fraction(1)),
    "1_factor": ("has_k_factor", 1),
    "has_1_factor": ("has_k_factor", 1),
    "2_factor": ("has_2_factor", None),
}


@dataclass(frozen=True)
class PropertyId:
    """A graph property, optionally parametrized, or an implication ``p1 => p2``.

    An implication holds on G when G lacks ``premise`` or has ``conclusion``.
    """

    name: str
    param: _Param = None
    premise: PropertyId | None = None
    conclusion: PropertyId | None = None

    @classmethod
    def implies(cls, premise: PropertyId, conclusion: PropertyId) -> PropertyId:
        return cls("implies", None, premise, conclusion)

    @property
    def is_implication(self) -> bool:
        return self.name == "implies"

    @property
    def increasing(self) -> bool:
        if self.is_implication:
            return True
        return _KINDS[self.name].increasing

    @property
    def scale(self) -> str:
        if self.is_implication:
            a, b = self.premise.scale, self.conclusion.scale
            order = ["subsets", "cycles", "partitions"]
            return max(a, b, key=order.index)
        return _KINDS[self.name].scale

    def holds(self, g: Graph) -> bool:
        if self.is_implication:
            return not self.premise.holds(g) or self.conclusion.holds(g)
        return _KINDS[self.name].test(g, self.param)

    def __str__(self) -> str:
        if self.is_implication:
            return f"{self.premise}=>{self.conclusion}"
        if self.param is None:
            return self.name
        return f"{self.name}({self.param})"


def parse_property(text: str) -> PropertyId:
    """Parse ``hamiltonian``, ``k_connected(2)``, ``t_tough:3/2`` or ``traceable=>hamiltonian``."""
    text = text.strip()
    if "=>" in text:
        left, right = text.split("=>", 1)
        return PropertyId.implies(parse_property(left), parse_property(right))
    m = re.fullmatch(r"([a-z0-9_]+)(?:\((.+)\)|:(.+))?", text)
    if m is None:
        raise ParseError(f"malformed property {text!r}")
    name, raw = m.group(1), m.group(2) or m.group(3)
    if name in _ALIASES and raw is None:
        name, param = _ALIASES[name]
        return PropertyId(name, param)
    if name not in _KINDS:
        raise ParseError(f"unknown property {name!r}")
    kind = _KINDS[name]
    if kind.param is None:
        if raw is not None:
            raise ParseError(f"property {name} takes no parameter")
        return PropertyId(name)
    if raw is None:
        raise ParseError(f"property {name} needs a parameter")
    value = parse_rational(raw)
    if kind.param == "int":
        if value.denominator != 1:
            raise ParseError(f"property {name} needs an integer parameter")
        return PropertyId(name, int(value))
    return PropertyId(name, value)


def parse_rational(text: str) -> Fraction:
    """``"3/2"`` or ``"2"``; decimals are rejected to avoid silent rounding."""
    text = text.strip()
    if not re.fullmatch(r"-?\d+(?:/\d+)?", text):
        raise ParseError(f"expected an integer or p/q rational, got {text!r}")
    return Fraction(text)


def known_properties() -> list[str]:
    return sorted(_KINDS)


# ---------------------------------------------------------------------------
# realizations and forcibly


def _limit_for(prop: PropertyId, limits: ScaleLimits) -> int:
    return getattr(limits, prop.scale)


def has_property(prop: PropertyId, g: Graph, limits: ScaleLimits | None = None, override: bool = False) -> bool:
    limits = limits or ScaleLimits()
    limit = _limit_for(prop, limits)
    if g.n > limit and not override:
        raise ScaleExceeded(f"{prop} oracle limited to n <= {limit}, got n = {g.n}")
    return prop.holds(g)


def _check_scale(seq: DegreeSequence, limits: ScaleLimits | None, max_n: int | None) -> None:
    # the size guard comes first: it is cheap and independent of the degrees
    limit = max_n if max_n is not None else (limits or ScaleLimits()).realizations
    if seq.n > limit:
        raise ScaleExceeded(f"realization enumeration limited to n <= {limit}, got n = {seq.n}")
    if not is_graphical(seq):
        raise NotGraphical(str(seq))


def _multiset_permutations(values: list[int]) -> Iterator[tuple[int, ...]]:
    counts = Counter(values)
    keys = sorted(counts)
    out: list[int] = []

    def rec() -> Iterator[tuple[int, ...]]:
        if len(out) == len(values):
            yield tuple(out)
            return
        for key in keys:
            if counts[key]:
                counts[key] -= 1
                out.append(key)
                yield from rec()
                out.pop()
                counts[key] += 1

    yield from rec()


def realizations_with_labels(degrees: tuple[int, ...]) -> Iterator[Graph]:
    """Every graph in which vertex v has degree ``degrees[v]``.

    Vertex v picks its remaining neighbours among later vertices; the
    residual demand on later vertices must stay graphical, so every branch
    ends in a realization.
    """
    n = len(degrees)
    need = list(degrees)
    adj = [0] * n

    def walk(v: int) -> Iterator[Graph]:
        if v == n:
            yield Graph(n, tuple(adj))
            return
        candidates = [u for u in range(v + 1, n) if need[u] > 0]
        for chosen in combinations(candidates, need[v]):
            for u in chosen:
                need[u] -= 1
                adj[v] |= 1 << u
                adj[u] |= 1 << v
            if is_graphical(need[v + 1 :]):
                saved, need[v] = need[v], 0
                yield from walk(v + 1)
                need[v] = saved
            for u in chosen:
                need[u] += 1
                adj[v] &= ~(1 << u)
                adj[u] &= ~(1 << v)

    if is_graphical(degrees):
        yield from walk(0)


def enumerate_realizations(
    seq: DegreeSequence, limits: ScaleLimits | None = None, max_n: int | None = None
) -> Iterator[Graph]:
    """Every labeled graph on ``0..n-1`` whose sorted degrees equal ``seq``.

    Degree assignments are visited in lexicographic order, then graphs per
    assignment in backtracking order.
    """
    _check_scale(seq, limits, max_n)
    for labels in _multiset_permutations(list(seq.degrees)):
        yield from realizations_with_labels(labels)


@dataclass(frozen=True)
class ForcedResult:
    holds: bool
    counterexample: Graph | None
    checked: int

    def __bool__(self) -> bool:
        return self.holds


def forcibly(
    prop: PropertyId,
    seq: DegreeSequence,
    limits: ScaleLimits | None = None,
    max_n: int | None = None,
) -> ForcedResult:
    """Whether every realization of ``seq`` has ``prop``.

    Properties are isomorphism invariant, so only the realizations whose
    vertex degrees are already sorted are visited. The counterexample is the
    first failing one in backtracking order.
    """
    limits = limits or ScaleLimits()
    _check_scale(seq, limits, max_n)
    checked = 0
    for g in realizations_with_labels(seq.degrees):
        checked += 1
        if not prop.holds(g):
            return ForcedResult(False, g, checked)
    return ForcedResult(True, None, checked)


def conditionally_forcibly(
    premise: PropertyId,
    conclusion: PropertyId,
    seq: DegreeSequence,
    limits: ScaleLimits | None = None,
    max_n: int | None = None,
) -> ForcedResult:
    """Whether every realization with ``premise`` also has ``conclusion``."""
    return forcibly(PropertyId.implies(premise, conclusion), seq, limits, max_n)
