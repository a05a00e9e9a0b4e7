"""Recognition of Dynkin and extended Dynkin graphs, and tilting counts for Dynkin quivers."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .graph import Graph, InputError, Quiver

E_TILT_COUNTS = {6: 418, 7: 2431, 8: 17342}

_E_ARMS = {(1, 2, 2): 6, (1, 2, 3): 7, (1, 2, 4): 8}
_E_TILDE_ARMS = {(2, 2, 2): 6, (1, 3, 3): 7, (1, 2, 5): 8}


@dataclass(frozen=True)
class DynkinType:
    family: str  # "A", "D" or "E"
    rank: int

    def __post_init__(self):
        ok = (
            (self.family == "A" and self.rank >= 1)
            or (self.family == "D" and self.rank >= 4)
            or (self.family == "E" and self.rank in (6, 7, 8))
        )
        if not ok:
            raise InputError(f"no Dynkin type {self.family}{self.rank}")

    def __str__(self):
        return f"{self.family}{self.rank}"


@dataclass(frozen=True)
class ExtendedDynkinType:
    family: str  # "A", "D" or "E"; the affine diagram has rank + 1 vertices
    rank: int

    def __post_init__(self):
        ok = (
            (self.family == "A" and self.rank >= 1)
            or (self.family == "D" and self.rank >= 4)
            or (self.family == "E" and self.rank in (6, 7, 8))
        )
        if not ok:
            raise InputError(f"no extended Dynkin type ~{self.family}{self.rank}")

    def __str__(self):
        return f"~{self.family}{self.rank}"


def parse_dynkin_type(text: str) -> DynkinType:
    text = text.strip().upper()
    try:
        return DynkinType(text[0], int(text[1:]))
    except (IndexError, ValueError):
        raise InputError(f"cannot parse Dynkin type {text!r}") from None


def _tree_profile(vertices, adj):
    """Degree-3+ vertices and, for a single branch vertex, its sorted arm lengths."""
    branch = [v for v in vertices if len(adj[v]) >= 3]
    if len(branch) != 1:
        return branch, None
    c = branch[0]
    arms = []
    for start in adj[c]:
        length, prev, cur = 1, c, start
        while len(adj[cur]) == 2:
            nxt = adj[cur][0] if adj[cur][1] == prev else adj[cur][1]
            prev, cur = cur, nxt
            length += 1
        if len(adj[cur]) != 1:
            return branch, None
        arms.append(length)
    return branch, tuple(sorted(arms))


def _classify_tree(vertices, adj):
    n = len(vertices)
    branch, arms = _tree_profile(vertices, adj)
    if not branch:
        return DynkinType("A", n)
    if arms is None or len(arms) != 3:
        return None
    if arms[0] == arms[1] == 1:
        return DynkinType("D", n) if n >= 4 else None
    rank = _E_ARMS.get(arms)
    return DynkinType("E", rank) if rank else None


def _check_connected(g: Graph):
    if not g.vertices or not g.is_connected():
        raise InputError("recognition needs a nonempty connected graph")


def recognize_dynkin(g: Graph):
    """DynkinType of a connected graph, or None."""
    _check_connected(g)
    if not g.is_simple() or len(g.edges) != len(g.vertices) - 1:
        return None
    return _classify_tree(g.vertices, g.adjacency())


def recognize_extended_dynkin(g: Graph):
    """ExtendedDynkinType of a connected graph, or None."""
    _check_connected(g)
    n, m = len(g.vertices), len(g.edges)
    adj = g.adjacency()
    if m == n:
        if all(len(adj[v]) == 2 for v in g.vertices):
            return ExtendedDynkinType("A", n - 1)
        return None
    if m != n - 1 or not g.is_simple():
        return None
    degs = {v: len(adj[v]) for v in g.vertices}
    big = [v for v in g.vertices if degs[v] >= 3]
    if len(big) == 1 and degs[big[0]] == 4:
        return ExtendedDynkinType("D", 4) if n == 5 else None
    if len(big) == 2 and all(degs[v] == 3 for v in big):
        if all(sum(degs[w] == 1 for w in adj[v]) >= 2 for v in big) and n >= 6:
            return ExtendedDynkinType("D", n - 1)
        return None
    if len(big) == 1 and degs[big[0]] == 3:
        _, arms = _tree_profile(g.vertices, adj)
        rank = _E_TILDE_ARMS.get(arms)
        return ExtendedDynkinType("E", rank) if rank else None
    return None


@lru_cache(maxsize=None)
def _tilt_count(family: str, n: int) -> int:
    if family == "A":
        value = Fraction(comb(2 * n, n), n + 1)
    elif family == "D":
        value = Fraction(3 * n - 4, 2 * n - 2) * comb(2 * n - 2, n - 2)
    else:
        return E_TILT_COUNTS[n]
    assert value.denominator == 1, (family, n, value)
    return value.numerator


def dynkin_tilt_count(t: DynkinType) -> int:
    """Number of basic tilting modules over the path algebra of a Dynkin quiver of type ``t``."""
    return _tilt_count(t.family, t.rank)


def component_tilt_count(q: Quiver):
    """Tilting count of a weakly connected quiver, or None when it is not Dynkin."""
    pairs = set()
    for s, t in q.arrows:
        key = frozenset((s, t))
        if s == t or key in pairs:
            return None
        pairs.add(key)
    if len(q.vertices) == 1:
        return 1
    t = recognize_dynkin(q.underlying_graph())
    return None if t is None else dynkin_tilt_count(t)


def tree_type_from_adjacency(vertices, adj):
    """Fast path for callers that already know the component is a simple tree."""
    return _classify_tree(vertices, adj)
