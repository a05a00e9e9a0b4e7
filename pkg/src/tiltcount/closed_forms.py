"""Closed-form two-term tilting counts for the finite families, and the family graphs."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .graph import Graph, InputError

E_COUNTS = {6: 1700, 7: 8872, 8: 54060}
II_COUNTS = {5: 632, 6: 2936, 7: 11306, 8: 75240}
SPORADIC_COUNTS = {"III": 3108, "IV": 4056, "V": 17328}


@dataclass(frozen=True)
class FamilyLabel:
    """A graph family from the finite list, or ``NotInList`` with a reason."""

    name: str
    n: int | None = None
    reason: str | None = None

    def __post_init__(self):
        n = self.n
        ok = {
            "A": n is not None and n >= 1,
            "D": n is not None and n >= 4,
            "E6": n is None, "E7": n is None, "E8": n is None,
            "AffineAOdd": n is not None and n >= 3 and n % 2 == 1,
            "I": n is not None and n >= 4,
            "II": n is not None and 5 <= n <= 8,
            "III": n is None, "IV": n is None, "V": n is None,
            "NotInList": True,
            "Composite": True,
        }.get(self.name)
        if not ok:
            raise InputError(f"invalid family label {self.name}({n})")

    @property
    def in_list(self) -> bool:
        return self.name not in ("NotInList", "Composite")

    def __str__(self):
        if self.name == "NotInList":
            return f"NotInList({self.reason})" if self.reason else "NotInList"
        return self.name if self.n is None else f"{self.name}({self.n})"


def binomial(n: int, k: int) -> int:
    if n < 0 or k < 0 or k > n:
        raise InputError(f"binomial({n}, {k}) needs 0 <= k <= n")
    k = min(k, n - k)
    out = 1
    for i in range(1, k + 1):
        out = out * (n - k + i) // i
    return out


def catalan(n: int) -> int:
    value = Fraction(binomial(2 * n, n), n + 1)
    assert value.denominator == 1
    return value.numerator


def a_n(n: int) -> int:
    return 6 * 4 ** (n - 2) - 2 * binomial(2 * (n - 2), n - 2)


def b_n(n: int) -> int:
    return (
        6 * 4 ** (n - 2)
        + 2 * binomial(2 * n, n)
        - 4 * binomial(2 * (n - 1), n - 1)
        - 6 * binomial(2 * (n - 2), n - 2)
    )


def closed_form(f: FamilyLabel) -> int:
    name, n = f.name, f.n
    if name == "A":
        return binomial(2 * n, n)
    if name == "D":
        return a_n(n)
    if name in ("E6", "E7", "E8"):
        return E_COUNTS[int(name[1])]
    if name == "AffineAOdd":
        return 2 ** (2 * n - 1)
    if name == "I":
        return b_n(n)
    if name == "II":
        return II_COUNTS[n]
    if name in SPORADIC_COUNTS:
        return SPORADIC_COUNTS[name]
    raise InputError(f"no closed form for {f}")


def _integral(x: Fraction) -> int:
    assert x.denominator == 1, f"non-integral term {x}"
    return x.numerator


def d_proof_expression(n: int) -> int:
    """Type D count assembled from the six sign-map classes fixed at the branch vertex."""
    if n < 4:
        raise InputError("type D needs n >= 4")
    terms = [
        Fraction(2 * binomial(2 * (n - 1), n - 1)),
        Fraction(-binomial(2 * (n - 2), n - 2)),
        Fraction(5 * binomial(2 * (n - 3), n - 3)),
        Fraction(3 * n - 4, n - 1) * binomial(2 * (n - 1), n - 2),
    ]
    for l in range(4, n):
        d_l = Fraction(3 * l - 4, 2 * l - 2) * binomial(2 * l - 2, l - 2)
        _integral(d_l)
        terms.append(d_l * binomial(2 * (n - l), n - l))
    return sum(_integral(t) for t in terms)


# graph constructors on vertices 1..n


def _graph(n, edges):
    return Graph(tuple(range(1, n + 1)), tuple(edges))


def path_graph(n: int) -> Graph:
    return _graph(n, [(i, i + 1) for i in range(1, n)])


def cycle_graph(n: int) -> Graph:
    if n < 2:
        raise InputError("a cycle needs at least 2 vertices")
    if n == 2:
        return _graph(2, [(1, 2), (1, 2)])
    return _graph(n, [(i, i + 1) for i in range(1, n)] + [(n, 1)])


def d_graph(n: int) -> Graph:
    return _graph(n, [(1, 3), (2, 3)] + [(i, i + 1) for i in range(3, n)])


def e_graph(n: int) -> Graph:
    if n not in (6, 7, 8):
        raise InputError("E needs rank 6, 7 or 8")
    return _graph(n, [(i, i + 1) for i in range(1, n - 1)] + [(3, n)])


def i_graph(n: int) -> Graph:
    return _graph(n, [(1, 2), (1, 3), (2, 3)] + [(i, i + 1) for i in range(3, n)])


def ii_graph(n: int) -> Graph:
    return _graph(n, [(1, 2), (1, 3), (2, 3), (2, 4), (3, 5)] + [(i, i + 1) for i in range(5, n)])


def iii_graph() -> Graph:
    return _graph(6, [(1, 2), (2, 3), (2, 5), (3, 4), (4, 6), (5, 6)])


def iv_graph() -> Graph:
    return _graph(6, [(1, 2), (2, 3), (2, 4), (3, 4), (3, 5), (4, 6)])


def v_graph() -> Graph:
    return _graph(7, [(1, 2), (1, 3), (2, 3), (2, 4), (3, 6), (4, 5), (6, 7)])


def family_graph(f: FamilyLabel) -> Graph:
    name, n = f.name, f.n
    builders = {
        "A": lambda: path_graph(n),
        "D": lambda: d_graph(n),
        "E6": lambda: e_graph(6),
        "E7": lambda: e_graph(7),
        "E8": lambda: e_graph(8),
        "AffineAOdd": lambda: cycle_graph(n),
        "I": lambda: i_graph(n),
        "II": lambda: ii_graph(n),
        "III": iii_graph,
        "IV": iv_graph,
        "V": v_graph,
    }
    if name not in builders:
        raise InputError(f"no graph for {f}")
    return builders[name]()


def family_vertex_count(f: FamilyLabel) -> int:
    return len(family_graph(f).vertices)


def parse_family(text: str) -> FamilyLabel:
    """Parse ``A7``, ``A(7)``, ``D5``, ``E6``, ``AffineAOdd5``, ``II6``, ``III`` and similar."""
    m = re.fullmatch(r"\s*(AffineAOdd|III|II|IV|V|I|A|D|E)\s*\(?\s*(\d*)\s*\)?\s*", text)
    if not m:
        raise InputError(f"unknown family {text!r}")
    name, num = m.group(1), m.group(2)
    if name == "E":
        if not num:
            raise InputError("E needs a rank")
        return FamilyLabel(f"E{num}")
    if name in ("III", "IV", "V"):
        if num:
            raise InputError(f"{name} takes no parameter")
        return FamilyLabel(name)
    if not num:
        raise InputError(f"{name} needs a parameter")
    return FamilyLabel(name, int(num))


def list_families(max_vertices: int = 12):
    """Every finite-list family instance with at most ``max_vertices`` vertices."""
    out = [FamilyLabel("A", n) for n in range(1, max_vertices + 1)]
    out += [FamilyLabel("D", n) for n in range(4, max_vertices + 1)]
    out += [FamilyLabel(f"E{n}") for n in (6, 7, 8) if n <= max_vertices]
    out += [FamilyLabel("AffineAOdd", n) for n in range(3, max_vertices + 1, 2)]
    out += [FamilyLabel("I", n) for n in range(4, max_vertices + 1)]
    out += [FamilyLabel("II", n) for n in range(5, min(8, max_vertices) + 1)]
    out += [FamilyLabel(name) for name, size in (("III", 6), ("IV", 6), ("V", 7)) if size <= max_vertices]
    return out
