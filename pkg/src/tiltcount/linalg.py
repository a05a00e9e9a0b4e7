"""Exact rank and nullspace over the rationals."""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm


def _integer_row(row):
    den = 1
    for x in row:
        if isinstance(x, Fraction):
            den = lcm(den, x.denominator)
    return [int(x * den) for x in row]


def rank(rows) -> int:
    """Rank of a matrix with int or Fraction entries, by fraction-free elimination."""
    work = [r for r in (_integer_row(row) for row in rows) if any(r)]
    if not work:
        return 0
    ncols = len(work[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(work)) if work[i][c]), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        p = work[r]
        pc = p[c]
        for i in range(r + 1, len(work)):
            row = work[i]
            f = row[c]
            if not f:
                continue
            new = [pc * a - f * b for a, b in zip(row, p)]
            g = 0
            for x in new:
                if x:
                    g = gcd(g, x)
                    if g == 1:
                        break
            if g > 1:
                new = [x // g for x in new]
            work[i] = new
        r += 1
        if r == len(work):
            break
    return r


def rref(rows):
    """Reduced row echelon form over Fraction; returns (matrix, pivot columns)."""
    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def nullspace(rows, ncols: int) -> list:
    """Integer basis (primitive vectors) of {x : rows . x = 0}."""
    if not rows:
        return [[int(i == j) for j in range(ncols)] for i in range(ncols)]
    m, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for i, p in enumerate(pivots):
            vec[p] = -m[i][f]
        ints = _integer_row(vec)
        g = 0
        for x in ints:
            g = gcd(g, x)
        basis.append([x // g for x in ints])
    return basis


def matmul(a, b, inner: int | None = None):
    """Product of an (r x k) and a (k x c) matrix given as lists of rows."""
    if not a or not b:
        rows = len(a)
        cols = len(b[0]) if b else 0
        return [[0] * cols for _ in range(rows)]
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def identity(n: int):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def inverse(a):
    n = len(a)
    m, piv = rref([list(row) + identity(n)[i] for i, row in enumerate(a)])
    if piv[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in m]
