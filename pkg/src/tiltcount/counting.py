"""Two-term tilting counts by summing tilting counts of Q_eps over sign maps.

For a sign map eps the quiver Q_eps keeps one arrow per edge whose ends
carry opposite signs, oriented from + to -.  The count is finite exactly when
every Q_eps is a disjoint union of Dynkin quivers, and then equals the sum of
their tilting counts.  Flipping every sign reverses Q_eps, which leaves the
tilting count unchanged, so only the sign maps that put the first declared
vertex at + are visited and the sum is doubled.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .dynkin import component_tilt_count, dynkin_tilt_count, tree_type_from_adjacency
from .graph import (
    Graph,
    InputError,
    Quiver,
    RefusedError,
    SignAssignment,
    bipartite_subquiver,
    connected_components,
    double_quiver,
    strip_loops,
)

COUNT_VERTEX_CAP = 34
PER_EPS_VERTEX_CAP = 24


@dataclass(frozen=True)
class EpsWitness:
    """A sign map whose Q_eps has a non-Dynkin component."""

    eps: SignAssignment
    component: Quiver

    def to_dict(self):
        return {"eps": str(self.eps), "component": self.component.to_dict()}


@dataclass(frozen=True)
class CountResult:
    count: int | None
    witness: EpsWitness | None = None
    per_eps: tuple | None = None
    loops: dict = field(default_factory=dict)
    connected: bool = True

    @property
    def is_finite(self) -> bool:
        return self.count is not None

    def to_dict(self):
        out = {
            "verdict": "finite" if self.is_finite else "infinite",
            "count": None if self.count is None else str(self.count),
            "witness": None if self.witness is None else self.witness.to_dict(),
            "meta": {
                "loops": {str(v): k for v, k in self.loops.items()},
                "connected": self.connected,
            },
        }
        if self.per_eps is not None:
            out["per_eps"] = [[str(e), None if c is None else str(c)] for e, c in self.per_eps]
        return out


def tilt_count_for_eps(g: Graph, eps) -> int | None:
    """Product of component tilting counts of Q_eps, or None if some component is not Dynkin."""
    q = bipartite_subquiver(double_quiver(strip_loops(g)), eps)
    total = 1
    for comp in connected_components(q):
        c = component_tilt_count(comp)
        if c is None:
            return None
        total *= c
    return total


def _eps_kernel(n, edges, mask):
    """(count, None) or (None, bad component vertex indices) for one sign mask."""
    neg = [(mask >> (n - 1 - k)) & 1 for k in range(n)]
    adj = [[] for _ in range(n)]
    for i, j in edges:
        if neg[i] != neg[j]:
            adj[i].append(j)
            adj[j].append(i)
    seen = [False] * n
    total = 1
    for s in range(n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        k = 0
        while k < len(comp):
            for w in adj[comp[k]]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
            k += 1
        size = len(comp)
        if size == 1:
            continue
        degsum = sum(len(adj[v]) for v in comp)
        # parallel arrows or a cycle both push the arrow count past size - 1
        if degsum != 2 * (size - 1) or any(len(set(adj[v])) != len(adj[v]) for v in comp):
            return None, comp
        if all(len(adj[v]) <= 2 for v in comp):
            total *= _catalan(size)
            continue
        t = tree_type_from_adjacency(comp, {v: adj[v] for v in comp})
        if t is None:
            return None, comp
        total *= dynkin_tilt_count(t)
    return total, None


_CATALAN = [1]


def _catalan(n):
    while len(_CATALAN) <= n:
        m = len(_CATALAN)
        _CATALAN.append(_CATALAN[-1] * 2 * (2 * m - 1) // (m + 1))
    return _CATALAN[n]


def _scan(n, edges, start, stop, keep_rows):
    """Sum over masks in [start, stop); stops at the first failure unless keeping rows."""
    total = 0
    rows = [] if keep_rows else None
    bad = None
    for mask in range(start, stop):
        c, comp = _eps_kernel(n, edges, mask)
        if keep_rows:
            rows.append(c)
        if c is None:
            if bad is None:
                bad = (mask, comp)
            if not keep_rows:
                break
        else:
            total += c
    return total, bad, rows


def _index_edges(g: Graph):
    idx = g.index()
    return [(idx[u], idx[v]) for u, v in g.edges]


def _chunks(start, stop, parts):
    parts = max(1, min(parts, stop - start))
    step, extra = divmod(stop - start, parts)
    out, lo = [], start
    for p in range(parts):
        hi = lo + step + (p < extra)
        out.append((lo, hi))
        lo = hi
    return out


def _run(g: Graph, start: int, stop: int, keep_rows: bool, threads: int):
    n = len(g.vertices)
    edges = _index_edges(g)
    if threads <= 1 or stop - start < 1024:
        return _scan(n, edges, start, stop, keep_rows)
    chunks = _chunks(start, stop, threads * 4)
    with ProcessPoolExecutor(max_workers=threads) as pool:
        results = list(pool.map(_scan, *zip(*[(n, edges, lo, hi, keep_rows) for lo, hi in chunks])))
    total, bad, rows = 0, None, [] if keep_rows else None
    for t, b, r in results:  # chunk order, so the first failure is the smallest mask
        total += t
        if b is not None and bad is None:
            bad = b
        if keep_rows:
            rows.extend(r)
    return total, bad, rows


def _witness(g: Graph, mask: int, comp_idx) -> EpsWitness:
    eps = SignAssignment.from_mask(g.vertices, mask)
    q = bipartite_subquiver(double_quiver(g), eps)
    members = {g.vertices[i] for i in comp_idx}
    comp = next(c for c in connected_components(q) if members <= set(c.vertices))
    return EpsWitness(eps, comp)


def default_threads() -> int:
    try:
        return max(1, int(os.environ.get("TILTCOUNT_THREADS", "1")))
    except ValueError:
        return 1


def partial_sum(g: Graph, start: int, stop: int):
    """Exact sum over sign masks in [start, stop) plus the first failing mask, if any."""
    total, bad, _ = _scan(len(g.vertices), _index_edges(strip_loops(g)), start, stop, False)
    return total, None if bad is None else bad[0]


def count_two_term_tilting(g: Graph, per_eps: bool = False, threads: int | None = None) -> CountResult:
    if not g.vertices:
        raise InputError("graph has no vertices")
    n = len(g.vertices)
    threads = default_threads() if threads is None else threads
    bare = strip_loops(g)
    meta = dict(loops=dict(g.loops), connected=g.is_connected())
    if per_eps:
        if n > PER_EPS_VERTEX_CAP:
            raise RefusedError(f"per-eps breakdown is capped at {PER_EPS_VERTEX_CAP} vertices")
        total, bad, rows = _run(bare, 0, 1 << n, True, threads)
        table = tuple((SignAssignment.from_mask(g.vertices, m), c) for m, c in enumerate(rows))
        if bad is not None:
            return CountResult(None, _witness(bare, *bad), table, **meta)
        return CountResult(total, None, table, **meta)
    if n > COUNT_VERTEX_CAP:
        raise RefusedError(
            f"enumeration is capped at {COUNT_VERTEX_CAP} vertices; "
            "use classify and the closed forms instead"
        )
    # masks below 2^(n-1) are exactly those with the first vertex at +
    total, bad, _ = _run(bare, 0, 1 << (n - 1), False, threads)
    if bad is not None:
        return CountResult(None, _witness(bare, *bad), **meta)
    return CountResult(2 * total, **meta)


def per_eps_breakdown(g: Graph, threads: int | None = None) -> list:
    """Every sign map with its count (None when Q_eps is not Dynkin), in mask order."""
    if len(g.vertices) > PER_EPS_VERTEX_CAP:
        raise RefusedError(f"per-eps breakdown is capped at {PER_EPS_VERTEX_CAP} vertices")
    threads = default_threads() if threads is None else threads
    _, _, rows = _run(strip_loops(g), 0, 1 << len(g.vertices), True, threads)
    return [(SignAssignment.from_mask(g.vertices, m), c) for m, c in enumerate(rows)]
