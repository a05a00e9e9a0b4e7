"""Tilting modules over Dynkin path algebras, counted from representations.

Indecomposables are produced from the projectives by repeatedly applying
the Coxeter functor (a composite of source reflection functors), with
explicit integer matrices.  Hom spaces are solution spaces of the
commutativity conditions, solved exactly.  Over a hereditary algebra
dim Ext^1(X, Y) = dim Hom(X, Y) - <dim X, dim Y>, and a basic tilting module
is a set of pairwise Ext-orthogonal indecomposables of size equal to the
number of vertices, so the count is a clique count in the compatibility
graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .closed_forms import d_graph, e_graph, path_graph
from .dynkin import DynkinType, recognize_dynkin
from .graph import Graph, InputError, Quiver, RefusedError
from .linalg import identity, inverse, matmul, nullspace, rank

ORACLE_RANK_CAP = 8
DEFAULT_RANK_LIMIT = 6


@dataclass(frozen=True)
class OrientedQuiver:
    quiver: Quiver
    dynkin_type: DynkinType

    @classmethod
    def from_quiver(cls, q: Quiver) -> "OrientedQuiver":
        if not q.vertices:
            raise InputError("empty quiver")
        if any(s == t for s, t in q.arrows):
            raise InputError("quiver has a loop")
        try:
            t = recognize_dynkin(q.underlying_graph())
        except InputError:
            raise InputError("quiver is not connected") from None
        if t is None:
            raise InputError("underlying graph is not Dynkin")
        # a tree orientation has no oriented cycle, so acyclicity is automatic
        return cls(q, t)

    @property
    def vertices(self):
        return self.quiver.vertices

    @property
    def arrows(self):
        return self.quiver.arrows

    def __len__(self):
        return len(self.quiver.vertices)


@dataclass(frozen=True)
class Rep:
    """Dimension vector (by vertex position) and one matrix per arrow (by arrow position).

    The matrix of an arrow s -> t has dim(t) rows and dim(s) columns.
    """

    quiver: Quiver
    dim: tuple
    mats: tuple

    def __post_init__(self):
        idx = {v: i for i, v in enumerate(self.quiver.vertices)}
        if len(self.dim) != len(idx) or len(self.mats) != len(self.quiver.arrows):
            raise InputError("representation does not match its quiver")
        for (s, t), m in zip(self.quiver.arrows, self.mats):
            rows, cols = self.dim[idx[t]], self.dim[idx[s]]
            if len(m) != rows or any(len(r) != cols for r in m):
                raise InputError(f"matrix for {s}->{t} has the wrong shape")

    def is_zero(self) -> bool:
        return not any(self.dim)


def _zeros(r, c):
    return [[0] * c for _ in range(r)]


def _mul(a, b, r, k, c):
    """(r x k) @ (k x c) with explicit shapes, tolerant of empty dimensions."""
    if r == 0 or c == 0 or k == 0:
        return _zeros(r, c)
    return matmul(a, b)


def projective(q: Quiver, i) -> Rep:
    """The indecomposable projective at ``i``: basis of P(j) is the set of paths i -> j."""
    idx = {v: k for k, v in enumerate(q.vertices)}
    out = {v: [] for v in q.vertices}
    for k, (s, t) in enumerate(q.arrows):
        out[s].append((k, t))
    paths = {v: [] for v in q.vertices}
    todo = [(i, ())]
    while todo:
        v, p = todo.pop()
        paths[v].append(p)
        if len(p) > len(q.arrows):
            raise InputError("quiver has an oriented cycle")
        for k, t in out[v]:
            todo.append((t, p + (k,)))
    for v in paths:
        paths[v].sort()
    dim = tuple(len(paths[v]) for v in q.vertices)
    mats = []
    for k, (s, t) in enumerate(q.arrows):
        m = _zeros(dim[idx[t]], dim[idx[s]])
        for col, p in enumerate(paths[s]):
            m[paths[t].index(p + (k,))][col] = 1
        mats.append(m)
    return Rep(q, dim, tuple(mats))


def reflect_at_source(rep: Rep, k) -> Rep:
    """Source reflection functor at ``k``: the new space there is the cokernel of V_k -> sum V_t."""
    q = rep.quiver
    idx = {v: i for i, v in enumerate(q.vertices)}
    if any(t == k for _, t in q.arrows):
        raise InputError(f"{k} is not a source")
    outgoing = [a for a, (s, _) in enumerate(q.arrows) if s == k]
    dk = rep.dim[idx[k]]
    blocks = [rep.dim[idx[q.arrows[a][1]]] for a in outgoing]
    total = sum(blocks)
    stacked = [row for a in outgoing for row in rep.mats[a]]  # total x dk
    transposed = [[stacked[r][c] for r in range(total)] for c in range(dk)]
    coker = nullspace(transposed, total)  # rows y with y . stacked = 0
    c = len(coker)
    arrows = list(q.arrows)
    mats = list(rep.mats)
    offset = 0
    for a, width in zip(outgoing, blocks):
        arrows[a] = (q.arrows[a][1], k)
        mats[a] = [row[offset: offset + width] for row in coker] if c else []
        offset += width
    dim = list(rep.dim)
    dim[idx[k]] = c
    return Rep(Quiver(q.vertices, tuple(arrows)), tuple(dim), tuple(mats))


def source_order(q: Quiver) -> list:
    """Vertices in an order where every arrow points forward (sources first)."""
    indeg = {v: 0 for v in q.vertices}
    for _, t in q.arrows:
        indeg[t] += 1
    order = []
    ready = [v for v in q.vertices if indeg[v] == 0]
    while ready:
        v = ready.pop(0)
        order.append(v)
        for s, t in q.arrows:
            if s == v:
                indeg[t] -= 1
                if indeg[t] == 0:
                    ready.append(t)
    if len(order) != len(q.vertices):
        raise InputError("quiver has an oriented cycle")
    return order


def coxeter_minus(rep: Rep) -> Rep:
    """Inverse Auslander-Reiten translate via source reflections along an admissible order."""
    for k in source_order(rep.quiver):
        rep = reflect_at_source(rep, k)
    return rep


def positive_roots(g: Graph) -> list:
    """Positive roots of a simply-laced diagram, from simple reflections of the Cartan form."""
    idx = g.index()
    n = len(g.vertices)
    cartan = [[2 * (i == j) for j in range(n)] for i in range(n)]
    for u, v in g.edges:
        cartan[idx[u]][idx[v]] -= 1
        cartan[idx[v]][idx[u]] -= 1
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    seen = set(simple)
    todo = list(simple)
    while todo:
        x = todo.pop()
        for i in range(n):
            pair = sum(cartan[i][j] * x[j] for j in range(n))
            y = tuple(x[j] - pair * (j == i) for j in range(n))
            if all(c >= 0 for c in y) and any(y) and y not in seen:
                seen.add(y)
                todo.append(y)
    return sorted(seen)


_EXPECTED_INDECOMPOSABLES = {"A": lambda n: n * (n + 1) // 2, "D": lambda n: n * (n - 1),
                             "E": lambda n: {6: 36, 7: 63, 8: 120}[n]}


def indecomposables(oq: OrientedQuiver) -> list:
    """One representation per positive root: the orbits of the projectives under the Coxeter functor."""
    q = oq.quiver
    found = []
    for v in q.vertices:
        x = projective(q, v)
        for _ in range(4 * len(q.vertices) + 4):
            if x.is_zero():
                break
            found.append(x)
            x = coxeter_minus(x)
            assert x.quiver.arrows == q.arrows
        else:
            raise AssertionError("Coxeter orbit did not terminate")
    t = oq.dynkin_type
    expected = _EXPECTED_INDECOMPOSABLES[t.family](t.rank)
    assert len(found) == expected, (len(found), expected)
    dims = sorted(x.dim for x in found)
    assert dims == positive_roots(q.underlying_graph()), "dimension vectors are not the positive roots"
    return found


def euler_form(q: Quiver, x, y) -> int:
    idx = {v: i for i, v in enumerate(q.vertices)}
    return sum(a * b for a, b in zip(x, y)) - sum(x[idx[s]] * y[idx[t]] for s, t in q.arrows)


def hom_dim(x: Rep, y: Rep) -> int:
    """Dimension of the space of representation morphisms x -> y."""
    q = x.quiver
    if y.quiver != q:
        raise InputError("representations live on different quivers")
    idx = {v: i for i, v in enumerate(q.vertices)}
    offsets = []
    nvars = 0
    for i in range(len(q.vertices)):
        offsets.append(nvars)
        nvars += x.dim[i] * y.dim[i]
    if nvars == 0:
        return 0

    def var(i, p, r):  # entry (p, r) of the map at vertex i, shape y_i x x_i
        return offsets[i] + p * x.dim[i] + r

    rows = []
    for a, (s, t) in enumerate(q.arrows):
        si, ti = idx[s], idx[t]
        xa, ya = x.mats[a], y.mats[a]
        for p in range(y.dim[ti]):
            for c in range(x.dim[si]):
                row = [0] * nvars
                # (f_t X_a)[p][c] - (Y_a f_s)[p][c]
                for r in range(x.dim[ti]):
                    if xa[r][c]:
                        row[var(ti, p, r)] += xa[r][c]
                for r in range(y.dim[si]):
                    if ya[p][r]:
                        row[var(si, r, c)] -= ya[p][r]
                if any(row):
                    rows.append(row)
    return nvars - rank(rows)


def ext_dim(x: Rep, y: Rep) -> int:
    e = hom_dim(x, y) - euler_form(x.quiver, x.dim, y.dim)
    if e < 0:
        raise AssertionError(f"negative Ext dimension {e}")
    return e


def change_basis(x: Rep, mats_by_vertex) -> Rep:
    """Isomorphic copy: each arrow map becomes g_t . X_a . g_s^-1."""
    q = x.quiver
    idx = {v: i for i, v in enumerate(q.vertices)}
    inv = [inverse(g) if len(g) else [] for g in mats_by_vertex]
    new = []
    for a, (s, t) in enumerate(q.arrows):
        ds, dt = x.dim[idx[s]], x.dim[idx[t]]
        m = _mul(mats_by_vertex[idx[t]], x.mats[a], dt, dt, ds)
        new.append(_mul(m, inv[idx[s]], dt, ds, ds))
    return Rep(q, x.dim, tuple(new))


def compatibility(reps) -> list:
    """Bitmask adjacency: bit j of entry i is set when Ext vanishes both ways."""
    n = len(reps)
    ext = [[ext_dim(a, b) for b in reps] for a in reps]
    for i in range(n):
        assert ext[i][i] == 0, "Dynkin indecomposables must be rigid"
    adj = [0] * n
    for i in range(n):
        for j in range(n):
            if i != j and ext[i][j] == 0 and ext[j][i] == 0:
                adj[i] |= 1 << j
    return adj


def count_cliques(adj, size: int) -> int:
    """Number of ``size``-element cliques, by ordered extension with a popcount bound."""
    n = len(adj)
    order = sorted(range(n), key=lambda v: bin(adj[v]).count("1"))
    pos = {v: k for k, v in enumerate(order)}
    later = [0] * n
    for v in range(n):
        mask = 0
        for w in range(n):
            if adj[v] >> w & 1 and pos[w] > pos[v]:
                mask |= 1 << w
        later[v] = mask

    def extend(cand, need):
        if need == 0:
            return 1
        if bin(cand).count("1") < need:
            return 0
        if need == 1:
            return bin(cand).count("1")
        total = 0
        rest = cand
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            # later[] fixes the order, so each clique is reached from its first member only
            total += extend(cand & later[v], need - 1)
        return total

    return sum(extend(later[v], size - 1) for v in range(n))


def count_tilting(oq: OrientedQuiver, allow_large: bool = False) -> int:
    n = len(oq)
    if n > ORACLE_RANK_CAP or (n > DEFAULT_RANK_LIMIT and not allow_large):
        raise RefusedError(f"oracle rank {n} needs allow_large (hard cap {ORACLE_RANK_CAP})")
    reps = indecomposables(oq)
    return count_cliques(compatibility(reps), n)


def dynkin_graph(t: DynkinType) -> Graph:
    if t.family == "A":
        return path_graph(t.rank)
    if t.family == "D":
        return d_graph(t.rank)
    return e_graph(t.rank)


def orient(g: Graph, bits: str | int) -> Quiver:
    """Orient the edges of ``g``: bit k (string index k) set reverses edge k."""
    m = len(g.edges)
    if isinstance(bits, str):
        if len(bits) != m or set(bits) - {"0", "1"}:
            raise InputError(f"orientation needs {m} bits of 0/1")
        flags = [c == "1" for c in bits]
    else:
        flags = [bool(bits >> k & 1) for k in range(m)]
    arrows = tuple((v, u) if f else (u, v) for (u, v), f in zip(g.edges, flags))
    return Quiver(g.vertices, arrows)


def all_orientations(g: Graph):
    for flags in product("01", repeat=len(g.edges)):
        yield "".join(flags), orient(g, "".join(flags))
