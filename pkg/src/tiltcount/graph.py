"""Graphs with loop counts, double quivers and sign-restricted subquivers.

A symmetric algebra with radical cube zero is presented by a loop-free
multigraph plus a number of loops at each vertex.  Loops never influence
any count, so they are carried as metadata and stripped before computing.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field, replace
from itertools import product
from typing import Hashable, Iterable, Mapping, Sequence

Vertex = Hashable
Edge = tuple  # (u, v)

SUBTREE_VERTEX_CAP = 16


class InputError(ValueError):
    """Malformed or out-of-contract input."""


class RefusedError(RuntimeError):
    """The request exceeds a size guard."""


@dataclass(frozen=True)
class Graph:
    vertices: tuple
    edges: tuple = ()
    loops: Mapping = field(default_factory=dict)

    def __post_init__(self):
        verts = tuple(self.vertices)
        if len(set(verts)) != len(verts):
            raise InputError("duplicate vertex identifiers")
        vset = set(verts)
        edges = []
        for e in self.edges:
            u, v = e
            if u not in vset or v not in vset:
                raise InputError(f"edge {u}--{v} uses an undeclared vertex")
            if u == v:
                raise InputError(f"edge {u}--{v} is a loop; use the loop map")
            edges.append((u, v))
        loops = {}
        for v, k in dict(self.loops).items():
            if v not in vset:
                raise InputError(f"loop at undeclared vertex {v}")
            if k < 0:
                raise InputError(f"negative loop count at {v}")
            if k:
                loops[v] = int(k)
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "edges", tuple(edges))
        object.__setattr__(self, "loops", loops)

    def __len__(self):
        return len(self.vertices)

    def index(self) -> dict:
        return {v: i for i, v in enumerate(self.vertices)}

    def adjacency(self) -> dict:
        """Neighbour lists, one entry per edge (parallel edges repeat)."""
        adj = {v: [] for v in self.vertices}
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def degree(self, v) -> int:
        return sum((u == v) + (w == v) for u, w in self.edges)

    def is_simple(self) -> bool:
        seen = set()
        for u, v in self.edges:
            key = frozenset((u, v))
            if key in seen:
                return False
            seen.add(key)
        return True

    def is_connected(self) -> bool:
        return len(graph_components(self)) <= 1

    def subgraph(self, vertices: Iterable, edges: Iterable | None = None) -> "Graph":
        """Subgraph on ``vertices``; induced unless ``edges`` is given."""
        keep = set(vertices)
        verts = tuple(v for v in self.vertices if v in keep)
        if edges is None:
            edges = [e for e in self.edges if e[0] in keep and e[1] in keep]
        return Graph(verts, tuple(edges))

    def relabel(self, mapping: Mapping) -> "Graph":
        return Graph(
            tuple(mapping[v] for v in self.vertices),
            tuple((mapping[u], mapping[v]) for u, v in self.edges),
            {mapping[v]: k for v, k in self.loops.items()},
        )

    def with_loops(self, loops: Mapping) -> "Graph":
        return replace(self, loops=dict(loops))

    def to_dict(self) -> dict:
        return {
            "vertices": [str(v) for v in self.vertices],
            "edges": [[str(u), str(v)] for u, v in self.edges],
            "loops": {str(v): k for v, k in self.loops.items()},
        }


@dataclass(frozen=True)
class Quiver:
    vertices: tuple
    arrows: tuple = ()

    def __post_init__(self):
        verts = tuple(self.vertices)
        vset = set(verts)
        arrows = tuple((s, t) for s, t in self.arrows)
        for s, t in arrows:
            if s not in vset or t not in vset:
                raise InputError(f"arrow {s}->{t} uses an undeclared vertex")
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "arrows", arrows)

    def opposite(self) -> "Quiver":
        return Quiver(self.vertices, tuple((t, s) for s, t in self.arrows))

    def underlying_graph(self) -> Graph:
        """Forget orientation; each arrow becomes one edge, loops are dropped."""
        return Graph(self.vertices, tuple((s, t) for s, t in self.arrows if s != t))

    def to_dict(self) -> dict:
        return {
            "vertices": [str(v) for v in self.vertices],
            "arrows": [[str(s), str(t)] for s, t in self.arrows],
        }


@dataclass(frozen=True)
class SignAssignment:
    """A total map from vertices to +1 / -1."""

    vertices: tuple
    signs: tuple

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "signs", tuple(self.signs))
        if len(self.vertices) != len(self.signs):
            raise InputError("sign assignment length mismatch")
        if any(s not in (1, -1) for s in self.signs):
            raise InputError("signs must be +1 or -1")

    @classmethod
    def from_mask(cls, vertices: Sequence, mask: int) -> "SignAssignment":
        # bit (n-1-k) set means vertex k is negative; mask 0 is all-plus
        n = len(vertices)
        return cls(vertices, tuple(-1 if mask >> (n - 1 - k) & 1 else 1 for k in range(n)))

    @classmethod
    def from_string(cls, vertices: Sequence, text: str) -> "SignAssignment":
        text = text.replace("−", "-")
        if len(text) != len(vertices) or set(text) - {"+", "-"}:
            raise InputError(f"bad sign string {text!r}")
        return cls(vertices, tuple(1 if c == "+" else -1 for c in text))

    @classmethod
    def from_mapping(cls, vertices: Sequence, mapping: Mapping) -> "SignAssignment":
        missing = [v for v in vertices if v not in mapping]
        if missing:
            raise InputError(f"sign assignment is not total: missing {missing}")
        signs = []
        for v in vertices:
            s = mapping[v]
            if s in ("+", "-"):
                s = 1 if s == "+" else -1
            signs.append(s)
        return cls(vertices, tuple(signs))

    def __getitem__(self, v) -> int:
        return self.signs[self.vertices.index(v)]

    def as_dict(self) -> dict:
        return dict(zip(self.vertices, self.signs))

    def mask(self) -> int:
        n = len(self.signs)
        return sum(1 << (n - 1 - k) for k, s in enumerate(self.signs) if s < 0)

    def negated(self) -> "SignAssignment":
        return SignAssignment(self.vertices, tuple(-s for s in self.signs))

    def __str__(self):
        return "".join("+" if s > 0 else "-" for s in self.signs)


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple  # of (vertex tuple, edge-id tuple)
    cut_vertices: frozenset


def double_quiver(g: Graph) -> Quiver:
    arrows = []
    for u, v in g.edges:
        arrows.append((u, v))
        arrows.append((v, u))
    return Quiver(g.vertices, tuple(arrows))


def bipartite_subquiver(q: Quiver, eps) -> Quiver:
    """Keep exactly the arrows running from a positive to a negative vertex."""
    if isinstance(eps, SignAssignment):
        if set(eps.vertices) != set(q.vertices):
            raise InputError("sign assignment must be defined on exactly the quiver's vertices")
        signs = eps.as_dict()
    else:
        signs = SignAssignment.from_mapping(q.vertices, eps).as_dict()
        if set(eps) - set(q.vertices):
            raise InputError("sign assignment has keys outside the quiver")
    arrows = tuple((s, t) for s, t in q.arrows if signs[s] > 0 and signs[t] < 0)
    return Quiver(q.vertices, arrows)


def _components(vertices, pairs):
    adj = {v: [] for v in vertices}
    for s, t in pairs:
        adj[s].append(t)
        adj[t].append(s)
    seen = set()
    comps = []
    for v in vertices:
        if v in seen:
            continue
        comp = []
        seen.add(v)
        todo = [v]
        while todo:
            x = todo.pop()
            comp.append(x)
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    todo.append(y)
        comps.append(set(comp))
    return comps


def connected_components(q: Quiver) -> list:
    """Weakly connected components, ordered by first declared vertex."""
    out = []
    for comp in _components(q.vertices, q.arrows):
        verts = tuple(v for v in q.vertices if v in comp)
        arrows = tuple(a for a in q.arrows if a[0] in comp)
        out.append(Quiver(verts, arrows))
    return out


def graph_components(g: Graph) -> list:
    out = []
    for comp in _components(g.vertices, g.edges):
        out.append(Graph(
            tuple(v for v in g.vertices if v in comp),
            tuple(e for e in g.edges if e[0] in comp),
            {v: k for v, k in g.loops.items() if v in comp},
        ))
    return out


def strip_loops(g: Graph) -> Graph:
    return Graph(g.vertices, g.edges, {})


def block_decomposition(g: Graph) -> BlockDecomposition:
    """Biconnected components of a multigraph (edges are tracked by index)."""
    adj = {v: [] for v in g.vertices}
    for eid, (u, v) in enumerate(g.edges):
        adj[u].append((v, eid))
        adj[v].append((u, eid))

    disc, low = {}, {}
    blocks, cuts = [], set()
    stack = []
    counter = 0
    for root in g.vertices:
        if root in disc:
            continue
        disc[root] = low[root] = counter
        counter += 1
        root_children = 0
        # frames: (vertex, edge id used to enter, neighbour iterator)
        frames = [(root, None, iter(adj[root]))]
        while frames:
            v, in_eid, it = frames[-1]
            advanced = False
            for w, eid in it:
                if eid == in_eid:
                    continue
                if w not in disc:
                    stack.append(eid)
                    disc[w] = low[w] = counter
                    counter += 1
                    frames.append((w, eid, iter(adj[w])))
                    if v == root:
                        root_children += 1
                    advanced = True
                    break
                if disc[w] < disc[v]:
                    stack.append(eid)
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            frames.pop()
            if not frames:
                break
            parent = frames[-1][0]
            low[parent] = min(low[parent], low[v])
            if low[v] >= disc[parent]:
                if parent != root:
                    cuts.add(parent)
                eids = []
                while True:
                    e = stack.pop()
                    eids.append(e)
                    if e == in_eid:
                        break
                verts = set()
                for e in eids:
                    verts.update(g.edges[e])
                blocks.append((tuple(x for x in g.vertices if x in verts), tuple(sorted(eids))))
        if root_children > 1:
            cuts.add(root)
    return BlockDecomposition(tuple(blocks), frozenset(cuts))


def _find_cycle(vertices, edge_list):
    """Some cycle (closed vertex walk without repetition) in a multigraph, or None."""
    adj = {v: [] for v in vertices}
    for eid, (u, v) in enumerate(edge_list):
        adj[u].append((v, eid))
        adj[v].append((u, eid))
    parent = {}
    for root in vertices:
        if root in parent:
            continue
        parent[root] = (None, None)
        todo = [root]
        while todo:
            v = todo.pop()
            for w, eid in adj[v]:
                if eid == parent[v][1]:
                    continue
                if w in parent:
                    # cycle: tree path v -> lca -> w plus edge eid
                    path_v = [v]
                    while parent[path_v[-1]][0] is not None:
                        path_v.append(parent[path_v[-1]][0])
                    path_w = [w]
                    while parent[path_w[-1]][0] is not None:
                        path_w.append(parent[path_w[-1]][0])
                    on_w = set(path_w)
                    i = 0
                    while path_v[i] not in on_w:
                        i += 1
                    lca = path_v[i]
                    j = path_w.index(lca)
                    return path_v[: i + 1] + list(reversed(path_w[:j]))
                parent[w] = (v, eid)
                todo.append(w)
    return None


def _cycle_edge_ids(cycle, edge_list, used=None):
    """Edge ids realising consecutive pairs of ``cycle``."""
    used = set() if used is None else set(used)
    ids = []
    for a, b in zip(cycle, cycle[1:] + cycle[:1]):
        for eid, (u, v) in enumerate(edge_list):
            if eid not in used and {u, v} == {a, b}:
                ids.append(eid)
                used.add(eid)
                break
    return ids


def _even_cycle_in_block(vertices, edges):
    if len(edges) == len(vertices):
        # the block is itself a cycle
        cyc = _find_cycle(vertices, edges)
        return cyc if len(cyc) % 2 == 0 else None
    cyc = _find_cycle(vertices, edges)
    on_cycle = set(cyc)
    cyc_ids = set(_cycle_edge_ids(cyc, edges))
    # an ear: an edge off the cycle leaving it at x, continued to another cycle vertex
    for eid, (u, v) in enumerate(edges):
        if eid in cyc_ids or (u not in on_cycle and v not in on_cycle):
            continue
        x, w = (u, v) if u in on_cycle else (v, u)
        if w in on_cycle:
            ear = [x, w]
        else:
            prev = {w: None}
            queue = deque([w])
            end = None
            while queue and end is None:
                a = queue.popleft()
                for e2, (p, r) in enumerate(edges):
                    if e2 == eid or a not in (p, r):
                        continue
                    b = r if p == a else p
                    if b == x or b in prev:
                        continue
                    prev[b] = a
                    if b in on_cycle:
                        end = b
                        break
                    queue.append(b)
            if end is None:
                continue
            path = [end]
            while path[-1] != w:
                path.append(prev[path[-1]])
            ear = [x] + list(reversed(path))
        y = ear[-1]
        i, j = cyc.index(x), cyc.index(y)
        n = len(cyc)
        arc1 = [cyc[(i + t) % n] for t in range((j - i) % n + 1)]
        arc2 = [cyc[(i - t) % n] for t in range((i - j) % n + 1)]
        ear_len = len(ear) - 1
        for arc in (arc1, arc2):
            if (len(arc) - 1 + ear_len) % 2 == 0:
                return arc + list(reversed(ear[1:-1]))
        return arc1 + list(reversed(arc2[1:-1]))
    return None


def has_even_cycle(g: Graph):
    """An even cycle of ``g`` as a vertex list, or None.

    A 2-cycle (double edge) is returned as ``[u, v]``.
    """
    bd = block_decomposition(g)
    for verts, eids in bd.blocks:
        if len(eids) == 1:
            continue
        edges = [g.edges[e] for e in eids]
        cyc = _even_cycle_in_block(list(verts), edges)
        if cyc is not None:
            return cyc
    return None


@dataclass(frozen=True)
class CycleStructure:
    kind: str  # "tree" | "unicyclic" | "other"
    cycle: tuple = ()
    pendant_trees: Mapping = field(default_factory=dict)  # cycle vertex -> Graph rooted there


def odd_cycle_structure(g: Graph) -> CycleStructure:
    if not g.is_connected():
        raise InputError("odd_cycle_structure needs a connected graph")
    if has_even_cycle(g) is not None:
        raise InputError("graph contains an even cycle")
    n, m = len(g.vertices), len(g.edges)
    if m == n - 1:
        return CycleStructure("tree")
    if m > n:
        return CycleStructure("other")
    cycle = tuple(_find_cycle(list(g.vertices), list(g.edges)))
    on_cycle = set(cycle)
    cycle_edges = set(frozenset(p) for p in zip(cycle, cycle[1:] + cycle[:1]))
    rest = Graph(g.vertices, tuple(e for e in g.edges if frozenset(e) not in cycle_edges))
    comps = {}
    for comp in graph_components(rest):
        root = next(v for v in comp.vertices if v in on_cycle)
        comps[root] = comp
    return CycleStructure("unicyclic", cycle, comps)


def enumerate_subtrees(g: Graph) -> list:
    """All subtrees as (vertex frozenset, edge-id frozenset); singletons included."""
    if len(g.vertices) > SUBTREE_VERTEX_CAP:
        raise RefusedError(f"subtree enumeration is capped at {SUBTREE_VERTEX_CAP} vertices")
    out = [(frozenset([v]), frozenset()) for v in g.vertices]
    edges = g.edges

    def grow(verts, chosen, forbidden):
        for eid, (u, v) in enumerate(edges):
            if eid in forbidden or eid in chosen:
                continue
            if (u in verts) != (v in verts):
                new = v if u in verts else u
                grow(verts | {new}, chosen | {eid}, forbidden)
                grow(verts, chosen, forbidden | {eid})
                return
        out.append((frozenset(verts), frozenset(chosen)))

    for r, (u, v) in enumerate(edges):
        if u == v:
            continue
        # trees whose smallest edge id is r; parallel copies with the same ends stay excluded
        grow({u, v}, frozenset([r]), frozenset(range(r)))
    return out


def _tokenize_line(line):
    return line.split("#", 1)[0].split()


def parse_graph_text(text: str) -> Graph:
    """Parse the line format (``vertices:``, ``u -- v``, ``loop v k``) or JSON."""
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            data = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise InputError(f"bad JSON: {exc}") from None
        return graph_from_dict(data)
    vertices = None
    edges, loops = [], {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        toks = _tokenize_line(raw)
        if not toks:
            continue
        if toks[0] == "vertices:":
            if vertices is not None:
                raise InputError(f"line {lineno}: duplicate vertices header")
            vertices = toks[1:]
        elif toks[0] == "loop":
            if len(toks) not in (2, 3):
                raise InputError(f"line {lineno}: expected 'loop v [k]'")
            try:
                k = int(toks[2]) if len(toks) == 3 else 1
            except ValueError:
                raise InputError(f"line {lineno}: loop count must be an integer") from None
            if k < 1:
                raise InputError(f"line {lineno}: loop count must be >= 1")
            loops[toks[1]] = loops.get(toks[1], 0) + k
        elif len(toks) == 3 and toks[1] == "--":
            edges.append((toks[0], toks[2]))
        else:
            raise InputError(f"line {lineno}: cannot parse {raw.strip()!r}")
    if vertices is None:
        raise InputError("missing 'vertices:' header")
    return Graph(tuple(vertices), tuple(edges), loops)


def graph_from_dict(data: Mapping) -> Graph:
    try:
        vertices = tuple(str(v) for v in data["vertices"])
        edges = tuple((str(u), str(v)) for u, v in data.get("edges", []))
        loops = {str(v): int(k) for v, k in data.get("loops", {}).items()}
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad graph object: {exc}") from None
    if any(not v or any(c.isspace() for c in v) for v in vertices):
        raise InputError("vertex identifiers must be nonempty and whitespace-free")
    return Graph(vertices, edges, loops)


def format_graph_text(g: Graph) -> str:
    lines = ["vertices: " + " ".join(str(v) for v in g.vertices)]
    lines += [f"{u} -- {v}" for u, v in g.edges]
    lines += [f"loop {v} {k}" for v, k in g.loops.items()]
    return "\n".join(lines) + "\n"


def all_sign_assignments(vertices: Sequence):
    for signs in product((1, -1), repeat=len(vertices)):
        yield SignAssignment(vertices, signs)
