"""Finiteness by structural recognition of the finite list, with certified witnesses.

Decision order: a double edge or an even cycle is fatal; a tree is finite
exactly when it is Dynkin; two or more odd cycles are fatal; a single odd
cycle with pendant trees is finite exactly when it is one of the listed
shapes.  Every negative verdict comes with an extended Dynkin subgraph and a
sign map whose Q_eps contains it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations, product

from .closed_forms import FamilyLabel
from .counting import EpsWitness, _eps_kernel, _index_edges, _witness
from .dynkin import component_tilt_count, recognize_dynkin, recognize_extended_dynkin
from .graph import (
    Graph,
    InputError,
    Quiver,
    RefusedError,
    SignAssignment,
    bipartite_subquiver,
    block_decomposition,
    connected_components,
    double_quiver,
    enumerate_subtrees,
    graph_components,
    has_even_cycle,
    odd_cycle_structure,
    strip_loops,
    _find_cycle,
)

BRUTE_FORCE_VERTEX_CAP = 24
CORRESPONDENCE_VERTEX_CAP = 12

# pendant-path lengths at the three triangle vertices (sorted) -> minimal graph label
_TRIANGLE_MINIMAL = (
    ("(i)", (1, 1, 2)),
    ("(ii)", (0, 2, 3)),
    ("(ii)", (1, 2, 2)),
    ("(iii)", (0, 1, 5)),
    ("(iii)", (0, 2, 4)),
    ("(iii)", (1, 1, 4)),
)


@dataclass(frozen=True)
class InfinitenessWitness:
    kind: str  # even-cycle | two-odd-cycles | degree-condition | extended-E-minimal-graph | non-Dynkin-Q_eps
    detail: str
    subgraph: Graph
    extended_type: object
    eps: SignAssignment
    component: object  # Quiver

    def to_dict(self):
        return {
            "kind": self.kind,
            "detail": self.detail,
            "subgraph": self.subgraph.to_dict(),
            "extended_type": str(self.extended_type),
            "eps": str(self.eps),
            "component": self.component.to_dict(),
        }


@dataclass(frozen=True)
class Classification:
    label: FamilyLabel
    witness: InfinitenessWitness | None = None
    components: tuple = field(default_factory=tuple)

    @property
    def finite(self) -> bool:
        if self.components:
            return all(c.finite for c in self.components)
        return self.label.in_list

    def to_dict(self):
        out = {"label": str(self.label), "finite": self.finite,
               "witness": None if self.witness is None else self.witness.to_dict()}
        if self.components:
            out["components"] = [c.to_dict() for c in self.components]
        return out


def _make_witness(g: Graph, kind: str, detail: str, sub: Graph) -> InfinitenessWitness:
    ext = recognize_extended_dynkin(sub)
    assert ext is not None, f"witness subgraph is not extended Dynkin: {sub}"
    # proper two-colouring of the subgraph (a tree or an even cycle); other vertices +
    colour = {sub.vertices[0]: 1}
    adj = sub.adjacency()
    todo = [sub.vertices[0]]
    while todo:
        v = todo.pop()
        for w in adj[v]:
            if w not in colour:
                colour[w] = -colour[v]
                todo.append(w)
    eps = SignAssignment(g.vertices, tuple(colour.get(v, 1) for v in g.vertices))
    q = bipartite_subquiver(double_quiver(g), eps)
    comp = next(c for c in connected_components(q) if sub.vertices[0] in c.vertices)
    return InfinitenessWitness(kind, detail, sub, ext, eps, comp)


def verify_witness(g: Graph, w: InfinitenessWitness) -> bool:
    """Independent check that a witness certifies infiniteness of ``g``."""
    g = strip_loops(g)
    pool = list(g.edges)
    for e in w.subgraph.edges:
        for k, f in enumerate(pool):
            if {e[0], e[1]} == {f[0], f[1]}:
                del pool[k]
                break
        else:
            return False
    if recognize_extended_dynkin(w.subgraph) is None:
        return False
    q = bipartite_subquiver(double_quiver(g), w.eps)
    comps = connected_components(q)
    if w.component not in comps:
        return False
    arrows = list(w.component.arrows)
    for s, t in w.subgraph.edges:
        if (s, t) in arrows:
            arrows.remove((s, t))
        elif (t, s) in arrows:
            arrows.remove((t, s))
        else:
            return False
    return component_tilt_count(w.component) is None


def _cycle_witness(g: Graph, cyc) -> Graph:
    pairs = list(zip(cyc, cyc[1:] + cyc[:1])) if len(cyc) > 2 else [tuple(cyc), tuple(cyc)]
    return Graph(tuple(v for v in g.vertices if v in set(cyc)), tuple(pairs))


def _tree_edges_graph(g: Graph, edges) -> Graph:
    verts = {x for e in edges for x in e}
    return Graph(tuple(v for v in g.vertices if v in verts), tuple(edges))


def _shrink_to_extended(tree: Graph) -> Graph:
    """Delete leaves while the tree stays non-Dynkin; the result is extended Dynkin."""
    changed = True
    while changed:
        changed = False
        adj = tree.adjacency()
        for v in tree.vertices:
            if len(adj[v]) != 1:
                continue
            smaller = tree.subgraph([x for x in tree.vertices if x != v])
            if recognize_dynkin(smaller) is None:
                tree = smaller
                changed = True
                break
    return tree


def _non_dynkin_subtree(g: Graph, cycle) -> Graph | None:
    """Some extended Dynkin subtree of a unicyclic graph, via spanning trees."""
    for a, b in zip(cycle, cycle[1:] + cycle[:1]):
        edges = list(g.edges)
        for k, e in enumerate(edges):
            if {e[0], e[1]} == {a, b}:
                del edges[k]
                break
        tree = Graph(g.vertices, tuple(edges))
        if recognize_dynkin(tree) is None:
            return _shrink_to_extended(tree)
    return None


def _two_odd_cycles_witness(g: Graph) -> Graph:
    bd = block_decomposition(g)
    cycles = [b for b in bd.blocks if len(b[1]) > 1]
    adj = g.adjacency()
    c1 = set(cycles[0][0])
    # nearest vertex of another cycle block, by BFS from the first cycle
    others = [set(b[0]) for b in cycles[1:]]
    prev = {v: None for v in c1}
    frontier = list(c1)
    hit = next((v for v in c1 if any(v in o for o in others)), None)
    while hit is None:
        nxt = []
        for v in frontier:
            for w in adj[v]:
                if w not in prev:
                    prev[w] = v
                    nxt.append(w)
                    if any(w in o for o in others):
                        hit = w
                        break
            if hit is not None:
                break
        frontier = nxt
    path = [hit]
    while prev[path[-1]] is not None:
        path.append(prev[path[-1]])
    path.reverse()  # path[0] on the first cycle, path[-1] on a second one
    c2 = next(o for o in others if hit in o)
    p1, p2 = path[0], path[-1]
    if p1 == p2:
        # the cycles share a vertex: its four cycle neighbours form ~D4
        legs = [w for w in adj[p1] if w in c1][:2] + [w for w in adj[p1] if w in c2 and w not in c1][:2]
        return _tree_edges_graph(g, [(p1, w) for w in legs])
    edges = list(zip(path, path[1:]))
    edges += [(p1, w) for w in adj[p1] if w in c1][:2]
    edges += [(p2, w) for w in adj[p2] if w in c2][:2]
    return _tree_edges_graph(g, edges)


def _is_path_from(tree: Graph, root) -> bool:
    adj = tree.adjacency()
    return len(adj[root]) <= 1 and all(len(adj[v]) <= 2 for v in tree.vertices)


def _classify_connected(g: Graph) -> Classification:
    g = strip_loops(g)
    n = len(g.vertices)
    if not g.is_simple():
        seen = {}
        for u, v in g.edges:
            key = frozenset((u, v))
            if key in seen:
                sub = _cycle_witness(g, [u, v])
                w = _make_witness(g, "even-cycle", "double edge (Kronecker subquiver)", sub)
                return Classification(FamilyLabel("NotInList", reason="even-cycle"), w)
            seen[key] = True
    cyc = has_even_cycle(g)
    if cyc is not None:
        w = _make_witness(g, "even-cycle", f"{len(cyc)}-cycle", _cycle_witness(g, cyc))
        return Classification(FamilyLabel("NotInList", reason="even-cycle"), w)
    st = odd_cycle_structure(g)
    if st.kind == "tree":
        t = recognize_dynkin(g)
        if t is not None:
            name = f"E{t.rank}" if t.family == "E" else t.family
            return Classification(FamilyLabel(name, None if t.family == "E" else t.rank))
        sub = _shrink_to_extended(g)
        w = _make_witness(g, "non-Dynkin-Q_eps", "tree that is not Dynkin", sub)
        return Classification(FamilyLabel("NotInList", reason="non-Dynkin-tree"), w)
    if st.kind == "other":
        w = _make_witness(g, "two-odd-cycles", "at least two odd cycles", _two_odd_cycles_witness(g))
        return Classification(FamilyLabel("NotInList", reason="two-odd-cycles"), w)

    cycle = list(st.cycle)
    L = len(cycle)
    adj = g.adjacency()
    deg = {v: len(adj[v]) for v in g.vertices}
    pos = {v: i for i, v in enumerate(cycle)}

    def not_in_list(kind, detail, sub, reason):
        w = _make_witness(g, kind, detail, sub)
        return Classification(FamilyLabel("NotInList", reason=reason), w)

    # (a) a cycle vertex of degree >= 4
    for v in cycle:
        if deg[v] >= 4:
            sub = _tree_edges_graph(g, [(v, w) for w in adj[v][:4]])
            return not_in_list("degree-condition", f"(a) cycle vertex {v} has degree {deg[v]}", sub, "degree-condition")
    # (b) a degree-3 cycle vertex whose pendant tree is not a path
    for v in cycle:
        if deg[v] == 3 and not _is_path_from(st.pendant_trees[v], v):
            prev, cur = v, next(w for w in adj[v] if w not in pos)
            edges = [(v, w) for w in adj[v] if w in pos] + [(v, cur)]
            while deg[cur] == 2:
                nxt = next(w for w in adj[cur] if w != prev)
                edges.append((cur, nxt))
                prev, cur = cur, nxt
            edges += [(cur, w) for w in adj[cur] if w != prev][:2]
            sub = _tree_edges_graph(g, edges)
            return not_in_list("degree-condition", f"(b) pendant tree at {v} is not of type A", sub, "degree-condition")
    branch = [v for v in cycle if deg[v] == 3]
    # (c) a longer cycle with two branch points
    if L > 3 and len(branch) >= 2:
        u, w = branch[0], branch[1]
        i, j = pos[u], pos[w]
        fwd = (j - i) % L
        step = 1 if fwd <= L - fwd else -1
        arc = [cycle[(i + step * t) % L] for t in range((fwd if step == 1 else L - fwd) + 1)]
        edges = list(zip(arc, arc[1:]))
        for end, inner in ((u, arc[1]), (w, arc[-2])):
            edges += [(end, x) for x in adj[end] if x != inner]
        sub = _tree_edges_graph(g, edges)
        return not_in_list("degree-condition", f"(c) cycle vertices {u} and {w} both have degree 3", sub, "degree-condition")

    tails = {v: len(st.pendant_trees[v].vertices) - 1 for v in cycle}
    if L == 3:
        profile = tuple(sorted(tails.values()))
        label = {
            (0, 0, 0): FamilyLabel("AffineAOdd", 3),
            (1, 1, 1): FamilyLabel("IV"),
            (0, 2, 2): FamilyLabel("V"),
        }.get(profile)
        if label is None and profile[:2] == (0, 0):
            label = FamilyLabel("I", n)
        if label is None and profile[:2] == (0, 1) and profile[2] <= 4:
            label = FamilyLabel("II", n)
        if label is not None:
            return Classification(label)
        minimal = next(
            name for name, m in _TRIANGLE_MINIMAL
            if _dominates(profile, m)
        )
    else:
        t = max(tails.values())
        if t == 0:
            return Classification(FamilyLabel("AffineAOdd", L))
        if t == 1 and L == 5:
            return Classification(FamilyLabel("III"))
        minimal = "(iv)" if t >= 2 else "(v)"
    sub = _non_dynkin_subtree(g, cycle)
    return not_in_list(
        "extended-E-minimal-graph",
        f"contains minimal graph {minimal}",
        sub,
        "extended-E-minimal-graph",
    )


def _dominates(profile, minimal):
    return any(all(a >= b for a, b in zip(p, minimal)) for p in permutations(profile))


def classify(g: Graph) -> Classification:
    """Match the loop-stripped graph against the finite list."""
    if not g.vertices:
        raise InputError("graph has no vertices")
    comps = graph_components(g)
    if len(comps) == 1:
        return _classify_connected(g)
    parts = tuple(_classify_connected(c) for c in comps)
    finite = all(p.finite for p in parts)
    label = FamilyLabel("Composite") if finite else FamilyLabel("NotInList", reason="component not in list")
    witness = next((p.witness for p in parts if p.witness is not None), None)
    return Classification(label, witness, parts)


def brute_force_finite(g: Graph):
    """(finite, witness) by checking Q_eps for the sign maps with the first vertex at +."""
    n = len(g.vertices)
    if n > BRUTE_FORCE_VERTEX_CAP:
        raise RefusedError(f"brute force is capped at {BRUTE_FORCE_VERTEX_CAP} vertices")
    if n == 0:
        raise InputError("graph has no vertices")
    bare = strip_loops(g)
    edges = _index_edges(bare)
    for mask in range(1 << (n - 1)):
        c, comp = _eps_kernel(n, edges, mask)
        if c is None:
            return False, _witness(bare, mask, comp)
    return True, None


def verify_subtree_correspondence(g: Graph) -> bool:
    """Check the two-to-one match between subtrees and connected bipartite subquivers."""
    g = strip_loops(g)
    if not g.is_connected() or not g.is_simple() or has_even_cycle(g) is not None:
        raise InputError("needs a connected simple graph without even cycles")
    if len(g.vertices) > CORRESPONDENCE_VERTEX_CAP:
        raise RefusedError(f"capped at {CORRESPONDENCE_VERTEX_CAP} vertices")
    subtrees = [s for s in enumerate_subtrees(g) if len(s[0]) >= 2]
    for verts, eids in subtrees:
        verts = sorted(verts, key=g.vertices.index)
        edges = [g.edges[e] for e in eids]
        good = 0
        for signs in product((1, -1), repeat=len(verts)):
            sign = dict(zip(verts, signs))
            if all(sign[u] != sign[v] for u, v in edges):
                good += 1
        if good != 2:
            return False
    # every Q_eps is a forest, so every connected subquiver of it has a tree underneath
    realised = set()
    dq = double_quiver(g)
    for signs in product((1, -1), repeat=len(g.vertices)):
        q = bipartite_subquiver(dq, SignAssignment(g.vertices, signs))
        if _find_cycle(list(q.vertices), list(q.arrows)) is not None:
            return False
        arrows = q.arrows
        for bits in range(1, 1 << len(arrows)):
            chosen = [a for k, a in enumerate(arrows) if bits >> k & 1]
            verts = {x for a in chosen for x in a}
            sub = Quiver(tuple(v for v in g.vertices if v in verts), tuple(chosen))
            if len(connected_components(sub)) == 1:
                realised.add(frozenset(chosen))
    return len(realised) == 2 * len(subtrees)

