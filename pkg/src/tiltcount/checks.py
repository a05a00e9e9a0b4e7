"""Cross-validation checks shared by the ``selftest`` command and the acceptance suite.

Each check returns a list of :class:`Outcome` rows; a row names what was
compared and whether it matched.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from . import closed_forms as cf
from .classifier import brute_force_finite, classify, verify_subtree_correspondence, verify_witness
from .corpus import canonical_form, connected_graphs, random_corpus, small_connected_graphs
from .counting import count_two_term_tilting
from .dynkin import DynkinType, dynkin_tilt_count
from .graph import Graph, SignAssignment, has_even_cycle
from .oracle import OrientedQuiver, all_orientations, count_tilting, dynkin_graph, orient


@dataclass(frozen=True)
class Outcome:
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        return f"{'PASS' if self.ok else 'FAIL'}  {self.name}" + (f"  ({self.detail})" if self.detail else "")


def table_families():
    """The family instances whose counts are checked by enumeration."""
    out = [cf.FamilyLabel(n) for n in ("E6", "E7", "E8")]
    out += [cf.FamilyLabel("II", n) for n in range(5, 9)]
    out += [cf.FamilyLabel(n) for n in ("III", "IV", "V")]
    out += [cf.FamilyLabel("A", n) for n in range(1, 13)]
    out += [cf.FamilyLabel("AffineAOdd", n) for n in (3, 5, 7, 9, 11)]
    out += [cf.FamilyLabel("D", n) for n in range(4, 13)]
    out += [cf.FamilyLabel("I", n) for n in range(4, 13)]
    return out


def check_table(closed_form=cf.closed_form, families=None):
    rows = []
    for f in families or table_families():
        got = count_two_term_tilting(cf.family_graph(f)).count
        want = closed_form(f)
        rows.append(Outcome(f"table {f}", got == want, f"enumerated {got}, table {want}"))
    return rows


def check_oracle_table(large=False):
    cases = [("A", n, v) for n, v in zip(range(1, 7), (1, 2, 5, 14, 42, 132))]
    cases += [("D", 4, 20), ("D", 5, dynkin_tilt_count(DynkinType("D", 5))), ("E", 6, 418)]
    if large:
        cases += [("E", 7, 2431), ("E", 8, 17342)]
    rows = []
    for fam, n, want in cases:
        q = orient(dynkin_graph(DynkinType(fam, n)), 0)
        got = count_tilting(OrientedQuiver.from_quiver(q), allow_large=True)
        rows.append(Outcome(f"oracle {fam}{n}", got == want, f"oracle {got}, expected {want}"))
    return rows


def check_orientation_independence(types=(("A", 4), ("D", 4))):
    rows = []
    for fam, n in types:
        counts = {bits: count_tilting(OrientedQuiver.from_quiver(q))
                  for bits, q in all_orientations(dynkin_graph(DynkinType(fam, n)))}
        values = set(counts.values())
        rows.append(Outcome(f"orientations {fam}{n}", len(values) == 1,
                            f"{len(counts)} orientations, counts {sorted(values)}"))
    return rows


def check_loop_invariance(seed=7, max_vertices=12):
    rng = random.Random(seed)
    rows = []
    for f in cf.list_families(max_vertices):
        g = cf.family_graph(f)
        loops = {}
        for _ in range(rng.randint(1, 3)):
            v = rng.choice(g.vertices)
            loops[v] = loops.get(v, 0) + 1
        a = count_two_term_tilting(g).count
        b = count_two_term_tilting(g.with_loops(loops)).count
        rows.append(Outcome(f"loops {f}", a == b, f"{a} vs {b} with loops {loops}"))
    return rows


def classifier_corpus(max_exhaustive=6, random_count=500, seed=20240101):
    return small_connected_graphs(max_exhaustive) + random_corpus(random_count, seed=seed)


def check_classifier(graphs):
    bad = []
    for g in graphs:
        c = classify(g)
        finite, _ = brute_force_finite(g)
        if c.finite != finite:
            bad.append(f"{g.edges}: classify {c.label}, brute force {finite}")
    return [Outcome(f"classifier vs brute force on {len(graphs)} graphs", not bad, "; ".join(bad[:3]))]


def _has_cycle(vertices, pairs):
    parent = {v: v for v in vertices}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for u, v in pairs:
        a, b = find(u), find(v)
        if a == b:
            return True
        parent[a] = b
    return False


def check_even_cycle_property(graphs):
    bad = []
    for g in graphs:
        n = len(g.vertices)
        cyclic = False
        for mask in range(1 << n):
            eps = SignAssignment.from_mask(g.vertices, mask)
            sign = eps.as_dict()
            pairs = [(u, v) for u, v in g.edges if sign[u] != sign[v]]
            if _has_cycle(g.vertices, pairs):
                cyclic = True
                break
        if (has_even_cycle(g) is not None) != cyclic:
            bad.append(str(g.edges))
    return [Outcome(f"even cycle <=> cyclic Q_eps on {len(graphs)} graphs", not bad, "; ".join(bad[:3]))]


def connected_graphs_by_extension(n: int) -> list:
    """Connected graphs on n vertices: each has a non-cut vertex, so extend those on n - 1."""
    if n <= 1:
        return connected_graphs(n)
    reps = {}
    for h in connected_graphs_by_extension(n - 1):
        for size in range(1, n):
            for nbrs in combinations(range(n - 1), size):
                edges = list(h.edges) + [(v, n - 1) for v in nbrs]
                key = canonical_form(n, edges)
                reps.setdefault(key, Graph(tuple(range(n)), key))
    return list(reps.values())


def check_subtree_correspondence(max_n=7):
    graphs = [g for n in range(1, max_n + 1) for g in connected_graphs_by_extension(n)
              if has_even_cycle(g) is None]
    bad = [str(g.edges) for g in graphs if len(g.vertices) >= 2 and not verify_subtree_correspondence(g)]
    return [Outcome(f"subtree two-to-one correspondence on {len(graphs)} graphs", not bad, "; ".join(bad[:3]))]


def check_d_expression(max_n=12):
    return [Outcome(f"D expression n={n}", cf.d_proof_expression(n) == cf.a_n(n),
                    f"{cf.d_proof_expression(n)} vs a_n {cf.a_n(n)}") for n in range(4, max_n + 1)]


def witness_graphs():
    two_triangles = Graph((1, 2, 3, 4, 5, 6), ((1, 2), (2, 3), (1, 3), (3, 4), (4, 5), (5, 6), (4, 6)))
    bowtie = Graph((1, 2, 3, 4, 5), ((1, 2), (2, 3), (1, 3), (3, 4), (4, 5), (3, 5)))
    return {
        "4-cycle": cf.cycle_graph(4),
        "Kronecker": cf.cycle_graph(2),
        "~E6 tree": Graph((1, 2, 3, 4, 5, 6, 7), ((1, 2), (2, 3), (3, 4), (4, 5), (3, 6), (6, 7))),
        "two triangles joined": two_triangles,
        "two triangles sharing a vertex": bowtie,
    }


def check_witnesses():
    from .classifier import InfinitenessWitness
    from .dynkin import component_tilt_count

    rows = []
    for name, g in witness_graphs().items():
        c = classify(g)
        ok = not c.finite and isinstance(c.witness, InfinitenessWitness) and verify_witness(g, c.witness)
        r = count_two_term_tilting(g)
        ok_count = (not r.is_finite) and component_tilt_count(r.witness.component) is None
        rows.append(Outcome(f"witness {name}", ok and ok_count,
                            f"{c.witness.kind if c.witness else None}, {c.witness.extended_type if c.witness else None}"))
    return rows


def run_level(level: str = "quick", closed_form=cf.closed_form):
    rows = check_table(closed_form)
    rows += check_d_expression()
    rows += check_classifier(small_connected_graphs(5))
    if level == "full":
        graphs = classifier_corpus()
        rows += check_classifier(graphs)
        rows += check_even_cycle_property(graphs)
        rows += check_subtree_correspondence()
        rows += check_oracle_table()
        rows += check_orientation_independence()
        rows += check_loop_invariance()
        rows += check_witnesses()
    return rows
