import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tiltcount import closed_forms as cf
from tiltcount.graph import (
    Graph, InputError, Quiver, SignAssignment, all_sign_assignments, bipartite_subquiver,
    block_decomposition, connected_components, double_quiver, enumerate_subtrees,
    format_graph_text, graph_components, has_even_cycle, odd_cycle_structure, parse_graph_text,
    strip_loops,
)
from tiltcount.corpus import random_relabel

from strategies import graphs, simple


def test_graph_rejects_bad_input():
    with pytest.raises(InputError):
        Graph((1, 1))
    with pytest.raises(InputError):
        Graph((1, 2), ((1, 3),))
    with pytest.raises(InputError):
        Graph((1,), ((1, 1),))
    with pytest.raises(InputError):
        Graph((1,), (), {1: -1})
    assert Graph((1,), (), {1: 0}).loops == {}


def test_sign_assignment_mask_convention():
    eps = SignAssignment.from_mask("abc", 0b010)
    assert str(eps) == "+-+"
    assert eps.mask() == 0b010
    assert SignAssignment.from_string("abc", "+-+") == eps
    assert str(eps.negated()) == "-+-"
    assert [str(e) for e in all_sign_assignments("ab")] == ["++", "+-", "-+", "--"]
    with pytest.raises(InputError):
        SignAssignment.from_string("ab", "+x")


def test_bipartite_subquiver_keeps_plus_to_minus_arrows():
    g = cf.cycle_graph(3)
    q = bipartite_subquiver(double_quiver(g), SignAssignment.from_string(g.vertices, "+-+"))
    assert sorted(q.arrows) == [(1, 2), (3, 2)]
    with pytest.raises(InputError):
        bipartite_subquiver(double_quiver(g), {1: 1, 2: -1})


def test_components_follow_declared_order():
    q = Quiver((5, 1, 2, 9), ((1, 2),))
    assert [c.vertices for c in connected_components(q)] == [(5,), (1, 2), (9,)]
    g = Graph((3, 1, 2), ((1, 2),))
    assert [c.vertices for c in graph_components(g)] == [(3,), (1, 2)]


def test_even_cycle_examples():
    assert has_even_cycle(cf.cycle_graph(3)) is None
    assert len(has_even_cycle(cf.cycle_graph(4))) == 4
    assert has_even_cycle(cf.cycle_graph(2)) is not None
    # theta graph: two triangles glued along an edge contain a 4-cycle
    theta = Graph((1, 2, 3, 4), ((1, 2), (2, 3), (1, 3), (2, 4), (3, 4)))
    assert len(has_even_cycle(theta)) == 4
    # two triangles sharing a vertex: every cycle is odd
    bowtie = Graph((1, 2, 3, 4, 5), ((1, 2), (2, 3), (1, 3), (3, 4), (4, 5), (3, 5)))
    assert has_even_cycle(bowtie) is None


def _brute_even_cycle(g):
    """Some non-empty edge subset is a single cycle of even length."""
    n = len(g.edges)
    for r in range(2, n + 1):
        if r % 2:
            continue
        for sub in combinations(range(n), r):
            deg = {}
            for k in sub:
                for v in g.edges[k]:
                    deg[v] = deg.get(v, 0) + 1
            if any(d != 2 for d in deg.values()):
                continue
            h = Graph(tuple(deg), tuple(g.edges[k] for k in sub))
            if h.is_connected():
                return True
    return False


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=6))
def test_has_even_cycle_matches_brute_force(g):
    found = has_even_cycle(g)
    assert (found is not None) == _brute_even_cycle(g)
    if found is not None:
        assert len(found) % 2 == 0


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=7), st.data())
def test_negated_sign_gives_opposite_quiver(g, data):
    mask = data.draw(st.integers(0, (1 << len(g.vertices)) - 1))
    eps = SignAssignment.from_mask(g.vertices, mask)
    q = double_quiver(g)
    a = bipartite_subquiver(q, eps)
    b = bipartite_subquiver(q, eps.negated())
    assert sorted(b.arrows) == sorted(a.opposite().arrows)


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=7, max_loops=3))
def test_double_quiver_round_trip(g):
    q = double_quiver(g)
    assert len(q.arrows) == 2 * len(g.edges)
    under = q.underlying_graph()
    assert sorted(map(sorted, under.edges)) == sorted(sorted(e) for e in g.edges for _ in range(2))
    assert strip_loops(g).loops == {}


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=7, max_loops=2))
def test_text_format_round_trip(g):
    h = parse_graph_text(format_graph_text(g))
    assert h.vertices == tuple(map(str, g.vertices))
    assert [tuple(map(int, e)) for e in h.edges] == list(g.edges)
    assert {int(v): k for v, k in h.loops.items()} == g.loops


def test_parse_errors_and_json():
    g = parse_graph_text("vertices: a b c\na -- b\n# comment\nb -- c\nloop c 2\n")
    assert g.edges == (("a", "b"), ("b", "c")) and g.loops == {"c": 2}
    h = parse_graph_text('{"vertices": ["a", "b"], "edges": [["a", "b"]]}')
    assert h.edges == (("a", "b"),)
    for bad in ("a -- b\n", "vertices: a b\na - b\n", "vertices: a\nloop a x\n", "{bad json"):
        with pytest.raises(InputError):
            parse_graph_text(bad)


def test_block_decomposition_of_two_triangles_with_bridge():
    g = Graph((1, 2, 3, 4, 5, 6), ((1, 2), (2, 3), (1, 3), (3, 4), (4, 5), (5, 6), (4, 6)))
    bd = block_decomposition(g)
    assert sorted(len(b[1]) for b in bd.blocks) == [1, 3, 3]
    assert bd.cut_vertices == frozenset({3, 4})


def test_odd_cycle_structure():
    s = odd_cycle_structure(cf.i_graph(6))
    assert s.kind == "unicyclic" and len(s.cycle) == 3
    assert sorted(len(t.vertices) for t in s.pendant_trees.values()) == [1, 1, 4]
    with pytest.raises(InputError):
        odd_cycle_structure(cf.cycle_graph(4))


def _brute_subtrees(g):
    out = set()
    for r in range(1, len(g.vertices) + 1):
        for vs in combinations(g.vertices, r):
            sub = [k for k, (u, v) in enumerate(g.edges) if u in vs and v in vs]
            for es in combinations(sub, r - 1):
                h = Graph(vs, tuple(g.edges[k] for k in es))
                if h.is_connected():
                    out.add((frozenset(vs), frozenset(es)))
    return out


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=6, connected=True))
def test_enumerate_subtrees_matches_brute_force(g):
    g = simple(g)
    got = enumerate_subtrees(g)
    assert len(got) == len(set(got))
    assert set(got) == _brute_subtrees(g)


def test_random_relabel_preserves_structure():
    rng = random.Random(3)
    g = cf.iii_graph()
    h = random_relabel(g, rng)
    assert sorted(h.vertices) == sorted(g.vertices)
    assert len(h.edges) == len(g.edges)
