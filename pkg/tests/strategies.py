"""Hypothesis strategies for small graphs."""

from hypothesis import strategies as st

from tiltcount.graph import Graph


@st.composite
def graphs(draw, min_n=1, max_n=7, connected=False, max_loops=0):
    n = draw(st.integers(min_n, max_n))
    edges = []
    if connected:
        for v in range(1, n):
            edges.append((draw(st.integers(0, v - 1)), v))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if pairs:
        edges += draw(st.lists(st.sampled_from(pairs), max_size=n + 2))
    loops = {}
    if max_loops:
        for v in draw(st.lists(st.integers(0, n - 1), max_size=max_loops)):
            loops[v] = loops.get(v, 0) + 1
    return Graph(tuple(range(n)), tuple(edges), loops)


def simple(g):
    """Drop repeated edges."""
    seen, edges = set(), []
    for u, v in g.edges:
        key = frozenset((u, v))
        if key not in seen:
            seen.add(key)
            edges.append((u, v))
    return Graph(g.vertices, tuple(edges), g.loops)
