"""Test corpora: every small connected graph up to isomorphism, and random connected graphs."""

from __future__ import annotations

import random
from itertools import combinations, permutations, product

from .graph import Graph


def _connected(n, edges):
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = {0}
    todo = [0]
    while todo:
        for w in adj[todo.pop()]:
            if w not in seen:
                seen.add(w)
                todo.append(w)
    return len(seen) == n


def canonical_form(n: int, edges) -> tuple:
    """Lexicographically least sorted edge list over degree-respecting relabelings."""
    deg = [0] * n
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    classes = {}
    for v in range(n):
        classes.setdefault(deg[v], []).append(v)
    groups = [classes[d] for d in sorted(classes)]
    best = None
    for perms in product(*(permutations(grp) for grp in groups)):
        relabel = {}
        k = 0
        for grp in perms:
            for v in grp:
                relabel[v] = k
                k += 1
        key = tuple(sorted(tuple(sorted((relabel[u], relabel[v]))) for u, v in edges))
        if best is None or key < best:
            best = key
    return best


def connected_graphs(n: int) -> list:
    """One representative of each isomorphism class of connected simple graphs on n vertices.

    Generated by running over all labelled graphs and deduplicating on
    :func:`canonical_form`.
    """
    pairs = list(combinations(range(n), 2))
    reps = {}
    for bits in range(1 << len(pairs)):
        edges = [pairs[k] for k in range(len(pairs)) if bits >> k & 1]
        if len(edges) < n - 1 or not _connected(n, edges):
            continue
        key = canonical_form(n, edges)
        if key not in reps:
            reps[key] = Graph(tuple(range(n)), tuple(key))
    return list(reps.values())


def small_connected_graphs(max_n: int) -> list:
    out = []
    for n in range(1, max_n + 1):
        out.extend(connected_graphs(n))
    return out


def random_connected_graph(rng: random.Random, n: int, extra: float | None = None) -> Graph:
    """Random spanning tree plus each remaining pair with probability ``extra``."""
    if extra is None:
        extra = rng.choice([0.0, 0.05, 0.1, 0.2, 0.4])
    order = list(range(n))
    rng.shuffle(order)
    edges = set()
    for k in range(1, n):
        u, v = order[k], order[rng.randrange(k)]
        edges.add((min(u, v), max(u, v)))
    for u, v in combinations(range(n), 2):
        if (u, v) not in edges and rng.random() < extra:
            edges.add((u, v))
    return Graph(tuple(range(n)), tuple(sorted(edges)))


def random_near_list_graph(rng: random.Random, n: int) -> Graph:
    """A short cycle or a single vertex, grown mostly by extending paths; close to the finite list."""
    core = rng.choice([1, 1, 3, 3, 3, 4, 5, 5, 7])
    core = min(core, n)
    edges = [(i, i + 1) for i in range(core - 1)]
    if core >= 3:
        edges.append((0, core - 1))
    for v in range(core, n):
        # prefer the newest vertex so that pendant trees tend to be paths
        u = v - 1 if rng.random() < 0.6 else rng.randrange(v)
        edges.append((u, v))
    if rng.random() < 0.1:
        u, v = rng.sample(range(n), 2)
        if (min(u, v), max(u, v)) not in {(min(a, b), max(a, b)) for a, b in edges}:
            edges.append((u, v))
    labels = list(range(n))
    rng.shuffle(labels)
    return Graph(tuple(range(n)), tuple(sorted((min(labels[a], labels[b]), max(labels[a], labels[b])) for a, b in edges)))


def random_corpus(count: int = 500, sizes=(7, 8, 9), seed: int = 20240101) -> list:
    """Half uniform-ish random connected graphs, half near-list graphs."""
    rng = random.Random(seed)
    out = []
    for k in range(count):
        n = rng.choice(sizes)
        out.append(random_connected_graph(rng, n) if k % 2 else random_near_list_graph(rng, n))
    return out


def random_relabel(g: Graph, rng: random.Random) -> Graph:
    verts = list(g.vertices)
    shuffled = verts[:]
    rng.shuffle(shuffled)
    mapping = dict(zip(verts, shuffled))
    h = g.relabel(mapping)
    order = sorted(h.vertices, key=lambda v: verts.index(v))
    rng.shuffle(order)
    edges = list(h.edges)
    rng.shuffle(edges)
    return Graph(tuple(order), tuple(edges), h.loops)
