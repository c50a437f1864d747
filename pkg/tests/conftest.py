from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations

import pytest

from clustervd.graph import Graph, WeightedGraph


def graph(edges, vertices=()):
    vs = set(vertices)
    for u, v in edges:
        vs.update((u, v))
    return Graph(vs, edges)


def path_graph(n):
    return Graph(range(1, n + 1), [(i, i + 1) for i in range(1, n)])


def cycle_graph(n):
    return Graph(range(1, n + 1), [(i, i % n + 1) for i in range(1, n + 1)])


def complete_graph(n, start=1):
    vs = range(start, start + n)
    return Graph(vs, combinations(vs, 2))


def weighted(g, costs=None):
    if costs is None:
        return WeightedGraph.unit(g)
    if not isinstance(costs, dict):
        costs = dict(zip(g.vertices, costs))
    return WeightedGraph(g, {v: Fraction(c) for v, c in costs.items()})


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph(range(n), [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p])


def random_weighted(rng: random.Random, n: int, p: float, max_weight: int = 10) -> WeightedGraph:
    g = random_graph(rng, n, p)
    return WeightedGraph(g, {v: Fraction(rng.randint(1, max_weight)) for v in g.vertices})


def all_graphs(n):
    """Every labelled graph on vertices 0..n-1."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(range(n), [e for i, e in enumerate(pairs) if mask >> i & 1])


@pytest.fixture
def rng():
    return random.Random(20240611)


def random_clique_with_dset(rng: random.Random, t: int, d: int):
    """Clique 0..t-1 plus a distinguishing set t..t+d-1 with random adjacency.

    Resamples until every clique edge has a distinguisher in the set, so
    ``2**d >= t`` is required.
    """
    if 2 ** d < t:
        raise ValueError(f"{d} vertices cannot distinguish a clique of size {t}")
    clique = list(range(t))
    dset = list(range(t, t + d))
    while True:
        edges = list(combinations(clique, 2))
        edges += [(c, w) for w in dset for c in clique if rng.random() < 0.5]
        edges += [(a, b) for a, b in combinations(dset, 2) if rng.random() < 0.3]
        g = Graph(clique + dset, edges)
        if all(any(g.adjacent(w, u) != g.adjacent(w, v) for w in dset) for u, v in combinations(clique, 2)):
            return g, clique, dset


def min_distinguishing_hit(g: Graph, clique, dset, weights) -> Fraction:
    """Brute-force cheapest set meeting every P3 made of a clique edge and one of its distinguishers."""
    triples = [
        {u, v, w}
        for u, v in combinations(clique, 2)
        for w in dset
        if g.adjacent(w, u) != g.adjacent(w, v)
    ]
    verts = list(clique) + list(dset)
    best = None
    for mask in range(1 << len(verts)):
        x = {verts[i] for i in range(len(verts)) if mask >> i & 1}
        if all(t & x for t in triples):
            c = sum((weights[v] for v in x), Fraction(0))
            if best is None or c < best:
                best = c
    return best


def random_k5_host(rng: random.Random, extra: int, p: float = 0.35) -> Graph:
    """Twin-free graph on 5 + extra vertices whose first five vertices form a clique."""
    from clustervd.graph import is_twin_free

    if extra < 3:
        raise ValueError("a twin-free K5 host needs at least 3 further vertices")
    n = 5 + extra
    while True:
        edges = list(combinations(range(5), 2))
        edges += [(u, v) for v in range(5, n) for u in range(v) if rng.random() < p]
        g = Graph(range(n), edges)
        if is_twin_free(g):
            return g


# -- acceptance summary -------------------------------------------------------

ACCEPTANCE_LINES: list[str] = []


def acceptance_result(number: int, title: str, ok: bool, detail: str) -> None:
    """Record and print one criterion outcome, then fail the test if needed."""
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number:2d} {title}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2])):
            terminalreporter.write_line(line)
