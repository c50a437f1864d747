"""Exact solvers used as references in tests and benchmarks.

Two independent routes compute the Cluster-VD optimum: a three-way
branching search on induced P3s with memoisation and bound pruning, and a
plain enumeration of all vertex subsets. They share nothing but the input
graph, so agreement between them is meaningful.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional

from .graph import Graph, Vertex, WeightedGraph


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class OracleBudget:
    max_vertices: int = 40
    max_branch_nodes: int = 2_000_000


DEFAULT_BUDGET = OracleBudget()


class _Bits:
    """Vertex ``i`` of the graph is bit ``1 << i``."""

    def __init__(self, g: Graph):
        self.verts = g.vertices
        index = {v: i for i, v in enumerate(self.verts)}
        self.n = len(self.verts)
        self.adj = [0] * self.n
        for v in self.verts:
            m = 0
            for u in g.neighbors(v):
                m |= 1 << index[u]
            self.adj[index[v]] = m
        self.index = index
        self.full = (1 << self.n) - 1

    def to_set(self, mask: int) -> frozenset:
        return frozenset(self.verts[i] for i in _bits(mask))

    def to_mask(self, vs: Iterable[Vertex]) -> int:
        m = 0
        for v in vs:
            m |= 1 << self.index[v]
        return m


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _int_costs(costs: Iterable[Fraction]) -> tuple[list[int], int]:
    costs = [Fraction(c) for c in costs]
    scale = 1
    for c in costs:
        scale = scale * c.denominator // math.gcd(scale, c.denominator)
    return [int(c * scale) for c in costs], scale


def _check_budget(g: Graph, budget: OracleBudget) -> None:
    if g.n > budget.max_vertices:
        raise BudgetExceeded(f"{g.n} vertices exceeds the oracle limit of {budget.max_vertices}")


# -- branching solvers --------------------------------------------------------


def _induced_p3(bg: _Bits, alive: int) -> Optional[tuple[int, int, int]]:
    adj = bg.adj
    for v in _bits(alive):
        cv = (adj[v] & alive) | (1 << v)
        for u in _bits(adj[v] & alive):
            cu = (adj[u] & alive) | (1 << u)
            if cu != cv:
                diff = cu ^ cv
                w = (diff & -diff).bit_length() - 1
                if cu >> w & 1:
                    return (v, u, w)
                return (u, v, w)
    return None


def _p3_subgraph(bg: _Bits, alive: int) -> Optional[tuple[int, int, int]]:
    adj = bg.adj
    for v in _bits(alive):
        nb = adj[v] & alive
        if nb & (nb - 1):
            a = (nb & -nb).bit_length() - 1
            rest = nb & (nb - 1)
            b = (rest & -rest).bit_length() - 1
            return (a, v, b)
    return None


def _packing_bound(bg: _Bits, alive: int, cost: list[int], finder) -> int:
    # vertex-disjoint forbidden paths each force the cheapest of their vertices
    total = 0
    while True:
        p = finder(bg, alive)
        if p is None:
            return total
        total += min(cost[i] for i in p)
        for i in p:
            alive &= ~(1 << i)


def _branch(wg: WeightedGraph, budget: OracleBudget, finder) -> tuple[frozenset, Fraction]:
    g = wg.graph
    _check_budget(g, budget)
    bg = _Bits(g)
    cost, scale = _int_costs(wg.cost[v] for v in bg.verts)
    best = [sum(cost) + 1, None]
    seen: dict[int, int] = {}
    nodes = [0]

    def dfs(alive: int, acc: int) -> None:
        nodes[0] += 1
        if nodes[0] > budget.max_branch_nodes:
            raise BudgetExceeded(f"more than {budget.max_branch_nodes} branch nodes")
        if acc >= best[0]:
            return
        prev = seen.get(alive)
        if prev is not None and prev <= acc:
            return
        seen[alive] = acc
        p = finder(bg, alive)
        if p is None:
            best[0], best[1] = acc, alive
            return
        if acc + _packing_bound(bg, alive, cost, finder) >= best[0]:
            return
        for i in sorted(p, key=lambda i: (cost[i], i)):
            dfs(alive & ~(1 << i), acc + cost[i])

    dfs(bg.full, 0)
    x = bg.to_set(bg.full & ~best[1])
    return x, Fraction(best[0], scale)


def exact_cluster_vd(wg: WeightedGraph, budget: OracleBudget = DEFAULT_BUDGET) -> tuple[frozenset, Fraction]:
    """Minimum-cost set whose removal leaves a cluster graph."""
    return _branch(wg, budget, _induced_p3)


def exact_p3_subgraph_hitting(wg: WeightedGraph, budget: OracleBudget = DEFAULT_BUDGET) -> tuple[frozenset, Fraction]:
    """Minimum-cost set leaving maximum degree at most 1."""
    return _branch(wg, budget, _p3_subgraph)


def vertex_cover_number(g: Graph) -> int:
    """Size of a minimum vertex cover, by enumerating subsets in size order."""
    bg = _Bits(g)
    edges = [(bg.index[u], bg.index[v]) for u, v in g.edges()]
    for mask in sorted(range(1 << bg.n), key=lambda m: bin(m).count("1")):
        if all(mask >> a & 1 or mask >> b & 1 for a, b in edges):
            return bin(mask).count("1")
    return 0


# -- subset enumeration -------------------------------------------------------


def _cluster_table(bg: _Bits) -> list[bool]:
    """``table[mask]`` is True iff deleting the vertices in ``mask`` leaves a cluster graph.

    Checked component by component: a component of size ``s`` is complete
    iff each of its vertices has ``s - 1`` neighbours. Deliberately avoids
    searching for induced paths.
    """
    n, adj, full = bg.n, bg.adj, bg.full
    table = [False] * (1 << n)
    for removed in range(1 << n):
        alive = full & ~removed
        ok = True
        todo = alive
        while todo and ok:
            start = todo & -todo
            comp, frontier = start, start
            while frontier:
                i = (frontier & -frontier).bit_length() - 1
                frontier &= frontier - 1
                new = adj[i] & alive & ~comp
                comp |= new
                frontier |= new
            size = bin(comp).count("1")
            for i in _bits(comp):
                if bin(adj[i] & alive).count("1") != size - 1:
                    ok = False
                    break
            todo &= ~comp
        table[removed] = ok
    return table


def brute_force_cluster_vd(wg: WeightedGraph, budget: OracleBudget = OracleBudget(max_vertices=16)) -> tuple[frozenset, Fraction]:
    """Exhaustive minimum over all ``2^n`` vertex subsets."""
    g = wg.graph
    _check_budget(g, budget)
    bg = _Bits(g)
    table = _cluster_table(bg)
    costs = [wg.cost[v] for v in bg.verts]
    best_mask, best = None, None
    for mask, ok in enumerate(table):
        if ok:
            c = sum((costs[i] for i in _bits(mask)), Fraction(0))
            if best is None or c < best:
                best_mask, best = mask, c
    return bg.to_set(best_mask), best


def enumerate_minimal_hitting_sets(g: Graph, budget: OracleBudget = OracleBudget(max_vertices=16)) -> list[frozenset]:
    """Every inclusionwise minimal hitting set, sorted by (size, members)."""
    _check_budget(g, budget)
    bg = _Bits(g)
    table = _cluster_table(bg)
    out = []
    for mask, ok in enumerate(table):
        if ok and all(not table[mask & ~(1 << i)] for i in _bits(mask)):
            out.append(bg.to_set(mask))
    out.sort(key=lambda s: (len(s), sorted(s)))
    return out


# -- local goodness -----------------------------------------------------------


def local_optimum(g: Graph, weights: Mapping[Vertex, Fraction], budget: OracleBudget = DEFAULT_BUDGET) -> Fraction:
    """Optimum of the weighted subgraph induced by the keys of ``weights``."""
    h = g.induced(weights)
    return exact_cluster_vd(WeightedGraph(h, dict(weights)), budget)[1]


def alpha_good_violations(
    g: Graph, weights: Mapping[Vertex, Fraction], alpha: Fraction, budget: OracleBudget = OracleBudget(max_vertices=16)
) -> list[tuple[frozenset, Fraction, Fraction]]:
    """Minimal hitting sets of ``g`` whose local weight exceeds ``alpha`` times the local optimum.

    Returns ``(X, local weight, bound)`` triples; an empty list means the
    weighting is ``alpha``-good in ``g``.
    """
    opt = local_optimum(g, weights)
    bound = alpha * opt
    bad = []
    for x in enumerate_minimal_hitting_sets(g, budget):
        w = sum((weights.get(v, Fraction(0)) for v in x), Fraction(0))
        if w > bound:
            bad.append((x, w, bound))
    return bad
