"""Local-ratio approximation algorithms and solution verifiers.

``cluster_vd_apx`` is the 9/4-approximation for cluster vertex deletion,
``hitting_p3_subgraphs_apx`` the 2-approximation for hitting every (not
necessarily induced) 3-vertex path, and ``naive_3apx`` the 3-approximation
baseline that subtracts unit weight on one induced P3 at a time.

All three run as a loop rather than by recursion. Reductions are recorded
in a trace and replayed backwards at the end to rebuild the solution.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import AbstractSet, Iterable, Optional, Union

from .graph import (
    Graph,
    Vertex,
    WeightedGraph,
    find_induced_p3,
    find_true_twins,
    has_p3_through,
    is_cluster_graph,
    is_diamond_free,
)
from .reduction import TwinMerge, ZeroCostRemoval, lift_through
from .weighting import LocalWeighting, first_weighting

MODES = ("general", "diamond-free", "auto")


@dataclass(frozen=True)
class HittingSet:
    vertices: frozenset
    target: Optional[str] = None

    def __iter__(self):
        return iter(sorted(self.vertices))

    def __len__(self) -> int:
        return len(self.vertices)

    def __contains__(self, v) -> bool:
        return v in self.vertices


@dataclass(frozen=True)
class WeightSubtraction:
    weighting: LocalWeighting
    lam: Fraction
    zeroed: tuple


TraceStep = Union[ZeroCostRemoval, TwinMerge, WeightSubtraction]
LocalRatioTrace = tuple  # of TraceStep


def _as_set(x) -> frozenset:
    if isinstance(x, HittingSet):
        return x.vertices
    return frozenset(x)


# -- verifiers ----------------------------------------------------------------


def verify_feasible(g: Graph, x: Union[HittingSet, Iterable[Vertex]]) -> bool:
    """True iff deleting ``x`` leaves a cluster graph."""
    xs = _as_set(x)
    unknown = [v for v in xs if v not in g]
    if unknown:
        raise ValueError(f"unknown vertices {sorted(unknown)!r}")
    return is_cluster_graph(g.remove(xs))


def verify_minimal(g: Graph, x: Union[HittingSet, Iterable[Vertex]]) -> bool:
    """True iff no proper subset of the feasible set ``x`` is feasible."""
    xs = _as_set(x)
    if not verify_feasible(g, xs):
        raise ValueError("set is not a hitting set")
    for v in xs:
        # X - v is feasible iff v lies on no induced P3 of G - (X - v)
        if not has_p3_through(g.remove(xs - {v}), v):
            return False
    return True


# -- Cluster-VD 9/4 -----------------------------------------------------------


def _subtract(cost: dict, lw: LocalWeighting) -> WeightSubtraction:
    lam = min(cost[v] / w for v, w in lw.weights.items() if w > 0)
    zeroed = []
    for v, w in lw.weights.items():
        if w:
            cost[v] -= lam * w
            if cost[v] == 0:
                zeroed.append(v)
    return WeightSubtraction(lw, lam, tuple(sorted(zeroed)))


def cluster_vd_apx(wg: WeightedGraph, mode: str = "general") -> tuple[HittingSet, LocalRatioTrace]:
    """Inclusionwise minimal hitting set of cost at most 9/4 times optimal.

    Each round takes the first applicable branch: stop on a cluster graph,
    drop a zero-cost vertex, merge a pair of true twins, or subtract the
    largest feasible multiple of a local weighting from the costs.

    ``mode="diamond-free"`` disables the 5-clique rule, which makes the
    result a 2-approximation; it requires a diamond-free input. ``"auto"``
    picks it whenever the input is diamond-free.
    """
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")
    g = wg.graph
    if mode == "auto":
        mode = "diamond-free" if is_diamond_free(g) else "general"
    elif mode == "diamond-free" and not is_diamond_free(g):
        raise ValueError("diamond-free mode needs a diamond-free graph")
    skip_k5 = mode == "diamond-free"

    cost = dict(wg.cost)
    steps: list = []
    while not is_cluster_graph(g):
        zero = next((v for v in g.vertices if cost[v] == 0), None)
        if zero is not None:
            steps.append(ZeroCostRemoval(zero))
            g = g.remove([zero])
            del cost[zero]
            continue
        twins = find_true_twins(g)
        if twins is not None:
            keep, drop = twins
            steps.append(TwinMerge(keep, drop))
            cost[keep] += cost.pop(drop)
            g = g.remove([drop])
            continue
        steps.append(_subtract(cost, first_weighting(g, skip_k5=skip_k5)))

    reductions = [s for s in steps if not isinstance(s, WeightSubtraction)]
    x = lift_through(reductions, set(), wg.graph)
    return HittingSet(frozenset(x)), tuple(steps)


# -- P3-subgraph 2-approximation ----------------------------------------------


def _has_p3_subgraph(g: Graph, alive: AbstractSet) -> bool:
    return any(len(g.neighbors(v) & alive) >= 2 for v in alive)


def hitting_p3_subgraphs_apx(wg: WeightedGraph) -> HittingSet:
    """Minimal set meeting every 3-vertex path subgraph, within twice optimal.

    Stars centred at the least vertex of degree at least 2 carry weight
    ``d(u) - 1`` on the centre and 1 on each leaf.
    """
    g = wg.graph
    cost = dict(wg.cost)
    alive = set(g.vertices)
    removed: list = []
    while True:
        deg = {v: len(g.neighbors(v) & alive) for v in alive}
        if all(d <= 1 for d in deg.values()):
            break
        zero = min((v for v in alive if cost[v] == 0), default=None)
        if zero is not None:
            removed.append(zero)
            alive.discard(zero)
            continue
        u = min(v for v in alive if deg[v] >= 2)
        star = {u: Fraction(deg[u] - 1)}
        star.update({v: Fraction(1) for v in g.neighbors(u) & alive})
        lam = min(cost[v] / w for v, w in star.items())
        for v, w in star.items():
            cost[v] -= lam * w

    x: set = set()
    for u in reversed(removed):
        alive.add(u)
        if _has_p3_subgraph(g, alive - x):
            x.add(u)
    return HittingSet(frozenset(x))


def verify_p3_subgraph_feasible(g: Graph, x: Union[HittingSet, Iterable[Vertex]]) -> bool:
    xs = _as_set(x)
    return not _has_p3_subgraph(g, set(g.vertices) - xs)


def verify_p3_subgraph_minimal(g: Graph, x: Union[HittingSet, Iterable[Vertex]]) -> bool:
    xs = _as_set(x)
    if not verify_p3_subgraph_feasible(g, xs):
        raise ValueError("set does not meet every P3 subgraph")
    alive = set(g.vertices) - xs
    return all(_has_p3_subgraph(g, alive | {v}) for v in xs)


# -- naive 3-approximation ----------------------------------------------------


def naive_3apx(wg: WeightedGraph) -> HittingSet:
    """Local ratio with unit weight on the least induced P3; within 3 times optimal."""
    g = wg.graph
    cost = dict(wg.cost)
    steps: list = []
    while True:
        p3 = find_induced_p3(g)
        if p3 is None:
            break
        zero = next((v for v in g.vertices if cost[v] == 0), None)
        if zero is not None:
            steps.append(ZeroCostRemoval(zero))
            g = g.remove([zero])
            del cost[zero]
            continue
        lam = min(cost[v] for v in p3)
        for v in p3:
            cost[v] -= lam
    return HittingSet(frozenset(lift_through(steps, set(), wg.graph)))


def trace_hosts(original: Graph, trace: Iterable[TraceStep]) -> list[tuple[Graph, WeightSubtraction]]:
    """Pair every weight subtraction in ``trace`` with the graph it was applied to."""
    present = set(original.vertices)
    out = []
    for step in trace:
        if isinstance(step, WeightSubtraction):
            out.append((original.induced(present), step))
        elif isinstance(step, TwinMerge):
            present.discard(step.drop)
        else:
            present.discard(step.vertex)
    return out


def solution_cost(wg: WeightedGraph, x: Union[HittingSet, Iterable[Vertex]]) -> Fraction:
    return wg.cost_of(_as_set(x))

