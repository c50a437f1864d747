"""Optimum-preserving reductions and the maps that lift solutions back."""

from __future__ import annotations

from dataclasses import dataclass
from typing import AbstractSet, Iterable, Union

from .graph import Graph, Vertex, WeightedGraph, are_true_twins, is_cluster_graph


@dataclass(frozen=True)
class ZeroCostRemoval:
    vertex: Vertex


@dataclass(frozen=True)
class TwinMerge:
    """``drop`` was deleted after transferring its whole cost onto ``keep``."""

    keep: Vertex
    drop: Vertex


ReductionStep = Union[ZeroCostRemoval, TwinMerge]


def remove_zero_cost(wg: WeightedGraph, u: Vertex) -> tuple[WeightedGraph, ZeroCostRemoval]:
    if wg.cost[u] != 0:
        raise ValueError(f"vertex {u!r} has cost {wg.cost[u]}, not 0")
    return wg.remove([u]), ZeroCostRemoval(u)


def merge_true_twins(wg: WeightedGraph, u: Vertex, u2: Vertex) -> tuple[WeightedGraph, TwinMerge]:
    """Delete ``u2`` and add its cost to ``u``; the optimum is unchanged."""
    if not are_true_twins(wg.graph, u, u2):
        raise ValueError(f"{u!r} and {u2!r} are not true twins")
    cost = {v: c for v, c in wg.cost.items() if v != u2}
    cost[u] = wg.cost[u] + wg.cost[u2]
    return WeightedGraph(wg.graph.remove([u2]), cost), TwinMerge(u, u2)


def _p3_through(g: Graph, alive: AbstractSet, u: Vertex) -> bool:
    # Same test as graph.has_p3_through, on g[alive] without building it.
    nu = g.neighbors(u) & alive
    for w in nu:
        nw = g.neighbors(w) & alive
        if len(nu - nw) > 1 or len(nw - nu) > 1:
            return True
    return False


def _lift(step: ReductionStep, x: set, graph: Graph, present: AbstractSet) -> set:
    # ``graph[present]`` is the instance before the step; ``x`` is mutated.
    if isinstance(step, TwinMerge):
        if step.keep in x:
            x.add(step.drop)
        return x
    # X' already hits every P3 avoiding u, so only P3s through u can survive.
    if _p3_through(graph, present - x, step.vertex):
        x.add(step.vertex)
    return x


def lift_solution(step: ReductionStep, x_reduced: Iterable[Vertex], original: WeightedGraph) -> frozenset:
    """Map a minimal hitting set of the reduced instance onto ``original``.

    ``original`` is the instance the step was applied to. The lifted set is
    minimal in ``original`` and costs the same as ``x_reduced`` did in the
    reduced instance.
    """
    x = set(x_reduced)
    g = original.graph
    removed = step.drop if isinstance(step, TwinMerge) else step.vertex
    if removed not in g or removed in x:
        raise ValueError(f"step {step!r} does not match the given instance")
    reduced = g.remove([removed])
    if not x <= set(reduced.vertices):
        raise ValueError("reduced solution mentions vertices outside the reduced instance")
    if not is_cluster_graph(reduced.remove(x)):
        raise ValueError("reduced solution is not a hitting set of the reduced instance")
    return frozenset(_lift(step, x, g, set(g.vertices)))


def lift_through(steps: list[ReductionStep], x: AbstractSet, original: Graph) -> set:
    """Replay a whole sequence of reductions backwards.

    ``steps`` were applied in order starting from ``original``; ``x`` is a
    hitting set of the fully reduced graph.
    """
    present = set(original.vertices)
    for step in steps:
        present.discard(step.drop if isinstance(step, TwinMerge) else step.vertex)
    x = set(x)
    for step in reversed(steps):
        removed = step.drop if isinstance(step, TwinMerge) else step.vertex
        present.add(removed)
        _lift(step, x, original, present)
    return x
