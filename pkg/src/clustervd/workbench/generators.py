"""Seeded random and structured instance generators.

Every generator takes an explicit ``seed`` and returns vertices ``1..n``;
equal arguments give equal instances.
"""

from __future__ import annotations

import os
import random
from fractions import Fraction
from typing import Any

from ..graph import Graph, WeightedGraph

MODELS = ("gnp", "planted-clusters", "vc-pendant", "bull-neighborhood", "k5-gadget", "complete", "cycle", "path")


def default_seed() -> int:
    return int(os.environ.get("CVD_SEED", "0"))


def _weights(n: int, rng: random.Random, max_weight: int) -> dict[int, Fraction]:
    if max_weight < 1:
        raise ValueError("max_weight must be at least 1")
    return {v: Fraction(rng.randint(1, max_weight)) for v in range(1, n + 1)}


def gnp(n: int, p: float, seed: int, max_weight: int = 1) -> WeightedGraph:
    if n < 0 or not 0 <= p <= 1:
        raise ValueError(f"bad gnp parameters n={n} p={p}")
    rng = random.Random(seed)
    edges = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1) if rng.random() < p]
    return WeightedGraph(Graph(range(1, n + 1), edges), _weights(n, rng, max_weight))


def planted_clusters(n: int, k: int, noise: float, seed: int, max_weight: int = 1) -> WeightedGraph:
    """``k`` near-equal consecutive blocks made complete, then each pair flipped with probability ``noise``."""
    if n < 0 or k < 1 or not 0 <= noise <= 1:
        raise ValueError(f"bad planted-clusters parameters n={n} k={k} noise={noise}")
    rng = random.Random(seed)
    block = {v: (v - 1) * k // max(n, 1) for v in range(1, n + 1)}
    edges = []
    for u in range(1, n + 1):
        for v in range(u + 1, n + 1):
            linked = block[u] == block[v]
            if rng.random() < noise:
                linked = not linked
            if linked:
                edges.append((u, v))
    return WeightedGraph(Graph(range(1, n + 1), edges), _weights(n, rng, max_weight))


def complete(n: int, seed: int = 0, max_weight: int = 1) -> WeightedGraph:
    rng = random.Random(seed)
    edges = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    return WeightedGraph(Graph(range(1, n + 1), edges), _weights(n, rng, max_weight))


def cycle(n: int, seed: int = 0, max_weight: int = 1) -> WeightedGraph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    rng = random.Random(seed)
    edges = [(v, v % n + 1) for v in range(1, n + 1)]
    return WeightedGraph(Graph(range(1, n + 1), edges), _weights(n, rng, max_weight))


def path(n: int, seed: int = 0, max_weight: int = 1) -> WeightedGraph:
    rng = random.Random(seed)
    edges = [(v, v + 1) for v in range(1, n)]
    return WeightedGraph(Graph(range(1, n + 1), edges), _weights(n, rng, max_weight))


def vc_pendant(inner: WeightedGraph) -> WeightedGraph:
    """Attach a pendant vertex ``v + n`` to every vertex ``v``.

    Cluster-VD on the result is Vertex Cover on ``inner``. Pendants copy the
    weight of the vertex they hang from.
    """
    g = inner.graph
    n = g.n
    if list(g.vertices) != list(range(1, n + 1)):
        raise ValueError("inner graph needs vertex ids 1..n")
    edges = g.edges() + [(v, v + n) for v in g.vertices]
    cost = dict(inner.cost)
    cost.update({v + n: inner.cost[v] for v in g.vertices})
    return WeightedGraph(Graph(range(1, 2 * n + 1), edges), cost)


def bull_neighborhood(seed: int = 0, max_weight: int = 1) -> WeightedGraph:
    """Vertex 1 adjacent to every vertex of a bull on 2..6.

    Triangle 2,3,4 with legs 5-2 and 6-3. Twin-free, C4-free and K5-free,
    and vertex 1 has maximum degree.
    """
    rng = random.Random(seed)
    bull = [(2, 3), (2, 4), (3, 4), (2, 5), (3, 6)]
    edges = bull + [(1, v) for v in range(2, 7)]
    return WeightedGraph(Graph(range(1, 7), edges), _weights(6, rng, max_weight))


def k5_gadget(pendants: int = 4, seed: int = 0, max_weight: int = 1) -> WeightedGraph:
    """A 5-clique on 1..5 with pendants on its first ``pendants`` vertices (4 or 5)."""
    if pendants not in (4, 5):
        raise ValueError("k5-gadget needs 4 or 5 pendants to be twin-free")
    rng = random.Random(seed)
    n = 5 + pendants
    edges = [(u, v) for u in range(1, 6) for v in range(u + 1, 6)]
    edges += [(i, 5 + i) for i in range(1, pendants + 1)]
    return WeightedGraph(Graph(range(1, n + 1), edges), _weights(n, rng, max_weight))


def generate(model: str, params: dict[str, Any] | None = None, seed: int | None = None) -> WeightedGraph:
    """Build an instance from a model name and keyword parameters.

    ``vc-pendant`` takes ``inner`` (another model name) plus that model's
    parameters.
    """
    params = dict(params or {})
    if seed is None:
        seed = default_seed()
    max_weight = int(params.pop("max_weight", 1))
    try:
        if model == "gnp":
            return gnp(int(params.pop("n")), float(params.pop("p")), seed, max_weight)
        if model == "planted-clusters":
            return planted_clusters(int(params.pop("n")), int(params.pop("k")), float(params.pop("noise", 0.0)), seed, max_weight)
        if model == "complete":
            return complete(int(params.pop("n")), seed, max_weight)
        if model == "cycle":
            return cycle(int(params.pop("n")), seed, max_weight)
        if model == "path":
            return path(int(params.pop("n")), seed, max_weight)
        if model == "vc-pendant":
            inner = params.pop("inner", "gnp")
            if inner == "vc-pendant":
                raise ValueError("vc-pendant cannot wrap itself")
            params["max_weight"] = max_weight
            return vc_pendant(generate(inner, params, seed))
        if model == "bull-neighborhood":
            return bull_neighborhood(seed, max_weight)
        if model == "k5-gadget":
            return k5_gadget(int(params.pop("pendants", 4)), seed, max_weight)
    except KeyError as exc:
        raise ValueError(f"model {model!r} needs parameter {exc.args[0]!r}") from None
    raise ValueError(f"unknown model {model!r}; expected one of {', '.join(MODELS)}")


def parse_model_spec(spec: str) -> tuple[str, dict[str, str]]:
    """``"gnp:n=10,p=0.3"`` -> ``("gnp", {"n": "10", "p": "0.3"})``."""
    name, _, rest = spec.partition(":")
    params = {}
    for item in filter(None, rest.split(",")):
        key, eq, value = item.partition("=")
        if not eq:
            raise ValueError(f"model parameter {item!r} is not key=value")
        params[key.strip()] = value.strip()
    return name.strip(), params
