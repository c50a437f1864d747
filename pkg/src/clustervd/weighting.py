"""Local weightings ``(H, c_H)`` consumed by the local-ratio solver.

Three families are produced, in the order the solver consults them:

* induced 4-cycles with unit weights (ratio 2),
* a 5-clique together with a distinguishing set (ratio 9/4),
* the second neighbourhood of a maximum-degree vertex (ratio 2), which is
  only valid once the graph is twin-free, C4-free and K5-free.

All weights are integers stored as ``Fraction`` so that the solver's
zero-cost test stays exact.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, permutations
from typing import AbstractSet, Iterable, Iterator, Mapping, Optional

from .graph import (
    Graph,
    Vertex,
    clique_number,
    distinguishes,
    find_induced_p3,
    is_cluster_graph,
    is_induced_c4,
    iter_cliques,
    iter_induced_c4,
    iter_true_twins,
    max_degree_vertex,
    neighborhood_decomposition,
)

TWO = Fraction(2)
NINE_QUARTERS = Fraction(9, 4)


class WeightingInvariantError(RuntimeError):
    """A structural claim the construction relies on did not hold.

    On inputs satisfying the documented preconditions this never happens; it
    signals either a precondition violation upstream or a bug.
    """


class Provenance(enum.Enum):
    C4 = "C4"
    K5_DISTINGUISHING = "K5Distinguishing"
    SECOND_NEIGHBORHOOD = "SecondNeighborhood"


@dataclass(frozen=True)
class LocalWeighting:
    """A weight function on the vertex set of an induced subgraph ``H``.

    ``case`` names the branch of the second-neighbourhood construction that
    produced the weights (``"1.1"``, ``"1.3b"``, ``"2.1+2.3a"``...) and is
    ``None`` for the other provenances.
    """

    weights: Mapping[Vertex, Fraction] = field(hash=False)
    alpha: Fraction
    provenance: Provenance
    case: Optional[str] = None
    center: Optional[Vertex] = None

    def __post_init__(self):
        w = {v: Fraction(x) for v, x in self.weights.items()}
        if any(x < 0 for x in w.values()):
            raise ValueError("weights must be nonnegative")
        if not any(x > 0 for x in w.values()):
            raise ValueError("a local weighting needs a positive weight")
        expected = NINE_QUARTERS if self.provenance is Provenance.K5_DISTINGUISHING else TWO
        if self.alpha != expected:
            raise ValueError(f"alpha {self.alpha} does not match provenance {self.provenance.value}")
        object.__setattr__(self, "weights", w)

    @property
    def subgraph_vertices(self) -> frozenset:
        return frozenset(self.weights)

    @property
    def total(self) -> Fraction:
        return sum(self.weights.values(), Fraction(0))

    def weight_of(self, vertices: Iterable[Vertex]) -> Fraction:
        return sum((self.weights.get(v, Fraction(0)) for v in vertices), Fraction(0))

    @property
    def case_tags(self) -> tuple[str, ...]:
        return tuple(self.case.split("+")) if self.case else ()


# -- distinguishing sets ------------------------------------------------------


def distinguishing_set_weights(g: Graph, clique: Iterable[Vertex], dset: Iterable[Vertex]) -> dict[Vertex, int]:
    """Weights on a distinguishing set ``D`` of a clique ``C`` summing to ``|C| - 1``.

    ``D`` is processed in ascending order. Each ``w`` receives the number of
    clique edges it distinguishes and no remaining member of ``D`` does;
    those edges form a matching, and the smaller endpoint of each is then
    dropped from the clique. Any set hitting every P3 with one end in ``D``
    and the other two vertices in ``C`` has weight at least ``|C| - 1`` when
    clique vertices count 1.
    """
    cl = sorted(set(clique))
    ds = sorted(set(dset))
    if not cl:
        raise ValueError("empty clique")
    if set(cl) & set(ds):
        raise ValueError("distinguishing set must be disjoint from the clique")
    if not g.is_clique(cl):
        raise ValueError("vertex set is not a clique")
    for u, v in combinations(cl, 2):
        if not any(distinguishes(g, w, u, v) for w in ds):
            raise ValueError(f"edge {u!r}-{v!r} has no distinguisher in the given set")

    current = list(cl)
    weights: dict[Vertex, int] = {}
    for idx, w in enumerate(ds):
        later = ds[idx + 1:]
        matching = [
            (u, v)
            for u, v in combinations(current, 2)
            if distinguishes(g, w, u, v) and not any(distinguishes(g, x, u, v) for x in later)
        ]
        ends = [x for e in matching for x in e]
        if len(ends) != len(set(ends)):
            raise WeightingInvariantError(f"edges uniquely distinguished by {w!r} do not form a matching")
        weights[w] = len(matching)
        drop = {min(e) for e in matching}
        current = [x for x in current if x not in drop]
    if len(current) != 1:
        raise WeightingInvariantError(f"{len(current)} clique vertices left after the weighting pass")
    return weights


# -- C4 and K5 rules ----------------------------------------------------------


def c4_weighting(g: Graph, cycle: tuple) -> LocalWeighting:
    if not is_induced_c4(g, cycle):
        raise ValueError(f"{cycle!r} is not an induced 4-cycle")
    return LocalWeighting({v: Fraction(1) for v in cycle}, TWO, Provenance.C4)


def k5_distinguishing_set(g: Graph, clique: Iterable[Vertex]) -> list[Vertex]:
    """Greedy distinguishing set for a clique, scanning outside vertices in order."""
    cl = sorted(clique)
    inside = set(cl)
    todo = set(combinations(cl, 2))
    dset = []
    for w in g.vertices:
        if not todo:
            break
        if w in inside:
            continue
        hit = {e for e in todo if distinguishes(g, w, *e)}
        if hit:
            dset.append(w)
            todo -= hit
    if todo:
        u, v = min(todo)
        raise WeightingInvariantError(f"clique edge {u!r}-{v!r} has no distinguisher; graph has true twins")
    return dset


def k5_weighting(g: Graph, clique: Iterable[Vertex]) -> LocalWeighting:
    """Unit weights on a 5-clique plus distinguishing-set weights; total 9."""
    cl = sorted(clique)
    if len(cl) != 5 or not g.is_clique(cl):
        raise ValueError(f"{cl!r} is not a 5-clique")
    dset = k5_distinguishing_set(g, cl)
    weights = {v: Fraction(1) for v in cl}
    for w, x in distinguishing_set_weights(g, cl, dset).items():
        weights[w] = Fraction(x)
    lw = LocalWeighting(weights, NINE_QUARTERS, Provenance.K5_DISTINGUISHING)
    if lw.total != 9:
        raise WeightingInvariantError(f"K5 weighting has total {lw.total}, expected 9")
    return lw


# -- second neighbourhood -----------------------------------------------------


def _single_vertex_hitter(g: Graph) -> Optional[Vertex]:
    for v in g.vertices:
        if is_cluster_graph(g.remove([v])):
            return v
    return None


def _twin_distinguishers(g: Graph, comp: AbstractSet, outside: AbstractSet) -> list[Vertex]:
    """One distinguisher from ``outside`` for every true-twin pair of ``g[comp]``."""
    sub = g.induced(comp)
    pairs = list(iter_true_twins(sub))
    used = [x for p in pairs for x in p]
    if len(used) != len(set(used)):
        raise WeightingInvariantError("true-twin pairs inside a neighbourhood component overlap")
    for (a, b), (c, d) in combinations(pairs, 2):
        if any(sub.adjacent(x, y) for x in (a, b) for y in (c, d)):
            raise WeightingInvariantError("edge between two true-twin pairs of a neighbourhood component")
    chosen = []
    for a, b in pairs:
        w = next((w for w in sorted(outside) if distinguishes(g, w, a, b)), None)
        if w is None:
            raise WeightingInvariantError(f"twins {a!r},{b!r} of a neighbourhood component have no outside distinguisher")
        chosen.append(w)
    if len(set(chosen)) != len(chosen):
        raise WeightingInvariantError("one vertex distinguishes two twin pairs; graph is not C4-free")
    if not chosen:
        raise WeightingInvariantError("component with clique number 3 has no true-twin pair")
    return chosen


def _is_bull(g: Graph) -> bool:
    if g.n != 5 or g.m != 5:
        return False
    # triangle 0,1,2 with legs 3-0 and 4-1
    pattern = {(0, 1), (0, 2), (1, 2), (0, 3), (1, 4)}
    vs = g.vertices
    for perm in permutations(vs):
        if all(g.adjacent(perm[a], perm[b]) for a, b in pattern):
            return True
    return False


def _cap_clique_number(g: Graph, comp: AbstractSet) -> int:
    return clique_number(g.induced(comp), cap=4)


def second_neighborhood_weighting(
    g: Graph,
    v0: Optional[Vertex] = None,
    *,
    clique_cases_only: bool = False,
    check_max_degree: bool = True,
) -> LocalWeighting:
    """Weights on ``{v0} ∪ N(v0) ∪ B_1 ∪ ... ∪ B_k`` for a maximum-degree ``v0``.

    ``g`` must be twin-free, C4-free and K5-free (the K5 condition may be
    dropped when every component of ``G[N(v0)]`` is a clique, as happens in
    diamond-free graphs). With ``clique_cases_only`` any non-clique component
    raises ``WeightingInvariantError``.

    Cases 1.1 and 1.2b cannot occur at a maximum-degree vertex of a
    twin-free graph; ``check_max_degree=False`` admits any centre so they
    can still be exercised.
    """
    if v0 is None:
        v0 = max_degree_vertex(g)
    if check_max_degree and g.degree(v0) != max(g.degree(v) for v in g.vertices):
        raise ValueError(f"vertex {v0!r} does not have maximum degree")
    if g.degree(v0) == 0:
        raise ValueError("graph has no edges")
    dec = neighborhood_decomposition(g, v0)
    for b1, b2 in combinations(dec.outside, 2):
        if b1 & b2:
            raise WeightingInvariantError("outside sets overlap; graph is not C4-free")

    weights: dict[Vertex, Fraction] = {v: Fraction(1) for v in g.neighbors(v0)}
    for b in dec.outside:
        for v in b:
            weights[v] = Fraction(0)

    def require_clique_case(tag: str) -> None:
        if clique_cases_only:
            raise WeightingInvariantError(f"case {tag} fired in clique-cases-only mode")

    if dec.k == 1:
        a1, b1 = dec.components[0], dec.outside[0]
        size = len(a1)
        if g.is_clique(a1):
            case = "1.1"
            weights[v0] = Fraction(1)
            for w, x in distinguishing_set_weights(g, set(a1) | {v0}, b1).items():
                weights[w] = Fraction(x)
        else:
            omega = _cap_clique_number(g, a1)
            if omega == 2:
                if size >= 4:
                    case = "1.2a"
                    require_clique_case(case)
                    weights[v0] = Fraction(size - 3)
                else:
                    case = "1.2b"
                    require_clique_case(case)
                    p3 = find_induced_p3(g.induced(a1))
                    v1 = p3.middle
                    v2 = next((w for w in sorted(b1) if g.adjacent(w, v1)), None)
                    if v2 is None:
                        raise WeightingInvariantError(f"{v0!r} and {v1!r} are true twins")
                    weights[v0] = Fraction(1)
                    weights[v2] = Fraction(1)
            elif omega == 3:
                sub = g.induced(a1)
                if _single_vertex_hitter(sub) is not None:
                    case = "1.3b"
                    require_clique_case(case)
                    chosen = _twin_distinguishers(g, a1, b1)
                    vw = size - len(chosen) - 3
                    if vw < 1:
                        raise WeightingInvariantError(
                            f"case 1.3b gives weight {vw} on the centre (|A|={size}, |B'|={len(chosen)})"
                        )
                    weights[v0] = Fraction(vw)
                    for w in chosen:
                        weights[w] = Fraction(1)
                elif size >= 6:
                    case = "1.3a"
                    require_clique_case(case)
                    weights[v0] = Fraction(size - 5)
                else:
                    case = "1.3c"
                    require_clique_case(case)
                    if not _is_bull(sub):
                        raise WeightingInvariantError("small neighbourhood with hitting number 2 is not a bull")
                    leg = min(v for v in sub.vertices if sub.degree(v) == 1)
                    weights[leg] = Fraction(2)
                    weights[v0] = Fraction(1)
            else:
                raise WeightingInvariantError(f"neighbourhood component has clique number {omega}; graph contains K5")
    else:
        tags, lbs, lbps, cbs = [], [], [], []
        for aj, bj in zip(dec.components, dec.outside):
            size = len(aj)
            if g.is_clique(aj):
                tag = "2.1"
                for w, x in distinguishing_set_weights(g, aj, bj).items():
                    weights[w] = Fraction(x)
                cb = size - 1
                lb = lbp = size - 1
            else:
                omega = _cap_clique_number(g, aj)
                if omega == 2:
                    tag = "2.2"
                    cb, lb, lbp = 0, 1, size - 2
                elif omega == 3:
                    if _single_vertex_hitter(g.induced(aj)) is None:
                        tag = "2.3a"
                        cb, lb, lbp = 0, 2, size - 3
                    else:
                        tag = "2.3b"
                        chosen = _twin_distinguishers(g, aj, bj)
                        for w in chosen:
                            weights[w] = Fraction(1)
                        cb, lb, lbp = len(chosen), len(chosen) + 1, size - 2
                else:
                    raise WeightingInvariantError(f"neighbourhood component has clique number {omega}; graph contains K5")
                require_clique_case(tag)
            if cb > lb or cb > size - 1:
                raise WeightingInvariantError(f"case {tag}: outside weight {cb} exceeds its lower bound")
            tags.append(tag)
            cbs.append(cb)
            lbs.append(lb)
            lbps.append(lbp)

        sizes = [len(a) for a in dec.components]
        low = max(1, sum(s + c - 2 * lb for s, c, lb in zip(sizes, cbs, lbs)) - 1)
        total_rest = sum(s - c for s, c in zip(sizes, cbs))
        high = min(
            total_rest - (sizes[j] - cbs[j]) + 2 * lbps[j] - sizes[j] - cbs[j] + 1
            for j in range(dec.k)
        )
        if low > high:
            raise WeightingInvariantError(f"no feasible centre weight: lower {low} > upper {high}")
        weights[v0] = Fraction(low)
        case = "+".join(tags)

    return LocalWeighting(weights, TWO, Provenance.SECOND_NEIGHBORHOOD, case=case, center=v0)


# -- the ordered list ---------------------------------------------------------


def weighting_list(g: Graph, *, skip_k5: bool = False) -> Iterator[LocalWeighting]:
    """Lazily yield the candidate weightings in solver order.

    Induced 4-cycles come first, then 5-cliques with a distinguishing set,
    and only when neither exists the second neighbourhood of the least
    maximum-degree vertex. ``g`` should be twin-free and not a cluster graph.
    ``skip_k5`` omits the 5-clique rule; the second-neighbourhood rule then
    only accepts clique components.
    """
    found = False
    seen = set()
    for cyc in iter_induced_c4(g):
        key = frozenset(cyc)
        if key in seen:
            continue
        seen.add(key)
        found = True
        yield c4_weighting(g, cyc)
    if not skip_k5:
        for clique in iter_cliques(g, 5):
            found = True
            yield k5_weighting(g, clique)
    if not found:
        yield second_neighborhood_weighting(g, clique_cases_only=skip_k5)


def first_weighting(g: Graph, *, skip_k5: bool = False) -> LocalWeighting:
    return next(weighting_list(g, skip_k5=skip_k5))
