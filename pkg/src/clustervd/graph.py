"""Immutable simple graphs and the structural queries used by the solvers.

Vertices may be any hashable, totally ordered identifiers (ints in practice).
Every search below scans vertices in ascending order, so repeated calls on
equal graphs return equal witnesses.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Hashable, Iterable, Iterator, Mapping, NamedTuple, Optional

Vertex = Hashable


class Graph:
    """A finite simple undirected graph.

    Deletions return new graphs; vertex identifiers survive unchanged, so a
    vertex set computed on a subgraph can be mapped straight back onto the
    original instance.
    """

    __slots__ = ("_vertices", "_adj", "_hash")

    def __init__(self, vertices: Iterable[Vertex] = (), edges: Iterable[tuple[Vertex, Vertex]] = ()):
        adj: dict[Vertex, set] = {v: set() for v in vertices}
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop on vertex {u!r}")
            adj.setdefault(u, set()).add(v)
            adj.setdefault(v, set()).add(u)
        self._vertices = tuple(sorted(adj))
        self._adj = {v: frozenset(adj[v]) for v in self._vertices}
        self._hash = None

    @classmethod
    def _from_adj(cls, vertices: tuple, adj: dict) -> Graph:
        g = cls.__new__(cls)
        g._vertices = vertices
        g._adj = adj
        g._hash = None
        return g

    @property
    def vertices(self) -> tuple:
        return self._vertices

    @property
    def n(self) -> int:
        return len(self._vertices)

    @property
    def m(self) -> int:
        return sum(len(s) for s in self._adj.values()) // 2

    def __contains__(self, v: Vertex) -> bool:
        return v in self._adj

    def __len__(self) -> int:
        return len(self._vertices)

    def __iter__(self) -> Iterator[Vertex]:
        return iter(self._vertices)

    def neighbors(self, v: Vertex) -> frozenset:
        return self._adj[v]

    def degree(self, v: Vertex) -> int:
        return len(self._adj[v])

    def adjacent(self, u: Vertex, v: Vertex) -> bool:
        return v in self._adj[u]

    def edges(self) -> list[tuple[Vertex, Vertex]]:
        """Edges as ``(u, v)`` pairs with ``u < v``, in lexicographic order."""
        return [(u, v) for u in self._vertices for v in sorted(self._adj[u]) if u < v]

    def induced(self, vertices: Iterable[Vertex]) -> Graph:
        keep = set(vertices)
        unknown = keep - self._adj.keys()
        if unknown:
            raise KeyError(f"unknown vertices {sorted(unknown)!r}")
        verts = tuple(v for v in self._vertices if v in keep)
        return Graph._from_adj(verts, {v: self._adj[v] & keep for v in verts})

    def remove(self, vertices: Iterable[Vertex]) -> Graph:
        drop = set(vertices)
        if not drop:
            return self
        return self.induced(v for v in self._vertices if v not in drop)

    def is_clique(self, vertices: Iterable[Vertex]) -> bool:
        vs = list(vertices)
        return all(b in self._adj[a] for a, b in combinations(vs, 2))

    def components(self) -> list[list[Vertex]]:
        """Connected components, each sorted, ordered by least vertex."""
        seen: set = set()
        comps = []
        for s in self._vertices:
            if s in seen:
                continue
            seen.add(s)
            stack, comp = [s], [s]
            while stack:
                x = stack.pop()
                for y in self._adj[x]:
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
                        comp.append(y)
            comps.append(sorted(comp))
        return comps

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._vertices == other._vertices and self._adj == other._adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._vertices, frozenset(self.edges())))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class WeightedGraph:
    """A graph together with a nonnegative exact cost on every vertex."""

    graph: Graph
    cost: Mapping[Vertex, Fraction] = field(hash=False)

    def __post_init__(self):
        cost = {}
        for v in self.graph.vertices:
            if v not in self.cost:
                raise ValueError(f"vertex {v!r} has no cost")
            c = Fraction(self.cost[v])
            if c < 0:
                raise ValueError(f"vertex {v!r} has negative cost {c}")
            cost[v] = c
        extra = set(self.cost) - set(cost)
        if extra:
            raise ValueError(f"costs given for unknown vertices {sorted(extra)!r}")
        object.__setattr__(self, "cost", cost)

    @classmethod
    def unit(cls, graph: Graph) -> WeightedGraph:
        return cls(graph, {v: Fraction(1) for v in graph.vertices})

    def cost_of(self, vertices: Iterable[Vertex]) -> Fraction:
        return sum((self.cost[v] for v in vertices), Fraction(0))

    def remove(self, vertices: Iterable[Vertex]) -> WeightedGraph:
        drop = set(vertices)
        return WeightedGraph(self.graph.remove(drop), {v: c for v, c in self.cost.items() if v not in drop})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeightedGraph):
            return NotImplemented
        return self.graph == other.graph and self.cost == other.cost


class InducedP3(NamedTuple):
    endpoint_a: Vertex
    middle: Vertex
    endpoint_b: Vertex


@dataclass(frozen=True)
class NeighborhoodDecomposition:
    """Components ``A_i`` of ``G[N(v0)]`` and the outside vertices ``B_i`` seeing them."""

    v0: Vertex
    components: tuple[frozenset, ...]
    outside: tuple[frozenset, ...]

    @property
    def k(self) -> int:
        return len(self.components)


# -- induced P3 / cluster graphs ---------------------------------------------


def find_induced_p3(g: Graph) -> Optional[InducedP3]:
    """Least induced P3 ordered by (middle, a, b), or None for cluster graphs."""
    for mid in g.vertices:
        nbrs = sorted(g.neighbors(mid))
        for i, a in enumerate(nbrs):
            na = g.neighbors(a)
            for b in nbrs[i + 1:]:
                if b not in na:
                    return InducedP3(a, mid, b)
    return None


def is_cluster_graph(g: Graph) -> bool:
    """True iff every connected component is complete."""
    for comp in g.components():
        k = len(comp) - 1
        if any(g.degree(v) != k for v in comp):
            return False
    return True


def has_p3_through(g: Graph, u: Vertex) -> bool:
    """True iff some induced P3 of ``g`` contains ``u``."""
    nu = g.neighbors(u)
    for w in nu:
        nw = g.neighbors(w)
        # u in the middle: w and some other neighbour of u are nonadjacent;
        # u at an end: w has a neighbour outside N[u].
        if len(nu - nw) > 1 or len(nw - nu) > 1:
            return True
    return False


# -- twins --------------------------------------------------------------------


def _closed(g: Graph, v: Vertex) -> frozenset:
    return g.neighbors(v) | {v}


def are_true_twins(g: Graph, u: Vertex, v: Vertex) -> bool:
    return u != v and g.adjacent(u, v) and _closed(g, u) == _closed(g, v)


def iter_true_twins(g: Graph) -> Iterator[tuple[Vertex, Vertex]]:
    for u in g.vertices:
        du = g.degree(u)
        for v in sorted(g.neighbors(u)):
            if u < v and g.degree(v) == du and _closed(g, u) == _closed(g, v):
                yield (u, v)


def find_true_twins(g: Graph) -> Optional[tuple[Vertex, Vertex]]:
    """Least adjacent pair ``u < u'`` with equal neighbourhoods outside the pair."""
    return next(iter_true_twins(g), None)


def is_twin_free(g: Graph) -> bool:
    return find_true_twins(g) is None


def distinguishes(g: Graph, w: Vertex, u: Vertex, v: Vertex) -> bool:
    """True iff ``w`` sees exactly one of ``u`` and ``v``."""
    nw = g.neighbors(w)
    return (u in nw) != (v in nw)


def distinguishers(g: Graph, u: Vertex, v: Vertex) -> frozenset:
    """All vertices adjacent to exactly one endpoint of the edge ``uv``."""
    if not g.adjacent(u, v):
        raise ValueError(f"{u!r} and {v!r} are not adjacent")
    return (g.neighbors(u) ^ g.neighbors(v)) - {u, v}


# -- neighbourhood structure --------------------------------------------------


def neighborhood_decomposition(g: Graph, v0: Vertex) -> NeighborhoodDecomposition:
    nbhd = g.neighbors(v0)
    comps = g.induced(nbhd).components()
    closed = nbhd | {v0}
    outside = []
    for comp in comps:
        seen = set()
        for a in comp:
            seen |= g.neighbors(a)
        outside.append(frozenset(seen - closed))
    return NeighborhoodDecomposition(v0, tuple(frozenset(c) for c in comps), tuple(outside))


# -- small patterns -----------------------------------------------------------


def iter_induced_c4(g: Graph) -> Iterator[tuple[Vertex, Vertex, Vertex, Vertex]]:
    """Induced 4-cycles as ``(a, b, c, d)`` with diagonals ``ac`` and ``bd``.

    Ordered by ``(a, c, b, d)`` with ``a < c`` and ``b < d``; each cycle is
    reported once per diagonal with its smaller end first, i.e. twice.
    """
    for a in g.vertices:
        na = g.neighbors(a)
        for c in g.vertices:
            if c <= a or c in na:
                continue
            common = sorted(na & g.neighbors(c))
            for i, b in enumerate(common):
                nb = g.neighbors(b)
                for d in common[i + 1:]:
                    if d not in nb:
                        yield (a, b, c, d)


def find_induced_c4(g: Graph) -> Optional[tuple[Vertex, Vertex, Vertex, Vertex]]:
    return next(iter_induced_c4(g), None)


def is_induced_c4(g: Graph, cycle: tuple) -> bool:
    if len(cycle) != 4 or len(set(cycle)) != 4:
        return False
    a, b, c, d = cycle
    return (
        g.adjacent(a, b) and g.adjacent(b, c) and g.adjacent(c, d) and g.adjacent(d, a)
        and not g.adjacent(a, c) and not g.adjacent(b, d)
    )


def iter_cliques(g: Graph, size: int) -> Iterator[tuple]:
    """All cliques of the given size as sorted tuples, in lexicographic order."""

    def extend(clique: list, cands: list) -> Iterator[tuple]:
        if len(clique) == size:
            yield tuple(clique)
            return
        need = size - len(clique)
        for i, v in enumerate(cands):
            if len(cands) - i < need:
                return
            nv = g.neighbors(v)
            clique.append(v)
            yield from extend(clique, [w for w in cands[i + 1:] if w in nv])
            clique.pop()

    if size <= 0:
        yield ()
        return
    yield from extend([], list(g.vertices))


def find_k5(g: Graph) -> Optional[tuple]:
    return next(iter_cliques(g, 5), None)


def clique_number(g: Graph, cap: Optional[int] = None) -> int:
    """Size of a largest clique; stops early once ``cap`` is reached."""
    best = 1 if g.n else 0
    while cap is None or best < cap:
        if next(iter_cliques(g, best + 1), None) is None:
            break
        best += 1
    return best


def find_diamond(g: Graph) -> Optional[tuple[Vertex, Vertex, Vertex, Vertex]]:
    """An induced K4 minus an edge as ``(a, b, c, d)``: ``ab`` the spine, ``cd`` missing."""
    for a, b in g.edges():
        common = sorted(g.neighbors(a) & g.neighbors(b))
        for i, c in enumerate(common):
            nc = g.neighbors(c)
            for d in common[i + 1:]:
                if d not in nc:
                    return (a, b, c, d)
    return None


def is_diamond_free(g: Graph) -> bool:
    return find_diamond(g) is None


def max_degree_vertex(g: Graph) -> Vertex:
    """Least vertex of maximum degree."""
    top = max(g.degree(v) for v in g.vertices)
    return next(v for v in g.vertices if g.degree(v) == top)
