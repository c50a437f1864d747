"""Line-based instance format.

::

    # comment
    p cvd <n> <m>
    v <id> <weight>
    e <u> <v>

Vertex ids run from 1 to n. Weights are nonnegative rationals written as
integers, decimals (``2.5``) or fractions (``5/2``) and are kept exact.
"""

from __future__ import annotations

from fractions import Fraction

from ..graph import Graph, WeightedGraph


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"expected an integer, got {tok!r}", lineno) from None


def parse_instance(text: str) -> WeightedGraph:
    n = m = None
    weights: dict[int, Fraction] = {}
    edges: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        kind = tok[0]
        if kind == "p":
            if n is not None:
                raise ParseError("duplicate header", lineno)
            if len(tok) != 4 or tok[1] != "cvd":
                raise ParseError("header must read 'p cvd <n> <m>'", lineno)
            n, m = _int(tok[2], lineno), _int(tok[3], lineno)
            if n < 0 or m < 0:
                raise ParseError("negative size in header", lineno)
            continue
        if n is None:
            raise ParseError("record before the 'p cvd' header", lineno)
        if kind == "v":
            if len(tok) != 3:
                raise ParseError("vertex record must read 'v <id> <weight>'", lineno)
            v = _int(tok[1], lineno)
            if not 1 <= v <= n:
                raise ParseError(f"vertex id {v} outside 1..{n}", lineno)
            if v in weights:
                raise ParseError(f"vertex {v} has two weights", lineno)
            try:
                w = Fraction(tok[2])
            except (ValueError, ZeroDivisionError):
                raise ParseError(f"bad weight {tok[2]!r}", lineno) from None
            if w < 0:
                raise ParseError(f"negative weight {tok[2]} on vertex {v}", lineno)
            weights[v] = w
        elif kind == "e":
            if len(tok) != 3:
                raise ParseError("edge record must read 'e <u> <v>'", lineno)
            u, v = _int(tok[1], lineno), _int(tok[2], lineno)
            for x in (u, v):
                if not 1 <= x <= n:
                    raise ParseError(f"vertex id {x} outside 1..{n}", lineno)
            if u == v:
                raise ParseError(f"self-loop on vertex {u}", lineno)
            key = (min(u, v), max(u, v))
            if key in edges:
                raise ParseError(f"duplicate edge {u} {v}", lineno)
            edges.add(key)
        else:
            raise ParseError(f"unknown record type {kind!r}", lineno)
    if n is None:
        raise ParseError("missing 'p cvd' header")
    for v in range(1, n + 1):
        if v not in weights:
            raise ParseError(f"vertex {v} has no weight")
    if len(edges) != m:
        raise ParseError(f"header declares {m} edges, found {len(edges)}")
    return WeightedGraph(Graph(range(1, n + 1), sorted(edges)), weights)


def format_rational(x: Fraction) -> str:
    return str(Fraction(x))


def serialize_instance(wg: WeightedGraph, comment: str | None = None) -> str:
    g = wg.graph
    if list(g.vertices) != list(range(1, g.n + 1)):
        raise ValueError("instance files need vertex ids 1..n")
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"p cvd {g.n} {g.m}")
    lines.extend(f"v {v} {format_rational(wg.cost[v])}" for v in g.vertices)
    lines.extend(f"e {u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def read_instance(path) -> WeightedGraph:
    with open(path) as fh:
        return parse_instance(fh.read())


def write_instance(path, wg: WeightedGraph, comment: str | None = None) -> None:
    with open(path, "w") as fh:
        fh.write(serialize_instance(wg, comment))
