"""JSON form of solutions and local-ratio traces. Rationals are ``"p/q"`` strings."""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Optional

from ..approx import TraceStep, WeightSubtraction
from ..reduction import TwinMerge, ZeroCostRemoval


def step_to_dict(step: TraceStep) -> dict:
    if isinstance(step, ZeroCostRemoval):
        return {"op": "zero-cost-removal", "vertex": step.vertex}
    if isinstance(step, TwinMerge):
        return {"op": "twin-merge", "keep": step.keep, "drop": step.drop}
    if isinstance(step, WeightSubtraction):
        lw = step.weighting
        return {
            "op": "weight-subtraction",
            "provenance": lw.provenance.value,
            "case": lw.case,
            "alpha": str(lw.alpha),
            "lambda": str(step.lam),
            "weights": {str(v): str(w) for v, w in sorted(lw.weights.items())},
            "zeroed": list(step.zeroed),
        }
    raise TypeError(f"not a trace step: {step!r}")


def solution_to_dict(
    vertices: Iterable,
    cost: Fraction,
    feasible: bool,
    minimal: bool,
    trace: Optional[Iterable[TraceStep]] = None,
    **extra,
) -> dict:
    out = {
        "vertices": sorted(vertices),
        "cost": str(Fraction(cost)),
        "feasible": feasible,
        "minimal": minimal,
        "trace": [step_to_dict(s) for s in trace] if trace is not None else [],
    }
    out.update(extra)
    return out


def load_solution_vertices(text: str) -> list:
    """Vertex list from a solution JSON document (or a bare JSON list)."""
    data = json.loads(text)
    if isinstance(data, dict):
        data = data.get("vertices")
    if not isinstance(data, list):
        raise ValueError("solution must be a JSON list or an object with a 'vertices' list")
    return data
