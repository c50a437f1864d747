"""Approximation algorithms for cluster vertex deletion.

Delete a minimum-cost vertex set so that every remaining component is a
clique. The main entry point is :func:`cluster_vd_apx`, a local-ratio
9/4-approximation; exact solvers in :mod:`clustervd.oracle` serve as
references.
"""

from .approx import (
    HittingSet,
    WeightSubtraction,
    cluster_vd_apx,
    hitting_p3_subgraphs_apx,
    naive_3apx,
    verify_feasible,
    verify_minimal,
)
from .graph import Graph, InducedP3, NeighborhoodDecomposition, WeightedGraph
from .oracle import BudgetExceeded, OracleBudget, exact_cluster_vd, exact_p3_subgraph_hitting
from .reduction import TwinMerge, ZeroCostRemoval, lift_solution, merge_true_twins
from .weighting import LocalWeighting, Provenance, WeightingInvariantError, weighting_list

__all__ = [
    "BudgetExceeded",
    "Graph",
    "HittingSet",
    "InducedP3",
    "LocalWeighting",
    "NeighborhoodDecomposition",
    "OracleBudget",
    "Provenance",
    "TwinMerge",
    "WeightSubtraction",
    "WeightedGraph",
    "WeightingInvariantError",
    "ZeroCostRemoval",
    "cluster_vd_apx",
    "exact_cluster_vd",
    "exact_p3_subgraph_hitting",
    "hitting_p3_subgraphs_apx",
    "lift_solution",
    "merge_true_twins",
    "naive_3apx",
    "verify_feasible",
    "verify_minimal",
    "weighting_list",
]
