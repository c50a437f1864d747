"""Benchmark harness: run solvers over a corpus and compare with the exact optimum."""

from __future__ import annotations

import csv
import json
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

from ..approx import (
    cluster_vd_apx,
    hitting_p3_subgraphs_apx,
    naive_3apx,
    verify_feasible,
    verify_minimal,
    verify_p3_subgraph_feasible,
    verify_p3_subgraph_minimal,
)
from ..graph import WeightedGraph
from ..oracle import BudgetExceeded, OracleBudget, exact_cluster_vd, exact_p3_subgraph_hitting
from .instance_io import read_instance

log = logging.getLogger(__name__)

ALGORITHMS = ("lr94", "naive3", "p3sub", "exact")
INSTANCE_SUFFIXES = (".cvd", ".txt")

# the guarantee each algorithm is checked against
GUARANTEES = {"lr94": Fraction(9, 4), "naive3": Fraction(3), "p3sub": Fraction(2), "exact": Fraction(1)}


@dataclass
class BenchRow:
    instance: str
    n: Optional[int]
    m: Optional[int]
    algorithm: str
    status: str
    cost: Optional[str] = None
    oracle_cost: Optional[str] = None
    ratio: Optional[str] = None
    steps: Optional[int] = None
    feasible: Optional[bool] = None
    minimal: Optional[bool] = None
    seconds: Optional[float] = None
    error: Optional[str] = None

    @property
    def ratio_value(self) -> Optional[Fraction]:
        return Fraction(self.ratio) if self.ratio is not None else None


@dataclass
class BenchReport:
    rows: list[BenchRow]

    def to_json(self) -> str:
        return json.dumps([asdict(r) for r in self.rows], indent=2)

    def write_csv(self, path) -> None:
        fields = list(BenchRow.__dataclass_fields__)
        with open(path, "w", newline="") as fh:
            w = csv.DictWriter(fh, fieldnames=fields)
            w.writeheader()
            for r in self.rows:
                w.writerow({k: "" if v is None else v for k, v in asdict(r).items()})

    def violations(self) -> list[BenchRow]:
        """Rows whose ratio exceeds the algorithm's guarantee."""
        return [
            r for r in self.rows
            if r.status == "bound-violated"
            or (r.ratio is not None and r.ratio_value > GUARANTEES[r.algorithm])
        ]


def _ratio(cost: Fraction, opt: Fraction) -> Optional[Fraction]:
    # undefined when a positive cost meets a zero optimum
    if opt == 0:
        return Fraction(1) if cost == 0 else None
    return cost / opt


def solve_one(wg: WeightedGraph, algorithm: str, mode: str = "general"):
    """Run one algorithm; returns ``(vertex set, trace length or None)``."""
    if algorithm == "lr94":
        x, trace = cluster_vd_apx(wg, mode=mode)
        return x.vertices, len(trace)
    if algorithm == "naive3":
        return naive_3apx(wg).vertices, None
    if algorithm == "p3sub":
        return hitting_p3_subgraphs_apx(wg).vertices, None
    if algorithm == "exact":
        return exact_cluster_vd(wg)[0], None
    raise ValueError(f"unknown algorithm {algorithm!r}; expected one of {ALGORITHMS}")


def _bench_file(path: Path, algorithms: Sequence[str], oracle_max_n: int, budget: OracleBudget) -> list[BenchRow]:
    name = path.name
    try:
        wg = read_instance(path)
    except (OSError, ValueError) as exc:
        return [BenchRow(name, None, None, a, "error", error=str(exc)) for a in algorithms]
    g = wg.graph
    oracle: dict[str, Optional[Fraction]] = {}
    run_oracle = oracle_max_n > 0 and g.n <= oracle_max_n

    def opt_for(kind: str) -> Optional[Fraction]:
        if not run_oracle:
            return None
        if kind not in oracle:
            solver = exact_p3_subgraph_hitting if kind == "p3sub" else exact_cluster_vd
            try:
                oracle[kind] = solver(wg, budget)[1]
            except BudgetExceeded as exc:
                log.info("oracle skipped on %s: %s", name, exc)
                oracle[kind] = None
        return oracle[kind]

    rows = []
    for algo in algorithms:
        start = time.perf_counter()
        try:
            x, steps = solve_one(wg, algo)
        except Exception as exc:  # keep the run going; the row records it
            rows.append(BenchRow(name, g.n, g.m, algo, "error", error=f"{type(exc).__name__}: {exc}"))
            continue
        elapsed = time.perf_counter() - start
        cost = wg.cost_of(x)
        if algo == "p3sub":
            feasible = verify_p3_subgraph_feasible(g, x)
            minimal = feasible and verify_p3_subgraph_minimal(g, x)
        else:
            feasible = verify_feasible(g, x)
            minimal = feasible and verify_minimal(g, x)
        opt = opt_for("p3sub" if algo == "p3sub" else "cvd")
        ratio = None if opt is None else _ratio(cost, opt)
        status = "ok" if feasible else "infeasible"
        if opt is not None and ratio is None:
            status = "bound-violated"
        rows.append(BenchRow(
            name, g.n, g.m, algo, status,
            cost=str(cost),
            oracle_cost=None if opt is None else str(opt),
            ratio=None if ratio is None else str(ratio),
            steps=steps,
            feasible=feasible,
            minimal=minimal,
            seconds=round(elapsed, 6),
        ))
    return rows


def corpus_files(corpus) -> list[Path]:
    root = Path(corpus)
    if not root.is_dir():
        raise FileNotFoundError(f"corpus directory {root} does not exist")
    return sorted(p for p in root.iterdir() if p.is_file() and p.suffix in INSTANCE_SUFFIXES)


def run_bench(
    corpus,
    algorithms: Sequence[str] = ("lr94", "naive3"),
    oracle_max_n: int = 12,
    budget: OracleBudget = OracleBudget(),
    jobs: int = 1,
) -> BenchReport:
    """Solve every instance file in ``corpus`` with each algorithm.

    The exact oracle runs on instances with at most ``oracle_max_n``
    vertices (0 disables it); rows without an oracle value leave the ratio
    blank. Rows are ordered by file name, then by algorithm order.
    """
    for a in algorithms:
        if a not in ALGORITHMS:
            raise ValueError(f"unknown algorithm {a!r}; expected one of {ALGORITHMS}")
    files = corpus_files(corpus)
    if jobs > 1 and len(files) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_bench_file, files, [algorithms] * len(files),
                                   [oracle_max_n] * len(files), [budget] * len(files)))
    else:
        chunks = [_bench_file(f, algorithms, oracle_max_n, budget) for f in files]
    return BenchReport([row for chunk in chunks for row in chunk])


def write_report(report: BenchReport, out_dir, figures: bool = True) -> dict[str, Path]:
    """Write ``report.csv``, ``report.json`` and (optionally) PNG figures into ``out_dir``."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    paths = {"csv": out / "report.csv", "json": out / "report.json"}
    report.write_csv(paths["csv"])
    paths["json"].write_text(report.to_json() + "\n")
    if figures:
        from .plots import plot_report

        paths.update(plot_report(report, out))
    return paths
