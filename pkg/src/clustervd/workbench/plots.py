"""Figures for bench reports, written next to the CSV/JSON output."""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .bench import GUARANTEES, BenchReport  # noqa: E402

STYLE = {
    "figure.figsize": (6.0, 4.0),
    "font.size": 10,
    "axes.labelsize": 10,
    "legend.fontsize": 8,
    "axes.spines.top": False,
    "axes.spines.right": False,
}


def plot_report(report: BenchReport, out_dir) -> dict[str, Path]:
    """Ratio histogram and cost-vs-optimum scatter, one series per algorithm.

    Returns the paths written; nothing is drawn when no row has a ratio.
    """
    out = Path(out_dir)
    ratios = defaultdict(list)
    pairs = defaultdict(list)
    for r in report.rows:
        if r.ratio is None:
            continue
        ratios[r.algorithm].append(float(r.ratio_value))
        pairs[r.algorithm].append((float(Fraction(r.oracle_cost)), float(Fraction(r.cost))))
    if not ratios:
        return {}

    paths = {}
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots()
        # shared bins from 1 up to the loosest guarantee shown
        hi = max(max(max(r) for r in ratios.values()), *(float(GUARANTEES[a]) for a in ratios))
        bins = [1 + (hi - 1) * i / 40 for i in range(41)] if hi > 1 else 1
        for algo in sorted(ratios):
            _, _, patches = ax.hist(ratios[algo], bins=bins, alpha=0.6, label=algo)
            ax.axvline(float(GUARANTEES[algo]), linestyle="--", linewidth=0.9, color=patches[0].get_facecolor()[:3])
        ax.set_xlabel("cost / optimum")
        ax.set_ylabel("instances")
        ax.legend()
        fig.tight_layout()
        paths["ratio_hist"] = out / "ratio_hist.png"
        fig.savefig(paths["ratio_hist"], dpi=120)
        plt.close(fig)

        fig, ax = plt.subplots()
        top = 0.0
        for algo in sorted(pairs):
            xs, ys = zip(*pairs[algo])
            top = max(top, max(xs), max(ys))
            ax.scatter(xs, ys, s=8, alpha=0.6, label=algo)
        ax.plot([0, top], [0, top], color="k", linewidth=0.8)
        ax.set_xlabel("optimum cost")
        ax.set_ylabel("solution cost")
        ax.legend()
        fig.tight_layout()
        paths["cost_scatter"] = out / "cost_scatter.png"
        fig.savefig(paths["cost_scatter"], dpi=120)
        plt.close(fig)
    return paths

