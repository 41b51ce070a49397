"""Figure rendering for the report path. Headless (Agg) and deterministic."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .model import EvaluationResult
from .sensitivity import SensitivityReport


def utility_bar_chart(result: EvaluationResult, path: str) -> None:
    """Horizontal bars of utility degrees, optimal row pinned at K = 1."""
    labels = ["optimal", *result.alternatives]
    k = list(result.k_degrees)
    fig, ax = plt.subplots(figsize=(7, 0.5 * len(labels) + 1.5))
    colors = ["#777777"] + [
        "#2a7ab9" if name != result.ranking[0] else "#c2571a"
        for name in result.alternatives
    ]
    ax.barh(range(len(k)), k, color=colors)
    ax.set_yticks(range(len(k)), labels)
    ax.invert_yaxis()
    ax.set_xlabel("utility degree K")
    ax.set_xlim(0, 1.05)
    for i, v in enumerate(k):
        ax.text(v + 0.01, i, f"{v:.3f}", va="center", fontsize=9)
    ax.set_title(f"Ranking ({result.mode.value} mode), best: {result.ranking[0]}")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def sensitivity_plot(report: SensitivityReport, path: str) -> None:
    """K trajectories of every alternative across the swept weight grid."""
    fig, ax = plt.subplots(figsize=(7, 4.5))
    for name, traj in zip(report.alternatives, report.k_trajectories):
        ax.plot(report.grid, traj, marker="o", markersize=3, label=name)
    ax.axvline(report.baseline_weight, color="#999999", linestyle="--", linewidth=1,
               label=f"baseline {report.baseline_weight:g}")
    lo, hi = report.stability_interval
    ax.axvspan(lo, hi, color="#2a7ab9", alpha=0.08)
    ax.set_xlabel(f"weight of {report.criterion}")
    ax.set_ylabel("utility degree K")
    ax.set_title(f"Sensitivity to {report.criterion}")
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
