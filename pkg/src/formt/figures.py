"""Matplotlib summary figures and delimited exports for kill reports."""

from __future__ import annotations

import csv
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .layout import DEFAULT_CONFIG
from .testbase import KillReport, mutant_to_dict

STATUS_COLOR_KEY = {
    ("true", True): "killed",
    ("true", False): "notKilled",
}


def _bar_color(mutant, palette) -> str:
    if mutant.is_true is None:
        return palette["unknown"]
    if mutant.is_true is False:
        return palette["equivalent"]
    killed = bool(mutant.info and mutant.info.killed)
    return palette["killed"] if killed else palette["notKilled"]


def write_report_figures(report: KillReport, out_dir) -> list[Path]:
    """Write a per-mutant kill chart (PNG) and a mutants.csv next to it."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    palette = DEFAULT_CONFIG["palette"]

    ids = [m.id for m in report.mutants]
    fractions = [m.info.percent_failing if m.info else 0.0 for m in report.mutants]
    colors = [_bar_color(m, palette) for m in report.mutants]

    fig, ax = plt.subplots(figsize=(max(6, 0.6 * len(ids)), 4))
    ax.bar(range(len(ids)), fractions, color=colors)
    ax.set_xticks(range(len(ids)))
    ax.set_xticklabels(ids, rotation=45, ha="right")
    ax.set_ylim(0, 1.05)
    ax.set_ylabel("fraction of tests failing")
    ax.set_title(f"mutation score {report.mutation_score:.3f}")
    fig.tight_layout()
    png = out / "kill_chart.png"
    fig.savefig(png, dpi=120)
    plt.close(fig)

    csv_path = out / "mutants.csv"
    with open(csv_path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(
            ["id", "operator", "path", "form", "status", "testsFailing", "testsTotal", "killed"]
        )
        for m in report.mutants:
            d = mutant_to_dict(m)
            info = d.get("info", {})
            writer.writerow(
                [
                    d["id"],
                    d["operator"],
                    d["path"],
                    d["form"],
                    d["status"],
                    info.get("testsFailing", 0),
                    info.get("testsTotal", 0),
                    info.get("killed", False),
                ]
            )
    return [png, csv_path]
