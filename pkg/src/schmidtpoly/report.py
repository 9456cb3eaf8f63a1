"""Render a run manifest to a CSV table and matplotlib figures.

Produces, in the output directory:

    cells.csv               one row per grid cell
    verdict_grid.png        pass/fail matrix, parameter combos x n
    coefficient_growth.png  decimal digits of the largest coefficient vs n

Figures are rendered with the Agg backend, so no display is needed.
"""

from __future__ import annotations

import csv
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

CSV_COLUMNS = [
    "n",
    "m",
    "r",
    "epsilon",
    "a",
    "check",
    "weight",
    "verdict",
    "num_terms",
    "max_coeff_digits",
    "elapsed_ms",
]


def _max_coeff_digits(cell: dict) -> int:
    return max((len(c.lstrip("-")) for c in cell["coefficients"]), default=0)


def _combo_label(cell: dict) -> str:
    eps = "+" if cell["epsilon"] == 1 else "-"
    label = f"m={cell['m']} r={cell['r']} e={eps}"
    if cell["a"]:
        label += f" a={cell['a']}"
    return label


def write_cells_csv(manifest: dict, path: Path) -> None:
    with path.open("w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(CSV_COLUMNS)
        for cell in manifest["cells"]:
            writer.writerow(
                [
                    cell["n"],
                    cell["m"],
                    cell["r"],
                    cell["epsilon"],
                    cell["a"],
                    cell["check"],
                    cell["weight"],
                    cell["verdict"],
                    cell["num_terms"],
                    _max_coeff_digits(cell),
                    cell["elapsed_ms"],
                ]
            )


def plot_verdict_grid(manifest: dict, path: Path) -> None:
    cells = manifest["cells"]
    ns = sorted({c["n"] for c in cells})
    combos = sorted({_combo_label(c) for c in cells})
    grid = [[0.5] * len(ns) for _ in combos]
    for cell in cells:
        row = combos.index(_combo_label(cell))
        col = ns.index(cell["n"])
        grid[row][col] = 1.0 if cell["verdict"] == "pass" else 0.0
    fig, ax = plt.subplots(
        figsize=(max(4.0, 0.3 * len(ns) + 2.0), max(3.0, 0.3 * len(combos) + 1.5))
    )
    ax.imshow(grid, cmap="RdYlGn", vmin=0.0, vmax=1.0, aspect="auto")
    ax.set_xticks(range(len(ns)), [str(n) for n in ns], fontsize=7)
    ax.set_yticks(range(len(combos)), combos, fontsize=7)
    ax.set_xlabel("n")
    ax.set_title(f"{manifest['spec']['check']} verdicts ({manifest['aggregate']})")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_coefficient_growth(manifest: dict, path: Path) -> None:
    cells = manifest["cells"]
    series: dict[str, dict[int, int]] = {}
    for cell in cells:
        label = _combo_label(cell)
        digits = _max_coeff_digits(cell)
        series.setdefault(label, {})
        series[label][cell["n"]] = max(series[label].get(cell["n"], 0), digits)
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    for label in sorted(series):
        points = sorted(series[label].items())
        ax.plot([p[0] for p in points], [p[1] for p in points], marker=".", label=label)
    ax.set_xlabel("n")
    ax.set_ylabel("decimal digits of largest coefficient")
    ax.set_title("coefficient growth")
    if len(series) <= 12:
        ax.legend(fontsize=6)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_report(manifest: dict, out_dir: Path) -> list[Path]:
    """Write the CSV and both figures; returns the written paths."""
    out_dir.mkdir(parents=True, exist_ok=True)
    written = []
    csv_path = out_dir / "cells.csv"
    write_cells_csv(manifest, csv_path)
    written.append(csv_path)
    grid_path = out_dir / "verdict_grid.png"
    plot_verdict_grid(manifest, grid_path)
    written.append(grid_path)
    growth_path = out_dir / "coefficient_growth.png"
    plot_coefficient_growth(manifest, growth_path)
    written.append(growth_path)
    return written
