"""File-based matplotlib rendering: region pictures and count charts.

Figures are written straight to files (Agg backend); nothing interactive.
"""

from __future__ import annotations

import math
from typing import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.patches import Polygon, Rectangle  # noqa: E402

from .regions import CellRegion, Triangle

__all__ = ["save_region_figure", "save_table_figure", "log10_int"]

_ROW_HEIGHT = math.sqrt(3) / 2


def _triangle_vertices(cell: Triangle):
    base_x = cell.x / 2.0
    if cell.up:
        base_y = -(cell.row + 1) * _ROW_HEIGHT
        return [(base_x, base_y), (base_x + 1, base_y),
                (base_x + 0.5, base_y + _ROW_HEIGHT)]
    base_y = -cell.row * _ROW_HEIGHT
    return [(base_x, base_y), (base_x + 1, base_y),
            (base_x + 0.5, base_y - _ROW_HEIGHT)]


def save_region_figure(region: CellRegion, path: str, title: str | None = None) -> str:
    fig, ax = plt.subplots(figsize=(6, 6))
    if region.kind == "triangle":
        for cell in region.cells:
            face = "#cfe8ff" if cell.up else "#ffe3c2"
            ax.add_patch(Polygon(_triangle_vertices(cell), closed=True,
                                 facecolor=face, edgecolor="black", linewidth=0.8))
    else:
        for cell in region.cells:
            face = "#cfe8ff" if (cell.x + cell.y) % 2 == 0 else "#ffe3c2"
            ax.add_patch(Rectangle((cell.x, cell.y), 1, 1,
                                   facecolor=face, edgecolor="black", linewidth=0.8))
    ax.set_aspect("equal")
    ax.autoscale_view()
    ax.relim()
    ax.autoscale()
    ax.axis("off")
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def log10_int(value: int) -> float:
    """log10 of a positive integer of arbitrary size (for chart axes only)."""
    if value <= 0:
        raise ValueError("requires a positive integer")
    digits = str(value)
    head = int(digits[:15])
    return (len(digits) - 15) + math.log10(head) if len(digits) > 15 \
        else math.log10(value)


def save_table_figure(rows: Sequence[dict], x_key: str, y_key: str,
                      path: str, title: str | None = None) -> str:
    """Chart a table of exact counts: log10(count) against a parameter.

    The chart is a visual aid only; the delimited output keeps full
    precision.
    """
    xs = [float(row[x_key]) for row in rows]
    ys = [log10_int(int(row[y_key])) for row in rows]
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.plot(xs, ys, marker="o", linestyle="-", color="#1f77b4")
    ax.set_xlabel(x_key)
    ax.set_ylabel(f"log10({y_key})")
    if title:
        ax.set_title(title)
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
