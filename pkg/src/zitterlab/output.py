"""CSV and SVG writers. Floats use the shortest round-trip repr so reruns are byte-identical."""

from __future__ import annotations

import csv
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

TRAJECTORY_HEADER = (
    "tau,x0,x1,x2,x3,u0,u1,u2,u3,wp0,wp1,wp2,wp3,wpp0,wpp1,wpp2,wpp3".split(",")
)
MONITORS_HEADER = ["tau", "H", "u_sq", "wp_drift"]
REPORT_HEADER = ["suite", "max_residual", "tolerance", "status"]
SUMMARY_HEADER = [
    "A_over_a",
    "omega",
    "k0",
    "helix",
    "radius",
    "measured_frequency",
    "measured_varpi_sq",
    "predicted_varpi_sq",
    "H_drift",
    "u_sq_drift",
    "wp_drift",
    "status",
]


def fmt(value) -> str:
    if isinstance(value, (float, np.floating)):
        return repr(float(value))
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return str(value)


def write_csv(path: Path, header: Sequence[str], rows: Iterable[Sequence]) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        for row in rows:
            w.writerow([fmt(v) for v in row])


def write_polyline_svg(path: Path, xs: np.ndarray, ys: np.ndarray, size: int = 480, margin: int = 20) -> None:
    """Minimal SVG with one polyline, y axis pointing up."""
    x_lo, x_hi = float(np.min(xs)), float(np.max(xs))
    y_lo, y_hi = float(np.min(ys)), float(np.max(ys))
    span = max(x_hi - x_lo, y_hi - y_lo, 1e-12)
    scale = (size - 2 * margin) / span
    px = margin + (xs - x_lo) * scale
    py = size - margin - (ys - y_lo) * scale
    points = " ".join(f"{x:.3f},{y:.3f}" for x, y in zip(px, py))
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
            f'viewBox="0 0 {size} {size}">\n'
            f'<rect width="{size}" height="{size}" fill="white"/>\n'
            f'<polyline fill="none" stroke="black" stroke-width="1" points="{points}"/>\n'
            "</svg>\n"
        )
