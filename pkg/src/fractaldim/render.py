"""Figure output: hand-written SVG plus matplotlib PNG reports.

SVG files are fully deterministic (same input, same bytes) and resolution
independent: content is scaled uniformly into a unit viewBox with the y axis
flipped to mathematical orientation. PNG figures are a convenience layer for
report commands and carry no determinism contract.
"""

from __future__ import annotations

import numpy as np

from .errors import ValidationError
from .serialize import fmt

SVG_SIZE = 512  # declared raster size; "0.5 px" markers are relative to it
MARKER_SIDE = 0.5 / SVG_SIZE
DEFAULT_STROKE = 1.5 / SVG_SIZE
PAD = 0.04


def _as_xy(points: np.ndarray) -> np.ndarray:
    pts = np.asarray(points, dtype=np.float64)
    if pts.ndim != 2:
        raise ValidationError("expected an (n, k) point array")
    if pts.shape[1] == 1:
        pts = np.column_stack([pts[:, 0], np.zeros(len(pts))])
    if pts.shape[1] != 2:
        raise ValidationError("SVG output supports 1-D and 2-D data only")
    return pts


def _fit_unit(pts: np.ndarray) -> np.ndarray:
    # uniform scale into [PAD, 1-PAD]^2, centered, y flipped to point up
    lo = pts.min(axis=0)
    extent = pts.max(axis=0) - lo
    span = float(extent.max())
    scale = (1.0 - 2.0 * PAD) / (span if span > 0.0 else 1.0)
    offset = PAD + (1.0 - 2.0 * PAD - extent * scale) / 2.0
    unit = offset + (pts - lo) * scale
    unit[:, 1] = 1.0 - unit[:, 1]
    return unit


def _svg_document(body: list[str]) -> str:
    head = (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SVG_SIZE}" '
        f'height="{SVG_SIZE}" viewBox="0 0 1 1">'
    )
    return "\n".join([head] + body + ["</svg>"]) + "\n"


def svg_polyline(points: np.ndarray, stroke_width: float = DEFAULT_STROKE) -> str:
    """Connected path through the points, in order."""
    unit = _fit_unit(_as_xy(points))
    coords = " ".join(f"{fmt(x)},{fmt(y)}" for x, y in unit)
    body = [
        f'<polyline fill="none" stroke="black" stroke-width="{fmt(stroke_width)}" '
        f'points="{coords}"/>'
    ]
    return _svg_document(body)


def svg_points(points: np.ndarray, side: float = MARKER_SIDE) -> str:
    """One small filled square per point."""
    unit = _fit_unit(_as_xy(points))
    half = side / 2.0
    body = [
        f'<rect x="{fmt(x - half)}" y="{fmt(y - half)}" '
        f'width="{fmt(side)}" height="{fmt(side)}" fill="black"/>'
        for x, y in unit
    ]
    return _svg_document(body)


def _pyplot():
    import matplotlib

    matplotlib.use("Agg", force=False)
    import matplotlib.pyplot as plt

    return plt


def plot_cloud(points: np.ndarray, path: str, connect: bool = False) -> None:
    """Scatter (or path) figure of a 1-D or 2-D sample."""
    plt = _pyplot()
    pts = _as_xy(points)
    fig, ax = plt.subplots(figsize=(6, 6))
    if connect:
        ax.plot(pts[:, 0], pts[:, 1], lw=0.7, color="black")
    else:
        ax.plot(pts[:, 0], pts[:, 1], ls="", marker="s", ms=0.8, color="black")
    ax.set_aspect("equal")
    ax.set_xlabel("x")
    ax.set_ylabel("y")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_series(scales, counts, slope: float, intercept: float, path: str) -> None:
    """Log-log cell counts against 1/scale with the fitted power law."""
    plt = _pyplot()
    scales = np.asarray(scales, dtype=np.float64)
    counts = np.asarray(counts, dtype=np.float64)
    fig, ax = plt.subplots(figsize=(6, 4.5))
    ax.loglog(1.0 / scales, counts, "o", color="black", label="N(eps)")
    grid = np.log(1.0 / scales)
    ax.loglog(1.0 / scales, np.exp(intercept + slope * grid), "-", color="tab:red",
              label=f"slope {slope:.4f}")
    ax.set_xlabel("1 / eps")
    ax.set_ylabel("occupied cells")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_profile(deltas, values, crossover: float | None, path: str) -> None:
    """Cover-sum sweep on a log value axis, with the crossing of 1 marked."""
    plt = _pyplot()
    deltas = np.asarray(deltas, dtype=np.float64)
    values = np.asarray(values, dtype=np.float64)
    fig, ax = plt.subplots(figsize=(6, 4.5))
    ax.semilogy(deltas, values, "-o", ms=3, color="black")
    ax.axhline(1.0, color="tab:gray", lw=0.8)
    if crossover is not None:
        ax.axvline(crossover, color="tab:red", lw=0.8, label=f"crossover {crossover:.4f}")
        ax.legend()
    ax.set_xlabel("delta")
    ax.set_ylabel("cover sum")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
