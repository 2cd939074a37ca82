"""Finite-scale dimension estimators built on axis-aligned grid covers.

The true Hausdorff construction takes an infimum over all countable covers,
which no program can enumerate; restricting to half-open grid cells gives a
computable upper bound. Three readouts are provided: raw occupied-cell
counts, the weighted cover sum N(eps) * (eps * sqrt(k))^delta, and an OLS
slope of log N against log(1/eps).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NumericError, ValidationError
from .geometry import PointCloud

DEFAULT_PROFILE_POINTS = 61


@dataclass(frozen=True)
class GridSpec:
    """Family of nested grids: level k has cell side base**-k, anchored at origin.

    origin may be a scalar (broadcast across axes) or a per-axis sequence.
    """

    base: float = 2.0
    origin: float | tuple = 0.0
    levels: tuple[int, int] = (1, 8)

    def __post_init__(self):
        base = float(self.base)
        if not np.isfinite(base) or base <= 1.0:
            raise ValidationError(f"grid base must be > 1, got {self.base}")
        lo, hi = self.levels
        lo, hi = int(lo), int(hi)
        if lo > hi:
            raise ValidationError(f"level range must satisfy k_min <= k_max, got {lo}:{hi}")
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "levels", (lo, hi))

    def origin_for(self, dim: int) -> np.ndarray:
        origin = np.asarray(self.origin, dtype=np.float64)
        if origin.ndim == 0:
            origin = np.full(dim, float(origin))
        if origin.shape != (dim,):
            raise ValidationError(f"grid origin has shape {origin.shape}, expected ({dim},)")
        if not np.isfinite(origin).all():
            raise ValidationError("grid origin must be finite")
        return origin

    def scales(self) -> np.ndarray:
        lo, hi = self.levels
        return self.base ** -np.arange(lo, hi + 1, dtype=np.float64)


@dataclass(frozen=True)
class ScaleSeries:
    """Occupied-cell counts N(eps) over strictly decreasing scales."""

    scales: np.ndarray
    counts: np.ndarray

    def __post_init__(self):
        scales = np.asarray(self.scales, dtype=np.float64)
        counts = np.asarray(self.counts, dtype=np.int64)
        if scales.ndim != 1 or scales.shape != counts.shape:
            raise ValidationError("scales and counts must be 1-D arrays of equal length")
        if scales.size < 1:
            raise ValidationError("scale series must be non-empty")
        if np.any(np.diff(scales) >= 0.0):
            raise ValidationError("scales must be strictly decreasing")
        if np.any(counts < 1):
            raise ValidationError("counts must be at least 1")
        scales.setflags(write=False)
        counts.setflags(write=False)
        object.__setattr__(self, "scales", scales)
        object.__setattr__(self, "counts", counts)

    def __len__(self) -> int:
        return self.scales.size


@dataclass(frozen=True)
class DimensionFit:
    """OLS readout of log N(eps) against log(1/eps)."""

    slope: float
    intercept: float
    r_squared: float
    stderr: float

    def __post_init__(self):
        if not 0.0 <= self.r_squared <= 1.0:
            raise ValidationError(f"r_squared must be in [0, 1], got {self.r_squared}")


@dataclass(frozen=True)
class MeasureProfile:
    """Cover-sum values at one scale across a sweep of candidate dimensions."""

    epsilon: float
    deltas: np.ndarray
    values: np.ndarray

    def __post_init__(self):
        deltas = np.asarray(self.deltas, dtype=np.float64)
        values = np.asarray(self.values, dtype=np.float64)
        if deltas.ndim != 1 or deltas.shape != values.shape or deltas.size < 1:
            raise ValidationError("deltas and values must be 1-D arrays of equal length")
        if np.any(deltas <= 0.0) or np.any(np.diff(deltas) <= 0.0):
            raise ValidationError("deltas must be positive and strictly increasing")
        if np.any(values < 0.0):
            raise ValidationError("profile values must be non-negative")
        deltas.setflags(write=False)
        values.setflags(write=False)
        object.__setattr__(self, "deltas", deltas)
        object.__setattr__(self, "values", values)


def grid_count(cloud: PointCloud, scale: float, grid: GridSpec = GridSpec()):
    """Number of half-open grid cells of the given side that contain a point.

    Returns (count, cells) where cells is the sorted unique array of integer
    cell indices, one row per occupied cell.
    """
    scale = float(scale)
    if not np.isfinite(scale) or scale <= 0.0:
        raise ValidationError(f"scale must be positive, got {scale}")
    origin = grid.origin_for(cloud.dim)
    idx = np.floor((cloud.points - origin) / scale)
    if not np.isfinite(idx).all():
        raise NumericError("non-finite cell index; scale too small for the data")
    cells = np.unique(idx.astype(np.int64), axis=0)
    return cells.shape[0], cells


def cover_sum(cloud: PointCloud, scale: float, delta: float, grid: GridSpec = GridSpec()) -> float:
    """Grid-cover bound N(eps) * diam^delta with diam = eps * sqrt(k).

    sqrt(k) is the true diameter of a k-dimensional cell of side eps; in 1-D
    it reduces to eps itself.
    """
    delta = float(delta)
    if not delta > 0.0:
        raise ValidationError(f"delta must be positive, got {delta}")
    count, _ = grid_count(cloud, scale, grid)
    diam = float(scale) * np.sqrt(cloud.dim)
    return float(count * diam**delta)


def count_series(cloud: PointCloud, grid: GridSpec = GridSpec()) -> ScaleSeries:
    """Occupied-cell counts at every level of the grid family."""
    scales = grid.scales()
    counts = np.array([grid_count(cloud, s, grid)[0] for s in scales], dtype=np.int64)
    return ScaleSeries(scales, counts)


def _truncate_saturated(series: ScaleSeries, n_points: int) -> ScaleSeries:
    # two consecutive counts pinned at the sample size mean the grid has
    # outresolved the sample; everything from there on only flattens the slope
    sat = series.counts == n_points
    pair = sat[:-1] & sat[1:]
    if not pair.any():
        return series
    first = int(np.argmax(pair))
    if first < 2:
        return series  # fewer than 2 useful levels left; keep the data as is
    return ScaleSeries(series.scales[:first], series.counts[:first])


def fit_dimension(series: ScaleSeries) -> DimensionFit:
    """Unweighted least squares of log N against log(1/eps)."""
    if len(series) < 2:
        raise NumericError("degenerate regression: need at least 2 scales")
    x = -np.log(series.scales)
    y = np.log(series.counts.astype(np.float64))
    xbar, ybar = x.mean(), y.mean()
    sxx = float(((x - xbar) ** 2).sum())
    if sxx == 0.0:
        raise NumericError("degenerate regression: scales are not distinct")
    sxy = float(((x - xbar) * (y - ybar)).sum())
    slope = sxy / sxx
    intercept = ybar - slope * xbar
    resid = y - (slope * x + intercept)
    ss_res = float((resid**2).sum())
    ss_tot = float(((y - ybar) ** 2).sum())
    r_squared = 1.0 if ss_tot == 0.0 else 1.0 - ss_res / ss_tot
    r_squared = min(1.0, max(0.0, r_squared))
    n = len(series)
    stderr = 0.0 if n <= 2 else float(np.sqrt(ss_res / (n - 2) / sxx))
    return DimensionFit(slope=slope, intercept=intercept, r_squared=r_squared, stderr=stderr)


def box_dimension(cloud: PointCloud, grid: GridSpec = GridSpec()):
    """Count at every grid level and fit a dimension estimate.

    Returns (ScaleSeries, DimensionFit). The series reports every requested
    level; the fit drops saturated fine-scale levels when enough coarser
    levels remain.
    """
    series = count_series(cloud, grid)
    fit = fit_dimension(_truncate_saturated(series, len(cloud)))
    return series, fit


def default_deltas(dim: int, n: int = DEFAULT_PROFILE_POINTS) -> np.ndarray:
    """Candidate-dimension sweep bracketing everything embeddable in R^dim."""
    return np.linspace(0.05, dim + 0.5, n)


def measure_profile(
    cloud: PointCloud, epsilon: float, deltas, grid: GridSpec = GridSpec()
) -> MeasureProfile:
    """Cover sums at one scale for each candidate dimension in deltas."""
    deltas = np.asarray(deltas, dtype=np.float64)
    if deltas.ndim != 1 or deltas.size < 1:
        raise ValidationError("deltas must be a non-empty 1-D sequence")
    if np.any(deltas <= 0.0) or np.any(np.diff(deltas) <= 0.0):
        raise ValidationError("deltas must be positive and strictly increasing")
    count, _ = grid_count(cloud, epsilon, grid)
    diam = float(epsilon) * np.sqrt(cloud.dim)
    values = count * diam**deltas
    return MeasureProfile(epsilon=float(epsilon), deltas=deltas, values=values)


def crossover_dimension(profile: MeasureProfile) -> float:
    """The delta where the profile crosses 1, by interpolating log(value).

    For a single-scale grid sum, log(value) is affine in delta, so linear
    interpolation between bracketing samples recovers the crossing exactly.
    """
    logs = np.log(profile.values)
    if logs[0] == 0.0:
        return float(profile.deltas[0])
    for i in range(len(logs) - 1):
        y0, y1 = logs[i], logs[i + 1]
        if y1 == 0.0:
            return float(profile.deltas[i + 1])
        if (y0 > 0.0) != (y1 > 0.0):
            d0, d1 = profile.deltas[i], profile.deltas[i + 1]
            return float(d0 + (0.0 - y0) * (d1 - d0) / (y1 - y0))
    raise NumericError("profile does not cross 1 on the given delta range")
