"""Euclidean primitives: points, boxes, affine contractions, point clouds.

Everything is plain float64 numpy; a point is a 1-D coordinate vector and a
cloud is an (n, k) array. All operations here are pure functions on
immutable values.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.spatial import cKDTree

from .errors import InternalError, ValidationError

FIXED_POINT_TOL = 1e-12


def as_point(p) -> np.ndarray:
    """Coerce to a finite 1-D float64 coordinate vector."""
    arr = np.atleast_1d(np.asarray(p, dtype=np.float64))
    if arr.ndim != 1 or arr.size < 1:
        raise ValidationError(f"a point must be a 1-D coordinate vector, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValidationError("point has non-finite coordinates")
    return arr


@dataclass(frozen=True, eq=False)
class Box:
    """Axis-aligned box spanned by two opposite corners, lo[i] <= hi[i]."""

    lo: np.ndarray
    hi: np.ndarray

    def __post_init__(self):
        lo = as_point(self.lo)
        hi = as_point(self.hi)
        if lo.shape != hi.shape:
            raise ValidationError("box corners must share a dimension")
        if np.any(lo > hi):
            raise ValidationError("box corners are not ordered: lo[i] <= hi[i] required")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @property
    def dim(self) -> int:
        return self.lo.size

    @property
    def extent(self) -> np.ndarray:
        return self.hi - self.lo


@dataclass(frozen=True, eq=False)
class PointCloud:
    """Finite, non-empty sample of a subset of R^k as an (n, k) float array."""

    points: np.ndarray

    def __post_init__(self):
        pts = np.asarray(self.points, dtype=np.float64)
        if pts.ndim == 1:
            pts = pts.reshape(-1, 1)
        if pts.ndim != 2 or pts.shape[0] < 1 or pts.shape[1] < 1:
            raise ValidationError(f"a point cloud must be a non-empty (n, k) array, got shape {pts.shape}")
        if not np.all(np.isfinite(pts)):
            raise ValidationError("point cloud has non-finite coordinates")
        object.__setattr__(self, "points", pts)

    @property
    def dim(self) -> int:
        return self.points.shape[1]

    def __len__(self) -> int:
        return self.points.shape[0]

    def bounding_box(self) -> Box:
        return Box(self.points.min(axis=0), self.points.max(axis=0))


@dataclass(frozen=True, eq=False)
class AffineMap:
    """Affine map x -> linear @ x + offset with its Lipschitz ratio.

    The ratio is the operator norm (largest singular value) of the linear
    part; for similarity transforms it equals the scale factor. Strict
    contractivity (ratio < 1) is *not* enforced at construction so that
    candidate systems can be built and then validated; operations that
    require a contraction check it themselves.
    """

    linear: np.ndarray
    offset: np.ndarray
    ratio: float = None  # type: ignore[assignment]  # filled in below

    def __post_init__(self):
        lin = np.asarray(self.linear, dtype=np.float64)
        if lin.ndim == 0:
            lin = lin.reshape(1, 1)
        off = as_point(self.offset)
        k = off.size
        if lin.shape != (k, k):
            raise ValidationError(f"linear part must be ({k}, {k}) to match the offset, got {lin.shape}")
        if not np.all(np.isfinite(lin)):
            raise ValidationError("linear part has non-finite entries")
        opnorm = float(np.linalg.norm(lin, 2))
        ratio = self.ratio
        if ratio is None:
            ratio = opnorm
        elif opnorm > ratio + 1e-12:
            raise ValidationError(
                f"declared ratio {ratio} is below the operator norm {opnorm} of the linear part"
            )
        object.__setattr__(self, "linear", lin)
        object.__setattr__(self, "offset", off)
        object.__setattr__(self, "ratio", float(ratio))

    @property
    def dim(self) -> int:
        return self.offset.size

    def apply(self, points: np.ndarray) -> np.ndarray:
        """Apply the map to one point (k,) or to a stack of points (n, k)."""
        pts = np.asarray(points, dtype=np.float64)
        squeeze = pts.ndim == 1
        pts = np.atleast_2d(pts)
        if pts.shape[1] != self.dim:
            raise ValidationError(f"map of dimension {self.dim} applied to points of dimension {pts.shape[1]}")
        out = pts @ self.linear.T + self.offset
        return out[0] if squeeze else out

    def fixed_point(self) -> np.ndarray:
        """Solve p = linear @ p + offset; requires a strict contraction."""
        if not self.ratio < 1.0:
            raise ValidationError(f"fixed point requires a strict contraction, ratio is {self.ratio}")
        eye = np.eye(self.dim)
        try:
            p = np.linalg.solve(eye - self.linear, self.offset)
        except np.linalg.LinAlgError as exc:  # unreachable for ratio < 1
            raise InternalError("I - linear is singular despite ratio < 1") from exc
        residual = float(np.linalg.norm(self.apply(p) - p))
        if residual > FIXED_POINT_TOL:
            raise InternalError(f"fixed point residual {residual} exceeds {FIXED_POINT_TOL}")
        return p


def hausdorff_distance(a: PointCloud, b: PointCloud) -> float:
    """Symmetric Hausdorff distance between two finite point clouds.

    max over both directions of max_x min_y ||x - y||; zero iff the clouds
    are equal as sets.
    """
    if a.dim != b.dim:
        raise ValidationError(f"clouds have different dimensions ({a.dim} vs {b.dim})")
    d_ab = float(np.max(cKDTree(b.points).query(a.points)[0]))
    d_ba = float(np.max(cKDTree(a.points).query(b.points)[0]))
    return max(d_ab, d_ba)
