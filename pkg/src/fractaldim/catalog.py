"""Built-in constructions: Cantor set, Koch curve and snowflake, Sierpinski
triangle, pseudo-Hilbert curves.

Each construction is available as explicit level-n geometry; the self-similar
ones also come as ContractionSystems so the samplers and the Moran solver can
consume them.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import BudgetError, ValidationError
from .geometry import AffineMap, PointCloud
from .ifs import ContractionSystem, point_budget
from .osc import ConvexRegion

SQRT3 = np.sqrt(3.0)
CANTOR_MAX_LEVEL = 30
HILBERT_MAX_ORDER = 12

# +60 degree rotation scaled by 1/3; entries are exact expressions, not floats
# of rounded decimals, so ratios come out as 1/3 to machine precision.
_ROT60_THIRD = np.array([[1 / 6, -SQRT3 / 6], [SQRT3 / 6, 1 / 6]])
_ROT60M_THIRD = np.array([[1 / 6, SQRT3 / 6], [-SQRT3 / 6, 1 / 6]])


@dataclass(frozen=True, eq=False)
class Polyline:
    """An ordered open or closed chain of 2-D vertices."""

    vertices: np.ndarray

    def __post_init__(self):
        verts = np.asarray(self.vertices, dtype=np.float64)
        if verts.ndim != 2 or verts.shape[1] != 2:
            raise ValidationError(f"polyline vertices must be (n, 2), got {verts.shape}")
        if verts.shape[0] < 2:
            raise ValidationError("a polyline needs at least 2 vertices")
        if not np.isfinite(verts).all():
            raise ValidationError("polyline vertices must be finite")
        if np.any(np.all(verts[1:] == verts[:-1], axis=1)):
            raise ValidationError("consecutive polyline vertices must be distinct")
        verts.setflags(write=False)
        object.__setattr__(self, "vertices", verts)

    def __len__(self) -> int:
        return self.vertices.shape[0]

    @property
    def segment_count(self) -> int:
        return len(self) - 1

    def total_length(self) -> float:
        return float(np.linalg.norm(np.diff(self.vertices, axis=0), axis=1).sum())

    def as_cloud(self) -> PointCloud:
        return PointCloud(self.vertices)


@dataclass(frozen=True, eq=False)
class IntervalSet:
    """Sorted, pairwise disjoint closed intervals inside [0, 1]."""

    intervals: np.ndarray

    def __post_init__(self):
        ivals = np.asarray(self.intervals, dtype=np.float64)
        if ivals.ndim != 2 or ivals.shape[1] != 2:
            raise ValidationError(f"intervals must be (m, 2), got {ivals.shape}")
        if ivals.shape[0] < 1:
            raise ValidationError("interval set must be non-empty")
        if np.any(ivals[:, 0] > ivals[:, 1]):
            raise ValidationError("each interval needs a <= b")
        if ivals[0, 0] < 0.0 or ivals[-1, 1] > 1.0:
            raise ValidationError("intervals must lie within [0, 1]")
        if ivals.shape[0] > 1 and np.any(ivals[1:, 0] <= ivals[:-1, 1]):
            raise ValidationError("intervals must be sorted and disjoint")
        ivals.setflags(write=False)
        object.__setattr__(self, "intervals", ivals)

    def __len__(self) -> int:
        return self.intervals.shape[0]

    def midpoints(self) -> PointCloud:
        mids = self.intervals.mean(axis=1)
        return PointCloud(mids.reshape(-1, 1))

    def endpoints(self) -> PointCloud:
        return PointCloud(self.intervals.reshape(-1, 1))

    def total_length(self) -> float:
        return float((self.intervals[:, 1] - self.intervals[:, 0]).sum())


def cantor_level(n: int) -> IntervalSet:
    """Level-n middle-thirds construction: 2^n closed intervals of length 3^-n.

    Built by the recursion C_n = C_{n-1}/3 union (2/3 + C_{n-1}/3).
    """
    if n < 0:
        raise ValidationError("level must be non-negative")
    if n > CANTOR_MAX_LEVEL:
        raise BudgetError(f"cantor level {n} exceeds the maximum of {CANTOR_MAX_LEVEL}")
    ivals = np.array([[0.0, 1.0]])
    for _ in range(n):
        ivals = np.vstack([ivals / 3.0, 2.0 / 3.0 + ivals / 3.0])
        ivals = ivals[np.argsort(ivals[:, 0])]
    return IntervalSet(ivals)


def cantor_midpoints(n: int) -> PointCloud:
    """Midpoints of the level-n intervals; midpoints avoid cell-boundary ties."""
    return cantor_level(n).midpoints()


def cantor_ifs() -> ContractionSystem:
    return ContractionSystem(
        (
            AffineMap([[1 / 3]], [0.0]),
            AffineMap([[1 / 3]], [2 / 3]),
        )
    )


def _koch_refine(verts: np.ndarray) -> np.ndarray:
    # replace each segment PQ by P, P+E, apex, P+2E with E = (Q-P)/3;
    # the apex sits at +60 degrees, bulging left of the travel direction
    p, q = verts[:-1], verts[1:]
    e = (q - p) / 3.0
    b = p + e
    d = p + 2.0 * e
    rot = np.empty_like(e)
    rot[:, 0] = 0.5 * e[:, 0] - (SQRT3 / 2) * e[:, 1]
    rot[:, 1] = (SQRT3 / 2) * e[:, 0] + 0.5 * e[:, 1]
    c = b + rot
    out = np.empty((len(p), 4, 2))
    out[:, 0], out[:, 1], out[:, 2], out[:, 3] = p, b, c, d
    return np.vstack([out.reshape(-1, 2), verts[-1:]])


def koch_level(n: int, budget: int | None = None) -> Polyline:
    """Level-n curve over the unit interval: 4^n segments of length 3^-n."""
    if n < 0:
        raise ValidationError("level must be non-negative")
    if 4**n > point_budget(budget):
        raise BudgetError(f"koch level {n} needs {4 ** n} segments, over the point budget")
    verts = np.array([[0.0, 0.0], [1.0, 0.0]])
    for _ in range(n):
        verts = _koch_refine(verts)
    return Polyline(verts)


def koch_ifs() -> ContractionSystem:
    return ContractionSystem(
        (
            AffineMap(np.eye(2) / 3.0, [0.0, 0.0]),
            AffineMap(_ROT60_THIRD, [1 / 3, 0.0]),
            AffineMap(_ROT60M_THIRD, [0.5, SQRT3 / 6]),
            AffineMap(np.eye(2) / 3.0, [2 / 3, 0.0]),
        )
    )


def snowflake_level(n: int, budget: int | None = None) -> Polyline:
    """Closed curve: three level-n Koch curves on the sides of an equilateral
    triangle with base [0, 1], traversed clockwise so the bulges face outward."""
    edge = koch_level(n, budget).vertices
    corners = np.array([[0.0, 0.0], [0.5, SQRT3 / 2], [1.0, 0.0]])
    pieces = []
    for i in range(3):
        p, q = corners[i], corners[(i + 1) % 3]
        dx, dy = q - p
        lin = np.array([[dx, -dy], [dy, dx]])
        piece = edge @ lin.T + p
        pieces.append(piece[:-1])  # joint vertex re-appears as the next start
    closed = np.vstack(pieces + [corners[:1]])
    return Polyline(closed)


def sierpinski_level(n: int, budget: int | None = None) -> np.ndarray:
    """3^n triangles of side 2^-n as an array of vertex triples, shape (m, 3, 2).

    Level 0 is the unit equilateral triangle on base [0, 1].
    """
    if n < 0:
        raise ValidationError("level must be non-negative")
    if 3**n > point_budget(budget):
        raise BudgetError(f"sierpinski level {n} needs {3 ** n} triangles, over the point budget")
    tris = np.array([[[0.0, 0.0], [1.0, 0.0], [0.5, SQRT3 / 2]]])
    shifts = np.array([[0.0, 0.0], [0.5, 0.0], [0.25, SQRT3 / 4]])
    for _ in range(n):
        tris = np.concatenate([tris / 2.0 + v for v in shifts])
    return tris


def sierpinski_ifs() -> ContractionSystem:
    half = np.eye(2) / 2.0
    return ContractionSystem(
        (
            AffineMap(half, [0.0, 0.0]),
            AffineMap(half, [0.5, 0.0]),
            AffineMap(half, [0.25, SQRT3 / 4]),
        )
    )


def hilbert_curve(order: int) -> Polyline:
    """Order-n pseudo-Hilbert curve through the centers of the 2^n x 2^n grid
    on the unit square, entering at the lower left and exiting at the lower
    right. 4^n vertices; consecutive vertices sit at L-inf distance 2^-n.
    """
    if not 1 <= order <= HILBERT_MAX_ORDER:
        raise ValidationError(f"hilbert order must be in 1..{HILBERT_MAX_ORDER}, got {order}")
    side = 1 << order
    t = np.arange(side * side, dtype=np.int64)
    x = np.zeros_like(t)
    y = np.zeros_like(t)
    s = 1
    while s < side:
        rx = 1 & (t >> 1)
        ry = 1 & (t ^ rx)
        flip = ry == 0
        inv = flip & (rx == 1)
        x[inv] = s - 1 - x[inv]
        y[inv] = s - 1 - y[inv]
        tmp = x[flip]
        x[flip] = y[flip]
        y[flip] = tmp
        x += s * rx
        y += s * ry
        t >>= 2
        s <<= 1
    # cell centers are dyadic, so the coordinates (and the 2^-n gaps) are exact
    verts = np.stack([x, y], axis=1).astype(np.float64)
    verts = (verts + 0.5) / side
    return Polyline(verts)


def unit_interval_region() -> ConvexRegion:
    return ConvexRegion.interval(0.0, 1.0)


def koch_region() -> ConvexRegion:
    """Isosceles triangle on base [0, 1] with apex height 1/(2*sqrt(3)).

    The apex coincides with the curve's own peak, so the four map images tile
    the triangle edge to edge.
    """
    return ConvexRegion.polygon([[0.0, 0.0], [1.0, 0.0], [0.5, 1 / (2 * SQRT3)]])


def sierpinski_region() -> ConvexRegion:
    """The interior of the level-0 triangle."""
    return ConvexRegion.polygon([[0.0, 0.0], [1.0, 0.0], [0.5, SQRT3 / 2]])


# preset name -> (ifs factory | None, region factory | None)
PRESETS = {
    "cantor": (cantor_ifs, unit_interval_region),
    "koch": (koch_ifs, koch_region),
    "snowflake": (None, None),
    "sierpinski": (sierpinski_ifs, sierpinski_region),
    "hilbert": (None, None),
}


def preset_ifs(name: str) -> ContractionSystem:
    if name not in PRESETS:
        raise ValidationError(f"unknown preset {name!r}; choose from {sorted(PRESETS)}")
    factory = PRESETS[name][0]
    if factory is None:
        raise ValidationError(f"preset {name!r} has no contraction-system form")
    return factory()


def preset_region(name: str) -> ConvexRegion:
    if name not in PRESETS:
        raise ValidationError(f"unknown preset {name!r}; choose from {sorted(PRESETS)}")
    factory = PRESETS[name][1]
    if factory is None:
        raise ValidationError(f"preset {name!r} has no candidate open set")
    return factory()
