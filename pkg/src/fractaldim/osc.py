"""Open set condition checks for 1-D and 2-D similarity systems.

Given a candidate bounded open convex set V, certify that the map images
S_i(V) are contained in V and have pairwise disjoint interiors. Shared
boundary points are allowed: V is open, so images that touch edge to edge
or corner to corner still qualify. A pass certifies the Moran root as the
attractor's Hausdorff dimension; a fail on one V proves nothing.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NumericError, ValidationError
from .geometry import AffineMap
from .ifs import ContractionSystem

REL_TOL = 1e-9  # scaled by diam(V): the band treated as boundary contact


@dataclass(frozen=True, eq=False)
class ConvexRegion:
    """A bounded open convex set: an interval (dim 1) or a CCW polygon (dim 2)."""

    dim: int
    data: np.ndarray  # (2,) endpoints, or (m, 2) vertices

    def __post_init__(self):
        data = np.asarray(self.data, dtype=np.float64)
        if not np.isfinite(data).all():
            raise ValidationError("region coordinates must be finite")
        if self.dim == 1:
            if data.shape != (2,):
                raise ValidationError("1-D region needs exactly two endpoints")
            if data[0] >= data[1]:
                raise ValidationError(f"interval ({data[0]}, {data[1]}) is empty")
        elif self.dim == 2:
            if data.ndim != 2 or data.shape[1] != 2 or data.shape[0] < 3:
                raise ValidationError("2-D region needs at least 3 polygon vertices")
            area2 = _signed_area2(data)
            if area2 <= 0.0:
                raise ValidationError("polygon vertices must be counterclockwise, area > 0")
            edges = np.roll(data, -1, axis=0) - data
            cross = edges[:, 0] * np.roll(edges, -1, axis=0)[:, 1] - edges[:, 1] * np.roll(
                edges, -1, axis=0
            )[:, 0]
            if np.any(cross < -1e-12 * float(np.max(np.abs(data)) ** 2 + 1.0)):
                raise ValidationError("polygon must be convex")
        else:
            raise ValidationError(f"only dim 1 and 2 are supported, got {self.dim}")
        data.setflags(write=False)
        object.__setattr__(self, "data", data)

    @classmethod
    def interval(cls, a: float, b: float) -> "ConvexRegion":
        return cls(1, np.array([a, b], dtype=np.float64))

    @classmethod
    def polygon(cls, vertices) -> "ConvexRegion":
        verts = np.asarray(vertices, dtype=np.float64)
        if verts.ndim != 2 or verts.shape[1] != 2 or verts.shape[0] < 3:
            raise ValidationError("polygon needs an (m, 2) vertex array, m >= 3")
        if _signed_area2(verts) < 0.0:
            verts = verts[::-1]
        return cls(2, verts)

    def diameter(self) -> float:
        if self.dim == 1:
            return float(self.data[1] - self.data[0])
        diff = self.data[:, None, :] - self.data[None, :, :]
        return float(np.sqrt((diff**2).sum(axis=2)).max())

    def margins(self, points: np.ndarray) -> np.ndarray:
        """Signed interior distance of each point: positive inside, negative out."""
        pts = np.atleast_2d(np.asarray(points, dtype=np.float64))
        if self.dim == 1:
            a, b = self.data
            return np.minimum(pts[:, 0] - a, b - pts[:, 0])
        verts = self.data
        edges = np.roll(verts, -1, axis=0) - verts
        normals = np.stack([-edges[:, 1], edges[:, 0]], axis=1)  # inward for CCW
        normals /= np.linalg.norm(normals, axis=1, keepdims=True)
        # distance of point p to edge j is n_j . (p - v_j)
        d = np.einsum("ijk,jk->ij", pts[:, None, :] - verts[None, :, :], normals)
        return d.min(axis=1)

    def to_dict(self) -> dict:
        if self.dim == 1:
            return {"dim": 1, "interval": self.data.tolist()}
        return {"dim": 2, "polygon": self.data.tolist()}

    @classmethod
    def from_dict(cls, data: dict) -> "ConvexRegion":
        try:
            dim = int(data["dim"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ValidationError(f"malformed region description: {exc}") from exc
        if dim == 1:
            if "interval" not in data:
                raise ValidationError("1-D region JSON needs an 'interval' field")
            a, b = data["interval"]
            return cls.interval(float(a), float(b))
        if dim == 2:
            if "polygon" not in data:
                raise ValidationError("2-D region JSON needs a 'polygon' field")
            return cls.polygon(data["polygon"])
        raise ValidationError(f"only dim 1 and 2 are supported, got {dim}")


def _signed_area2(verts: np.ndarray) -> float:
    x, y = verts[:, 0], verts[:, 1]
    return float(np.dot(x, np.roll(y, -1)) - np.dot(y, np.roll(x, -1)))


def map_region(mapping: AffineMap, region: ConvexRegion) -> ConvexRegion:
    """Image of a convex region under an affine map, orientation renormalized."""
    if mapping.dim != region.dim:
        raise ValidationError(
            f"map dimension {mapping.dim} does not match region dimension {region.dim}"
        )
    if region.dim == 1:
        a, b = (float(v) for v in mapping.apply(region.data.reshape(2, 1))[:, 0])
        if a == b:
            raise NumericError("degenerate image: map collapses the interval")
        return ConvexRegion.interval(min(a, b), max(a, b))
    verts = mapping.apply(region.data)
    if abs(_signed_area2(verts)) == 0.0:
        raise NumericError("degenerate image: map collapses the polygon")
    return ConvexRegion.polygon(verts)


@dataclass(frozen=True)
class OSCReport:
    """Outcome of one open-set-condition check."""

    verdict: str  # "pass" | "fail"
    tol: float
    contained: tuple
    containment_margins: tuple
    pairs: tuple
    disjoint: tuple
    separation_margins: tuple
    notes: tuple

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "tol": self.tol,
            "contained": list(self.contained),
            "margins": {
                "containment": list(self.containment_margins),
                "separation": list(self.separation_margins),
            },
            "pairs": [list(p) for p in self.pairs],
            "disjoint": list(self.disjoint),
            "notes": list(self.notes),
        }


def _interval_gap(a: ConvexRegion, b: ConvexRegion) -> float:
    # positive separation, zero at touching, negative is overlap length
    return float(max(b.data[0] - a.data[1], a.data[0] - b.data[1]))


def _polygon_gap(a: ConvexRegion, b: ConvexRegion) -> float:
    """Best separation over the edge-normal axes of both polygons.

    For convex polygons the separating axis theorem makes this sign-exact:
    some edge normal shows a non-negative gap iff the interiors are disjoint.
    """
    best = -np.inf
    for va, vb in ((a.data, b.data), (b.data, a.data)):
        edges = np.roll(va, -1, axis=0) - va
        axes = np.stack([-edges[:, 1], edges[:, 0]], axis=1)
        axes /= np.linalg.norm(axes, axis=1, keepdims=True)
        pa = va @ axes.T  # projections of each polygon onto each axis
        pb = vb @ axes.T
        gaps = np.maximum(pb.min(axis=0) - pa.max(axis=0), pa.min(axis=0) - pb.max(axis=0))
        best = max(best, float(gaps.max()))
    return best


def check_osc(system: ContractionSystem, region: ConvexRegion) -> OSCReport:
    """Certify containment and pairwise interior-disjointness of the images of V."""
    if system.dim != region.dim:
        raise ValidationError(
            f"system dimension {system.dim} does not match region dimension {region.dim}"
        )
    system.validate()
    tol = REL_TOL * region.diameter()
    images = [map_region(m, region) for m in system.maps]

    contained = []
    containment_margins = []
    notes = []
    for i, img in enumerate(images):
        pts = img.data.reshape(-1, 1) if region.dim == 1 else img.data
        margin = float(region.margins(pts).min())
        ok = margin >= -tol
        contained.append(ok)
        containment_margins.append(margin)
        if not ok:
            notes.append(f"image {i} leaves the region (margin {margin})")

    pairs = []
    disjoint = []
    separation_margins = []
    for i in range(len(images)):
        for j in range(i + 1, len(images)):
            if region.dim == 1:
                gap = _interval_gap(images[i], images[j])
            else:
                gap = _polygon_gap(images[i], images[j])
            ok = gap >= -tol
            pairs.append((i, j))
            disjoint.append(ok)
            separation_margins.append(gap)
            if not ok:
                if region.dim == 1:
                    lo = max(float(images[i].data[0]), float(images[j].data[0]))
                    hi = min(float(images[i].data[1]), float(images[j].data[1]))
                    notes.append(f"images {i} and {j} overlap on ({lo!r}, {hi!r})")
                else:
                    notes.append(f"images {i} and {j} overlap (penetration {-gap})")

    verdict = "pass" if all(contained) and all(disjoint) else "fail"
    return OSCReport(
        verdict=verdict,
        tol=tol,
        contained=tuple(contained),
        containment_margins=tuple(containment_margins),
        pairs=tuple(pairs),
        disjoint=tuple(disjoint),
        separation_margins=tuple(separation_margins),
        notes=tuple(notes),
    )
