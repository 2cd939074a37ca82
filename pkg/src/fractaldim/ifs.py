"""Iterated function systems: validation, attractor sampling, JSON schema.

A system is an ordered list of affine contractions on R^k plus optional
sampling weights. Two samplers are provided: exhaustive composition to a
fixed depth (exact, exponential in depth) and the chaos game (stochastic,
linear in the requested count).
"""

from __future__ import annotations

import hashlib
import json
import os
from dataclasses import dataclass

import numpy as np

from .errors import BudgetError, ValidationError
from .geometry import AffineMap, PointCloud
from .moran import moran_dimension

DEFAULT_POINT_BUDGET = 10_000_000
BUDGET_ENV_VAR = "FRACTALDIM_BUDGET"
WEIGHT_SUM_TOL = 1e-12
DEFAULT_BURN_IN = 100


def point_budget(override: int | None = None) -> int:
    """Effective point budget: explicit override, else env var, else default."""
    if override is not None:
        if override < 1:
            raise ValidationError("point budget must be positive")
        return override
    raw = os.environ.get(BUDGET_ENV_VAR)
    if raw is None:
        return DEFAULT_POINT_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise ValidationError(f"{BUDGET_ENV_VAR} must be an integer, got {raw!r}") from None
    if value < 1:
        raise ValidationError(f"{BUDGET_ENV_VAR} must be positive, got {value}")
    return value


@dataclass(frozen=True, eq=False)
class ContractionSystem:
    """An IFS: affine maps sharing one ambient dimension, optional weights."""

    maps: tuple
    weights: np.ndarray | None = None

    def __post_init__(self):
        maps = tuple(self.maps)
        if len(maps) < 1:
            raise ValidationError("a contraction system needs at least one map")
        dim = maps[0].dim
        for i, m in enumerate(maps):
            if not isinstance(m, AffineMap):
                raise ValidationError(f"map {i} is not an AffineMap")
            if m.dim != dim:
                raise ValidationError(f"map {i} has dimension {m.dim}, expected {dim}")
        weights = self.weights
        if weights is not None:
            weights = np.asarray(weights, dtype=np.float64)
            if weights.shape != (len(maps),):
                raise ValidationError("weights must match the number of maps")
            if np.any(weights <= 0.0):
                raise ValidationError("weights must be positive")
            if abs(float(weights.sum()) - 1.0) > WEIGHT_SUM_TOL:
                raise ValidationError("weights must sum to 1")
        object.__setattr__(self, "maps", maps)
        object.__setattr__(self, "weights", weights)

    @property
    def dim(self) -> int:
        return self.maps[0].dim

    def __len__(self) -> int:
        return len(self.maps)

    def validate(self) -> list[float]:
        """Return the operator norm of every linear part; reject non-contractions."""
        ratios = []
        for i, m in enumerate(self.maps):
            r = float(np.linalg.norm(m.linear, 2))
            if r >= 1.0:
                raise ValidationError(f"map {i} is not a contraction (operator norm {r})")
            if r == 0.0:
                raise ValidationError(f"map {i} is degenerate (zero linear part)")
            ratios.append(r)
        return ratios

    def to_dict(self) -> dict:
        out = {
            "dim": self.dim,
            "maps": [
                {"linear": m.linear.tolist(), "offset": m.offset.tolist()} for m in self.maps
            ],
        }
        if self.weights is not None:
            out["weights"] = self.weights.tolist()
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "ContractionSystem":
        try:
            dim = int(data["dim"])
            raw_maps = data["maps"]
        except (KeyError, TypeError, ValueError) as exc:
            raise ValidationError(f"malformed IFS description: {exc}") from exc
        if dim < 1:
            raise ValidationError("IFS dimension must be a positive integer")
        maps = []
        for i, entry in enumerate(raw_maps):
            try:
                m = AffineMap(entry["linear"], entry["offset"])
            except (KeyError, TypeError, ValidationError) as exc:
                raise ValidationError(f"malformed map {i} in IFS description: {exc}") from exc
            if m.dim != dim:
                raise ValidationError(f"map {i} has dimension {m.dim}, expected {dim}")
            maps.append(m)
        return cls(tuple(maps), data.get("weights"))

    def content_hash(self) -> str:
        """Stable digest of the defining data, for provenance of samples."""
        blob = json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(blob.encode("ascii")).hexdigest()


@dataclass(frozen=True, eq=False)
class AttractorSample:
    """A finite sample of an attractor plus how it was generated."""

    cloud: PointCloud
    depth_or_count: int
    method: str  # "deterministic" | "chaos"
    system_hash: str


def default_weights(system: ContractionSystem) -> np.ndarray:
    """Chaos-game weights r_i^d with d the similarity dimension.

    These equalize the expected point density across branches of unequal
    scale; they sum to 1 by definition of d (renormalized for rounding).
    """
    ratios = np.asarray(system.validate())
    d = moran_dimension(ratios)
    w = ratios**d
    return w / w.sum()


def deterministic_attractor(
    system: ContractionSystem, depth: int, budget: int | None = None
) -> AttractorSample:
    """All depth-fold compositions applied to the fixed point of the first map.

    The seed point lies on the attractor, so every composed image does too.
    Produces exactly n^depth points (duplicates included).
    """
    if depth < 0:
        raise ValidationError("depth must be non-negative")
    budget = point_budget(budget)
    system.validate()
    n = len(system)
    total = n**depth
    if total > budget:
        raise BudgetError(
            f"deterministic sampling at depth {depth} needs {total} points, over the "
            f"budget of {budget}; use the chaos game for a sample this deep"
        )
    pts = system.maps[0].fixed_point().reshape(1, -1)
    for _ in range(depth):
        pts = np.vstack([m.apply(pts) for m in system.maps])
    return AttractorSample(
        cloud=PointCloud(pts),
        depth_or_count=depth,
        method="deterministic",
        system_hash=system.content_hash(),
    )


def chaos_game(
    system: ContractionSystem,
    count: int,
    seed: int,
    burn_in: int = DEFAULT_BURN_IN,
) -> AttractorSample:
    """Random iteration x <- S_I(x), I drawn by the system's weights.

    Starts at the fixed point of the first map and discards the first
    burn_in iterates; fully deterministic given the seed.
    """
    if count < 1:
        raise ValidationError("chaos game needs count >= 1")
    if burn_in < 0:
        raise ValidationError("burn_in must be non-negative")
    system.validate()
    weights = system.weights if system.weights is not None else default_weights(system)
    rng = np.random.default_rng(seed)
    indices = rng.choice(len(system), size=burn_in + count, p=weights)
    linears = [m.linear for m in system.maps]
    offsets = [m.offset for m in system.maps]
    x = system.maps[0].fixed_point()
    out = np.empty((count, system.dim))
    for step, i in enumerate(indices):
        x = linears[i] @ x + offsets[i]
        if step >= burn_in:
            out[step - burn_in] = x
    return AttractorSample(
        cloud=PointCloud(out),
        depth_or_count=count,
        method="chaos",
        system_hash=system.content_hash(),
    )
