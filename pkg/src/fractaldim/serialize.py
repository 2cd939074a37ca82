"""Text artifact formats: point-cloud CSV, series/profile CSV, fit JSON.

All floats are written with Python's shortest round-trip repr, so every file
parses back to bit-identical values and identical inputs produce identical
bytes. Writers emit plain newline-terminated lines; readers accept their own
output and tolerate a missing header.
"""

from __future__ import annotations

import json

import numpy as np

from .errors import ValidationError
from .estimator import DimensionFit, MeasureProfile, ScaleSeries
from .geometry import PointCloud

_AXIS_NAMES = {1: ["x"], 2: ["x", "y"], 3: ["x", "y", "z"]}


def fmt(value: float) -> str:
    """Shortest decimal string that round-trips to the same float."""
    return repr(float(value))


def dump_json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _axis_names(dim: int) -> list[str]:
    return _AXIS_NAMES.get(dim, [f"x{i}" for i in range(dim)])


def cloud_to_csv(cloud: PointCloud) -> str:
    lines = [",".join(_axis_names(cloud.dim))]
    lines.extend(",".join(fmt(v) for v in row) for row in cloud.points)
    return "\n".join(lines) + "\n"


def cloud_from_csv(text: str) -> PointCloud:
    rows = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        fields = line.split(",")
        try:
            rows.append([float(f) for f in fields])
        except ValueError:
            if lineno == 1:
                continue  # header row
            raise ValidationError(f"line {lineno}: expected numeric fields, got {line!r}") from None
    if not rows:
        raise ValidationError("no data rows in point-cloud CSV")
    widths = {len(r) for r in rows}
    if len(widths) != 1:
        raise ValidationError("inconsistent column counts in point-cloud CSV")
    return PointCloud(np.array(rows, dtype=np.float64))


def series_to_csv(series: ScaleSeries) -> str:
    lines = ["scale,count"]
    lines.extend(f"{fmt(s)},{int(c)}" for s, c in zip(series.scales, series.counts))
    return "\n".join(lines) + "\n"


def series_from_csv(text: str) -> ScaleSeries:
    scales, counts = [], []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or (lineno == 1 and line == "scale,count"):
            continue
        try:
            s, c = line.split(",")
            scales.append(float(s))
            counts.append(int(c))
        except ValueError:
            raise ValidationError(f"line {lineno}: expected 'scale,count', got {line!r}") from None
    if not scales:
        raise ValidationError("no data rows in scale-series CSV")
    return ScaleSeries(np.array(scales), np.array(counts))


def profile_to_csv(profile: MeasureProfile) -> str:
    lines = ["delta,value"]
    lines.extend(f"{fmt(d)},{fmt(v)}" for d, v in zip(profile.deltas, profile.values))
    return "\n".join(lines) + "\n"


def profile_from_csv(text: str, epsilon: float) -> MeasureProfile:
    deltas, values = [], []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or (lineno == 1 and line == "delta,value"):
            continue
        try:
            d, v = line.split(",")
            deltas.append(float(d))
            values.append(float(v))
        except ValueError:
            raise ValidationError(f"line {lineno}: expected 'delta,value', got {line!r}") from None
    if not deltas:
        raise ValidationError("no data rows in profile CSV")
    return MeasureProfile(epsilon=epsilon, deltas=np.array(deltas), values=np.array(values))


def fit_to_dict(fit: DimensionFit) -> dict:
    return {
        "slope": fit.slope,
        "intercept": fit.intercept,
        "r2": fit.r_squared,
        "stderr": fit.stderr,
    }


def fit_from_dict(data: dict) -> DimensionFit:
    try:
        return DimensionFit(
            slope=float(data["slope"]),
            intercept=float(data["intercept"]),
            r_squared=float(data["r2"]),
            stderr=float(data["stderr"]),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise ValidationError(f"malformed fit JSON: {exc}") from exc
