"""Command-line front end: generate samples, estimate dimensions, check the
open set condition, and export CSV/JSON/SVG artifacts plus PNG figures.

Exit codes: 0 success, 2 bad input, 3 numeric/degenerate condition.
"""

from __future__ import annotations

import functools
import json
import sys

import numpy as np
import click

from . import catalog, render, serialize
from .errors import BudgetError, NumericError, ValidationError
from .estimator import (
    GridSpec,
    box_dimension,
    crossover_dimension,
    default_deltas,
    measure_profile,
)
from .geometry import PointCloud
from .ifs import ContractionSystem, chaos_game, deterministic_attractor
from .moran import moran_dimension, moran_value
from .osc import ConvexRegion, check_osc

# per-preset defaults: generation method and depth/level/order
_PRESET_DEFAULTS = {
    "cantor": ("midpoints", 10),
    "koch": ("vertices", 6),
    "snowflake": ("vertices", 6),
    "sierpinski": ("det", 8),
    "hilbert": ("vertices", 6),
}
_METHODS = ("det", "chaos", "midpoints", "vertices")


def _cli_errors(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except (ValidationError, BudgetError) as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(2)
        except NumericError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(3)

    return wrapper


def _emit(text: str, path: str | None) -> None:
    if path is None:
        click.echo(text, nl=False)
    else:
        with open(path, "w", newline="\n") as fh:
            fh.write(text)


def _load_json(path: str) -> dict:
    with open(path) as fh:
        try:
            return json.load(fh)
        except json.JSONDecodeError as exc:
            raise ValidationError(f"{path} is not valid JSON: {exc}") from exc


def _load_system(path: str) -> ContractionSystem:
    return ContractionSystem.from_dict(_load_json(path))


def _load_cloud(path: str) -> PointCloud:
    with open(path) as fh:
        return serialize.cloud_from_csv(fh.read())


def _parse_levels(spec: str) -> tuple[int, int]:
    try:
        lo, hi = (int(part) for part in spec.split(":"))
    except ValueError:
        raise ValidationError(f"levels must look like 'k_min:k_max', got {spec!r}") from None
    return lo, hi


def _parse_deltas(spec: str) -> np.ndarray:
    try:
        a, b, n = spec.split(":")
        a, b, n = float(a), float(b), int(n)
    except ValueError:
        raise ValidationError(f"deltas must look like 'a:b:n', got {spec!r}") from None
    if n < 1:
        raise ValidationError("delta sweep needs at least one point")
    return np.linspace(a, b, n)


@click.group()
def main():
    """Fractal dimension toolkit: attractor generation, grid-cover measure
    estimates, Moran similarity dimensions, and open set condition checks."""


def _generate(source_file, preset, method, depth, count, seed):
    """Produce (points, ordered) for the gen command."""
    if (source_file is None) == (preset is None):
        raise ValidationError("provide an IFS JSON file or --preset, not both")
    if preset is not None and preset not in catalog.PRESETS:
        raise ValidationError(f"unknown preset {preset!r}")
    if method is None:
        method = _PRESET_DEFAULTS[preset][0] if preset else "det"
    if depth is None:
        depth = _PRESET_DEFAULTS[preset][1] if preset else 8

    if method == "det":
        system = catalog.preset_ifs(preset) if preset else _load_system(source_file)
        return deterministic_attractor(system, depth).cloud.points, False
    if method == "chaos":
        system = catalog.preset_ifs(preset) if preset else _load_system(source_file)
        return chaos_game(system, count, seed).cloud.points, False
    if method == "midpoints":
        if preset != "cantor":
            raise ValidationError("the midpoints method only applies to the cantor preset")
        return catalog.cantor_midpoints(depth).points, False
    # vertices: explicit level geometry
    if preset is None:
        raise ValidationError("the vertices method needs a named preset")
    if preset == "cantor":
        return catalog.cantor_level(depth).endpoints().points, False
    if preset == "koch":
        return catalog.koch_level(depth).vertices, True
    if preset == "snowflake":
        return catalog.snowflake_level(depth).vertices, True
    if preset == "hilbert":
        return catalog.hilbert_curve(depth).vertices, True
    return catalog.sierpinski_level(depth).reshape(-1, 2), False


@main.command()
@click.argument("ifs_json", required=False, type=click.Path(exists=True, dir_okay=False))
@click.option("--preset", type=click.Choice(sorted(catalog.PRESETS)), default=None)
@click.option("--method", type=click.Choice(_METHODS), default=None,
              help="det: IFS compositions; chaos: random iteration; "
                   "midpoints/vertices: explicit level geometry")
@click.option("--depth", type=int, default=None,
              help="composition depth, construction level, or curve order")
@click.option("--count", type=int, default=100_000, show_default=True,
              help="sample size for the chaos method")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--out", default=None,
              help="output path (.csv or .svg); bare 'csv'/'svg' writes to stdout")
@click.option("--plot", type=click.Path(), default=None, help="also write a PNG figure")
@_cli_errors
def gen(ifs_json, preset, method, depth, count, seed, out, plot):
    """Generate a point sample or curve from an IFS file or a preset."""
    points, ordered = _generate(ifs_json, preset, method, depth, count, seed)
    if out is None or out == "csv" or out.endswith(".csv"):
        text = serialize.cloud_to_csv(PointCloud(points))
        path = None if out in (None, "csv") else out
    elif out == "svg" or out.endswith(".svg"):
        text = render.svg_polyline(points) if ordered else render.svg_points(points)
        path = None if out == "svg" else out
    else:
        raise ValidationError(f"unsupported output {out!r}; use a .csv or .svg path")
    _emit(text, path)
    if plot:
        render.plot_cloud(points, plot, connect=ordered)


@main.command()
@click.option("--moran", "moran_path", type=click.Path(exists=True, dir_okay=False),
              default=None, help="IFS JSON file; solve the similarity equation")
@click.option("--boxcount", "cloud_path", type=click.Path(exists=True, dir_okay=False),
              default=None, help="point-cloud CSV; regress log N against log 1/eps")
@click.option("--base", type=float, default=2.0, show_default=True)
@click.option("--levels", default="1:8", show_default=True, help="grid levels k_min:k_max")
@click.option("--origin", type=float, default=0.0, show_default=True)
@click.option("--out", type=click.Path(), default=None, help="JSON report path")
@click.option("--series-out", type=click.Path(), default=None,
              help="also write the scale,count series as CSV")
@click.option("--plot", type=click.Path(), default=None, help="also write a PNG figure")
@_cli_errors
def dim(moran_path, cloud_path, base, levels, origin, out, series_out, plot):
    """Estimate a dimension, from exact scaling ratios or from a point cloud."""
    if (moran_path is None) == (cloud_path is None):
        raise ValidationError("provide exactly one of --moran or --boxcount")
    if moran_path is not None:
        system = _load_system(moran_path)
        ratios = system.validate()
        d = moran_dimension(ratios)
        report = {
            "dimension": d,
            "residual": moran_value(ratios, d) - 1.0,
            "ratios": ratios,
            "osc_verified": False,
            "note": "upper bound unless OSC holds",
        }
        _emit(serialize.dump_json(report), out)
        return
    cloud = _load_cloud(cloud_path)
    grid = GridSpec(base=base, origin=origin, levels=_parse_levels(levels))
    series, fit = box_dimension(cloud, grid)
    report = {
        "series": {"scales": series.scales.tolist(), "counts": series.counts.tolist()},
        "fit": serialize.fit_to_dict(fit),
    }
    _emit(serialize.dump_json(report), out)
    if series_out:
        _emit(serialize.series_to_csv(series), series_out)
    if plot:
        render.plot_series(series.scales, series.counts, fit.slope, fit.intercept, plot)


@main.command()
@click.argument("cloud_csv", type=click.Path(exists=True, dir_okay=False))
@click.option("--epsilon", type=float, required=True, help="grid cell side")
@click.option("--deltas", "deltas_spec", default=None,
              help="candidate-dimension sweep a:b:n (default spans the ambient dim)")
@click.option("--origin", type=float, default=0.0, show_default=True)
@click.option("--out", type=click.Path(), default=None, help="profile CSV path")
@click.option("--plot", type=click.Path(), default=None, help="also write a PNG figure")
@_cli_errors
def profile(cloud_csv, epsilon, deltas_spec, origin, out, plot):
    """Sweep cover sums across candidate dimensions and locate the crossover."""
    cloud = _load_cloud(cloud_csv)
    deltas = _parse_deltas(deltas_spec) if deltas_spec else default_deltas(cloud.dim)
    grid = GridSpec(origin=origin)
    prof = measure_profile(cloud, epsilon, deltas, grid)
    _emit(serialize.profile_to_csv(prof), out)
    try:
        cross = crossover_dimension(prof)
    except NumericError:
        if plot:
            render.plot_profile(prof.deltas, prof.values, None, plot)
        raise
    if plot:
        render.plot_profile(prof.deltas, prof.values, cross, plot)
    click.echo(serialize.dump_json({"epsilon": prof.epsilon, "crossover": cross}), nl=False)


@main.command()
@click.argument("ifs_json", required=False, type=click.Path(exists=True, dir_okay=False))
@click.argument("region_json", required=False, type=click.Path(exists=True, dir_okay=False))
@click.option("--preset", type=click.Choice(sorted(catalog.PRESETS)), default=None,
              help="use a built-in system and its candidate open set")
@click.option("--out", type=click.Path(), default=None, help="JSON report path")
@_cli_errors
def osc(ifs_json, region_json, preset, out):
    """Check the open set condition for a system against a candidate open set."""
    if preset is not None:
        if ifs_json is not None or region_json is not None:
            raise ValidationError("provide file arguments or --preset, not both")
        system = catalog.preset_ifs(preset)
        region = catalog.preset_region(preset)
    else:
        if ifs_json is None or region_json is None:
            raise ValidationError("provide both IFS and region JSON files, or --preset")
        system = _load_system(ifs_json)
        region = ConvexRegion.from_dict(_load_json(region_json))
    report = check_osc(system, region)
    payload = report.to_dict()
    payload["moran_dimension"] = moran_dimension(system.validate())
    payload["dimension_status"] = (
        "equals the Hausdorff dimension (open set condition verified)"
        if report.passed
        else "upper bound only (open set condition not verified)"
    )
    _emit(serialize.dump_json(payload), out)


@main.command("preset")
@click.argument("name", type=click.Choice(sorted(catalog.PRESETS)))
@click.option("--what", type=click.Choice(["ifs", "region"]), default="ifs",
              show_default=True)
@click.option("--out", type=click.Path(), default=None)
@_cli_errors
def preset_cmd(name, what, out):
    """Export a built-in system or its candidate open set as JSON."""
    if what == "ifs":
        payload = catalog.preset_ifs(name).to_dict()
    else:
        payload = catalog.preset_region(name).to_dict()
    _emit(serialize.dump_json(payload), out)
