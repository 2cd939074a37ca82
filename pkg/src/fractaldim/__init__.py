"""Fractal dimension toolkit.

Generate samples of iterated-function-system attractors and classic
constructions (Cantor set, Koch curve and snowflake, Sierpinski triangle,
pseudo-Hilbert curves), then estimate their dimensions three ways: grid-cover
measure sums with a crossover readout, box-counting regression, and the exact
Moran similarity equation, with open set condition certification for the
latter.
"""

from .catalog import (
    IntervalSet,
    Polyline,
    cantor_ifs,
    cantor_level,
    cantor_midpoints,
    hilbert_curve,
    koch_ifs,
    koch_level,
    koch_region,
    sierpinski_ifs,
    sierpinski_level,
    sierpinski_region,
    snowflake_level,
    unit_interval_region,
)
from .errors import (
    BudgetError,
    FractalDimError,
    InternalError,
    NumericError,
    ValidationError,
)
from .estimator import (
    DimensionFit,
    GridSpec,
    MeasureProfile,
    ScaleSeries,
    box_dimension,
    count_series,
    cover_sum,
    crossover_dimension,
    default_deltas,
    fit_dimension,
    grid_count,
    measure_profile,
)
from .geometry import AffineMap, Box, PointCloud, hausdorff_distance
from .ifs import (
    DEFAULT_POINT_BUDGET,
    AttractorSample,
    ContractionSystem,
    chaos_game,
    default_weights,
    deterministic_attractor,
    point_budget,
)
from .moran import moran_dimension, moran_value
from .osc import ConvexRegion, OSCReport, check_osc, map_region

__version__ = "0.1.0"

__all__ = [
    "AffineMap",
    "AttractorSample",
    "Box",
    "BudgetError",
    "ContractionSystem",
    "ConvexRegion",
    "DEFAULT_POINT_BUDGET",
    "DimensionFit",
    "FractalDimError",
    "GridSpec",
    "InternalError",
    "IntervalSet",
    "MeasureProfile",
    "NumericError",
    "OSCReport",
    "PointCloud",
    "Polyline",
    "ScaleSeries",
    "ValidationError",
    "box_dimension",
    "cantor_ifs",
    "cantor_level",
    "cantor_midpoints",
    "chaos_game",
    "check_osc",
    "count_series",
    "cover_sum",
    "crossover_dimension",
    "default_deltas",
    "default_weights",
    "deterministic_attractor",
    "fit_dimension",
    "grid_count",
    "hausdorff_distance",
    "hilbert_curve",
    "koch_ifs",
    "koch_level",
    "koch_region",
    "map_region",
    "measure_profile",
    "moran_dimension",
    "moran_value",
    "point_budget",
    "sierpinski_ifs",
    "sierpinski_level",
    "sierpinski_region",
    "snowflake_level",
    "unit_interval_region",
]
