"""Similarity dimension of a ratio list: the root d of sum_i r_i^d = 1.

The sum is strictly decreasing in d, from n at d=0 toward 0, so the root
exists and is unique whenever every ratio lies strictly inside (0, 1).
"""

from __future__ import annotations

import numpy as np

from .errors import ValidationError

RESIDUAL_TOL = 1e-12
BISECTION_WIDTH = 1e-6


def as_ratios(scales) -> np.ndarray:
    """Validate a ratio list and return it sorted descending.

    Sorting fixes the summation order, which makes every downstream result
    exactly invariant under permutations of the input.
    """
    arr = np.atleast_1d(np.asarray(scales, dtype=np.float64))
    if arr.ndim != 1 or arr.size < 1:
        raise ValidationError("ratio list must be a non-empty 1-D sequence")
    if not np.all(np.isfinite(arr)) or np.any(arr <= 0.0) or np.any(arr >= 1.0):
        raise ValidationError("every ratio must lie strictly inside (0, 1)")
    return np.sort(arr)[::-1]


def moran_value(scales, d: float) -> float:
    """Evaluate f(d) = sum_i r_i^d for d >= 0."""
    if d < 0:
        raise ValidationError("exponent d must be non-negative")
    ratios = as_ratios(scales)
    return float(np.sum(ratios**d))


def moran_dimension(scales) -> float:
    """Solve sum_i r_i^d = 1 for the similarity dimension d.

    Bisection on [0, log n / log(1/r_max)] down to a 1e-6 bracket, then
    Newton steps (f'(d) = sum r_i^d ln r_i) until |f(d) - 1| <= 1e-12.
    A single ratio has root d = 0 exactly.
    """
    ratios = as_ratios(scales)
    n = ratios.size
    if n == 1:
        return 0.0
    log_r = np.log(ratios)

    def f(d):
        return float(np.sum(ratios**d))

    lo = 0.0
    hi = float(np.log(n) / -log_r[0])  # f(hi) <= n * r_max^hi = 1
    while hi - lo > BISECTION_WIDTH:
        mid = 0.5 * (lo + hi)
        if f(mid) > 1.0:
            lo = mid
        else:
            hi = mid

    # f is convex and decreasing, so Newton from inside the bracket
    # approaches the root monotonically from the left. Iterate past the
    # residual tolerance until the step itself vanishes: near-1 ratios make
    # f so flat that a small residual alone leaves d visibly short.
    d = 0.5 * (lo + hi)
    for _ in range(100):
        powers = ratios**d
        value = float(np.sum(powers))
        step = (value - 1.0) / float(np.sum(powers * log_r))
        d -= step
        if abs(step) <= 1e-15 * (1.0 + abs(d)):
            break
    return d
