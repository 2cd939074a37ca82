"""Independent reference implementations used to pin expected values.

Everything here is deliberately written with different machinery than the
package (pure-Python bisection, exact Fraction arithmetic) so agreement is
meaningful.
"""

from fractions import Fraction
import math

DSTAR_CANTOR = math.log(2) / math.log(3)
D_KOCH = math.log(4) / math.log(3)
D_SIERPINSKI = math.log(3) / math.log(2)


def bisect_moran(ratios, iters=200):
    """Plain bisection for sum r_i^d = 1, no derivative information."""
    lo, hi = 0.0, 1.0
    while sum(r**hi for r in ratios) > 1.0:
        hi *= 2.0
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        if sum(r**mid for r in ratios) > 1.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def rational_interval_osc(maps, interval):
    """Exact verdict for 1-D maps r*x + o with Fraction coefficients.

    maps: list of (r, o) Fractions; interval: (a, b) Fractions.
    Returns (verdict, contained_flags, disjoint_flags) with open-set
    semantics: images may share endpoints but not interior.
    """
    a, b = Fraction(interval[0]), Fraction(interval[1])
    images = []
    for r, o in maps:
        r, o = Fraction(r), Fraction(o)
        lo, hi = r * a + o, r * b + o
        if lo > hi:
            lo, hi = hi, lo
        images.append((lo, hi))
    contained = [lo >= a and hi <= b for lo, hi in images]
    disjoint = []
    for i in range(len(images)):
        for j in range(i + 1, len(images)):
            overlap = min(images[i][1], images[j][1]) - max(images[i][0], images[j][0])
            disjoint.append(overlap <= 0)
    verdict = "pass" if all(contained) and all(disjoint) else "fail"
    return verdict, contained, disjoint
