"""Correlation as an angle between centered data vectors.

The correlation coefficient is the cosine of the angle between the centered
response and predictor vectors; the angle itself runs from 0 degrees (total
positive correlation) through 90 (null) to 180 (total negative).  A raw-sums
textbook formula is provided as an algebraically equivalent alternative and
the two routes are cross-checked in tests.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .cloud import CenteredCloud, PointCloud
from .errors import DegenerateX, DegenerateY
from .vectors import dot, norm

__all__ = [
    "CorrelationClass",
    "CorrelationResult",
    "theta",
    "r_cosine",
    "r_textbook",
    "classify",
    "correlate",
    "TOTAL_THRESHOLD",
    "STRONG_THRESHOLD",
    "NULL_THRESHOLD",
]

# Band cutoffs on |r|.  The qualitative bands are only sketched in the source
# material, so these are library constants, not universal truths.
TOTAL_THRESHOLD = 0.999   # |r| >= this -> Total
STRONG_THRESHOLD = 0.8    # |r| >= this -> Strong
NULL_THRESHOLD = 0.005    # |r| <= this -> Null


class CorrelationClass(enum.Enum):
    TOTAL_POSITIVE = "TotalPositive"
    STRONG_POSITIVE = "StrongPositive"
    WEAK_POSITIVE = "WeakPositive"
    NULL = "Null"
    WEAK_NEGATIVE = "WeakNegative"
    STRONG_NEGATIVE = "StrongNegative"
    TOTAL_NEGATIVE = "TotalNegative"


@dataclass(frozen=True)
class CorrelationResult:
    theta_deg: float
    r: float
    cls: CorrelationClass


def _cosine(c: CenteredCloud) -> float:
    ni = norm(c.i_vec)
    nu = norm(c.u_vec)
    if ni == 0.0:
        raise DegenerateX("all x values coincide; correlation angle undefined")
    if nu == 0.0:
        raise DegenerateY("all y values coincide; correlation angle undefined")
    # Clamp floating-point excess so perfectly collinear data does not feed
    # a value just outside [-1, 1] into acos.
    return max(-1.0, min(1.0, dot(c.u_vec, c.i_vec) / (nu * ni)))


def r_cosine(c: CenteredCloud) -> float:
    """Correlation coefficient as the cosine of the angle between u and i."""
    return _cosine(c)


def theta(c: CenteredCloud) -> float:
    """Correlation angle in degrees, in [0, 180]."""
    return math.degrees(math.acos(_cosine(c)))


def r_textbook(cloud: PointCloud) -> float:
    """Pearson coefficient from raw (uncentered) sums.

    Kept deliberately on the raw-sums route so it can serve as an independent
    cross-check of :func:`r_cosine`.
    """
    n = len(cloud)
    if n < 2:
        raise DegenerateX("need at least 2 points")
    sx = math.fsum(cloud.xs)
    sy = math.fsum(cloud.ys)
    sxy = math.fsum(x * y for x, y in zip(cloud.xs, cloud.ys))
    sxx = math.fsum(x * x for x in cloud.xs)
    syy = math.fsum(y * y for y in cloud.ys)
    var_x = sxx - sx * sx / n
    var_y = syy - sy * sy / n
    max_x = max(abs(x) for x in cloud.xs)
    max_y = max(abs(y) for y in cloud.ys)
    eps = 1e-12
    if var_x <= n * eps * max(1.0, max_x * max_x):
        raise DegenerateX("x variance is zero within tolerance")
    if var_y <= n * eps * max(1.0, max_y * max_y):
        raise DegenerateY("y variance is zero within tolerance")
    num = sxy - sx * sy / n
    return max(-1.0, min(1.0, num / math.sqrt(var_x * var_y)))


def classify(theta_deg: float) -> CorrelationClass:
    """Map a correlation angle to its qualitative band."""
    if not 0.0 <= theta_deg <= 180.0:
        raise ValueError(f"angle out of range [0, 180]: {theta_deg}")
    r = math.cos(math.radians(theta_deg))
    mag = abs(r)
    if mag <= NULL_THRESHOLD:
        return CorrelationClass.NULL
    positive = r > 0
    if mag >= TOTAL_THRESHOLD:
        return CorrelationClass.TOTAL_POSITIVE if positive else CorrelationClass.TOTAL_NEGATIVE
    if mag >= STRONG_THRESHOLD:
        return CorrelationClass.STRONG_POSITIVE if positive else CorrelationClass.STRONG_NEGATIVE
    return CorrelationClass.WEAK_POSITIVE if positive else CorrelationClass.WEAK_NEGATIVE


def correlate(c: CenteredCloud) -> CorrelationResult:
    """Angle, coefficient, and qualitative class in one bundle."""
    r = _cosine(c)
    t = math.degrees(math.acos(r))
    return CorrelationResult(theta_deg=t, r=r, cls=classify(t))
