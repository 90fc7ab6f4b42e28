"""Least-squares line fitting by orthogonal projection.

After centering, the fitted centered responses are the projection of the
centered response vector onto the centered predictor vector, so the slope is
dot(u, i) / ||i||^2 and the intercept follows from the centroid lying on the
line.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass

from .cloud import CenteredCloud, PointCloud, center
from .errors import DegenerateX, TooFewPoints
from .vectors import Vector, dot, norm_sq, scale

__all__ = ["FitResult", "fit_slope_centered", "fit", "predict"]

_EPS = sys.float_info.epsilon


@dataclass(frozen=True)
class FitResult:
    """Fitted line y = slope * x + intercept, with the centered cloud and
    the fitted centered responses retained for diagnostics."""

    slope: float
    intercept: float
    centered: CenteredCloud
    j_vec: Vector


def _degenerate_x(c: CenteredCloud) -> bool:
    # Treat a squared spread at roundoff scale as zero rather than dividing
    # by it and returning an enormous slope.
    max_x = max(abs(c.centroid_x + xi) for xi in c.i_vec)
    return norm_sq(c.i_vec) <= len(c) * _EPS * max(1.0, max_x * max_x)


def fit_slope_centered(c: CenteredCloud) -> float:
    """Slope of the best-fit line through the origin of a centered cloud."""
    if _degenerate_x(c):
        raise DegenerateX("all x values coincide; slope is undefined")
    return dot(c.u_vec, c.i_vec) / norm_sq(c.i_vec)


def fit(cloud: PointCloud) -> FitResult:
    """Center the cloud, project, and recover the intercept from the centroid."""
    if len(cloud) < 2:
        raise TooFewPoints(f"need at least 2 points, got {len(cloud)}")
    c = center(cloud)
    a = fit_slope_centered(c)
    b = c.centroid_y - a * c.centroid_x
    return FitResult(slope=a, intercept=b, centered=c, j_vec=scale(a, c.i_vec))


def predict(fit_result: FitResult, x: float) -> float:
    """Evaluate the fitted line at ``x``."""
    return fit_result.slope * x + fit_result.intercept
