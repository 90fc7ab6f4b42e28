"""Independent brute-force and finite-difference verification of the fit.

Deliberately avoids the projection/normal-equation route: the objective is
evaluated directly from raw data and minimized by iterated grid refinement,
so agreement with the analytic fit is a genuine cross-check rather than the
same formula computed twice.

The search grid lives in (slope, height-at-mean-x) coordinates.  In the raw
(slope, intercept) plane the objective's level sets are extremely elongated
diagonal ellipses whenever the x column is far from zero-mean, and naive box
refinement loses the minimizer; shifting the intercept axis to the line's
height at mean(x) makes the axes independent so the grid converges.  The
minimum is still located purely by evaluating the objective.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import fsum

from .cloud import PointCloud
from .errors import BoxTooSmall

__all__ = ["SearchBox", "sse_of", "grid_search_fit", "gradient_check", "default_box"]

_SHRINK = 0.25  # box half-width factor per refinement round


@dataclass(frozen=True)
class SearchBox:
    """Bounds in the (slope a, intercept b) plane plus grid resolution."""

    a_min: float
    a_max: float
    b_min: float
    b_max: float
    grid_steps: int = 21
    refinement_rounds: int = 8

    def __post_init__(self):
        if not (self.a_min < self.a_max and self.b_min < self.b_max):
            raise ValueError("box bounds must satisfy min < max on both axes")
        if self.grid_steps < 3:
            raise ValueError("grid_steps must be >= 3")
        if self.refinement_rounds < 1:
            raise ValueError("refinement_rounds must be >= 1")


def default_box(a_seed: float, b_seed: float) -> SearchBox:
    """Box of +/-50% (at least +/-1) around a seed point."""
    half_a = max(1.0, 0.5 * abs(a_seed))
    half_b = max(1.0, 0.5 * abs(b_seed))
    return SearchBox(a_seed - half_a, a_seed + half_a, b_seed - half_b, b_seed + half_b)


def sse_of(cloud: PointCloud, a: float, b: float) -> float:
    """Sum of squared deviations from the line y = a*x + b, from raw data."""
    return fsum((y - a * x - b) ** 2 for x, y in zip(cloud.xs, cloud.ys))


def _parabola_vertex(f, x0: float, h: float) -> float:
    """Vertex of the parabola through (x0-h, x0, x0+h); exact for quadratics."""
    s_minus, s_zero, s_plus = f(x0 - h), f(x0), f(x0 + h)
    denom = s_minus - 2.0 * s_zero + s_plus
    if denom <= 0.0:
        return x0
    return x0 + 0.5 * h * (s_minus - s_plus) / denom


def grid_search_fit(cloud: PointCloud, box: SearchBox) -> tuple[float, float]:
    """Minimize the squared-deviation objective by iterated grid refinement.

    Ties break toward the lowest slope, then the lowest height, so the result
    is deterministic.  Raises :class:`BoxTooSmall` when the located minimum
    lands outside the box (or hugs its boundary), which means the box did not
    contain the optimum.
    """
    n = len(cloud)
    x_bar = fsum(cloud.xs) / n
    pts = list(zip(cloud.xs, cloud.ys))

    def objective(a: float, c: float) -> float:
        # Line through (x_bar, c) with slope a, evaluated on raw data.
        return fsum((y - a * (x - x_bar) - c) ** 2 for x, y in pts)

    steps = box.grid_steps
    a_lo, a_hi = box.a_min, box.a_max
    # Height-at-mean-x range covering every (a, b) in the box.
    corners = [
        b + a * x_bar
        for a in (box.a_min, box.a_max)
        for b in (box.b_min, box.b_max)
    ]
    c_lo, c_hi = min(corners), max(corners)
    if c_hi == c_lo:
        c_lo, c_hi = c_lo - 1.0, c_hi + 1.0

    best_a = best_c = None
    for _ in range(box.refinement_rounds):
        da = (a_hi - a_lo) / (steps - 1)
        dc = (c_hi - c_lo) / (steps - 1)
        best = None
        for ia in range(steps):
            a = a_lo + ia * da
            for ic in range(steps):
                c = c_lo + ic * dc
                s = objective(a, c)
                if best is None or s < best[0]:
                    best = (s, a, c)
        _, best_a, best_c = best
        half_a = _SHRINK * (a_hi - a_lo) / 2
        half_c = _SHRINK * (c_hi - c_lo) / 2
        a_lo, a_hi = best_a - half_a, best_a + half_a
        c_lo, c_hi = best_c - half_c, best_c + half_c

    # Quadratic-vertex polish.  Near the minimum the objective differences
    # fall below the rounding noise of a single evaluation, so cell
    # refinement alone cannot localize the optimum to 1e-6; a three-point
    # parabola at a spacing where the signal dominates the noise can, and is
    # exact for this quadratic objective.
    for _ in range(2):
        h_a = max((a_hi - a_lo), 1e-4 * (1.0 + abs(best_a)))
        best_a = _parabola_vertex(lambda a: objective(a, best_c), best_a, h_a)
        h_c = max((c_hi - c_lo), 1e-4 * (1.0 + abs(best_c)))
        best_c = _parabola_vertex(lambda c: objective(best_a, c), best_c, h_c)

    best_b = best_c - best_a * x_bar
    margin_a = (box.a_max - box.a_min) / (steps - 1)
    margin_b = (box.b_max - box.b_min) / (steps - 1)
    if not (box.a_min + margin_a <= best_a <= box.a_max - margin_a):
        raise BoxTooSmall(f"minimum at a={best_a} is outside or hugging the slope bounds")
    if not (box.b_min + margin_b <= best_b <= box.b_max - margin_b):
        raise BoxTooSmall(f"minimum at b={best_b} is outside or hugging the intercept bounds")
    return best_a, best_b


def gradient_check(cloud: PointCloud, a: float, b: float, h: float = 1e-6) -> tuple[float, float]:
    """Central finite-difference gradient of the objective at (a, b)."""
    if h <= 0:
        raise ValueError("step h must be positive")
    d_a = (sse_of(cloud, a + h, b) - sse_of(cloud, a - h, b)) / (2 * h)
    d_b = (sse_of(cloud, a, b + h) - sse_of(cloud, a, b - h)) / (2 * h)
    return d_a, d_b
