"""Residual diagnostics and orthogonality checks for a fitted line.

The residual vector is the difference between observed and fitted centered
responses.  A correct fit makes it orthogonal to the centered predictor
vector, and centering makes both centered columns orthogonal to the all-ones
vector; this module reports those dot products raw and normalized so the
checks are scale-free.
"""

from __future__ import annotations

from dataclasses import dataclass

from .regress import FitResult
from .vectors import Vector, dot, norm, norm_sq, ones, sub

__all__ = ["DiagnosticsReport", "residuals", "sse", "orthogonality_report"]


@dataclass(frozen=True)
class DiagnosticsReport:
    residual: Vector
    sse: float
    residual_dot_i: float
    ones_dot_i: float
    ones_dot_u: float
    # Same dot products made scale-free (0.0 when a norm vanishes).  The
    # residual product is divided by ||u||*||i||, the data scale, not by the
    # residual norm: an exactly interpolated cloud leaves a pure-roundoff
    # residual whose own norm would make the quotient meaningless.
    residual_dot_i_normalized: float
    ones_dot_i_normalized: float
    ones_dot_u_normalized: float


def residuals(fit_result: FitResult) -> Vector:
    """Residual vector: observed minus fitted centered responses."""
    return sub(fit_result.centered.u_vec, fit_result.j_vec)


def sse(fit_result: FitResult) -> float:
    """Sum of squared residuals."""
    return norm_sq(residuals(fit_result))


def _normalized(product: float, norm_a: float, norm_b: float) -> float:
    denom = norm_a * norm_b
    return product / denom if denom > 0.0 else 0.0


def orthogonality_report(fit_result: FitResult) -> DiagnosticsReport:
    """Residual norm plus the three orthogonality dot products."""
    c = fit_result.centered
    res = residuals(fit_result)
    n = len(c)
    w = ones(n)
    r_dot_i = dot(res, c.i_vec)
    w_dot_i = dot(w, c.i_vec)
    w_dot_u = dot(w, c.u_vec)
    sqrt_n = norm(w)
    return DiagnosticsReport(
        residual=res,
        sse=norm_sq(res),
        residual_dot_i=r_dot_i,
        ones_dot_i=w_dot_i,
        ones_dot_u=w_dot_u,
        residual_dot_i_normalized=_normalized(r_dot_i, norm(c.u_vec), norm(c.i_vec)),
        ones_dot_i_normalized=_normalized(w_dot_i, sqrt_n, norm(c.i_vec)),
        ones_dot_u_normalized=_normalized(w_dot_u, sqrt_n, norm(c.u_vec)),
    )
