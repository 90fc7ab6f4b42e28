"""Scikit-learn style estimator wrapper around the geometric fit.

Duck-typed to the sklearn estimator contract (``fit``/``predict``/``score``,
``get_params``/``set_params``) without importing scikit-learn, so the class
drops into sklearn pipelines and model-selection utilities while the package
keeps numpy as its only third-party dependency.
"""

from __future__ import annotations

import numpy as np

from .cloud import PointCloud
from .correlate import correlate
from .diagnostics import sse as residual_sse
from .regress import fit as geometric_fit
from .vectors import Vector

__all__ = ["GeometricLinearRegression"]


def _as_1d_column(X, name: str) -> np.ndarray:
    arr = np.asarray(X, dtype=float)
    if arr.ndim == 2 and arr.shape[1] == 1:
        arr = arr[:, 0]
    if arr.ndim != 1:
        raise ValueError(
            f"{name} must be 1-d or a single-column 2-d array, got shape {arr.shape}"
        )
    if arr.size == 0:
        raise ValueError(f"{name} is empty")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} contains non-finite values")
    return arr


class GeometricLinearRegression:
    """Single-feature least-squares line, fitted by orthogonal projection.

    Fitted attributes: ``slope_``, ``intercept_``, ``theta_deg_``, ``r_``,
    ``correlation_class_``, ``sse_``, ``n_points_``.
    """

    def fit(self, X, y):
        xs = _as_1d_column(X, "X")
        ys = _as_1d_column(y, "y")
        if xs.shape[0] != ys.shape[0]:
            raise ValueError(f"X and y length mismatch: {xs.shape[0]} vs {ys.shape[0]}")
        cloud = PointCloud(Vector(xs), Vector(ys))
        result = geometric_fit(cloud)
        corr = correlate(result.centered)
        self.slope_ = result.slope
        self.intercept_ = result.intercept
        self.theta_deg_ = corr.theta_deg
        self.r_ = corr.r
        self.correlation_class_ = corr.cls.value
        self.sse_ = residual_sse(result)
        self.n_points_ = len(cloud)
        return self

    def predict(self, X) -> np.ndarray:
        if not hasattr(self, "slope_"):
            raise RuntimeError("estimator is not fitted; call fit(X, y) first")
        xs = _as_1d_column(X, "X")
        return self.slope_ * xs + self.intercept_

    def score(self, X, y) -> float:
        """Coefficient of determination R^2."""
        xs = _as_1d_column(X, "X")
        ys = _as_1d_column(y, "y")
        pred = self.predict(xs)
        ss_res = float(np.sum((ys - pred) ** 2))
        ss_tot = float(np.sum((ys - ys.mean()) ** 2))
        if ss_tot == 0.0:
            return 1.0 if ss_res == 0.0 else 0.0
        return 1.0 - ss_res / ss_tot

    def get_params(self, deep: bool = True) -> dict:
        return {}

    def set_params(self, **params):
        if params:
            raise ValueError(f"unknown parameters: {sorted(params)}")
        return self

    def __repr__(self) -> str:
        return f"{type(self).__name__}()"
