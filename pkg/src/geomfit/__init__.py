"""Geometric least-squares line fitting.

Center a 2-D point cloud at its centroid, treat the centered columns as
vectors in n-dimensional space, and read the regression slope off the
orthogonal projection of the response vector onto the predictor vector.
The correlation coefficient falls out as the cosine of the angle between
the two vectors.
"""

from .cloud import CenteredCloud, PointCloud, center, centroid
from .correlate import (
    CorrelationClass,
    CorrelationResult,
    classify,
    correlate,
    r_cosine,
    r_textbook,
    theta,
)
from .diagnostics import DiagnosticsReport, orthogonality_report, residuals, sse
from .errors import (
    BoxTooSmall,
    ColumnNotFound,
    DataError,
    DegenerateX,
    DegenerateY,
    DimensionMismatch,
    EmptyDataset,
    GeomfitError,
    ParseError,
    RaggedRow,
    TooFewPoints,
)
from .estimator import GeometricLinearRegression
from .oracle import SearchBox, default_box, gradient_check, grid_search_fit, sse_of
from .regress import FitResult, fit, fit_slope_centered, predict
from .svgplot import render_svg
from .vectors import Vector, dot, norm, norm_sq, ones, scale, sub

__version__ = "0.1.0"

__all__ = [
    "Vector", "dot", "norm", "norm_sq", "ones", "scale", "sub",
    "PointCloud", "CenteredCloud", "center", "centroid",
    "FitResult", "fit", "fit_slope_centered", "predict",
    "CorrelationClass", "CorrelationResult", "classify", "correlate",
    "r_cosine", "r_textbook", "theta",
    "DiagnosticsReport", "orthogonality_report", "residuals", "sse",
    "SearchBox", "default_box", "gradient_check", "grid_search_fit", "sse_of",
    "GeometricLinearRegression",
    "render_svg",
    "GeomfitError", "DimensionMismatch", "TooFewPoints", "DegenerateX",
    "DegenerateY", "DataError", "ParseError", "EmptyDataset", "ColumnNotFound",
    "RaggedRow", "BoxTooSmall",
    "__version__",
]
