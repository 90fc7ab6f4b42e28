"""Observed point clouds and the centroid translation.

Centering subtracts the componentwise means from every point, moving the
cloud's center of mass to the origin.  The centered columns are kept as
n-dimensional vectors so the rest of the library can work with dot products
and norms directly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .vectors import Vector

__all__ = ["PointCloud", "CenteredCloud", "centroid", "center"]


@dataclass(frozen=True)
class PointCloud:
    """Raw observed pairs (x_i, y_i), equal-length columns, n >= 1."""

    xs: Vector
    ys: Vector

    def __post_init__(self):
        if len(self.xs) != len(self.ys):
            raise ValueError(
                f"xs and ys must have equal length, got {len(self.xs)} and {len(self.ys)}"
            )

    def __len__(self) -> int:
        return len(self.xs)

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[float, float]]) -> "PointCloud":
        pts = list(pairs)
        return cls(Vector(p[0] for p in pts), Vector(p[1] for p in pts))

    @classmethod
    def from_columns(cls, xs: Sequence[float], ys: Sequence[float]) -> "PointCloud":
        return cls(Vector(xs), Vector(ys))


@dataclass(frozen=True)
class CenteredCloud:
    """Centroid plus the centered predictor/response vectors.

    ``i_vec`` holds the centered x column, ``u_vec`` the centered y column.
    Both sum to zero up to floating-point roundoff.
    """

    centroid_x: float
    centroid_y: float
    i_vec: Vector
    u_vec: Vector

    def __post_init__(self):
        if len(self.i_vec) != len(self.u_vec):
            raise ValueError("centered columns must have equal length")

    def __len__(self) -> int:
        return len(self.i_vec)


def centroid(cloud: PointCloud) -> tuple[float, float]:
    """Center of mass (mean of xs, mean of ys)."""
    n = len(cloud)
    return (math.fsum(cloud.xs) / n, math.fsum(cloud.ys) / n)


def center(cloud: PointCloud) -> CenteredCloud:
    """Translate the cloud so its center of mass lands at the origin."""
    x_bar, y_bar = centroid(cloud)
    return CenteredCloud(
        centroid_x=x_bar,
        centroid_y=y_bar,
        i_vec=Vector(x - x_bar for x in cloud.xs),
        u_vec=Vector(y - y_bar for y in cloud.ys),
    )
