import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from geomfit.cloud import PointCloud, center, centroid
from geomfit.vectors import Vector, dot, ones

from conftest import EX1, EX2

coords = st.floats(min_value=-1e9, max_value=1e9, allow_nan=False)
clouds = st.integers(min_value=1, max_value=50).flatmap(
    lambda n: st.tuples(
        st.lists(coords, min_size=n, max_size=n),
        st.lists(coords, min_size=n, max_size=n),
    )
).map(lambda t: PointCloud.from_columns(*t))


class TestPointCloud:
    def test_unequal_columns_rejected(self):
        with pytest.raises(ValueError):
            PointCloud(Vector([1, 2]), Vector([1, 2, 3]))

    def test_from_pairs(self):
        c = PointCloud.from_pairs([(1, 2), (3, 4)])
        assert c.xs.components == (1.0, 3.0)
        assert c.ys.components == (2.0, 4.0)


class TestCentroid:
    def test_example1(self, ex1_cloud):
        x_bar, y_bar = centroid(ex1_cloud)
        assert x_bar == pytest.approx(EX1["centroid"][0], abs=1e-4)
        assert y_bar == pytest.approx(EX1["centroid"][1], abs=1e-4)

    def test_single_point(self):
        assert centroid(PointCloud.from_pairs([(5, 7)])) == (5.0, 7.0)

    def test_example2(self, ex2_cloud):
        x_bar, y_bar = centroid(ex2_cloud)
        assert x_bar == 78.5
        assert y_bar == pytest.approx(EX2["centroid"][1], abs=1e-3)


class TestCenter:
    def test_example1_first_row(self, ex1_cloud):
        c = center(ex1_cloud)
        assert c.i_vec[0] == pytest.approx(-5.3417, abs=1e-4)
        assert c.u_vec[0] == pytest.approx(57.0833, abs=1e-4)

    def test_example2_first_row(self, ex2_cloud):
        c = center(ex2_cloud)
        assert c.i_vec[0] == pytest.approx(-11.5, abs=1e-3)
        assert c.u_vec[0] == pytest.approx(-2380.583, abs=1e-3)

    def test_already_centered_cloud(self):
        cloud = PointCloud.from_columns([-1.0, 0.0, 1.0], [-2.0, 0.0, 2.0])
        c = center(cloud)
        assert c.centroid_x == 0.0 and c.centroid_y == 0.0
        assert c.i_vec.components == cloud.xs.components
        assert c.u_vec.components == cloud.ys.components


class TestProperties:
    @given(clouds)
    def test_round_trip(self, cloud):
        # tolerance scaled by the column magnitude: centering loses absolute
        # precision at the scale of the mean, not of each component
        c = center(cloud)
        x_tol = 1e-12 * max(1.0, max(abs(v) for v in cloud.xs))
        y_tol = 1e-12 * max(1.0, max(abs(v) for v in cloud.ys))
        for orig, centered in zip(cloud.xs, c.i_vec):
            assert centered + c.centroid_x == pytest.approx(orig, abs=x_tol)
        for orig, centered in zip(cloud.ys, c.u_vec):
            assert centered + c.centroid_y == pytest.approx(orig, abs=y_tol)

    @given(clouds)
    def test_zero_sum_invariants(self, cloud):
        c = center(cloud)
        n = len(cloud)
        max_x = max(abs(x) for x in cloud.xs)
        max_y = max(abs(y) for y in cloud.ys)
        assert abs(math.fsum(c.i_vec)) <= n * 1e-9 * max(1.0, max_x)
        assert abs(math.fsum(c.u_vec)) <= n * 1e-9 * max(1.0, max_y)
        assert abs(dot(ones(n), c.i_vec)) <= n * 1e-9 * max(1.0, max_x)
        assert abs(dot(ones(n), c.u_vec)) <= n * 1e-9 * max(1.0, max_y)

    @given(clouds)
    def test_centering_idempotent(self, cloud):
        once = center(cloud)
        twice = center(PointCloud(once.i_vec, once.u_vec))
        x_tol = 1e-12 * max(1.0, max(abs(v) for v in cloud.xs))
        y_tol = 1e-12 * max(1.0, max(abs(v) for v in cloud.ys))
        for v1, v2 in zip(once.i_vec, twice.i_vec):
            assert v2 == pytest.approx(v1, abs=x_tol)
        for v1, v2 in zip(once.u_vec, twice.u_vec):
            assert v2 == pytest.approx(v1, abs=y_tol)
