import random

import pytest

from geomfit.cloud import PointCloud
from geomfit.errors import BoxTooSmall
from geomfit.oracle import SearchBox, default_box, gradient_check, grid_search_fit, sse_of
from geomfit.regress import fit
from geomfit.vectors import dot, sub

from conftest import EX1, random_cloud

LINE_2X1 = PointCloud.from_columns([0, 1, 2], [1, 3, 5])


def skewed_box(a: float, b: float) -> SearchBox:
    """Seed box around (a, b) shifted off-center so the optimum never sits
    exactly on a grid node."""
    ha = max(1.0, 0.5 * abs(a))
    hb = max(1.0, 0.5 * abs(b))
    return SearchBox(a - 1.13 * ha, a + 0.87 * ha, b - 0.91 * hb, b + 1.09 * hb)


class TestSseOf:
    def test_exact_line_zero(self):
        assert sse_of(LINE_2X1, 2.0, 1.0) == 0.0

    def test_unit_offset(self):
        assert sse_of(LINE_2X1, 2.0, 0.0) == 3.0

    def test_matches_diagnostics_sse(self, ex1_cloud):
        from geomfit.diagnostics import sse

        f = fit(ex1_cloud)
        assert sse_of(ex1_cloud, f.slope, f.intercept) == pytest.approx(sse(f), rel=1e-9)


class TestSearchBox:
    def test_invalid_bounds(self):
        with pytest.raises(ValueError):
            SearchBox(1.0, 1.0, 0.0, 1.0)

    def test_invalid_steps(self):
        with pytest.raises(ValueError):
            SearchBox(0.0, 1.0, 0.0, 1.0, grid_steps=2)


class TestGridSearch:
    def test_exact_line(self):
        a, b = grid_search_fit(LINE_2X1, skewed_box(2.0, 1.0))
        assert a == pytest.approx(2.0, abs=1e-6)
        assert b == pytest.approx(1.0, abs=1e-6)

    def test_example1(self, ex1_cloud):
        a, b = grid_search_fit(ex1_cloud, skewed_box(EX1["a"], EX1["b"]))
        assert a == pytest.approx(EX1["a"], abs=1e-2)
        assert b == pytest.approx(EX1["b"], abs=1e-2)

    def test_agrees_with_projection_fit(self):
        rng = random.Random(401)
        for _ in range(10):
            cloud = random_cloud(rng, n=10)
            f = fit(cloud)
            a, b = grid_search_fit(cloud, skewed_box(f.slope, f.intercept))
            assert a == pytest.approx(f.slope, abs=1e-6)
            assert b == pytest.approx(f.intercept, abs=1e-6)

    def test_box_excluding_optimum(self):
        with pytest.raises(BoxTooSmall):
            grid_search_fit(LINE_2X1, SearchBox(5.0, 10.0, 5.0, 10.0))

    def test_deterministic(self, ex1_cloud):
        box = skewed_box(EX1["a"], EX1["b"])
        assert grid_search_fit(ex1_cloud, box) == grid_search_fit(ex1_cloud, box)


class TestGradientCheck:
    def test_zero_at_exact_minimum(self):
        da, db = gradient_check(LINE_2X1, 2.0, 1.0, h=1e-6)
        assert abs(da) <= 1e-8
        assert abs(db) <= 1e-8

    def test_small_at_fitted_point(self, ex1_cloud):
        f = fit(ex1_cloud)
        s = sse_of(ex1_cloud, f.slope, f.intercept)
        da, db = gradient_check(ex1_cloud, f.slope, f.intercept, h=1e-6)
        scale = max(1.0, s)
        assert abs(da) / scale <= 1e-3
        assert abs(db) / scale <= 1e-3

    def test_analytic_value_at_zero_slope(self, ex1_cloud):
        # at a=0, b=y_bar the residual is the centered response, so the
        # slope gradient is -2 * dot(u, i)
        f = fit(ex1_cloud)
        y_bar = f.centered.centroid_y
        da, _ = gradient_check(ex1_cloud, 0.0, y_bar, h=1e-4)
        assert da == pytest.approx(-2.0 * EX1["ui"], abs=0.1)

    def test_rejects_nonpositive_step(self):
        with pytest.raises(ValueError):
            gradient_check(LINE_2X1, 0.0, 0.0, h=0.0)

    def test_matches_analytic_form_at_perturbed_points(self):
        rng = random.Random(402)
        for _ in range(10):
            cloud = random_cloud(rng)
            f = fit(cloud)
            a = f.slope + rng.uniform(0.5, 2.0) * rng.choice([-1.0, 1.0])
            b = f.centered.centroid_y - a * f.centered.centroid_x
            from geomfit.vectors import scale as vscale

            res = sub(f.centered.u_vec, vscale(a, f.centered.i_vec))
            analytic = -2.0 * dot(res, f.centered.i_vec)
            da, _ = gradient_check(cloud, a, b, h=1e-5)
            assert da == pytest.approx(analytic, rel=1e-4, abs=1e-4)


class TestConvexity:
    def test_objective_minimized_at_fit_along_random_lines(self):
        rng = random.Random(403)
        for _ in range(10):
            cloud = random_cloud(rng)
            f = fit(cloud)
            base = sse_of(cloud, f.slope, f.intercept)
            va = rng.uniform(-1.0, 1.0)
            vb = rng.uniform(-1.0, 1.0)
            for k in range(1, 11):
                t = 0.1 * k
                assert sse_of(cloud, f.slope + t * va, f.intercept + t * vb) >= base
                assert sse_of(cloud, f.slope - t * va, f.intercept - t * vb) >= base
