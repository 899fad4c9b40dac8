import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

import openbilliard as ob
from openbilliard.geometry import Ball, Ellipse, Ellipsoid, QuadricObstacle


def test_reject_invalid_shapes():
    with pytest.raises(ob.InvalidValueError):
        Ball([0.0, 0.0], -1.0)

    with pytest.raises(ob.InvalidValueError):
        Ball([0.0, 0.0], 0.0)

    with pytest.raises(ob.InvalidValueError):
        Ellipse([0.0, 0.0], 1.0, 2.0)

    with pytest.raises(ob.InvalidValueError):
        Ellipsoid([0.0, 0.0, 0.0], [1.0, 2.0, 3.0])

    with pytest.raises(ob.InvalidValueError):
        Ball([0.0, 0.0, 0.0, 0.0], 1.0)

    with pytest.raises(ob.InvalidValueError):
        QuadricObstacle([0.0, 0.0], [1.0, 1.0], [[1.0, 1.0], [0.0, 1.0]])


def test_kinds():
    assert Ball([0.0, 0.0], 1.0).kind == "ball"
    assert Ellipse([0.0, 0.0], 2.0, 1.0).kind == "ellipse"
    assert Ellipsoid([0.0, 0.0, 0.0], [3.0, 2.0, 1.0]).kind == "ellipsoid"


def test_attributes_are_readonly():
    ball = Ball([1.0, 2.0], 1.0)

    with pytest.raises(ValueError):
        ball.center[0] = 5.0


def test_project_ball():
    ball = Ball([0.0, 0.0], 2.0)

    assert_allclose(ball.project([3.0, 4.0]), [1.2, 1.6], atol=1e-14)
    assert_allclose(ball.project([0.3, 0.4]), [1.2, 1.6], atol=1e-14)

    with pytest.raises(ob.DegeneratePointError):
        ball.project([0.0, 0.0])


@pytest.mark.parametrize("point", [[5.0, 5.0], [-4.0, 1.0], [0.5, 0.2], [1.0, -0.5]])
def test_project_ellipse_against_sampling(point):
    ellipse = Ellipse([1.0, 2.0], 3.0, 1.0, 0.3)
    p = np.asarray(point) + ellipse.center

    projected = ob.geometry.project_to_boundary(ellipse, p)
    expected = ob.testing.sampled_projection(ellipse, p)

    assert abs(ellipse.implicit(projected)) < 1e-12
    assert_allclose(projected, expected, atol=1e-6)


def test_project_onto_medial_set():
    ellipse = Ellipse([0.0, 0.0], 3.0, 1.0)

    with pytest.raises(ob.DegeneratePointError):
        ellipse.project([0.0, 0.0])

    with pytest.raises(ob.DegeneratePointError):
        ellipse.project([1.0, 0.0])


def test_ball_geometry():
    ball = Ball([1.0, 1.0], 2.0)
    geometry = ob.geometry.normal_and_curvatures(ball, [1.0, 3.0])

    assert_allclose(geometry.normal, [0.0, 1.0], atol=1e-15)
    assert_allclose(geometry.curvatures, [0.5])
    assert ball.curvature_bounds() == (0.5, 0.5)


def test_off_boundary_point():
    ball = Ball([0.0, 0.0], 1.0)

    with pytest.raises(ob.PointOffBoundaryError):
        ball.normal_and_curvatures([1.1, 0.0])

    with pytest.raises(ob.PointOffBoundaryError):
        Ellipse([0.0, 0.0], 2.0, 1.0).normal([0.0, 0.0])


def test_ellipse_curvatures():
    ellipse = Ellipse([0.0, 0.0], 3.0, 1.0)

    assert_allclose(ellipse.normal_and_curvatures([3.0, 0.0]).curvatures, [3.0])
    assert_allclose(ellipse.normal_and_curvatures([0.0, 1.0]).curvatures, [1 / 9])
    assert_allclose(ellipse.curvature_bounds(), (1 / 9, 3.0))


def test_vectorized_curvatures_match_pointwise():
    ellipse = Ellipse([1.0, -1.0], 2.5, 0.5, 1.0)
    points = ellipse.boundary_samples(17)

    vectorized = ellipse.principal_curvatures(points)
    pointwise = [ellipse.normal_and_curvatures(q).curvatures for q in points]

    assert vectorized.shape == (17, 1)
    assert_allclose(vectorized, pointwise, rtol=1e-10)


def test_ellipsoid_curvatures():
    ellipsoid = Ellipsoid([0.0, 0.0, 0.0], [3.0, 2.0, 1.0])
    geometry = ellipsoid.normal_and_curvatures([3.0, 0.0, 0.0])

    assert_allclose(geometry.normal, [1.0, 0.0, 0.0], atol=1e-15)
    assert_allclose(geometry.curvatures, [0.75, 3.0])
    assert_allclose(np.abs(geometry.frame), [[0.0, 1.0, 0.0], [0.0, 0.0, 1.0]], atol=1e-12)

    points = ellipsoid.boundary_samples(50)
    curvatures = ellipsoid.principal_curvatures(points)
    lo, hi = ellipsoid.curvature_bounds()
    assert np.all(curvatures >= lo - 1e-12)
    assert np.all(curvatures <= hi + 1e-12)


def test_support_function():
    ball = Ball([1.0, 2.0], 2.0)
    ellipse = Ellipse([0.0, 0.0], 3.0, 1.0, math.pi / 2)

    assert_allclose(ball.support([1.0, 0.0]), 3.0)
    assert_allclose(ball.support([[0.0, 1.0], [0.0, -1.0]]), [4.0, 0.0])
    assert_allclose(ellipse.support([[1.0, 0.0], [0.0, 1.0]]), [1.0, 3.0])
    assert_allclose(ellipse.support_point([0.0, 1.0]), [0.0, 3.0], atol=1e-14)


def test_ray_roots():
    ball = Ball([0.0, 0.0], 1.0)

    t_lo, t_hi, discriminant = ball.ray_roots([-5.0, 0.0], [1.0, 0.0])
    assert_allclose([t_lo, t_hi, discriminant], [4.0, 6.0, 1.0])

    assert ball.ray_roots([-5.0, 2.0], [1.0, 0.0]) is None


def test_contains():
    ellipse = Ellipse([0.0, 0.0], 2.0, 1.0)

    assert ellipse.contains([1.0, 0.0])
    assert not ellipse.contains([2.0, 0.0])
    assert not ellipse.contains([0.0, 1.5])


def test_describe():
    expected = {"kind": "ball", "center": [1.0, 2.0], "radius": 3.0}
    assert Ball([1.0, 2.0], 3.0).describe() == expected

    description = Ellipse([0.0, 1.0], 2.0, 1.0, 0.5).describe()
    assert description["kind"] == "ellipse"
    assert description["a"] == 2.0
    assert description["angle"] == 0.5


def test_section_samples():
    ball = Ball([0.0, 0.0, 0.0], 2.0)
    basis = np.array([[1.0, 0.0, 0.0], [0.0, 1.0, 0.0]])

    points = ball.section_samples(np.array([0.0, 0.0, 1.0]), basis, 12)

    assert points.shape == (12, 3)
    assert_allclose(points[:, 2], 1.0, atol=1e-12)
    assert_allclose(np.linalg.norm(points, axis=1), 2.0)

    assert len(ball.section_samples(np.array([0.0, 0.0, 3.0]), basis, 12)) == 0
