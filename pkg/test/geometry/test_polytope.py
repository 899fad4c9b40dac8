import numpy as np
import pytest
from numpy.testing import assert_allclose

import openbilliard as ob
from openbilliard.geometry import convex_hull


def test_square():
    points = np.array([[-1.0, -1.0], [1.0, -1.0], [1.0, 1.0], [-1.0, 1.0], [0.0, 0.0]])
    hull = convex_hull(points)

    assert len(hull.vertices) == 4
    assert len(hull.faces) == 4
    assert hull.affine_dimension == 2
    assert not hull.is_degenerate
    assert hull.signed_distance([0.0, 0.0]) == pytest.approx(-1.0)
    assert hull.signed_distance([2.0, 0.0]) == pytest.approx(1.0)
    assert_allclose(hull.signed_distance([[0.5, 0.0], [0.0, 3.0]]), [-0.5, 2.0])
    assert hull.contains(points)
    assert not hull.contains([1.1, 0.0])
    assert hull.diameter() == pytest.approx(2 * np.sqrt(2))


def test_collinear_points():
    hull = convex_hull(np.array([[0.0, 0.0], [1.0, 0.0], [3.0, 0.0]]))

    assert hull.affine_dimension == 1
    assert hull.is_degenerate
    assert len(hull.vertices) == 2
    assert hull.signed_distance([1.0, 2.0]) == pytest.approx(2.0)
    assert hull.signed_distance([5.0, 0.0]) == pytest.approx(2.0)
    assert hull.signed_distance([1.0, 0.0]) <= 0


def test_planar_hull_in_space():
    points = np.array(
        [[0.0, 0.0, 1.0], [2.0, 0.0, 1.0], [0.0, 2.0, 1.0], [2.0, 2.0, 1.0], [1.0, 1.0, 1.0]]
    )
    hull = convex_hull(points)

    assert hull.dimension == 3
    assert hull.affine_dimension == 2
    assert hull.is_degenerate
    assert len(hull.vertices) == 4
    assert hull.signed_distance([1.0, 1.0, 4.0]) == pytest.approx(3.0)
    assert hull.signed_distance([1.0, 1.0, 1.0]) == pytest.approx(0.0)


def test_tetrahedron():
    points = np.array([[0.0, 0.0, 0.0], [1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]])
    hull = convex_hull(points)

    assert not hull.is_degenerate
    assert len(hull.faces) == 4
    assert hull.contains([0.1, 0.1, 0.1])
    assert not hull.contains([1.0, 1.0, 1.0])
    assert hull.signed_distance([-1.0, 0.2, 0.2]) == pytest.approx(1.0)


def test_reject_invalid_points():
    with pytest.raises(ob.InvalidValueError):
        convex_hull(np.zeros((0, 2)))

    with pytest.raises(ob.InvalidValueError):
        convex_hull(np.zeros((4, 4)))
